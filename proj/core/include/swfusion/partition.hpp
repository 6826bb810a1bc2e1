#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "swfusion/numeric.hpp"

namespace swf {

/// Integer partition with weakly decreasing positive parts.
///
/// Construction validates the invariant; trailing zeros in the input are
/// dropped so that padded compositions such as (2,1,0,0) are accepted.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero past the end.
  [[nodiscard]] int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Number of parts equal to r.
  [[nodiscard]] int multiplicity(int r) const noexcept;

  [[nodiscard]] Partition conjugate() const;

  /// Young-diagram containment.
  [[nodiscard]] bool contains(const Partition& other) const noexcept;
  [[nodiscard]] bool fits_in_box(int rows, int cols) const noexcept;

  /// Dominance order; only meaningful for partitions of equal size.
  [[nodiscard]] bool dominates(const Partition& other) const noexcept;

  /// Removes one part equal to r; r must be present.
  [[nodiscard]] Partition without_part(int r) const;
  [[nodiscard]] Partition with_part(int r) const;
  /// Multiset union of parts.
  [[nodiscard]] Partition merged(const Partition& other) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Orders by size, then reverse lexicographically within a size:
/// (3) < (2,1) < (1,1,1) < (4) < ...
struct GradedRevLex {
  bool operator()(const Partition& a, const Partition& b) const noexcept;
};

/// z_lambda = prod_i i^{m_i} m_i!.
BigInt z_lambda(const Partition& lambda);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Partitions of n with at most max_len parts, each at most max_part.
std::vector<Partition> partitions_of(int n, int max_part, int max_len);

/// Every partition fitting in a rows x cols box, by size then revlex.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Number of partitions of n, by the Euler recurrence (independent of
/// the enumerators above).
BigInt partition_count(int n);

}  // namespace swf
