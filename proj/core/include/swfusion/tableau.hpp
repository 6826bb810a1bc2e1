#pragma once

// Two-row standard Young tableaux and their statistics.

#include <string>
#include <vector>

#include "swfusion/partition.hpp"

namespace swf {

/// Standard Young tableau with at most two rows, stored as its two
/// strictly increasing rows. The rows partition {1, ..., N}.
class TwoRowSYT {
 public:
  TwoRowSYT() = default;
  /// Throws std::domain_error unless the rows form a standard tableau.
  TwoRowSYT(std::vector<int> row1, std::vector<int> row2);

  [[nodiscard]] const std::vector<int>& row1() const noexcept { return row1_; }
  [[nodiscard]] const std::vector<int>& row2() const noexcept { return row2_; }
  [[nodiscard]] int length() const noexcept {
    return static_cast<int>(row1_.size() + row2_.size());
  }
  [[nodiscard]] Partition shape() const;

  /// Half the row-length difference; throws std::domain_error when odd.
  [[nodiscard]] int k() const;

  /// Row (0 or 1) and column (0-based) of entry i in 1..N.
  [[nodiscard]] int row_of(int i) const;
  [[nodiscard]] int column_of(int i) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TwoRowSYT&, const TwoRowSYT&) = default;

 private:
  std::vector<int> row1_;
  std::vector<int> row2_;
  std::vector<int> row_index_;  // entry i -> row, 1-based entries
  std::vector<int> col_index_;
};

/// All standard tableaux of two-row shape (a, b), a >= b >= 0, in
/// lexicographic order of their ballot words.
std::vector<TwoRowSYT> enumerate_shape(int a, int b);

/// All standard tableaux of shape (n+k, n-k) with N = 2n.
std::vector<TwoRowSYT> enumerate_syt(int N, int k);

/// Number of SYT of shape (a, b) by the hook-length formula.
BigInt two_row_hook_count(int a, int b);

std::vector<int> descent_set(const TwoRowSYT& t);
int maj(const TwoRowSYT& t);

/// Sum of i such that i+1 sits strictly to the right of i.
int charge(const TwoRowSYT& t);

/// Appends N+1 to the first row and N+2 to the second.
TwoRowSYT embed(const TwoRowSYT& t);

/// Length-prefix of the principal tableau with row difference 2k.
TwoRowSYT principal_tableau(int k, int length);

/// A finite prefix of an infinite two-row tableau whose continuation past
/// the prefix follows the principal pattern (odd entries to the first row,
/// even entries to the second).
class StableTableau {
 public:
  /// Throws std::domain_error if the prefix has odd length.
  explicit StableTableau(TwoRowSYT prefix);

  [[nodiscard]] const TwoRowSYT& prefix() const noexcept { return prefix_; }
  [[nodiscard]] int k() const { return prefix_.k(); }

  /// Same infinite tableau viewed through a longer prefix.
  [[nodiscard]] StableTableau extended(int extra_levels) const;

  friend bool operator==(const StableTableau&, const StableTableau&) = default;

 private:
  TwoRowSYT prefix_;
};

/// n^2 - maj(prefix) for a prefix of length 2n.
int stable_major_index(const StableTableau& t);

/// Every stabilized tableau whose prefix has length 2K, ordered by k then
/// ballot word.
std::vector<StableTableau> enumerate_level(int K);

}  // namespace swf
