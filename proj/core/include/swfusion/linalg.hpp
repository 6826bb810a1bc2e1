#pragma once

// Incremental row-echelon builders used for exact rank computations.

#include <cstdint>
#include <span>
#include <vector>

#include "swfusion/numeric.hpp"

namespace swf {

__extension__ using UInt128 = unsigned __int128;

/// Fraction-free incremental echelon form over the integers (hence exact
/// over Q). Rows are kept primitive to limit coefficient growth.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t width) : width_(width) {}

  /// Reduces v against the current rows; keeps it and returns true when
  /// it is independent of them.
  bool insert(std::vector<BigInt> v);

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t width() const noexcept { return width_; }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<BigInt> v;
  };
  std::size_t width_;
  std::vector<Row> rows_;
};

/// Incremental echelon form over the prime field F_p, p < 2^63.
class ModularEchelon {
 public:
  ModularEchelon(std::size_t width, std::uint64_t prime) : width_(width), p_(prime) {}

  bool insert(std::vector<std::uint64_t> v);

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }

  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % p_);
  }
  [[nodiscard]] std::uint64_t inverse(std::uint64_t a) const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<std::uint64_t> v;  // pivot entry normalized to 1
  };
  std::size_t width_;
  std::uint64_t p_;
  std::vector<Row> rows_;
};

/// Rank of a dense rational matrix given as rows.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

/// Reduces x modulo p into [0, p).
std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p);

}  // namespace swf
