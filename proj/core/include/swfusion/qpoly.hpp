#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swfusion/numeric.hpp"

namespace swf {

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Coefficient i multiplies q^i; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly monomial(int exponent, const BigInt& c = 1);
  /// [n]_q = 1 + q + ... + q^{n-1}.
  static QPoly q_integer(int n);

  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] BigInt coeff(int i) const;

  [[nodiscard]] BigInt evaluate(const BigInt& q) const;
  [[nodiscard]] bool is_palindromic() const;
  [[nodiscard]] bool has_nonnegative_coefficients() const;

  /// q^e * p(1/q); requires e >= degree().
  [[nodiscard]] QPoly reversed(int e) const;

  /// Quotient of an exact division; throws InternalError on a remainder.
  [[nodiscard]] QPoly divide_exact(const QPoly& d) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Human-readable form, e.g. "1 + q + 2q^2".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Low-to-high coefficient list as decimal strings.
void to_json(nlohmann::json& j, const QPoly& p);
void from_json(const nlohmann::json& j, QPoly& p);

}  // namespace swf
