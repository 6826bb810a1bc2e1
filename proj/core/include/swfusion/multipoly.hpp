#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "swfusion/numeric.hpp"
#include "swfusion/partition.hpp"

namespace swf {

/// Laurent polynomial in a fixed number of variables z_1..z_k with exact
/// rational coefficients. Exponent vectors may contain negative entries.
class MultivariatePoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultivariatePoly(int nvars = 0) : nvars_(nvars) {}

  static MultivariatePoly constant(int nvars, const Rational& c);
  static MultivariatePoly monomial(Exponents exps, const Rational& c = 1);
  static MultivariatePoly variable(int nvars, int i);

  [[nodiscard]] int nvars() const noexcept { return nvars_; }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  [[nodiscard]] Rational coefficient(const Exponents& e) const;
  [[nodiscard]] Rational constant_term() const;

  /// Substitutes z_i -> 1/z_i.
  [[nodiscard]] MultivariatePoly inverted() const;

  /// Exact quotient by lex-leading-term division; both operands must have
  /// nonnegative exponents. Throws InternalError on a nonzero remainder.
  [[nodiscard]] MultivariatePoly divide_exact(const MultivariatePoly& d) const;

  void add_term(const Exponents& e, const Rational& c);

  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator-=(const MultivariatePoly& o);
  MultivariatePoly& operator*=(const Rational& c);
  friend MultivariatePoly operator+(MultivariatePoly a, const MultivariatePoly& b) { return a += b; }
  friend MultivariatePoly operator-(MultivariatePoly a, const MultivariatePoly& b) { return a -= b; }
  friend MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b);
  friend MultivariatePoly operator*(MultivariatePoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultivariatePoly&, const MultivariatePoly&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void check_arity(const Exponents& e) const;
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

/// [1](P * Q) computed without forming the product.
Rational paired_constant_term(const MultivariatePoly& P, const MultivariatePoly& Q);

/// det[z_i^{exponents_j}] in k = exponents.size() variables.
MultivariatePoly alternant(std::span<const int> exponents);

/// a_delta(z) = prod_{i<j} (z_i - z_j) = det[z_i^{k-j}].
MultivariatePoly vandermonde(int k);

/// m_mu(z_1..z_k); zero when l(mu) > k.
MultivariatePoly monomial_symmetric(const Partition& mu, int k);

/// lambda + delta = (lambda_1 + k - 1, ..., lambda_k + 0).
std::vector<int> shifted_exponents(const Partition& lambda, int k);

}  // namespace swf
