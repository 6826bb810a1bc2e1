#pragma once

// The ring of symmetric functions with the power-sum (p), monomial (m),
// complete (h) and Schur (s) bases.

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "swfusion/multipoly.hpp"
#include "swfusion/numeric.hpp"
#include "swfusion/partition.hpp"

namespace swf {

enum class Basis { p, m, h, s };

std::string to_string(Basis b);
Basis basis_from_string(const std::string& name);

/// Finite linear combination of basis elements indexed by partitions.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational, GradedRevLex>;

  explicit SymFunc(Basis basis = Basis::p) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  static SymFunc element(Basis basis, const Partition& lambda, const Rational& c = 1);
  static SymFunc scalar(const Rational& c, Basis basis = Basis::p);

  [[nodiscard]] Basis basis() const noexcept { return basis_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Partition& lambda) const;

  /// Largest |lambda| with a nonzero coefficient; -1 for zero.
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] bool is_homogeneous() const noexcept;

  void add_term(const Partition& lambda, const Rational& c);

  /// Both operands must share a basis.
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }

  /// Ring product, computed in the p basis; result is in a's basis.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

  /// Same basis and identical coefficients.
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

/// Expresses f in the target basis. Exact.
SymFunc convert(const SymFunc& f, Basis target);

/// Equality as elements of the ring, regardless of basis.
bool same_element(const SymFunc& a, const SymFunc& b);

/// Number of semistandard tableaux of shape nu and content mu.
BigInt kostka_number(const Partition& nu, const Partition& mu);

/// <p_lambda, p_mu> = delta z_lambda.
Rational hall_inner(const SymFunc& f, const SymFunc& g);

/// <p_lambda, p_mu> = delta z_lambda 2^{l(lambda)}.
Rational modified_inner(const SymFunc& f, const SymFunc& g);

/// Bialternant a_{lambda+delta}(z) / a_delta(z) in k variables; zero when
/// l(lambda) > k.
MultivariatePoly schur_poly(const Partition& lambda, int k);

/// {basis, terms: [{partition, numerator, denominator}]}.
void to_json(nlohmann::json& j, const SymFunc& f);
void from_json(const nlohmann::json& j, SymFunc& f);

}  // namespace swf
