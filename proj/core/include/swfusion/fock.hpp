#pragma once

// Charge-zero sector of the basic module, realized on the ring of
// symmetric functions: h_n = 2n d/dp_n, h_{-n} = p_n (n > 0), the induced
// Virasoro operators, and the evaluator for e_{-i_1}...e_{-i_k} Omega_{-2k}.

#include <functional>
#include <span>
#include <vector>

#include "swfusion/report.hpp"
#include "swfusion/symfunc.hpp"

namespace swf {

/// Commuting word e_{-i_1} ... e_{-i_k} acting on Omega_{-2k}, with
/// 0 <= i_j <= k. Indices are stored sorted.
class EWord {
 public:
  /// Throws std::domain_error on a bad length or an index outside 0..k.
  EWord(int k, std::vector<int> indices);

  /// profile[j] = number of factors e_{-j}; k = sum of the profile.
  static EWord from_profile(const std::vector<int>& profile);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<int>& indices() const noexcept { return idx_; }
  /// sum_j (k - i_j)
  [[nodiscard]] int degree() const noexcept;
  /// r_j for j = 0..k
  [[nodiscard]] std::vector<int> profile() const;

  friend bool operator==(const EWord&, const EWord&) = default;

 private:
  int k_;
  std::vector<int> idx_;
};

/// Linear operator on Lambda given by its action on power-sum monomials.
class OperatorOnLambda {
 public:
  using Rule = std::function<SymFunc(const Partition&)>;

  OperatorOnLambda(int shift, Rule rule) : shift_(shift), rule_(std::move(rule)) {}

  [[nodiscard]] int shift() const noexcept { return shift_; }
  /// Result is in the p basis.
  [[nodiscard]] SymFunc apply(const SymFunc& f) const;
  SymFunc operator()(const SymFunc& f) const { return apply(f); }

 private:
  int shift_;
  Rule rule_;
};

/// n > 0: 2n d/dp_n; n < 0: multiplication by p_{|n|}. n = 0 is rejected.
OperatorOnLambda heisenberg(int n);
/// L_n on Lambda; L_0 is the degree operator sum_r r p_r d/dp_r.
OperatorOnLambda virasoro(int n);

SymFunc heisenberg_apply(int n, const SymFunc& f);
/// h_0 vanishes on the charge-zero sector.
SymFunc heisenberg_zero_mode(const SymFunc& f);
SymFunc virasoro_apply(int n, const SymFunc& f);

/// [L_m, L_n] = (m-n) L_{m+n} + delta_{m,-n} (m^3-m)/12 on every p_lambda
/// with |lambda| <= degree_bound. Details carry the measured central charge.
VerificationReport virasoro_commutator_check(int m, int n, int degree_bound);

/// [h_n, h_{-m}] = 2n delta_{nm} for n, m >= 1 on |lambda| <= degree_bound,
/// together with [h_n, h_m] = [h_{-n}, h_{-m}] = 0.
VerificationReport heisenberg_ccr_check(int n, int m, int degree_bound);

/// L_j s_{(k^k)} = 0 for 1 <= j <= maxn and L_0 s_{(k^k)} = k^2 s_{(k^k)}.
VerificationReport singular_vector_check(int k, int maxn);

/// e_{-i_1}...e_{-i_k} Omega_{-2k} in the Schur basis.
SymFunc e_word_apply(const EWord& w);
/// Same, with the factors in the given (unsorted) order.
SymFunc e_word_apply_ordered(int k, std::span<const int> indices);

/// e_{-m}^k Omega_{-2k} = (-1)^{k(k-1)/2} k! s_{((k-m)^k)}.
VerificationReport verify_rectangular(int k, int m);

/// Expands s_nu through e-words: sum over mu in the k x k box of
/// K_{nu,mu} / prod_j r_j! times the word with indices k - mu_j, with the
/// overall sign (-1)^{k(k-1)/2} that the evaluator's normalization needs.
SymFunc schur_via_gensegal(const Partition& nu, int k);

/// Words with profile (i_0, ..., i_n), i_0 + ... + i_n = n.
std::vector<EWord> f2n_zero_basis(int n);

/// Images of f2n_zero_basis(n) lie in span{s_lambda : lambda in (n^n)} and
/// have full rank C(2n, n).
VerificationReport f2n_span_check(int n);

/// <h_n f, g> = <f, h_{-n} g> under the modified inner product for all
/// power-sum monomials f, g of compatible degree <= degree_bound.
VerificationReport adjointness_check(int n, int degree_bound);

/// Eigenvalues of L_0 on the span of the images of f2n_zero_basis(K), each
/// verified as an eigen-equation. Sorted ascending. Throws
/// ConsistencyError if an image is not an eigenvector or the images are
/// dependent.
std::vector<int> l0_spectrum_on_box(int K);

}  // namespace swf
