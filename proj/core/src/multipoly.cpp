#include "swfusion/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace swf {

MultivariatePoly MultivariatePoly::constant(int nvars, const Rational& c) {
  MultivariatePoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultivariatePoly MultivariatePoly::monomial(Exponents exps, const Rational& c) {
  MultivariatePoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

MultivariatePoly MultivariatePoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("MultivariatePoly::variable");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(std::move(e));
}

void MultivariatePoly::check_arity(const Exponents& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("MultivariatePoly: exponent vector has wrong length");
}

Rational MultivariatePoly::coefficient(const Exponents& e) const {
  check_arity(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultivariatePoly::constant_term() const {
  return coefficient(Exponents(static_cast<std::size_t>(nvars_), 0));
}

MultivariatePoly MultivariatePoly::inverted() const {
  MultivariatePoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents n = e;
    for (auto& x : n) x = -x;
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

void MultivariatePoly::add_term(const Exponents& e, const Rational& c) {
  check_arity(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultivariatePoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultivariatePoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultivariatePoly: arity mismatch");
  MultivariatePoly r(a.nvars_);
  MultivariatePoly::Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultivariatePoly MultivariatePoly::divide_exact(const MultivariatePoly& d) const {
  if (d.nvars_ != nvars_) throw std::invalid_argument("MultivariatePoly: arity mismatch");
  if (d.is_zero()) throw std::domain_error("MultivariatePoly::divide_exact: division by zero");
  auto nonneg = [](const MultivariatePoly& p) {
    return std::all_of(p.terms_.begin(), p.terms_.end(), [](const auto& t) {
      return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x >= 0; });
    });
  };
  if (!nonneg(*this) || !nonneg(d))
    throw std::domain_error("MultivariatePoly::divide_exact: negative exponents");
  MultivariatePoly q(nvars_), r = *this;
  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    Exponents qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) throw InternalError("MultivariatePoly::divide_exact: non-exact division");
    }
    const Rational qc = rc / lead_c;
    MultivariatePoly t = monomial(qe, qc);
    q += t;
    r -= t * d;
  }
  return q;
}

std::string MultivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.get_str();
    for (std::size_t i = 0; i < it->first.size(); ++i)
      if (it->first[i] != 0)
        s += "*z" + std::to_string(i + 1) + "^" + std::to_string(it->first[i]);
  }
  return s;
}

Rational paired_constant_term(const MultivariatePoly& P, const MultivariatePoly& Q) {
  if (P.nvars() != Q.nvars()) throw std::invalid_argument("paired_constant_term: arity mismatch");
  Rational acc = 0;
  MultivariatePoly::Exponents neg(static_cast<std::size_t>(P.nvars()));
  for (const auto& [e, c] : P.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    auto it = Q.terms().find(neg);
    if (it != Q.terms().end()) acc += c * it->second;
  }
  return acc;
}

MultivariatePoly alternant(std::span<const int> exponents) {
  const int k = static_cast<int>(exponents.size());
  MultivariatePoly r(k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  MultivariatePoly::Exponents e(static_cast<std::size_t>(k));
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    // row i (variable z_i) takes column perm[i]
    for (int i = 0; i < k; ++i)
      e[static_cast<std::size_t>(i)] = exponents[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    r.add_term(e, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

MultivariatePoly vandermonde(int k) {
  std::vector<int> ex(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) ex[static_cast<std::size_t>(j)] = k - 1 - j;
  return alternant(ex);
}

MultivariatePoly monomial_symmetric(const Partition& mu, int k) {
  MultivariatePoly r(k);
  if (mu.length() > k) return r;
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)];
  std::sort(e.begin(), e.end());
  do {
    r.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return r;
}

std::vector<int> shifted_exponents(const Partition& lambda, int k) {
  if (lambda.length() > k) throw std::domain_error("shifted_exponents: l(lambda) > k");
  std::vector<int> e(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    e[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] + k - 1 - j;
  return e;
}

}  // namespace swf
