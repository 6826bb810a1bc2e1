#include "swfusion/fock.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "swfusion/linalg.hpp"

namespace swf {

EWord::EWord(int k, std::vector<int> indices) : k_(k), idx_(std::move(indices)) {
  if (k < 1) throw std::domain_error("EWord: k must be positive");
  if (static_cast<int>(idx_.size()) != k) throw std::domain_error("EWord: need exactly k indices");
  for (int i : idx_)
    if (i < 0 || i > k) throw std::domain_error("EWord: index outside 0..k");
  std::sort(idx_.begin(), idx_.end());
}

EWord EWord::from_profile(const std::vector<int>& profile) {
  std::vector<int> idx;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j] < 0) throw std::domain_error("EWord::from_profile: negative multiplicity");
    idx.insert(idx.end(), static_cast<std::size_t>(profile[j]), static_cast<int>(j));
  }
  const int k = static_cast<int>(idx.size());
  return EWord(k, std::move(idx));
}

int EWord::degree() const noexcept {
  int d = 0;
  for (int i : idx_) d += k_ - i;
  return d;
}

std::vector<int> EWord::profile() const {
  std::vector<int> r(static_cast<std::size_t>(k_) + 1, 0);
  for (int i : idx_) ++r[static_cast<std::size_t>(i)];
  return r;
}

SymFunc OperatorOnLambda::apply(const SymFunc& f) const {
  const SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [lambda, c] : fp.terms()) out += rule_(lambda) * c;
  return out;
}

namespace {

std::set<int> distinct_parts(const Partition& l) { return {l.parts().begin(), l.parts().end()}; }

}  // namespace

OperatorOnLambda heisenberg(int n) {
  if (n == 0) throw std::domain_error("heisenberg: h_0 is the zero operator; use heisenberg_zero_mode");
  if (n > 0)
    return {-n, [n](const Partition& l) {
              SymFunc r(Basis::p);
              const int m = l.multiplicity(n);
              if (m > 0) r.add_term(l.without_part(n), Rational(2 * n * m));
              return r;
            }};
  return {-n, [n](const Partition& l) { return SymFunc::element(Basis::p, l.with_part(-n)); }};
}

OperatorOnLambda virasoro(int n) {
  if (n == 0)
    return {0, [](const Partition& l) { return SymFunc::element(Basis::p, l, Rational(l.size())); }};
  if (n > 0)
    return {-n, [n](const Partition& l) {
              SymFunc r(Basis::p);
              // sum_{r > n} p_{r-n} r d/dp_r
              for (int part : distinct_parts(l))
                if (part > n)
                  r.add_term(l.without_part(part).with_part(part - n),
                             Rational(part * l.multiplicity(part)));
              // sum_{r=1}^{n-1} r(n-r) d/dp_r d/dp_{n-r}
              for (int a = 1; a < n; ++a) {
                const int b = n - a;
                const int ma = l.multiplicity(a);
                const int mult = (a == b) ? ma * (ma - 1) : ma * l.multiplicity(b);
                if (mult == 0) continue;
                r.add_term(l.without_part(a).without_part(b), Rational(a * b * mult));
              }
              return r;
            }};
  const int m = -n;
  return {m, [m](const Partition& l) {
            SymFunc r(Basis::p);
            // sum_{r >= 1} p_{m+r} r d/dp_r
            for (int part : distinct_parts(l))
              r.add_term(l.without_part(part).with_part(m + part),
                         Rational(part * l.multiplicity(part)));
            // (1/4) sum_{r=1}^{m-1} p_r p_{m-r}
            for (int a = 1; a < m; ++a) r.add_term(l.with_part(a).with_part(m - a), Rational(1, 4));
            return r;
          }};
}

SymFunc heisenberg_apply(int n, const SymFunc& f) { return heisenberg(n).apply(f); }

SymFunc heisenberg_zero_mode(const SymFunc& f) {
  (void)f;
  return SymFunc(Basis::p);
}

SymFunc virasoro_apply(int n, const SymFunc& f) { return virasoro(n).apply(f); }

VerificationReport virasoro_commutator_check(int m, int n, int degree_bound) {
  VerificationReport rep;
  const auto Lm = virasoro(m), Ln = virasoro(n), Lsum = virasoro(m + n);
  Rational central = 0;
  if (m == -n) central = Rational(m * m * m - m, 12);
  central.canonicalize();
  for (int d = 0; d <= degree_bound && rep.pass; ++d)
    for (const auto& lambda : partitions_of(d)) {
      const SymFunc f = SymFunc::element(Basis::p, lambda);
      const SymFunc lhs = Lm(Ln(f)) - Ln(Lm(f));
      const SymFunc rhs = Lsum(f) * Rational(m - n) + f * central;
      if (lhs != rhs) {
        rep.fail("p" + lambda.to_string() + ": [L_m,L_n] = " + lhs.to_string() +
                 ", expected " + rhs.to_string());
        break;
      }
    }
  rep.details["central_term"] = central.get_str();
  if (m == -n && m * m * m != m) {
    // [L_m, L_{-m}] 1 - 2m L_0 1 = c (m^3 - m)/12 on the vacuum.
    const SymFunc one = SymFunc::scalar(1);
    const SymFunc bracket = Lm(Ln(one)) - Ln(Lm(one)) - Lsum(one) * Rational(m - n);
    Rational c = bracket.coefficient(Partition{}) * Rational(12) / Rational(m * m * m - m);
    c.canonicalize();
    rep.details["central_charge"] = c.get_str();
    if (c != 1) rep.fail("central charge " + c.get_str() + " != 1");
  }
  return rep;
}

VerificationReport heisenberg_ccr_check(int n, int m, int degree_bound) {
  if (n < 1 || m < 1) throw std::domain_error("heisenberg_ccr_check: need n, m >= 1");
  VerificationReport rep;
  const auto hn = heisenberg(n), hmn = heisenberg(-m), hm = heisenberg(m), hnn = heisenberg(-n);
  const Rational expected = n == m ? Rational(2 * n) : Rational(0);
  for (int d = 0; d <= degree_bound && rep.pass; ++d)
    for (const auto& lambda : partitions_of(d)) {
      const SymFunc f = SymFunc::element(Basis::p, lambda);
      if (hn(hmn(f)) - hmn(hn(f)) != f * expected) {
        rep.fail("[h_" + std::to_string(n) + ", h_-" + std::to_string(m) + "] on p" + lambda.to_string());
        break;
      }
      if (hn(hm(f)) != hm(hn(f)) || hnn(hmn(f)) != hmn(hnn(f))) {
        rep.fail("same-sign modes fail to commute on p" + lambda.to_string());
        break;
      }
    }
  rep.details["expected_scalar"] = expected.get_str();
  return rep;
}

VerificationReport singular_vector_check(int k, int maxn) {
  if (k < 1 || maxn < 1) throw std::domain_error("singular_vector_check: need k, maxn >= 1");
  VerificationReport rep;
  const SymFunc xi = convert(SymFunc::element(Basis::s, Partition(std::vector<int>(static_cast<std::size_t>(k), k))), Basis::p);
  for (int j = 1; j <= maxn; ++j) {
    const SymFunc r = virasoro_apply(j, xi);
    if (!r.is_zero()) rep.fail("L_" + std::to_string(j) + " s_(k^k) = " + r.to_string());
  }
  const SymFunc l0 = virasoro_apply(0, xi);
  if (l0 != xi * Rational(k * k)) rep.fail("L_0 s_(k^k) != k^2 s_(k^k)");
  rep.details["eigenvalue"] = k * k;
  rep.details["terms_in_p_basis"] = xi.terms().size();
  return rep;
}

SymFunc e_word_apply_ordered(int k, std::span<const int> indices) {
  if (k < 1) throw std::domain_error("e_word_apply: k must be positive");
  if (static_cast<int>(indices.size()) != k) throw std::domain_error("e_word_apply: need k indices");
  MultivariatePoly::Exponents lead(static_cast<std::size_t>(k));
  int degree = 0;
  for (int j = 0; j < k; ++j) {
    const int i = indices[static_cast<std::size_t>(j)];
    if (i < 0 || i > k) throw std::domain_error("e_word_apply: index outside 0..k");
    lead[static_cast<std::size_t>(j)] = k - i;
    degree += k - i;
  }
  const MultivariatePoly P = MultivariatePoly::monomial(lead) * vandermonde(k);
  const Rational sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  SymFunc out(Basis::s);
  for (const auto& lambda : partitions_of(degree, degree, k)) {
    const MultivariatePoly Q = alternant(shifted_exponents(lambda, k)).inverted();
    out.add_term(lambda, sign * paired_constant_term(P, Q));
  }
  return out;
}

SymFunc e_word_apply(const EWord& w) { return e_word_apply_ordered(w.k(), w.indices()); }

VerificationReport verify_rectangular(int k, int m) {
  if (k < 1 || m < 0 || m > k) throw std::domain_error("verify_rectangular: need k >= 1, 0 <= m <= k");
  VerificationReport rep;
  const SymFunc got = e_word_apply(EWord(k, std::vector<int>(static_cast<std::size_t>(k), m)));
  const Rational sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  const Partition rect(std::vector<int>(static_cast<std::size_t>(k), k - m));
  const SymFunc expected = SymFunc::element(Basis::s, rect, sign * Rational(factorial(static_cast<unsigned>(k))));
  if (got != expected) rep.fail("got " + got.to_string() + ", expected " + expected.to_string());
  rep.details["result"] = got;
  return rep;
}

SymFunc schur_via_gensegal(const Partition& nu, int k) {
  if (k < 1) throw std::domain_error("schur_via_gensegal: k must be positive");
  if (!nu.fits_in_box(k, k)) throw std::domain_error("schur_via_gensegal: nu must lie in the k x k box");
  const Rational sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  SymFunc out(Basis::s);
  for (const auto& mu : partitions_of(nu.size(), k, k)) {
    const BigInt K = kostka_number(nu, mu);
    if (K == 0) continue;
    std::vector<int> idx(static_cast<std::size_t>(k));
    BigInt denom = 1;
    std::vector<int> r(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 0; j < k; ++j) {
      const int part = mu[static_cast<std::size_t>(j)];
      idx[static_cast<std::size_t>(j)] = k - part;
      ++r[static_cast<std::size_t>(part)];
    }
    for (int rj : r) denom *= factorial(static_cast<unsigned>(rj));
    Rational coeff(K, denom);
    coeff.canonicalize();
    out += e_word_apply(EWord(k, std::move(idx))) * (sign * coeff);
  }
  return out;
}

std::vector<EWord> f2n_zero_basis(int n) {
  if (n < 1) throw std::domain_error("f2n_zero_basis: n must be positive");
  std::vector<EWord> out;
  std::vector<int> profile(static_cast<std::size_t>(n) + 1, 0);
  // compositions of n into n+1 parts, reverse lexicographic in the profile
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == profile.size() - 1) {
      profile[pos] = left;
      out.push_back(EWord::from_profile(profile));
      return;
    }
    for (int v = left; v >= 0; --v) {
      profile[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

VerificationReport f2n_span_check(int n) {
  VerificationReport rep;
  const auto box = partitions_in_box(n, n);
  std::vector<std::vector<Rational>> rows;
  for (const auto& w : f2n_zero_basis(n)) {
    const SymFunc img = e_word_apply(w);
    std::vector<Rational> row(box.size());
    for (const auto& [lambda, c] : img.terms()) {
      auto it = std::find(box.begin(), box.end(), lambda);
      if (it == box.end()) {
        rep.fail("image has s" + lambda.to_string() + " outside the box");
        return rep;
      }
      row[static_cast<std::size_t>(it - box.begin())] = c;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t rank = rational_rank(rows);
  const BigInt expected = binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n));
  rep.details["rank"] = rank;
  rep.details["box_dimension"] = box.size();
  if (BigInt(static_cast<unsigned long>(rank)) != expected || box.size() != rank)
    rep.fail("rank " + std::to_string(rank) + ", expected " + expected.get_str());
  return rep;
}

VerificationReport adjointness_check(int n, int degree_bound) {
  if (n < 1) throw std::domain_error("adjointness_check: n must be positive");
  VerificationReport rep;
  const auto down = heisenberg(n), up = heisenberg(-n);
  std::size_t pairs = 0;
  for (int d = n; d <= degree_bound && rep.pass; ++d)
    for (const auto& lambda : partitions_of(d)) {
      const SymFunc f = SymFunc::element(Basis::p, lambda);
      const SymFunc hf = down(f);
      for (const auto& mu : partitions_of(d - n)) {
        const SymFunc g = SymFunc::element(Basis::p, mu);
        ++pairs;
        const Rational lhs = modified_inner(hf, g);
        const Rational rhs = modified_inner(f, up(g));
        if (lhs != rhs) {
          rep.fail("f=p" + lambda.to_string() + ", g=p" + mu.to_string() + ": " + lhs.get_str() +
                   " != " + rhs.get_str());
          break;
        }
      }
    }
  rep.details["pairs"] = pairs;
  return rep;
}

std::vector<int> l0_spectrum_on_box(int K) {
  std::vector<int> eig;
  const auto box = partitions_in_box(K, K);
  std::vector<std::vector<Rational>> rows;
  for (const auto& w : f2n_zero_basis(K)) {
    const SymFunc img = e_word_apply(w);
    const SymFunc fp = convert(img, Basis::p);
    const int d = w.degree();
    if (virasoro_apply(0, fp) != fp * Rational(d))
      throw ConsistencyError("image of an e-word is not an L_0 eigenvector");
    eig.push_back(d);
    std::vector<Rational> row(box.size());
    for (const auto& [lambda, c] : img.terms())
      row[static_cast<std::size_t>(std::find(box.begin(), box.end(), lambda) - box.begin())] = c;
    rows.push_back(std::move(row));
  }
  if (rational_rank(rows) != rows.size())
    throw ConsistencyError("images of the e-word basis are linearly dependent");
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace swf
