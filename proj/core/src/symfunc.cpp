#include "swfusion/symfunc.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace swf {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::s: return "s";
  }
  return "?";
}

Basis basis_from_string(const std::string& name) {
  if (name == "p") return Basis::p;
  if (name == "m") return Basis::m;
  if (name == "h") return Basis::h;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown symmetric function basis '" + name + "'");
}

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [l, c] : terms) add_term(l, c);
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const Rational& c) {
  SymFunc f(basis);
  f.add_term(lambda, c);
  return f;
}

SymFunc SymFunc::scalar(const Rational& c, Basis basis) { return element(basis, Partition{}, c); }

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first.size();
}

bool SymFunc::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("SymFunc: basis mismatch in +");
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("SymFunc: basis mismatch in -");
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.get_str() + ")" + swf::to_string(basis_) + l.to_string();
  }
  return s;
}

namespace {

using PExp = SymFunc::Terms;

void add_scaled(PExp& into, const PExp& from, const Rational& scale) {
  for (const auto& [l, c] : from) {
    auto [it, inserted] = into.try_emplace(l, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second == 0) into.erase(it);
    }
  }
}

PExp multiply_p(const PExp& a, const PExp& b) {
  PExp r;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) add_scaled(r, PExp{{la.merged(lb), ca * cb}}, 1);
  return r;
}

/// Conversion tables in the power-sum basis, filled lazily.
class TransitionCache {
 public:
  static TransitionCache& instance() {
    static TransitionCache cache;
    return cache;
  }

  /// Newton: n h_n = sum_{r=1}^n p_r h_{n-r}.
  const PExp& h_single(int n) {
    std::lock_guard lock(mutex_);
    return h_single_locked(n);
  }

  PExp in_p(Basis b, const Partition& lambda) {
    std::lock_guard lock(mutex_);
    switch (b) {
      case Basis::p: return PExp{{lambda, Rational(1)}};
      case Basis::h: return h_locked(lambda);
      case Basis::s: return s_locked(lambda);
      case Basis::m: return m_locked(lambda);
    }
    throw std::logic_error("unreachable");
  }

 private:
  const PExp& h_single_locked(int n) {
    while (static_cast<int>(h_single_.size()) <= n) {
      const int m = static_cast<int>(h_single_.size());
      PExp e;
      if (m == 0) {
        e.emplace(Partition{}, 1);
      } else {
        for (int r = 1; r <= m; ++r)
          for (const auto& [l, c] : h_single_[static_cast<std::size_t>(m - r)])
            add_scaled(e, PExp{{l.with_part(r), c}}, Rational(1, m));
      }
      h_single_.push_back(std::move(e));
    }
    return h_single_[static_cast<std::size_t>(n)];
  }

  const PExp& h_locked(const Partition& mu) {
    if (auto it = h_.find(mu); it != h_.end()) return it->second;
    PExp r{{Partition{}, Rational(1)}};
    for (int part : mu.parts()) r = multiply_p(r, h_single_locked(part));
    return h_.emplace(mu, std::move(r)).first->second;
  }

  /// Jacobi-Trudi: s_lambda = det[h_{lambda_i - i + j}].
  const PExp& s_locked(const Partition& lambda) {
    if (auto it = s_.find(lambda); it != s_.end()) return it->second;
    const int l = lambda.length();
    std::map<Partition, BigInt, GradedRevLex> h_terms;
    std::vector<int> chosen;
    std::function<void(int, unsigned, int)> expand = [&](int row, unsigned used, int sign) {
      if (row == l) {
        std::vector<int> parts = chosen;
        std::sort(parts.begin(), parts.end(), std::greater<>());
        h_terms[Partition(std::move(parts))] += sign;
        return;
      }
      int free_before = 0;
      for (int c = 0; c < l; ++c) {
        if (used & (1u << c)) continue;
        const int idx = lambda[static_cast<std::size_t>(row)] - row + c;
        if (idx >= 0) {
          if (idx > 0) chosen.push_back(idx);
          expand(row + 1, used | (1u << c), free_before % 2 == 0 ? sign : -sign);
          if (idx > 0) chosen.pop_back();
        }
        ++free_before;
      }
    };
    expand(0, 0, 1);
    PExp r;
    for (const auto& [mu, c] : h_terms)
      if (c != 0) add_scaled(r, h_locked(mu), Rational(c));
    return s_.emplace(lambda, std::move(r)).first->second;
  }

  /// Inverse Kostka matrix for partitions of n in revlex order.
  const std::vector<std::vector<BigInt>>& kostka_inverse_locked(int n) {
    if (auto it = kinv_.find(n); it != kinv_.end()) return it->second;
    const auto parts = partitions_of(n);
    const std::size_t d = parts.size();
    std::vector<std::vector<BigInt>> K(d, std::vector<BigInt>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        K[i][j] = kostka_number(parts[i], parts[j]);
        if ((j < i && K[i][j] != 0) || (j == i && K[i][j] != 1))
          throw InternalError("Kostka matrix is not unitriangular in revlex order");
      }
    std::vector<std::vector<BigInt>> X(d, std::vector<BigInt>(d));
    for (std::size_t i = d; i-- > 0;)
      for (std::size_t j = i; j < d; ++j) {
        BigInt v = (i == j) ? 1 : 0;
        for (std::size_t t = i + 1; t <= j; ++t) v -= K[i][t] * X[t][j];
        X[i][j] = v;
      }
    return kinv_.emplace(n, std::move(X)).first->second;
  }

  /// m_mu = sum_lambda (K^{-1})_{mu,lambda} s_lambda.
  const PExp& m_locked(const Partition& mu) {
    if (auto it = m_.find(mu); it != m_.end()) return it->second;
    const auto parts = partitions_of(mu.size());
    const auto& X = kostka_inverse_locked(mu.size());
    const auto row = static_cast<std::size_t>(
        std::find(parts.begin(), parts.end(), mu) - parts.begin());
    PExp r;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (X[row][j] != 0) add_scaled(r, s_locked(parts[j]), Rational(X[row][j]));
    return m_.emplace(mu, std::move(r)).first->second;
  }

  std::recursive_mutex mutex_;
  std::deque<PExp> h_single_;
  std::map<Partition, PExp, GradedRevLex> h_, s_, m_;
  std::map<int, std::vector<std::vector<BigInt>>> kinv_;
};

PExp to_p(const SymFunc& f) {
  if (f.basis() == Basis::p) return f.terms();
  auto& cache = TransitionCache::instance();
  PExp r;
  for (const auto& [l, c] : f.terms()) add_scaled(r, cache.in_p(f.basis(), l), c);
  return r;
}

Rational pairing(const PExp& a, const PExp& b, bool modified) {
  Rational acc = 0;
  for (const auto& [l, c] : a) {
    auto it = b.find(l);
    if (it == b.end()) continue;
    Rational w(z_lambda(l));
    if (modified) {
      BigInt two_l = 1;
      two_l <<= static_cast<mp_bitcnt_t>(l.length());
      w *= Rational(two_l);
    }
    acc += c * it->second * w;
  }
  return acc;
}

}  // namespace

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc prod(Basis::p, multiply_p(to_p(a), to_p(b)));
  return convert(prod, a.basis());
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const PExp fp = to_p(f);
  if (target == Basis::p) return SymFunc(Basis::p, fp);

  // Coefficients in the target basis are pairings against its dual basis:
  // s is self-dual, and h and m are dual to each other.
  const Basis dual = target == Basis::s ? Basis::s : (target == Basis::m ? Basis::h : Basis::m);
  std::set<int> degrees;
  for (const auto& [l, c] : fp) degrees.insert(l.size());
  auto& cache = TransitionCache::instance();
  SymFunc out(target);
  for (int d : degrees)
    for (const auto& lambda : partitions_of(d))
      out.add_term(lambda, pairing(fp, cache.in_p(dual, lambda), false));
  return out;
}

bool same_element(const SymFunc& a, const SymFunc& b) {
  return convert(a, Basis::p) == convert(b, Basis::p);
}

BigInt kostka_number(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) throw std::domain_error("kostka_number: |nu| != |mu|");
  // Peel off the largest label as a horizontal strip, recursively.
  std::map<std::pair<std::vector<int>, int>, BigInt> memo;
  std::function<BigInt(const std::vector<int>&, int)> count = [&](const std::vector<int>& shape,
                                                                  int labels) -> BigInt {
    if (labels == 0) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, labels);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = mu[static_cast<std::size_t>(labels - 1)];
    BigInt total = 0;
    std::vector<int> inner(shape.size());
    std::function<void(std::size_t, int)> choose = [&](std::size_t i, int left) {
      if (i == shape.size()) {
        if (left != 0) return;
        std::vector<int> trimmed = inner;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += count(trimmed, labels - 1);
        return;
      }
      const int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
      for (int v = shape[i]; v >= lo; --v) {
        const int removed = shape[i] - v;
        if (removed > left) break;
        inner[i] = v;
        choose(i + 1, left - removed);
      }
    };
    choose(0, strip);
    memo.emplace(std::move(key), total);
    return total;
  };
  return count(nu.parts(), mu.length());
}

Rational hall_inner(const SymFunc& f, const SymFunc& g) { return pairing(to_p(f), to_p(g), false); }

Rational modified_inner(const SymFunc& f, const SymFunc& g) {
  return pairing(to_p(f), to_p(g), true);
}

MultivariatePoly schur_poly(const Partition& lambda, int k) {
  if (k < 0) throw std::domain_error("schur_poly: negative variable count");
  if (lambda.length() > k) return MultivariatePoly(k);
  const auto num = alternant(shifted_exponents(lambda, k));
  return num.divide_exact(vandermonde(k));
}

void to_json(nlohmann::json& j, const SymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [l, c] : f.terms())
    terms.push_back({{"partition", l.parts()},
                     {"numerator", c.get_num().get_str()},
                     {"denominator", c.get_den().get_str()}});
  j = {{"basis", to_string(f.basis())}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, SymFunc& f) {
  SymFunc r(basis_from_string(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    const BigInt den(t.at("denominator").get<std::string>(), 10);
    if (den == 0) throw std::invalid_argument("SymFunc JSON: zero denominator");
    Rational c(BigInt(t.at("numerator").get<std::string>(), 10), den);
    c.canonicalize();
    r.add_term(Partition(t.at("partition").get<std::vector<int>>()), c);
  }
  f = std::move(r);
}

}  // namespace swf
