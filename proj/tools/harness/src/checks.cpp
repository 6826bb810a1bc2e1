#include <algorithm>
#include <map>
#include <sstream>

#include "swfusion/fock.hpp"
#include "swfusion/fusion.hpp"
#include "swfusion/harness/suite.hpp"
#include "swfusion/qseries.hpp"
#include "swfusion/symfunc.hpp"
#include "swfusion/tableau.hpp"

namespace swf::harness {

namespace {

struct Range {
  int lo, hi;
};

Range n_range(const SuiteConfig& c, int lo, int hi, int hard) {
  return {bound(c.n_min, lo, lo, hard), bound(c.n_max, hi, lo, hard)};
}

Range k_range(const SuiteConfig& c, int lo, int hi, int hard) {
  return {bound(c.k_min, lo, lo, hard), bound(c.k_max, hi, lo, hard)};
}

int first_even(int n) { return n % 2 == 0 ? n : n + 1; }

Partition two_row(int a, int b) { return Partition{a, b}; }

EvaluationParams points(ZPoints z, int N) {
  return z == ZPoints::consecutive ? EvaluationParams::consecutive(N) : EvaluationParams::geometric(N);
}

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

CheckReport theorem1(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 2, 10, 12);
  CheckReport r;
  r.params = {{"N_min", first_even(lo)}, {"N_max", hi}, {"z_points", to_string(c.z_points)}};
  int shapes = 0;
  for (int N = first_even(lo); N <= hi && r.status == Status::pass; N += 2) {
    const auto table = build_filtration(N, points(c.z_points, N));
    const auto mult = multiplicity_qcharacters_from_table(table);
    const int n = N / 2;
    for (int k = 0; k <= n; ++k, ++shapes) {
      const QPoly fus = mult.count(k) ? mult.at(k) : QPoly{};
      const QPoly tab = maj_gf(two_row(n + k, n - k));
      const QPoly kedem = multiplicity_qcharacter(k, N);
      if (fus != tab || tab != kedem) {
        r.fail("N=" + std::to_string(N) + " k=" + std::to_string(k) + ": fusion " + fus.to_string() +
               ", maj_gf " + tab.to_string() + ", kostka-foulkes " + kedem.to_string());
        break;
      }
    }
  }
  r.params["shapes"] = shapes;
  return r;
}

CheckReport maj_charge(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 1, 12, 16);
  CheckReport r;
  r.params = {{"N_min", lo}, {"N_max", hi}};
  long count = 0;
  for (int N = lo; N <= hi; ++N)
    for (int b = 0; 2 * b <= N; ++b)
      for (const auto& t : enumerate_shape(N - b, b)) {
        ++count;
        if (maj(t) + charge(t) != N * (N - 1) / 2) {
          r.fail(t.to_string() + ": maj " + std::to_string(maj(t)) + " + charge " + std::to_string(charge(t)));
          return r;
        }
      }
  r.params["tableaux"] = count;
  return r;
}

CheckReport qhook_oracle(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 1, 14, 18);
  CheckReport r;
  r.params = {{"N_min", lo}, {"N_max", hi}};
  for (int N = lo; N <= hi; ++N)
    for (int b = 0; 2 * b <= N; ++b) {
      const Partition shape = two_row(N - b, b);
      const QPoly a = maj_gf(shape), q = qhook_maj_gf(shape);
      if (a != q) {
        r.fail("shape " + shape.to_string() + ": maj_gf " + a.to_string() + ", q-hook " + q.to_string());
        return r;
      }
    }
  return r;
}

CheckReport embedding(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 1, 12, 16);
  const auto [klo, khi] = k_range(c, 0, 6, 10);
  CheckReport r;
  r.params = {{"N_min", lo}, {"N_max", hi}, {"k_max", khi}};
  for (int N = lo; N <= hi; ++N)
    for (int b = 0; 2 * b <= N; ++b)
      for (const auto& t : enumerate_shape(N - b, b)) {
        const TwoRowSYT e = embed(t);
        if (maj(e) != maj(t) + N + 1) {
          r.fail(t.to_string() + ": maj(embed) = " + std::to_string(maj(e)));
          return r;
        }
        if (e.row1().size() - e.row2().size() != t.row1().size() - t.row2().size()) {
          r.fail(t.to_string() + ": embed changed the row difference");
          return r;
        }
        if (N % 2 == 0) {
          const int before = stable_major_index(StableTableau(t));
          const int after = stable_major_index(StableTableau(e));
          if (before != after) {
            r.fail(t.to_string() + ": r changes from " + std::to_string(before) + " to " + std::to_string(after));
            return r;
          }
        }
      }
  for (int k = klo; k <= khi; ++k)
    for (int len = 2 * k; len <= 2 * k + 6; len += 2) {
      if (len == 0) continue;
      const int v = stable_major_index(StableTableau(principal_tableau(k, len)));
      if (v != k * k) {
        r.fail("principal k=" + std::to_string(k) + " length " + std::to_string(len) + ": r = " + std::to_string(v));
        return r;
      }
    }
  return r;
}

CheckReport level_qbinomial(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 8, 10);
  CheckReport r;
  r.params = {{"K_min", lo}, {"K_max", hi}};
  for (int K = lo; K <= hi; ++K) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(K * K) + 1, 0);
    const auto level = enumerate_level(K);
    for (const auto& t : level) {
      const int v = stable_major_index(t);
      if (v < 0 || v > K * K) {
        r.fail("K=" + std::to_string(K) + ": r out of range for " + t.prefix().to_string());
        return r;
      }
      ++coeffs[static_cast<std::size_t>(v)];
    }
    const QPoly gf(coeffs), gb = gauss_binomial(2 * K, K), box = box_partition_gf(K);
    if (gf != gb || gb != box || BigInt(static_cast<unsigned long>(level.size())) != binomial(2 * K, K)) {
      r.fail("K=" + std::to_string(K) + ": level " + gf.to_string() + ", gauss " + gb.to_string() + ", box " +
             box.to_string());
      return r;
    }
    if (K == hi)
      for (int d = 0; d <= K; ++d)
        if (gf.coeff(d) != partition_count(d)) {
          r.fail("K=" + std::to_string(K) + ": coefficient of q^" + std::to_string(d) + " is " + gf.coeff(d).get_str() +
                 ", p(d) = " + partition_count(d).get_str());
          return r;
        }
  }
  return r;
}

CheckReport rectangular(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 4, 5);
  CheckReport r;
  r.params = {{"k_min", lo}, {"k_max", hi}};
  for (int k = lo; k <= hi; ++k)
    for (int m = 0; m <= k; ++m) {
      const auto rep = verify_rectangular(k, m);
      if (!rep.pass) {
        r.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + rep.witness.value_or(""));
        return r;
      }
    }
  return r;
}

CheckReport gensegal(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 3, 4);
  CheckReport r;
  r.params = {{"k_min", lo}, {"k_max", hi}};
  for (int k = lo; k <= hi; ++k)
    for (const auto& nu : partitions_in_box(k, k)) {
      const SymFunc got = schur_via_gensegal(nu, k);
      if (got != SymFunc::element(Basis::s, nu)) {
        r.fail("nu=" + nu.to_string() + " k=" + std::to_string(k) + ": " + got.to_string());
        return r;
      }
    }
  return r;
}

CheckReport f2n_span(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 4, 5);
  CheckReport r;
  r.params = {{"n_min", lo}, {"n_max", hi}};
  for (int n = lo; n <= hi; ++n) {
    const auto rep = f2n_span_check(n);
    if (!rep.pass) {
      r.fail("n=" + std::to_string(n) + ": " + rep.witness.value_or(""));
      return r;
    }
  }
  return r;
}

constexpr int kModes = 4;

CheckReport virasoro(const SuiteConfig& c) {
  const int d = bound(c.degree_max, 8, 0, 10);
  CheckReport r;
  r.params = {{"modes", kModes}, {"degree_max", d}};
  for (int m = -kModes; m <= kModes; ++m)
    for (int n = -kModes; n <= kModes; ++n) {
      const auto rep = virasoro_commutator_check(m, n, d);
      if (!rep.pass) {
        r.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + rep.witness.value_or(""));
        return r;
      }
    }
  return r;
}

CheckReport singular(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 4, 5);
  CheckReport r;
  r.params = {{"k_min", lo}, {"k_max", hi}};
  for (int k = lo; k <= hi; ++k) {
    const auto rep = singular_vector_check(k, std::max(2, k * k));
    if (!rep.pass) {
      r.fail("k=" + std::to_string(k) + ": " + rep.witness.value_or(""));
      return r;
    }
  }
  return r;
}

CheckReport ccr(const SuiteConfig& c) {
  const int d = bound(c.degree_max, 8, 0, 10);
  CheckReport r;
  r.params = {{"modes", kModes}, {"degree_max", d}};
  for (int n = 1; n <= kModes; ++n)
    for (int m = 1; m <= kModes; ++m) {
      const auto rep = heisenberg_ccr_check(n, m, d);
      if (!rep.pass) {
        r.fail(rep.witness.value_or(""));
        return r;
      }
    }
  return r;
}

CheckReport adjointness(const SuiteConfig& c) {
  const int d = bound(c.degree_max, 8, 0, 10);
  CheckReport r;
  r.params = {{"modes", kModes}, {"degree_max", d}};
  for (int n = 1; n <= kModes; ++n) {
    const auto rep = adjointness_check(n, d);
    if (!rep.pass) {
      r.fail("n=" + std::to_string(n) + ": " + rep.witness.value_or(""));
      return r;
    }
  }
  return r;
}

CheckReport schur_weyl(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 1, 14, 20);
  CheckReport r;
  r.params = {{"N_min", lo}, {"N_max", hi}};
  for (int N = lo; N <= hi; ++N) {
    BigInt by_count = 0, by_hook = 0;
    for (int b = 0; 2 * b <= N; ++b) {
      by_count += (N - 2 * b + 1) * static_cast<long>(enumerate_shape(N - b, b).size());
      by_hook += BigInt(N - 2 * b + 1) * two_row_hook_count(N - b, b);
    }
    const BigInt expected = BigInt(1) << static_cast<unsigned>(N);
    if (by_count != expected || by_hook != expected) {
      r.fail("N=" + std::to_string(N) + ": " + by_count.get_str() + " / " + by_hook.get_str() + " vs " +
             expected.get_str());
      return r;
    }
  }
  return r;
}

CheckReport z_independence(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 2, 8, 12);
  CheckReport r;
  r.params = {{"N_min", first_even(lo)}, {"N_max", hi}};
  for (int N = first_even(lo); N <= hi; N += 2) {
    const auto a = build_filtration(N, EvaluationParams::consecutive(N));
    const auto b = build_filtration(N, EvaluationParams::geometric(N));
    if (a != b) {
      r.fail("N=" + std::to_string(N) + ": consecutive\n" + a.to_tsv() + "geometric\n" + b.to_tsv());
      return r;
    }
  }
  return r;
}

CheckReport l0_spectrum(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 4, 5);
  CheckReport r;
  r.params = {{"K_min", lo}, {"K_max", hi}};
  for (int K = lo; K <= hi; ++K) {
    std::vector<int> rs;
    for (const auto& t : enumerate_level(K)) rs.push_back(stable_major_index(t));
    std::sort(rs.begin(), rs.end());
    const auto eig = l0_spectrum_on_box(K);
    if (rs != eig) {
      std::string w = "K=" + std::to_string(K) + ": r-values";
      for (int v : rs) w += " " + std::to_string(v);
      w += "; eigenvalues";
      for (int v : eig) w += " " + std::to_string(v);
      r.fail(w);
      return r;
    }
  }
  return r;
}

CheckReport kedem_reversal(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 2, 14, 18);
  CheckReport r;
  r.params = {{"N_min", first_even(lo)}, {"N_max", hi}};
  for (int N = first_even(lo); N <= hi; N += 2) {
    const int n = N / 2;
    for (int k = 0; k <= n; ++k) {
      const QPoly p = multiplicity_qcharacter(k, N);
      const std::string tag = "N=" + std::to_string(N) + " k=" + std::to_string(k);
      if (!p.has_nonnegative_coefficients() || p.degree() > N * (N - 1) / 2) {
        r.fail(tag + ": reversed Kostka-Foulkes polynomial " + p.to_string());
        return r;
      }
      if (p != maj_gf(two_row(n + k, n - k))) {
        r.fail(tag + ": " + p.to_string() + " differs from maj_gf");
        return r;
      }
      if (p.evaluate(1) != two_row_hook_count(n + k, n - k)) {
        r.fail(tag + ": value at q=1 is " + p.evaluate(1).get_str());
        return r;
      }
    }
  }
  return r;
}

CheckReport gauss_laws(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 0, 16, 24);
  CheckReport r;
  r.params = {{"m_min", lo}, {"m_max", hi}};
  for (int m = lo; m <= hi; ++m)
    for (int k = 0; k <= m; ++k) {
      const QPoly g = gauss_binomial(m, k);
      const std::string tag = "[" + std::to_string(m) + " " + std::to_string(k) + "]";
      if (g != gauss_binomial(m, m - k) || !g.is_palindromic() || g.degree() != k * (m - k) ||
          g.evaluate(1) != binomial(static_cast<unsigned>(m), static_cast<unsigned>(k))) {
        r.fail(tag + " = " + g.to_string());
        return r;
      }
      if (m == 2 * k && box_partition_gf(k) != g) {
        r.fail(tag + ": box generating function " + box_partition_gf(k).to_string());
        return r;
      }
    }
  return r;
}

CheckReport graded_euler(const SuiteConfig& c) {
  const auto [lo, hi] = n_range(c, 2, 8, 12);
  CheckReport r;
  r.params = {{"N_min", first_even(lo)}, {"N_max", hi}};
  for (int N = first_even(lo); N <= hi; N += 2) {
    const auto t = build_filtration(N, points(c.z_points, N));
    for (int w = -N; w <= N; w += 2)
      if (BigInt(static_cast<long>(t.weight_total(w))) !=
          binomial(static_cast<unsigned>(N), static_cast<unsigned>((N + w) / 2))) {
        r.fail("N=" + std::to_string(N) + " weight " + std::to_string(w) + ": " + std::to_string(t.weight_total(w)));
        return r;
      }
    for (const auto& [k, p] : multiplicity_qcharacters_from_table(t))
      if (p.evaluate(1) != two_row_hook_count(N / 2 + k, N / 2 - k)) {
        r.fail("N=" + std::to_string(N) + " k=" + std::to_string(k) + ": multiplicity " + p.evaluate(1).get_str());
        return r;
      }
  }
  return r;
}

CheckReport symfunc_roundtrip(const SuiteConfig& c) {
  const int d = bound(c.degree_max, 8, 0, 10);
  CheckReport r;
  r.params = {{"degree_max", d}};
  const Basis all[] = {Basis::p, Basis::m, Basis::h, Basis::s};
  for (int n = 0; n <= d; ++n)
    for (const auto& lambda : partitions_of(n))
      for (Basis a : all) {
        const SymFunc f = SymFunc::element(a, lambda);
        for (Basis b : all)
          if (convert(convert(f, b), a) != f) {
            r.fail(to_string(a) + lambda.to_string() + " via " + to_string(b));
            return r;
          }
      }
  return r;
}

CheckReport schur_orthonormal(const SuiteConfig& c) {
  const int d = bound(c.degree_max, 6, 0, 8);
  CheckReport r;
  r.params = {{"degree_max", d}};
  for (int n = 0; n <= d; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts) {
      const SymFunc sa = SymFunc::element(Basis::s, a);
      if (modified_inner(sa, sa) <= 0) {
        r.fail("modified norm of s" + a.to_string() + " is not positive");
        return r;
      }
      for (const auto& b : parts) {
        const Rational v = hall_inner(sa, SymFunc::element(Basis::s, b));
        if (v != (a == b ? 1 : 0)) {
          r.fail("<s" + a.to_string() + ", s" + b.to_string() + "> = " + v.get_str());
          return r;
        }
      }
    }
  }
  return r;
}

CheckReport kostka_expansion(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 4, 5);
  CheckReport r;
  r.params = {{"k_min", lo}, {"k_max", hi}};
  for (int k = lo; k <= hi; ++k)
    for (const auto& nu : partitions_in_box(k, k)) {
      MultivariatePoly rhs = MultivariatePoly::constant(k, 0);
      for (const auto& mu : partitions_of(nu.size(), nu.size(), k))
        rhs += monomial_symmetric(mu, k) * Rational(kostka_number(nu, mu));
      if (schur_poly(nu, k) != rhs) {
        r.fail("nu=" + nu.to_string() + " in " + std::to_string(k) + " variables");
        return r;
      }
    }
  return r;
}

CheckReport level_count(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 6, 8);
  CheckReport r;
  r.params = {{"n_min", lo}, {"n_max", hi}};
  for (int n = lo; n <= hi; ++n) {
    const auto words = f2n_zero_basis(n).size(), level = enumerate_level(n).size();
    if (words != level || BigInt(static_cast<unsigned long>(words)) != binomial(2 * n, n)) {
      r.fail("n=" + std::to_string(n) + ": " + std::to_string(words) + " words, " + std::to_string(level) +
             " tableaux");
      return r;
    }
  }
  return r;
}

CheckReport eword_laws(const SuiteConfig& c) {
  const auto [lo, hi] = k_range(c, 1, 3, 4);
  CheckReport r;
  r.params = {{"k_min", lo}, {"k_max", hi}};
  for (int k = lo; k <= hi; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    // every sorted index sequence in 0..k
    while (true) {
      const EWord w(k, idx);
      const SymFunc img = e_word_apply(w);
      if (!img.is_homogeneous() || (!img.is_zero() && img.degree() != w.degree())) {
        r.fail("word " + str(nlohmann::json(idx)) + ": degree " + std::to_string(img.degree()));
        return r;
      }
      std::vector<int> perm = idx;
      while (std::next_permutation(perm.begin(), perm.end()))
        if (e_word_apply_ordered(k, perm) != img) {
          r.fail("word " + str(nlohmann::json(perm)) + " differs from its sorted form");
          return r;
        }
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k) --pos;
      if (pos < 0) break;
      const int v = idx[static_cast<std::size_t>(pos)] + 1;
      for (int j = pos; j < k; ++j) idx[static_cast<std::size_t>(j)] = v;
    }
  }
  return r;
}

}  // namespace

CheckRegistry default_registry() {
  CheckRegistry reg;
  reg.add({"theorem1", 1, "fusion q-characters = maj_gf = reversed Kostka-Foulkes, even N <= 10", theorem1});
  reg.add({"maj-charge-complement", 2, "maj + charge = N(N-1)/2 for two-row SYT, N <= 12", maj_charge});
  reg.add({"qhook-oracle", 3, "maj_gf = q-hook formula for two-row shapes, N <= 14", qhook_oracle});
  reg.add({"embedding-laws", 4, "maj(embed) = maj + N + 1, r-stability, r(principal) = k^2", embedding});
  reg.add({"level-q-binomial", 5, "level generating function = [2K choose K]_q = box gf, K <= 8", level_qbinomial});
  reg.add({"rectangular-segal", 6, "e_{-m}^k Omega = sign k! s_((k-m)^k), k <= 4", rectangular});
  reg.add({"gensegal", 7, "Kostka expansion through e-words reproduces s_nu, k <= 3", gensegal});
  reg.add({"f2n-span", 7, "e-word images span the n x n box with rank C(2n,n), n <= 4", f2n_span});
  reg.add({"virasoro-commutators", 8, "Virasoro relations with c = 1, |m|,|n| <= 4, degree <= 8", virasoro});
  reg.add({"singular-vectors", 8, "L_j s_(k^k) = 0 and L_0 eigenvalue k^2, k <= 4", singular});
  reg.add({"heisenberg-ccr", 9, "[h_n, h_-m] = 2n delta, degree <= 8", ccr});
  reg.add({"heisenberg-adjointness", 9, "h_n adjoint to h_-n under the modified pairing", adjointness});
  reg.add({"schur-weyl-dimension", 10, "sum (2k+1) f^(n+k,n-k) = 2^N, N <= 14", schur_weyl});
  reg.add({"z-independence", 11, "graded tables agree for two evaluation point sets, N <= 8", z_independence});
  reg.add({"l0-spectrum", 12, "r-multiset of level K = L_0 spectrum on the K x K box, K <= 4", l0_spectrum});
  reg.add({"kedem-reversal", 0, "reversed Kostka-Foulkes columns are maj generating functions", kedem_reversal});
  reg.add({"gauss-binomial-laws", 0, "symmetry, palindromy and q=1 values of Gaussian binomials", gauss_laws});
  reg.add({"fusion-graded-euler", 0, "weight column sums and multiplicities at q=1", graded_euler});
  reg.add({"symfunc-roundtrip", 0, "basis round trips up to degree 8", symfunc_roundtrip});
  reg.add({"schur-orthonormality", 0, "Schur functions orthonormal under the Hall pairing", schur_orthonormal});
  reg.add({"kostka-expansion", 0, "s_nu(z) = sum K m_mu(z) in k variables", kostka_expansion});
  reg.add({"level-count", 0, "|F_2n[0] basis| = |level n| = C(2n,n), n <= 6", level_count});
  reg.add({"e-word-laws", 0, "e-word images are order independent with the expected degree", eword_laws});
  return reg;
}

}  // namespace swf::harness
