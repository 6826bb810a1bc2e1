#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "swfusion/fock.hpp"
#include "swfusion/tableau.hpp"

using namespace swf;

namespace {

SymFunc p(const Partition& l, const Rational& c = 1) { return SymFunc::element(Basis::p, l, c); }
SymFunc s(const Partition& l, const Rational& c = 1) { return SymFunc::element(Basis::s, l, c); }
const SymFunc one = SymFunc::scalar(1);

}  // namespace

TEST_CASE("EWord") {
  const EWord w(3, {2, 0, 1});
  CHECK(w.indices() == std::vector<int>{0, 1, 2});
  CHECK(w.degree() == 3 + 2 + 1);
  CHECK(w.profile() == std::vector<int>{1, 1, 1, 0});
  CHECK(EWord::from_profile({0, 2, 0}) == EWord(2, {1, 1}));
  CHECK_THROWS_AS(EWord(2, {0, 3}), std::domain_error);
  CHECK_THROWS_AS(EWord(2, {0}), std::domain_error);
  CHECK_THROWS_AS(EWord(0, {}), std::domain_error);
  CHECK_THROWS_AS(EWord::from_profile({1, -1}), std::domain_error);
}

TEST_CASE("Heisenberg examples") {
  CHECK(heisenberg_apply(1, p(Partition{1})) == SymFunc::scalar(2));
  CHECK(heisenberg_apply(-2, one) == p(Partition{2}));
  CHECK(heisenberg_apply(2, p(Partition{2, 2, 1})) == p(Partition{2, 1}, 8));
  CHECK(heisenberg_apply(3, p(Partition{2})).is_zero());
  CHECK(heisenberg_zero_mode(p(Partition{3, 1})).is_zero());
  CHECK_THROWS_AS(heisenberg(0), std::domain_error);
  CHECK(heisenberg(2).shift() == -2);
  CHECK(heisenberg(-3).shift() == 3);
  // input in another basis is converted first
  CHECK(heisenberg_apply(1, s(Partition{1, 1})) == p(Partition{1}, 2));
}

TEST_CASE("Virasoro examples") {
  CHECK(virasoro_apply(0, p(Partition{3, 1})) == p(Partition{3, 1}, 4));
  CHECK(virasoro_apply(1, p(Partition{1})).is_zero());
  CHECK(virasoro_apply(-1, one).is_zero());
  CHECK(virasoro_apply(-2, one) == p(Partition{1, 1}, Rational(1, 4)));
  CHECK(virasoro_apply(1, p(Partition{2})) == p(Partition{1}, 2));
  CHECK(virasoro_apply(2, p(Partition{1, 1})) == SymFunc::scalar(2));
  CHECK(virasoro(3).shift() == -3);
}

TEST_CASE("Virasoro commutator examples") {
  const auto a = virasoro_commutator_check(1, -1, 4);
  CHECK(a.pass);
  CHECK(a.details.at("central_term") == "0");
  const auto b = virasoro_commutator_check(2, -2, 6);
  CHECK(b.pass);
  CHECK(b.details.at("central_term") == "1/2");
  CHECK(b.details.at("central_charge") == "1");
  CHECK(virasoro_commutator_check(2, 3, 6).pass);
  const SymFunc f = p(Partition{3, 2, 1});
  CHECK(virasoro_apply(2, virasoro_apply(3, f)) - virasoro_apply(3, virasoro_apply(2, f)) ==
        virasoro_apply(5, f) * Rational(-1));
  // L_2 L_{-2} 1 = 1/2
  CHECK(virasoro_apply(2, virasoro_apply(-2, one)) == SymFunc::scalar(Rational(1, 2)));
}

TEST_CASE("Heisenberg CCR and adjointness") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) CHECK(heisenberg_ccr_check(n, m, 6).pass);
  CHECK_THROWS_AS(heisenberg_ccr_check(0, 1, 2), std::domain_error);
  CHECK(modified_inner(heisenberg_apply(1, one), p(Partition{1})) == 0);
  CHECK(modified_inner(one, heisenberg_apply(-1, p(Partition{1}))) == 0);
  CHECK(modified_inner(heisenberg_apply(1, p(Partition{1})), one) == 2);
  CHECK(modified_inner(p(Partition{1}), heisenberg_apply(-1, one)) == 2);
  CHECK(modified_inner(heisenberg_apply(2, p(Partition{2})), one) == 4);
  CHECK(modified_inner(p(Partition{2}), p(Partition{2})) == 4);
  for (int n = 1; n <= 4; ++n) CHECK(adjointness_check(n, 8).pass);
}

TEST_CASE("singular vectors") {
  CHECK(virasoro_apply(1, p(Partition{1})).is_zero());
  CHECK(virasoro_apply(0, p(Partition{1})) == p(Partition{1}));
  const SymFunc xi = convert(s(Partition{2, 2}), Basis::p);
  CHECK(virasoro_apply(1, xi).is_zero());
  CHECK(virasoro_apply(2, xi).is_zero());
  CHECK(virasoro_apply(0, xi) == xi * Rational(4));
  const auto r3 = singular_vector_check(3, 9);
  CHECK(r3.pass);
  CHECK(r3.details.at("eigenvalue") == 9);
  CHECK(singular_vector_check(4, 4).pass);
  // s_(2,1) is not singular
  CHECK_FALSE(virasoro_apply(1, convert(s(Partition{2, 1}), Basis::p)).is_zero());
}

TEST_CASE("e_word_apply examples") {
  CHECK(e_word_apply(EWord(1, {0})) == s(Partition{1}));
  CHECK(e_word_apply(EWord(1, {1})) == s(Partition{}));
  CHECK(e_word_apply(EWord(2, {0, 0})) == s(Partition{2, 2}, -2));
  CHECK(e_word_apply(EWord(2, {1, 1})) == s(Partition{1, 1}, -2));
  CHECK(e_word_apply(EWord(3, {0, 0, 0})) == s(Partition{3, 3, 3}, -6));
  const std::vector<int> bad{0, 3};
  CHECK_THROWS_AS(e_word_apply_ordered(2, bad), std::domain_error);
}

TEST_CASE("rectangular formula") {
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m <= k; ++m) CHECK(verify_rectangular(k, m).pass);
  CHECK_THROWS_AS(verify_rectangular(2, 3), std::domain_error);
}

TEST_CASE("Schur functions through e-words") {
  CHECK(schur_via_gensegal(Partition{1}, 1) == s(Partition{1}));
  CHECK(schur_via_gensegal(Partition{2, 1}, 2) == s(Partition{2, 1}));
  for (int k = 1; k <= 3; ++k)
    for (const auto& nu : partitions_in_box(k, k)) CHECK(schur_via_gensegal(nu, k) == s(nu));
  CHECK_THROWS_AS(schur_via_gensegal(Partition{3}, 2), std::domain_error);
}

TEST_CASE("F_2n[0] basis and span") {
  const auto b1 = f2n_zero_basis(1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0].profile() == std::vector<int>{1, 0});
  CHECK(b1[1].profile() == std::vector<int>{0, 1});
  CHECK(f2n_zero_basis(2).size() == 6);
  for (int n = 1; n <= 6; ++n) CHECK(f2n_zero_basis(n).size() == enumerate_level(n).size());
  for (int n = 1; n <= 4; ++n) {
    const auto r = f2n_span_check(n);
    CHECK(r.pass);
    CHECK(r.details.at("rank") == binomial(2 * n, n).get_ui());
  }
}

TEST_CASE("L_0 spectrum matches stable major indices") {
  for (int K = 1; K <= 4; ++K) {
    std::vector<int> rs;
    for (const auto& t : enumerate_level(K)) rs.push_back(stable_major_index(t));
    std::sort(rs.begin(), rs.end());
    CHECK(l0_spectrum_on_box(K) == rs);
  }
}

TEST_CASE("property: e-word images are order independent and of the expected degree") {
  auto g = testgen::rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = testgen::uniform(g, 1, 4);
    std::vector<int> idx;
    for (int j = 0; j < k; ++j) idx.push_back(testgen::uniform(g, 0, k));
    const EWord w(k, idx);
    std::shuffle(idx.begin(), idx.end(), g);
    const SymFunc img = e_word_apply(w);
    CHECK(e_word_apply_ordered(k, idx) == img);
    CHECK(img.is_homogeneous());
    if (!img.is_zero()) CHECK(img.degree() == w.degree());
    for (const auto& [lambda, c] : img.terms()) CHECK(lambda.length() <= k);
  }
}

TEST_CASE("property: L_0 is the degree operator and h_n lowers degree by n") {
  auto g = testgen::rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = testgen::uniform(g, 0, 7);
    const SymFunc f = testgen::homogeneous(g, Basis::p, d);
    CHECK(virasoro_apply(0, f) == f * Rational(d));
    const int n = testgen::uniform(g, 1, 4);
    const SymFunc down = heisenberg_apply(n, f), up = heisenberg_apply(-n, f);
    if (!down.is_zero()) CHECK(down.degree() == d - n);
    CHECK(up.degree() == (f.is_zero() ? -1 : d + n));
  }
}
