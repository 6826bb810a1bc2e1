#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "support/generators.hpp"
#include "swfusion/symfunc.hpp"

using namespace swf;

namespace {

SymFunc p(const Partition& l, const Rational& c = 1) { return SymFunc::element(Basis::p, l, c); }
SymFunc s(const Partition& l, const Rational& c = 1) { return SymFunc::element(Basis::s, l, c); }

MultivariatePoly z(std::vector<int> e) { return MultivariatePoly::monomial(std::move(e)); }

}  // namespace

TEST_CASE("basis names") {
  CHECK(to_string(Basis::h) == "h");
  CHECK(basis_from_string("s") == Basis::s);
  CHECK_THROWS_AS(basis_from_string("e"), std::invalid_argument);
}

TEST_CASE("SymFunc bookkeeping") {
  SymFunc f(Basis::p);
  CHECK(f.is_zero());
  CHECK(f.degree() == -1);
  f.add_term(Partition{2}, 3);
  f.add_term(Partition{1, 1}, Rational(1, 2));
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  f.add_term(Partition{2}, -3);
  CHECK(f.terms().size() == 1);
  CHECK(f.coefficient(Partition{2}) == 0);
  f.add_term(Partition{}, 1);
  CHECK_FALSE(f.is_homogeneous());
  CHECK_THROWS_AS(f + s(Partition{1}), std::invalid_argument);
  CHECK((f * Rational(0)).is_zero());
}

TEST_CASE("kostka_number examples") {
  CHECK(kostka_number(Partition{3, 1}, Partition{3, 1}) == 1);
  CHECK(kostka_number(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka_number(Partition{1, 1}, Partition{2}) == 0);
  CHECK(kostka_number(Partition{3, 2}, Partition{2, 2, 1}) == 2);
  CHECK(kostka_number(Partition{}, Partition{}) == 1);
  CHECK_THROWS_AS(kostka_number(Partition{2}, Partition{1}), std::domain_error);
}

TEST_CASE("property: Kostka numbers vanish off dominance and sum to f^nu on 1^n") {
  for (int n = 1; n <= 7; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& nu : partitions_of(n)) {
      for (const auto& mu : partitions_of(n))
        if (!nu.dominates(mu)) CHECK(kostka_number(nu, mu) == 0);
      // f^nu from the hook-length formula
      BigInt hooks = 1;
      const Partition conj = nu.conjugate();
      for (int i = 0; i < nu.length(); ++i)
        for (int j = 0; j < nu[static_cast<std::size_t>(i)]; ++j)
          hooks *= nu[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1;
      CHECK(kostka_number(nu, ones) == factorial(static_cast<unsigned>(n)) / hooks);
    }
  }
}

TEST_CASE("conversion examples") {
  CHECK(convert(s(Partition{1}), Basis::p) == p(Partition{1}));
  CHECK(convert(s(Partition{1, 1}), Basis::p) == p(Partition{1, 1}, Rational(1, 2)) + p(Partition{2}, Rational(-1, 2)));
  CHECK(convert(SymFunc::element(Basis::h, Partition{2}), Basis::m) ==
        SymFunc::element(Basis::m, Partition{2}) + SymFunc::element(Basis::m, Partition{1, 1}));
  CHECK(convert(s(Partition{2}), Basis::h) == SymFunc::element(Basis::h, Partition{2}));
  CHECK(convert(SymFunc::scalar(5, Basis::s), Basis::m) == SymFunc::scalar(5, Basis::m));
  CHECK(same_element(s(Partition{2, 1}), convert(s(Partition{2, 1}), Basis::m)));
  CHECK_FALSE(same_element(s(Partition{2, 1}), s(Partition{3})));
}

TEST_CASE("property: round trips through every basis up to degree 8") {
  const Basis all[] = {Basis::p, Basis::m, Basis::h, Basis::s};
  auto g = testgen::rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Basis a = all[testgen::uniform(g, 0, 3)], b = all[testgen::uniform(g, 0, 3)];
    const SymFunc f = testgen::symfunc(g, a, 8);
    CHECK(convert(convert(f, b), a) == f);
  }
}

TEST_CASE("property: the ring product is commutative, associative and basis independent") {
  auto g = testgen::rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const SymFunc f = testgen::symfunc(g, Basis::s, 3, 2), h = testgen::symfunc(g, Basis::s, 3, 2),
                  k = testgen::symfunc(g, Basis::s, 2, 2);
    CHECK(f * h == h * f);
    CHECK((f * h) * k == f * (h * k));
    CHECK(same_element(f * h, convert(f, Basis::m) * convert(h, Basis::h)));
  }
  // Pieri: s_(1) s_(1) = s_(2) + s_(1,1)
  CHECK(s(Partition{1}) * s(Partition{1}) == s(Partition{2}) + s(Partition{1, 1}));
}

TEST_CASE("Hall and modified inner products") {
  CHECK(hall_inner(p(Partition{2}), p(Partition{2})) == 2);
  CHECK(hall_inner(p(Partition{1, 1}), p(Partition{1, 1})) == 2);
  CHECK(modified_inner(p(Partition{2}), p(Partition{2})) == 4);
  CHECK(modified_inner(p(Partition{1, 1}), p(Partition{1, 1})) == 8);
  CHECK(modified_inner(p(Partition{1}), p(Partition{2})) == 0);
  CHECK(hall_inner(SymFunc::element(Basis::h, Partition{2, 1}), SymFunc::element(Basis::m, Partition{2, 1})) == 1);
  CHECK(hall_inner(SymFunc::element(Basis::h, Partition{2, 1}), SymFunc::element(Basis::m, Partition{3})) == 0);
}

TEST_CASE("property: Schur functions are orthonormal up to degree 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) CHECK(hall_inner(s(a), s(b)) == (a == b ? 1 : 0));
}

TEST_CASE("property: modified pairing rescales the Hall pairing and is positive") {
  auto g = testgen::rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const SymFunc f = testgen::symfunc(g, Basis::p, 6), h = testgen::symfunc(g, Basis::p, 6);
    SymFunc fs(Basis::p);
    for (const auto& [l, c] : f.terms()) fs.add_term(l, c * Rational(BigInt(1) << static_cast<unsigned>(l.length())));
    CHECK(modified_inner(f, h) == hall_inner(fs, h));
    if (!f.is_zero()) CHECK(modified_inner(f, f) > 0);
  }
}

TEST_CASE("schur_poly examples") {
  CHECK(schur_poly(Partition{1}, 2) == z({1, 0}) + z({0, 1}));
  CHECK(schur_poly(Partition{1, 1}, 2) == z({1, 1}));
  CHECK(schur_poly(Partition{2, 1}, 2) == z({2, 1}) + z({1, 2}));
  CHECK(schur_poly(Partition{1, 1, 1}, 2).is_zero());
  CHECK(schur_poly(Partition{}, 3) == MultivariatePoly::constant(3, 1));
}

TEST_CASE("property: bialternant equals the Kostka expansion in k variables") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& nu : partitions_in_box(k, k)) {
      MultivariatePoly rhs(k);
      for (const auto& mu : partitions_of(nu.size(), nu.size(), k))
        rhs += monomial_symmetric(mu, k) * Rational(kostka_number(nu, mu));
      CHECK(schur_poly(nu, k) == rhs);
    }
}

TEST_CASE("MultivariatePoly basics") {
  const auto x = MultivariatePoly::variable(2, 0), y = MultivariatePoly::variable(2, 1);
  const auto a = vandermonde(2);
  CHECK(a == x - y);
  CHECK(((x + y) * a).divide_exact(a) == x + y);
  CHECK_THROWS_AS((x + y * y).divide_exact(x - y), InternalError);
  CHECK(x.inverted().coefficient({-1, 0}) == 1);
  CHECK(paired_constant_term(x * y, (x * y).inverted()) == 1);
  CHECK(paired_constant_term(a, a.inverted()) == 2);
  CHECK(shifted_exponents(Partition{2}, 3) == std::vector<int>{4, 1, 0});
  CHECK_THROWS_AS(shifted_exponents(Partition{1, 1, 1}, 2), std::domain_error);
  CHECK_THROWS_AS(x + MultivariatePoly::variable(3, 0), std::invalid_argument);
  CHECK(monomial_symmetric(Partition{1, 1, 1}, 2).is_zero());
}

TEST_CASE("JSON serialization") {
  const SymFunc f = p(Partition{2, 1}, Rational(-3, 4)) + p(Partition{}, 2);
  const nlohmann::json j = f;
  CHECK(j.at("basis") == "p");
  CHECK(j.at("terms").size() == 2);
  CHECK(j.at("terms")[1].at("numerator") == "-3");
  CHECK(j.get<SymFunc>() == f);
  CHECK_THROWS(nlohmann::json::parse(R"({"basis":"q","terms":[]})").get<SymFunc>());
  CHECK_THROWS(nlohmann::json::parse(R"({"basis":"p","terms":[{"partition":[1],"numerator":"1","denominator":"0"}]})")
                   .get<SymFunc>());
}

TEST_CASE("conversion cache is safe under concurrent first use") {
  std::vector<SymFunc> results(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t)
      pool.emplace_back([&results, t] { results[static_cast<std::size_t>(t)] = convert(s(Partition{4, 3, 2}), Basis::m); });
  }
  for (const auto& r : results) CHECK(r == results[0]);
  CHECK(results[0].coefficient(Partition{4, 3, 2}) == 1);
  CHECK(results[0].coefficient(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1}) == kostka_number(Partition{4, 3, 2}, Partition{1, 1, 1, 1, 1, 1, 1, 1, 1}));
}
