#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "swfusion/qseries.hpp"

using namespace swf;

TEST_CASE("QPoly canonical form and arithmetic") {
  CHECK(QPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(QPoly{0, 0}.is_zero());
  CHECK(QPoly{}.degree() == -1);
  const QPoly a{1, 1}, b{1, -1};
  CHECK(a * b == QPoly{1, 0, -1});
  CHECK(a + b == QPoly{2});
  CHECK(a - a == QPoly{});
  CHECK(QPoly::monomial(3) == QPoly{0, 0, 0, 1});
  CHECK(QPoly::q_integer(3) == QPoly{1, 1, 1});
  CHECK(QPoly::q_integer(0).is_zero());
  CHECK(QPoly{0, 1, 2}.reversed(3) == QPoly{0, 2, 1});
  CHECK_THROWS_AS((QPoly{0, 1, 2}.reversed(1)), std::domain_error);
  CHECK(QPoly{1, 0, -1}.divide_exact(QPoly{1, 1}) == QPoly{1, -1});
  CHECK_THROWS_AS((QPoly{1, 0, 1}.divide_exact(QPoly{1, 1})), InternalError);
  CHECK_THROWS_AS((QPoly{1}.divide_exact(QPoly{})), std::domain_error);
  CHECK(QPoly{1, 1, 2}.to_string() == "1 + q + 2q^2");
  CHECK(QPoly{}.to_string() == "0");
  CHECK(QPoly{1, 2, 3}.evaluate(2) == 17);
}

TEST_CASE("QPoly JSON round trip keeps big coefficients") {
  const QPoly p(std::vector<BigInt>{BigInt("123456789012345678901234567890"), 0, -5});
  const nlohmann::json j = p;
  CHECK(j.dump() == R"(["123456789012345678901234567890","0","-5"])");
  CHECK(j.get<QPoly>() == p);
  CHECK(nlohmann::json::parse("[1,2]").get<QPoly>() == QPoly{1, 2});
  CHECK_THROWS(nlohmann::json::parse("[1.5]").get<QPoly>());
  CHECK_THROWS(nlohmann::json::parse(R"(["12x"])").get<QPoly>());
  CHECK_THROWS(nlohmann::json::parse("{}").get<QPoly>());
}

TEST_CASE("gauss_binomial examples") {
  CHECK(gauss_binomial(2, 1) == QPoly{1, 1});
  CHECK(gauss_binomial(4, 2) == QPoly{1, 1, 2, 1, 1});
  CHECK(gauss_binomial(7, 0) == QPoly{1});
  CHECK(gauss_binomial(0, 0) == QPoly{1});
  CHECK(gauss_binomial(6, 3) == QPoly{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});
  CHECK_THROWS_AS(gauss_binomial(2, 3), std::domain_error);
}

TEST_CASE("box_partition_gf examples") {
  CHECK(box_partition_gf(0) == QPoly{1});
  CHECK(box_partition_gf(1) == QPoly{1, 1});
  CHECK(box_partition_gf(2) == QPoly{1, 1, 2, 1, 1});
  for (int k = 0; k <= 8; ++k) CHECK(box_partition_gf(k) == gauss_binomial(2 * k, k));
}

TEST_CASE("maj_gf and q-hook examples") {
  CHECK(maj_gf(Partition{2}) == QPoly{1});
  CHECK(maj_gf(Partition{1, 1}) == QPoly{0, 1});
  CHECK(maj_gf(Partition{2, 2}) == QPoly{0, 0, 1, 0, 1});
  CHECK(qhook_maj_gf(Partition{2}) == QPoly{1});
  CHECK(qhook_maj_gf(Partition{1, 1}) == QPoly{0, 1});
  CHECK_THROWS_AS(maj_gf(Partition{1, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(qhook_maj_gf(Partition{2, 1, 1}), std::domain_error);
}

TEST_CASE("kostka_foulkes_column and multiplicity_qcharacter examples") {
  CHECK(kostka_foulkes_column(Partition{2}, 2) == QPoly{0, 1});
  CHECK(kostka_foulkes_column(Partition{1, 1}, 2) == QPoly{1});
  CHECK(kostka_foulkes_column(Partition{2, 2}, 4) == QPoly{0, 0, 1, 0, 1});
  CHECK_THROWS_AS(kostka_foulkes_column(Partition{2, 1}, 4), std::domain_error);
  CHECK(multiplicity_qcharacter(1, 2) == QPoly{1});
  CHECK(multiplicity_qcharacter(0, 2) == QPoly{0, 1});
  CHECK(multiplicity_qcharacter(0, 4) == QPoly{0, 0, 1, 0, 1});
  CHECK_THROWS_AS(multiplicity_qcharacter(3, 4), std::domain_error);
  CHECK_THROWS_AS(multiplicity_qcharacter(0, 3), std::domain_error);
}

TEST_CASE("property: Gaussian binomial symmetry, palindromy and q = 1") {
  for (int m = 0; m <= 16; ++m)
    for (int k = 0; k <= m; ++k) {
      const QPoly g = gauss_binomial(m, k);
      CHECK(g == gauss_binomial(m, m - k));
      CHECK(g.is_palindromic());
      CHECK(g.has_nonnegative_coefficients());
      CHECK(g.degree() == k * (m - k));
      CHECK(g.evaluate(1) == binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
    }
}

TEST_CASE("property: enumeration agrees with the q-hook formula") {
  for (int N = 1; N <= 14; ++N)
    for (int b = 0; 2 * b <= N; ++b) CHECK(maj_gf(Partition{N - b, b}) == qhook_maj_gf(Partition{N - b, b}));
}

TEST_CASE("property: reversed Kostka-Foulkes columns are the maj generating functions") {
  for (int N = 2; N <= 14; N += 2) {
    const int n = N / 2;
    for (int k = 0; k <= n; ++k) {
      const QPoly p = multiplicity_qcharacter(k, N);
      CHECK(p == maj_gf(Partition{n + k, n - k}));
      CHECK(p.has_nonnegative_coefficients());
      CHECK(p.degree() <= N * (N - 1) / 2);
    }
  }
}

TEST_CASE("property: random products divide back exactly") {
  auto g = testgen::rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> a, b;
    const int da = testgen::uniform(g, 0, 12), db = testgen::uniform(g, 0, 8);
    for (int i = 0; i <= da; ++i) a.emplace_back(testgen::uniform(g, -50, 50));
    for (int i = 0; i <= db; ++i) b.emplace_back(testgen::uniform(g, -50, 50));
    b.back() = testgen::uniform(g, 1, 5);
    const QPoly A(a), B(b);
    CHECK((A * B).divide_exact(B) == A);
    CHECK(A * B == B * A);
  }
}
