#include "swfusion/qseries.hpp"

#include <stdexcept>

#include "swfusion/tableau.hpp"

namespace swf {

namespace {

void require_two_rows(const Partition& shape, const char* who) {
  if (shape.length() > 2)
    throw std::domain_error(std::string(who) + ": shape must have at most two rows");
}

}  // namespace

QPoly gauss_binomial(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw std::domain_error("gauss_binomial: need 0 <= k <= m");
  // row[j] holds [i choose j]_q for the current i.
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly{1};
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      // [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j]
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] +
                                         QPoly::monomial(j) * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

QPoly box_partition_gf(int k) {
  if (k < 0) throw std::domain_error("box_partition_gf: negative box size");
  std::vector<BigInt> c(static_cast<std::size_t>(k * k) + 1);
  for (const auto& p : partitions_in_box(k, k)) c[static_cast<std::size_t>(p.size())] += 1;
  return QPoly(std::move(c));
}

QPoly maj_gf(const Partition& shape) {
  require_two_rows(shape, "maj_gf");
  QPoly r;
  for (const auto& t : enumerate_shape(shape[0], shape[1])) r += QPoly::monomial(maj(t));
  return r;
}

QPoly qhook_maj_gf(const Partition& shape) {
  require_two_rows(shape, "qhook_maj_gf");
  const int a = shape[0], b = shape[1];
  QPoly num = QPoly::monomial(b);  // b(shape) = 0*a + 1*b
  for (int i = 1; i <= a + b; ++i) num *= QPoly::q_integer(i);
  QPoly den{1};
  for (int j = 1; j <= a; ++j) {
    const int hook = (a - j) + (j <= b ? 1 : 0) + 1;
    den *= QPoly::q_integer(hook);
  }
  for (int j = 1; j <= b; ++j) den *= QPoly::q_integer(b - j + 1);
  return num.divide_exact(den);
}

QPoly kostka_foulkes_column(const Partition& lambda, int N) {
  require_two_rows(lambda, "kostka_foulkes_column");
  if (lambda.size() != N) throw std::domain_error("kostka_foulkes_column: |lambda| != N");
  QPoly r;
  for (const auto& t : enumerate_shape(lambda[0], lambda[1])) r += QPoly::monomial(charge(t));
  return r;
}

QPoly multiplicity_qcharacter(int k, int N) {
  if (N <= 0 || N % 2 != 0)
    throw std::domain_error("multiplicity_qcharacter: N must be positive and even");
  const int n = N / 2;
  if (k < 0 || k > n) throw std::domain_error("multiplicity_qcharacter: need 0 <= k <= N/2");
  const QPoly kf = kostka_foulkes_column(Partition({n + k, n - k}), N);
  return kf.reversed(N * (N - 1) / 2);
}

}  // namespace swf
