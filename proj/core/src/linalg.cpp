#include "swfusion/linalg.hpp"

#include <stdexcept>

namespace swf {

namespace {

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : v)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool IntegerEchelon::insert(std::vector<BigInt> v) {
  if (v.size() != width_) throw std::invalid_argument("IntegerEchelon: width mismatch");
  BigInt g, a, b;
  for (const auto& row : rows_) {
    const BigInt& x = v[row.pivot];
    if (x == 0) continue;
    const BigInt& y = row.v[row.pivot];
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    a = y / g;  // v <- a*v - b*row
    b = x / g;
    for (std::size_t j = row.pivot; j < width_; ++j) {
      if (row.v[j] == 0) {
        if (v[j] != 0) v[j] *= a;
        continue;
      }
      v[j] = a * v[j] - b * row.v[j];
    }
    for (std::size_t j = 0; j < row.pivot; ++j)
      if (v[j] != 0) v[j] *= a;
    make_primitive(v);
  }
  std::size_t pivot = 0;
  while (pivot < width_ && v[pivot] == 0) ++pivot;
  if (pivot == width_) return false;
  if (v[pivot] < 0)
    for (auto& x : v) x = -x;
  rows_.push_back({pivot, std::move(v)});
  return true;
}

std::uint64_t ModularEchelon::inverse(std::uint64_t a) const {
  // Fermat: a^{p-2}
  std::uint64_t r = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool ModularEchelon::insert(std::vector<std::uint64_t> v) {
  if (v.size() != width_) throw std::invalid_argument("ModularEchelon: width mismatch");
  for (const auto& row : rows_) {
    const std::uint64_t x = v[row.pivot];
    if (x == 0) continue;
    for (std::size_t j = row.pivot; j < width_; ++j) {
      if (row.v[j] == 0) continue;
      const std::uint64_t t = mul(x, row.v[j]);
      v[j] = v[j] >= t ? v[j] - t : v[j] + (p_ - t);
    }
  }
  std::size_t pivot = 0;
  while (pivot < width_ && v[pivot] == 0) ++pivot;
  if (pivot == width_) return false;
  const std::uint64_t inv = inverse(v[pivot]);
  for (std::size_t j = pivot; j < width_; ++j) v[j] = mul(v[j], inv);
  rows_.push_back({pivot, std::move(v)});
  return true;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  IntegerEchelon ech(width);
  for (const auto& r : rows) {
    if (r.size() != width) throw std::invalid_argument("rational_rank: ragged matrix");
    BigInt den = 1;
    for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = r[j].get_num() * (den / r[j].get_den());
    ech.insert(std::move(v));
  }
  return ech.rank();
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p) {
  BigInt r;
  BigInt m;
  mpz_import(m.get_mpz_t(), 1, -1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace swf
