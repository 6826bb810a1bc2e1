#include "swfusion/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace swf {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::domain_error("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::multiplicity(int r) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.resize(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::fits_in_box(int rows, int cols) const noexcept {
  return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

bool Partition::dominates(const Partition& other) const noexcept {
  int a = 0, b = 0;
  const std::size_t n = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

Partition Partition::without_part(int r) const {
  auto it = std::find(parts_.begin(), parts_.end(), r);
  if (it == parts_.end()) throw std::domain_error("Partition::without_part: part not present");
  std::vector<int> v = parts_;
  v.erase(v.begin() + (it - parts_.begin()));
  return Partition(std::move(v));
}

Partition Partition::with_part(int r) const {
  std::vector<int> v = parts_;
  v.insert(std::upper_bound(v.begin(), v.end(), r, std::greater<>()), r);
  return Partition(std::move(v));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> v = parts_;
  v.insert(v.end(), other.parts_.begin(), other.parts_.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool GradedRevLex::operator()(const Partition& a, const Partition& b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const auto m = static_cast<unsigned>(j - i);
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
    z *= pw * factorial(m);
    i = j;
  }
  return z;
}

namespace {

void generate(int remaining, int max_part, int max_len, std::vector<int>& cur,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
  std::vector<Partition> out;
  if (n < 0 || max_part < 0 || max_len < 0) return out;
  std::vector<int> cur;
  generate(n, max_part, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n, n); }

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int n = 0; n <= rows * cols; ++n) {
    auto layer = partitions_of(n, cols, rows);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace swf
