#include "swfusion/tableau.hpp"

#include <stdexcept>

namespace swf {

TwoRowSYT::TwoRowSYT(std::vector<int> row1, std::vector<int> row2)
    : row1_(std::move(row1)), row2_(std::move(row2)) {
  if (row1_.size() < row2_.size())
    throw std::domain_error("TwoRowSYT: second row longer than first");
  const int n = length();
  row_index_.assign(static_cast<std::size_t>(n) + 1, -1);
  col_index_.assign(static_cast<std::size_t>(n) + 1, -1);
  auto place = [&](const std::vector<int>& row, int r) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int v = row[j];
      if (v < 1 || v > n) throw std::domain_error("TwoRowSYT: entry out of range");
      if (j > 0 && row[j - 1] >= v) throw std::domain_error("TwoRowSYT: row not increasing");
      if (row_index_[static_cast<std::size_t>(v)] != -1)
        throw std::domain_error("TwoRowSYT: repeated entry");
      row_index_[static_cast<std::size_t>(v)] = r;
      col_index_[static_cast<std::size_t>(v)] = static_cast<int>(j);
    }
  };
  place(row1_, 0);
  place(row2_, 1);
  for (std::size_t j = 0; j < row2_.size(); ++j)
    if (row2_[j] <= row1_[j]) throw std::domain_error("TwoRowSYT: column not increasing");
}

Partition TwoRowSYT::shape() const {
  return Partition({static_cast<int>(row1_.size()), static_cast<int>(row2_.size())});
}

int TwoRowSYT::k() const {
  const auto diff = static_cast<int>(row1_.size() - row2_.size());
  if (diff % 2 != 0) throw std::domain_error("TwoRowSYT::k: odd row difference");
  return diff / 2;
}

int TwoRowSYT::row_of(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("TwoRowSYT::row_of");
  return row_index_[static_cast<std::size_t>(i)];
}

int TwoRowSYT::column_of(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("TwoRowSYT::column_of");
  return col_index_[static_cast<std::size_t>(i)];
}

std::string TwoRowSYT::to_string() const {
  auto row = [](const std::vector<int>& r) {
    std::string s = "(";
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(r[j]);
    }
    return s + ")";
  };
  return row(row1_) + "/" + row(row2_);
}

namespace {

void ballot(int a, int b, int next, std::vector<int>& r1, std::vector<int>& r2,
            std::vector<TwoRowSYT>& out) {
  if (static_cast<int>(r1.size()) == a && static_cast<int>(r2.size()) == b) {
    out.emplace_back(r1, r2);
    return;
  }
  if (static_cast<int>(r1.size()) < a) {
    r1.push_back(next);
    ballot(a, b, next + 1, r1, r2, out);
    r1.pop_back();
  }
  if (r2.size() < r1.size() && static_cast<int>(r2.size()) < b) {
    r2.push_back(next);
    ballot(a, b, next + 1, r1, r2, out);
    r2.pop_back();
  }
}

}  // namespace

std::vector<TwoRowSYT> enumerate_shape(int a, int b) {
  if (b < 0 || a < b) throw std::domain_error("enumerate_shape: need a >= b >= 0");
  std::vector<TwoRowSYT> out;
  std::vector<int> r1, r2;
  ballot(a, b, 1, r1, r2, out);
  return out;
}

std::vector<TwoRowSYT> enumerate_syt(int N, int k) {
  if (N <= 0 || N % 2 != 0) throw std::domain_error("enumerate_syt: N must be positive and even");
  const int n = N / 2;
  if (k < 0 || k > n) throw std::domain_error("enumerate_syt: need 0 <= k <= N/2");
  return enumerate_shape(n + k, n - k);
}

BigInt two_row_hook_count(int a, int b) {
  // f^{(a,b)} = C(a+b, b) * (a-b+1)/(a+1)
  BigInt c = binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(b));
  c *= (a - b + 1);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(a + 1));
  return c;
}

std::vector<int> descent_set(const TwoRowSYT& t) {
  std::vector<int> d;
  for (int i = 1; i < t.length(); ++i)
    if (t.row_of(i) == 0 && t.row_of(i + 1) == 1) d.push_back(i);
  return d;
}

int maj(const TwoRowSYT& t) {
  int s = 0;
  for (int i : descent_set(t)) s += i;
  return s;
}

int charge(const TwoRowSYT& t) {
  int s = 0;
  for (int i = 1; i < t.length(); ++i)
    if (t.column_of(i + 1) > t.column_of(i)) s += i;
  return s;
}

TwoRowSYT embed(const TwoRowSYT& t) {
  const int n = t.length();
  auto r1 = t.row1();
  auto r2 = t.row2();
  r1.push_back(n + 1);
  r2.push_back(n + 2);
  return {std::move(r1), std::move(r2)};
}

TwoRowSYT principal_tableau(int k, int length) {
  if (k < 0) throw std::domain_error("principal_tableau: k must be nonnegative");
  if (length < 2 * k || length % 2 != 0)
    throw std::domain_error("principal_tableau: length must be even and at least 2k");
  std::vector<int> r1, r2;
  for (int i = 1; i <= length; ++i) {
    if (i <= 2 * k || (i - 2 * k) % 2 == 1)
      r1.push_back(i);
    else
      r2.push_back(i);
  }
  return {std::move(r1), std::move(r2)};
}

StableTableau::StableTableau(TwoRowSYT prefix) : prefix_(std::move(prefix)) {
  if (prefix_.length() % 2 != 0)
    throw std::domain_error("StableTableau: prefix length must be even");
}

StableTableau StableTableau::extended(int extra_levels) const {
  if (extra_levels < 0) throw std::domain_error("StableTableau::extended: negative level count");
  TwoRowSYT t = prefix_;
  for (int i = 0; i < extra_levels; ++i) t = embed(t);
  return StableTableau(std::move(t));
}

int stable_major_index(const StableTableau& t) {
  const int n = t.prefix().length() / 2;
  return n * n - maj(t.prefix());
}

std::vector<StableTableau> enumerate_level(int K) {
  if (K < 1) throw std::domain_error("enumerate_level: K must be positive");
  std::vector<StableTableau> out;
  for (int k = 0; k <= K; ++k)
    for (auto& t : enumerate_syt(2 * K, k)) out.emplace_back(std::move(t));
  return out;
}

}  // namespace swf
