#include "swfusion/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace swf {

QPoly::QPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int exponent, const BigInt& c) {
  if (exponent < 0) throw std::domain_error("QPoly::monomial: negative exponent");
  std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::q_integer(int n) {
  if (n < 0) throw std::domain_error("QPoly::q_integer: negative argument");
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

BigInt QPoly::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

bool QPoly::is_palindromic() const {
  if (c_.empty()) return true;
  std::size_t lo = 0;
  while (c_[lo] == 0) ++lo;
  for (std::size_t i = lo, j = c_.size() - 1; i < j; ++i, --j)
    if (c_[i] != c_[j]) return false;
  return true;
}

bool QPoly::has_nonnegative_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x >= 0; });
}

QPoly QPoly::reversed(int e) const {
  if (e < degree()) throw std::domain_error("QPoly::reversed: exponent below degree");
  std::vector<BigInt> v(static_cast<std::size_t>(e) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(e) - i] = c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::divide_exact(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("QPoly::divide_exact: division by zero");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw InternalError("QPoly::divide_exact: non-exact division");
  std::vector<BigInt> rem = c_;
  const std::size_t dn = d.c_.size();
  std::vector<BigInt> q(c_.size() - dn + 1);
  const BigInt& lead = d.c_.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = rem[i + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw InternalError("QPoly::divide_exact: non-exact division");
    q[i] = top / lead;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= q[i] * d.c_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; }))
    throw InternalError("QPoly::divide_exact: non-exact division");
  return QPoly(std::move(q));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (i == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str();
    s += "q";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

void to_json(nlohmann::json& j, const QPoly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.get_str());
}

void from_json(const nlohmann::json& j, QPoly& p) {
  if (!j.is_array()) throw std::invalid_argument("QPoly JSON must be an array");
  std::vector<BigInt> v;
  for (const auto& e : j) {
    if (e.is_string())
      v.emplace_back(e.get<std::string>(), 10);
    else if (e.is_number_integer())
      v.emplace_back(e.get<long>());
    else
      throw std::invalid_argument("QPoly JSON coefficients must be decimal strings");
  }
  p = QPoly(std::move(v));
}

}  // namespace swf
