#pragma once

// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace swf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an identity that holds by construction fails; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when derived data is inconsistent with its own invariants.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace swf
