#pragma once
// Exact scalar types and small integer helpers shared by every module.
#include <gmpxx.h>
#include <stdexcept>

namespace tanabe {

using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(long n);
Integer binomial(long n, long k);
Integer multinomial(long n, const std::vector<long>& parts);
// Product a(a-1)...(a-b+1), taken literally for any integer a (may be negative or zero).
Integer fallingFactorial(const Integer& a, long b);
// Bell number B(n) (number of set partitions of an n-element set).
Integer bellNumber(long n);

inline bool isZero(const Rational& x) { return x.get_num() == 0; }
inline Rational zeroLike(const Rational&) { return Rational(0); }
inline Rational oneLike(const Rational&) { return Rational(1); }
inline Rational inverseOf(const Rational& x) {
  if (isZero(x)) throw std::domain_error("division by zero rational");
  return Rational(1) / x;
}

// Error taxonomy used across the library; the CLI maps these to exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// True when the environment variable TANABE_GUARD_OVERRIDE is set (lifts size guards).
bool guardOverrideActive();

}  // namespace tanabe
