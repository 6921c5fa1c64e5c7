#pragma once
// Exact arithmetic in the cyclotomic field Q(zeta_r), elements represented as
// polynomials in zeta_r reduced modulo the r-th cyclotomic polynomial.
#include <vector>

#include "tanabe/rational.hpp"

namespace tanabe {

// Coefficients of the r-th cyclotomic polynomial, low degree first (monic).
std::vector<Integer> cyclotomicPolynomial(int r);

class Cyclotomic {
 public:
  // Zero element of Q(zeta_r).
  explicit Cyclotomic(int order);
  static Cyclotomic fromRational(int order, const Rational& q);
  // zeta_r^power (power taken mod r, negatives allowed).
  static Cyclotomic zeta(int order, long power);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool isZero() const;
  // True when the element lies in Q (all coefficients beyond the constant vanish).
  bool isRational() const;
  Rational rationalPart() const;  // throws DimensionError when not rational

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator*(const Rational& q) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Multiplicative inverse via the extended Euclidean algorithm in Q[x].
  Cyclotomic inverse() const;

 private:
  int order_;
  std::vector<Rational> c_;  // length = deg Phi_r, coefficient of zeta^i at index i
  void reduceFrom(std::vector<Rational> poly);
};

inline bool isZero(const Cyclotomic& x) { return x.isZero(); }
inline Cyclotomic zeroLike(const Cyclotomic& x) { return Cyclotomic(x.order()); }
inline Cyclotomic oneLike(const Cyclotomic& x) {
  return Cyclotomic::fromRational(x.order(), 1);
}
inline Cyclotomic inverseOf(const Cyclotomic& x) { return x.inverse(); }

}  // namespace tanabe
