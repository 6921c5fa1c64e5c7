#include "tanabe/cyclotomic.hpp"

#include <map>

namespace tanabe {

namespace {

// Exact division of integer polynomials (quotient known to be integral).
std::vector<Integer> polyDivExact(const std::vector<Integer>& num,
                                  const std::vector<Integer>& den) {
  std::vector<Integer> rem = num;
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  for (long i = static_cast<long>(rem.size()) - 1;
       i >= static_cast<long>(den.size()) - 1; --i) {
    Integer q = rem[static_cast<size_t>(i)] / den.back();
    long shift = i - (static_cast<long>(den.size()) - 1);
    quot[static_cast<size_t>(shift)] = q;
    for (size_t j = 0; j < den.size(); ++j)
      rem[static_cast<size_t>(shift) + j] -= q * den[j];
  }
  for (const Integer& c : rem)
    if (c != 0) throw std::logic_error("polyDivExact: nonzero remainder");
  return quot;
}

constexpr int kMaxOrder = 64;

}  // namespace

std::vector<Integer> cyclotomicPolynomial(int r) {
  if (r < 1) throw DimensionError("cyclotomic order must be positive");
  if (r > kMaxOrder && !guardOverrideActive())
    throw GuardError("cyclotomic order exceeds guard (set TANABE_GUARD_OVERRIDE to lift)");
  static std::map<int, std::vector<Integer>> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  // x^r - 1 divided by the product of Phi_d over proper divisors d of r.
  std::vector<Integer> num(static_cast<size_t>(r) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<size_t>(r)] = 1;
  std::vector<Integer> result = num;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    result = polyDivExact(result, cyclotomicPolynomial(d));
  }
  cache[r] = result;
  return result;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  size_t deg = cyclotomicPolynomial(order).size() - 1;
  c_.assign(deg, Rational(0));
}

Cyclotomic Cyclotomic::fromRational(int order, const Rational& q) {
  Cyclotomic z(order);
  z.c_[0] = q;
  return z;
}

Cyclotomic Cyclotomic::zeta(int order, long power) {
  long p = power % order;
  if (p < 0) p += order;
  Cyclotomic z(order);
  std::vector<Rational> poly(static_cast<size_t>(p) + 1, Rational(0));
  poly[static_cast<size_t>(p)] = 1;
  z.reduceFrom(std::move(poly));
  return z;
}

void Cyclotomic::reduceFrom(std::vector<Rational> poly) {
  const std::vector<Integer> phi = cyclotomicPolynomial(order_);
  const size_t deg = phi.size() - 1;
  if (poly.size() < deg) poly.resize(deg, Rational(0));
  for (long i = static_cast<long>(poly.size()) - 1; i >= static_cast<long>(deg);
       --i) {
    Rational lead = poly[static_cast<size_t>(i)];
    if (tanabe::isZero(lead)) continue;
    // Phi is monic: subtract lead * x^(i-deg) * Phi.
    long shift = i - static_cast<long>(deg);
    for (size_t j = 0; j < phi.size(); ++j)
      poly[static_cast<size_t>(shift) + j] -= lead * Rational(phi[j]);
  }
  c_.assign(poly.begin(), poly.begin() + static_cast<long>(deg));
}

bool Cyclotomic::isZero() const {
  for (const Rational& q : c_)
    if (!tanabe::isZero(q)) return false;
  return true;
}

bool Cyclotomic::isRational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!tanabe::isZero(c_[i])) return false;
  return true;
}

Rational Cyclotomic::rationalPart() const {
  if (!isRational()) throw DimensionError("cyclotomic element is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z(order_);
  for (size_t i = 0; i < c_.size(); ++i) z.c_[i] = -c_[i];
  return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic z = *this;
  z += o;
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic z = *this;
  z -= o;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ != o.order_) throw DimensionError("cyclotomic order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order_ != o.order_) throw DimensionError("cyclotomic order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ != o.order_) throw DimensionError("cyclotomic order mismatch");
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (tanabe::isZero(c_[i])) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  Cyclotomic z(order_);
  z.reduceFrom(std::move(prod));
  return z;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
  Cyclotomic z(order_);
  for (size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] * q;
  return z;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return order_ == o.order_ && c_ == o.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (isZero()) throw std::domain_error("inverse of zero cyclotomic");
  // Extended Euclid in Q[x] on (this as polynomial, Phi_r): find u with
  // u * a == gcd (a unit) mod Phi_r.
  using Poly = std::vector<Rational>;
  auto degree = [](const Poly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (!tanabe::isZero(p[static_cast<size_t>(i)])) return i;
    return -1L;
  };
  Poly a(c_.begin(), c_.end());
  const std::vector<Integer> phiZ = cyclotomicPolynomial(order_);
  Poly b(phiZ.size());
  for (size_t i = 0; i < phiZ.size(); ++i) b[i] = Rational(phiZ[i]);
  Poly u0{Rational(1)}, u1{Rational(0)};  // coefficients of a in r0, r1
  Poly r0 = a, r1 = b;
  while (degree(r1) >= 0) {
    long d0 = degree(r0), d1 = degree(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(u0, u1);
      continue;
    }
    Rational q = r0[static_cast<size_t>(d0)] / r1[static_cast<size_t>(d1)];
    long shift = d0 - d1;
    auto subScaled = [&](Poly& x, const Poly& y) {
      if (x.size() < y.size() + static_cast<size_t>(shift))
        x.resize(y.size() + static_cast<size_t>(shift), Rational(0));
      for (size_t i = 0; i < y.size(); ++i)
        x[i + static_cast<size_t>(shift)] -= q * y[i];
    };
    subScaled(r0, r1);
    subScaled(u0, u1);
    if (degree(r0) < degree(r1)) {
      std::swap(r0, r1);
      std::swap(u0, u1);
    }
  }
  long d = degree(r0);
  if (d != 0)
    throw std::domain_error("cyclotomic element not invertible (zero divisor)");
  Rational unit = r0[static_cast<size_t>(d)];
  Cyclotomic z(order_);
  for (Rational& q : u0) q /= unit;
  z.reduceFrom(std::move(u0));
  return z;
}

}  // namespace tanabe
