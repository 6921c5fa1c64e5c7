#include "tanabe/rational.hpp"

#include <cstdlib>
#include <vector>

namespace tanabe {

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(long n, const std::vector<long>& parts) {
  Integer r = factorial(n);
  long total = 0;
  for (long p : parts) {
    r /= factorial(p);
    total += p;
  }
  if (total != n) throw std::domain_error("multinomial parts do not sum to n");
  return r;
}

Integer fallingFactorial(const Integer& a, long b) {
  Integer r = 1;
  for (long i = 0; i < b; ++i) r *= (a - i);
  return r;
}

Integer bellNumber(long n) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<Integer> next;
    next.reserve(static_cast<size_t>(i) + 1);
    next.push_back(row.back());
    for (size_t j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
    row = std::move(next);
  }
  return row.front();
}

bool guardOverrideActive() {
  const char* v = std::getenv("TANABE_GUARD_OVERRIDE");
  return v != nullptr && v[0] != '\0';
}

}  // namespace tanabe
