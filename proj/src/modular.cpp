#include "glab/modular.hpp"

namespace glab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  base = mod(base, p);
  if (exp < 0) {
    base = inv_mod(base, p);
    exp = -exp;
  }
  std::int64_t r = 1 % p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod(t, p);
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  std::int64_t k = 1, x = a;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

}  // namespace glab
