#pragma once

#include <cstdint>

namespace glab {

bool is_prime(std::int64_t n);

// Residue arithmetic mod a prime p < 2^31; operands are assumed reduced.
inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p);

// Requires a != 0 mod p.
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

// Multiplicative order of a in F_p^x (a != 0).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t p);

}  // namespace glab
