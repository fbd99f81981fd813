#pragma once

#include <cstdint>
#include <vector>

namespace normsieve {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Least nonnegative residue of a modulo m (m > 0).
constexpr u64 mod_floor(i128 a, u64 m) {
  i128 r = a % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 gcd(u64 a, u64 b);

// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inverse_mod(u64 a, u64 m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// floor(sqrt(n)).
u64 isqrt(u64 n);

// All primes p <= limit, increasing.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

u64 totient(u64 n);

// Least k >= 1 with a^k = 1 mod m. Requires gcd(a, m) = 1; the order modulo 1 is 1.
u64 multiplicative_order(u64 a, u64 m);

// Exponent of p in n (n != 0).
int valuation(u64 n, u64 p);

u64 checked_pow(u64 base, int exp);

}  // namespace normsieve
