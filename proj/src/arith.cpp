#include "normsieve/arith.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "normsieve/errors.hpp"
#include "normsieve/factor.hpp"

namespace normsieve {

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 old_r = static_cast<i128>(a % m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("inverse_mod: argument not invertible");
  return mod_floor(old_s, m);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return false;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

u64 totient(u64 n) {
  if (n == 0) return 0;
  u64 result = n;
  for (const auto& [p, e] : factorize(n).factors) result = result / p * (p - 1);
  return result;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 0) throw DomainError("multiplicative_order: modulus 0");
  if (m == 1) return 1;
  if (gcd(a % m, m) != 1) throw DomainError("multiplicative_order: argument not a unit");
  u64 order = totient(m);
  for (const auto& [q, e] : factorize(order).factors) {
    for (int i = 0; i < e && order % q == 0; ++i) {
      if (pow_mod(a, order / q, m) != 1) break;
      order /= q;
    }
  }
  return order;
}

int valuation(u64 n, u64 p) {
  if (n == 0) throw DomainError("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 checked_pow(u64 base, int exp) {
  u64 result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<u64>::max() / base)
      throw DomainError("integer power overflows 64 bits");
    result *= base;
  }
  return result;
}

}  // namespace normsieve
