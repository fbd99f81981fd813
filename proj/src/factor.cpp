#include "normsieve/factor.hpp"

#include <algorithm>
#include <random>

#include "normsieve/arith.hpp"
#include "normsieve/errors.hpp"

namespace normsieve {

namespace {

constexpr std::uint32_t kTrialBound = 1000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kTrialBound);
  return primes;
}

// Montgomery arithmetic modulo an odd n, R = 2^64. Values stay in [0, n).
class Montgomery {
 public:
  explicit Montgomery(u64 n) : n_(n), neg_inv_(0) {
    u64 inv = n;  // Newton iteration for n^-1 mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    neg_inv_ = 0 - inv;
  }

  u64 mul(u64 a, u64 b) const {
    const u128 t = static_cast<u128>(a) * b;
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u128 mn = static_cast<u128>(m) * n_;
    const u64 carry = static_cast<u64>(t) != 0;
    u128 r = (t >> 64) + (mn >> 64) + carry;
    if (r >= n_) r -= n_;
    return static_cast<u64>(r);
  }

  u64 add(u64 a, u64 b) const {
    const u128 r = static_cast<u128>(a) + b;
    return static_cast<u64>(r >= n_ ? r - n_ : r);
  }

 private:
  u64 n_;
  u64 neg_inv_;
};

// Returns a nontrivial divisor of the odd composite n. The iteration
// y -> y^2 + c runs on Montgomery representatives; gcds are unaffected
// because R is a unit modulo n.
u64 brent_rho(u64 n, std::mt19937_64& rng) {
  const Montgomery mont(n);
  std::uniform_int_distribution<u64> pick(1, n - 1);
  for (;;) {
    const u64 c = pick(rng);
    auto step = [&](u64 v) { return mont.add(mont.mul(v, v), c); };
    u64 y = pick(rng), x = y, ys = y;
    u64 g = 1, q = 1;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::mt19937_64& rng, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho(n, rng);
  split(d, rng, out);
  split(n / d, rng, out);
}

}  // namespace

std::uint64_t Factorization::value() const {
  u64 n = 1;
  for (const auto& [p, e] : factors) n *= checked_pow(p, e);
  return n;
}

Factorization factorize(std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization result;
  for (std::uint32_t p : trial_primes()) {
    if (static_cast<u64>(p) * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    result.factors.push_back({p, e});
  }
  if (n == 1) return result;

  std::vector<u64> large;
  if (n < static_cast<u64>(kTrialBound) * kTrialBound || is_prime(n)) {
    large.push_back(n);
  } else {
    std::mt19937_64 rng(seed);
    split(n, rng, large);
  }
  std::sort(large.begin(), large.end());
  for (u64 p : large) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

}  // namespace normsieve
