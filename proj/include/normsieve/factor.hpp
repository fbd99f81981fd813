#pragma once

#include <cstdint>
#include <vector>

namespace normsieve {

struct PrimePower {
  std::uint64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, every exponent >= 1; the empty list is 1.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x9e3779b97f4a7c15ULL;

// Trial division by primes below 1000, then Brent's variant of Pollard rho
// driven by a seeded generator. The result does not depend on the seed; only
// the search path does.
Factorization factorize(std::uint64_t n, std::uint64_t seed = kDefaultFactorSeed);

}  // namespace normsieve
