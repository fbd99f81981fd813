#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normsieve/factor.hpp"
#include "normsieve/field.hpp"

namespace normsieve {

// bits[i] = b_K(lo + i).
struct BIndicatorRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;
  std::vector<bool> bits;

  std::size_t size() const { return bits.size(); }
  bool contains(std::uint64_t n) const { return n >= lo && n <= hi; }
  // n must lie in [lo, hi].
  bool at(std::uint64_t n) const { return bits[n - lo]; }
  std::size_t count() const;
  // '0'/'1' characters, lowest n first.
  std::string to_bitstring() const;
};

// b_K(n): whether n is the norm of an integral ideal. Every prime above p has
// norm p^f in a normal field, ramified or not, so n qualifies exactly when
// f_p divides the exponent of every p | n. b_K(n) = 0 for n <= 0.
bool is_b_number(const FieldSpec& field, std::int64_t n);

// Exhaustive search for n = a^2 + b^2; independent of any splitting logic.
bool two_squares_oracle(std::uint64_t n);

// Segmented sieve that evaluates b_K over windows [lo, hi] with hi <= max_value.
// Each window is sieved by the prime powers p^k <= hi for p <= sqrt(hi); the
// exponent of every p with f_p > 1 is checked against f_p, and whatever
// cofactor is left over is a prime.
class NormIndicatorSieve {
 public:
  NormIndicatorSieve(const FieldSpec& field, std::uint64_t max_value);

  const FieldSpec& field() const { return field_; }
  std::uint64_t max_value() const { return max_value_; }

  BIndicatorRange window(std::uint64_t lo, std::uint64_t hi) const;

 private:
  template <typename Word>
  void sieve_chunk(std::uint64_t lo, std::uint64_t hi, std::vector<Word>& smooth,
                   std::vector<std::uint8_t>& exponent, std::vector<bool>& bits, std::uint64_t offset) const;

  FieldSpec field_;
  std::uint64_t max_value_;
  ResidueDegreeTable degrees_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> prime_degrees_;
};

// Requires 1 <= lo <= hi.
BIndicatorRange b_indicator_range(const FieldSpec& field, std::uint64_t lo, std::uint64_t hi);

}  // namespace normsieve
