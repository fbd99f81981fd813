#include "normsieve/bnum.hpp"

#include <algorithm>
#include <limits>
#include <new>

#include "normsieve/arith.hpp"
#include "normsieve/errors.hpp"

namespace normsieve {

namespace {

constexpr u64 kChunk = u64{1} << 15;
constexpr u64 kMaxWindow = u64{1} << 36;
constexpr u64 kMaxValue = u64{1} << 62;

}  // namespace

std::size_t BIndicatorRange::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

std::string BIndicatorRange::to_bitstring() const {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

bool is_b_number(const FieldSpec& field, std::int64_t n) {
  if (n <= 0) return false;
  for (const auto& [p, alpha] : factorize(static_cast<u64>(n)).factors) {
    if (alpha % residue_degree(field, p).f != 0) return false;
  }
  return true;
}

bool two_squares_oracle(std::uint64_t n) {
  for (u64 a = 0; a * a <= n; ++a) {
    const u64 rest = n - a * a;
    const u64 b = isqrt(rest);
    if (b * b == rest) return true;
  }
  return false;
}

NormIndicatorSieve::NormIndicatorSieve(const FieldSpec& field, std::uint64_t max_value)
    : field_(field), max_value_(max_value), degrees_(field) {
  if (max_value == 0 || max_value > kMaxValue) throw DomainError("indicator sieve bound out of range");
  primes_ = primes_up_to(static_cast<std::uint32_t>(isqrt(max_value)));
  prime_degrees_.reserve(primes_.size());
  for (std::uint32_t p : primes_) prime_degrees_.push_back(static_cast<std::uint32_t>(degrees_.degree(p)));
}

template <typename Word>
void NormIndicatorSieve::sieve_chunk(u64 lo, u64 hi, std::vector<Word>& smooth,
                                     std::vector<std::uint8_t>& exponent, std::vector<bool>& bits,
                                     u64 offset) const {
  // smooth[i] collects the part of lo + i built from primes <= sqrt(hi), one
  // factor p per prime power p^k dividing it; exponent[i] counts those hits
  // for the prime currently being processed when f_p > 1.
  const u64 len = hi - lo + 1;
  std::fill(smooth.begin(), smooth.begin() + len, Word{1});
  std::vector<std::uint8_t> ok(len, 1);
  for (std::size_t j = 0; j < primes_.size(); ++j) {
    const u64 p = primes_[j];
    if (p * p > hi) break;
    const std::uint32_t f = prime_degrees_[j];
    for (u64 pk = p;; pk *= p) {
      for (u64 v = (lo + pk - 1) / pk * pk; v <= hi; v += pk) {
        smooth[v - lo] *= static_cast<Word>(p);
        if (f > 1) ++exponent[v - lo];
      }
      if (pk > hi / p) break;
    }
    if (f > 1) {
      for (u64 v = (lo + p - 1) / p * p; v <= hi; v += p) {
        std::uint8_t& e = exponent[v - lo];
        if (e % f != 0) ok[v - lo] = 0;
        e = 0;
      }
    }
  }
  for (u64 i = 0; i < len; ++i) {
    if (!ok[i]) {
      bits[offset + i] = false;
      continue;
    }
    // What is left is 1 or a single prime to the first power.
    const Word rest = static_cast<Word>((lo + i) / smooth[i]);
    if (rest > 1 && degrees_.degree(rest) != 1) bits[offset + i] = false;
  }
}

BIndicatorRange NormIndicatorSieve::window(std::uint64_t lo, std::uint64_t hi) const {
  if (lo < 1 || lo > hi) throw DomainError("indicator window requires 1 <= lo <= hi");
  if (hi > max_value_) throw DomainError("indicator window exceeds sieve bound");
  if (hi - lo >= kMaxWindow) throw std::bad_alloc();
  BIndicatorRange out;
  out.lo = lo;
  out.hi = hi;
  out.bits.assign(hi - lo + 1, true);
  const bool narrow = hi <= std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> narrow_buf(narrow ? kChunk : 0);
  std::vector<u64> wide_buf(narrow ? 0 : kChunk);
  std::vector<std::uint8_t> exponent(kChunk, 0);
  for (u64 start = lo; start <= hi;) {
    const u64 stop = std::min(hi, start + kChunk - 1);
    if (narrow) {
      sieve_chunk(start, stop, narrow_buf, exponent, out.bits, start - lo);
    } else {
      sieve_chunk(start, stop, wide_buf, exponent, out.bits, start - lo);
    }
    if (stop == hi) break;
    start = stop + 1;
  }
  return out;
}

BIndicatorRange b_indicator_range(const FieldSpec& field, std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || lo > hi) throw DomainError("b_indicator_range requires 1 <= lo <= hi");
  return NormIndicatorSieve(field, hi).window(lo, hi);
}

}  // namespace normsieve
