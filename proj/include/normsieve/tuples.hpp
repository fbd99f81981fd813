#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normsieve/errors.hpp"
#include "normsieve/field.hpp"

namespace normsieve {

// The progression n -> a n + b.
struct Progression {
  std::int64_t a;
  std::int64_t b;

  friend bool operator==(const Progression&, const Progression&) = default;
};

// M >= 2 progressions with every a_m >= 1 and no two proportional:
// a_m b_k - a_k b_m != 0 for m != k. Only validate_family builds one.
class TupleFamily {
 public:
  const std::vector<Progression>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const Progression& operator[](std::size_t i) const { return pairs_[i]; }

  // "a1,b1:a2,b2:..."
  std::string to_string() const;

  friend bool operator==(const TupleFamily&, const TupleFamily&) = default;

 private:
  friend TupleFamily validate_family(std::vector<Progression> pairs);
  explicit TupleFamily(std::vector<Progression> pairs) : pairs_(std::move(pairs)) {}

  std::vector<Progression> pairs_;
};

class DegenerateFamilyError : public DomainError {
 public:
  DegenerateFamilyError(int m, int k, std::int64_t cross_product);
  int m() const { return m_; }
  int k() const { return k_; }
  std::int64_t cross_product() const { return cross_product_; }

 private:
  int m_, k_;
  std::int64_t cross_product_;
};

// Coefficients are limited to |a|, |b| < 2^31 so cross-products fit in 64 bits.
TupleFamily validate_family(std::vector<Progression> pairs);

// Parses and validates "a1,b1:a2,b2:...".
TupleFamily parse_family(std::string_view text);

// a_m b_k - a_k b_m.
std::int64_t cross_product(const Progression& m, const Progression& k);

// #{1 <= n <= x : b_K(a_m n + b_m) = 1 for all m}; nonpositive terms fail.
std::uint64_t count_S(const FieldSpec& field, const TupleFamily& family, std::uint64_t x);

// count_S at every point of a strictly increasing grid, in one pass over [1, max grid].
std::vector<std::uint64_t> count_S_grid(const FieldSpec& field, const TupleFamily& family,
                                        std::span<const std::uint64_t> grid);

}  // namespace normsieve
