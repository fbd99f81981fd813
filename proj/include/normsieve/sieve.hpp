#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normsieve/bnum.hpp"
#include "normsieve/field.hpp"
#include "normsieve/rational.hpp"
#include "normsieve/tuples.hpp"

namespace normsieve {

// The sieve level Y > 1, carried exactly through Y^2 so that Y = sqrt(x) is
// representable: 0 < d < Y  <=>  d^2 < Y^2.
class SieveLevel {
 public:
  static SieveLevel sqrt_of(std::uint64_t x);
  static SieveLevel fixed(const Rational& y);

  const Rational& y_squared() const { return y_squared_; }
  double y() const;
  // 0 < d < Y.
  bool admits(std::uint64_t d) const;
  // 0 < d < sqrt(Y), i.e. d^4 < Y^2.
  bool admits_root(std::uint64_t d) const;
  // Largest d with d < Y.
  std::uint64_t floor_below() const;

 private:
  explicit SieveLevel(Rational y_squared);
  Rational y_squared_;
};

// How Y is chosen for each x: Y = sqrt(x), or one fixed Y for every x.
struct YRule {
  enum class Kind { sqrt_x, fixed } kind = Kind::sqrt_x;
  Rational fixed_y;

  SieveLevel level_for(std::uint64_t x) const;
  std::string to_string() const;
};

// "sqrt_x" or "fixed:<decimal or num/den>".
YRule parse_y_rule(std::string_view text);

// Residue classes modulo p^alpha.
struct ResidueSet {
  std::uint64_t p = 0;
  int alpha = 0;
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> classes;  // sorted, distinct, each in [0, modulus)

  bool contains(std::uint64_t k) const;
};

// Selberg-sieve data for one (field, family): the sieving primes Pi*, the
// removed classes Omega-bar(p^alpha) and the densities theta(p^alpha).
// Immutable once built.
class SieveSystem {
 public:
  SieveSystem(FieldSpec field, TupleFamily family);

  const FieldSpec& field() const { return field_; }
  const TupleFamily& family() const { return family_; }
  int tuple_size() const { return family_.size(); }
  // prod a_m * prod_{m != k} (a_m b_k - a_k b_m); never zero.
  const BigInt& exclusion_product() const { return exclusion_product_; }
  // Primes dividing the exclusion product, increasing.
  const std::vector<std::uint64_t>& exclusion_primes() const { return exclusion_primes_; }
  bool divides_exclusion_product(std::uint64_t p) const;

  bool in_pi_star(std::uint64_t p) const;
  // r with p in Pi*_r.
  std::optional<int> pi_star_class(std::uint64_t p) const;
  // Pi* primes <= limit.
  std::vector<std::uint64_t> pi_star_primes(std::uint64_t limit) const;

  // M(p-1) when p in Pi*_r and r does not divide alpha-1, else 0.
  std::uint64_t omega_bar_size(std::uint64_t p, int alpha) const;
  ResidueSet omega_bar(std::uint64_t p, int alpha) const;

  // 1 - sum_{j<=alpha} #Omega-bar(p^j)/p^j; theta(p^0) = 1.
  Rational theta(std::uint64_t p, int alpha) const;
  // 1/theta(p^alpha) - 1/theta(p^(alpha-1)), the V_Y factor of p^alpha || d.
  Rational local_factor(std::uint64_t p, int alpha) const;

 private:
  FieldSpec field_;
  TupleFamily family_;
  BigInt exclusion_product_;
  std::vector<std::uint64_t> exclusion_primes_;
};

// V_Y = sum_{0<d<Y} prod_{p^alpha || d} local_factor(p, alpha), enumerating
// only the d whose every factor is nonzero.
Rational v_y_exact(const SieveSystem& sys, const SieveLevel& level);

// sum of M^omega(d1)/d1 over squarefree d1 < sqrt(Y) built from Pi* primes.
Rational v_y_restricted(const SieveSystem& sys, const SieveLevel& level);

// (x + Y^2) / V_Y.
Rational selberg_upper_bound(const SieveSystem& sys, std::uint64_t x, const SieveLevel& level);

struct GammaFactor {
  std::vector<std::uint64_t> primes;  // Pi'
  Rational value;                     // prod_{p in Pi'} (1 + M/p)
};

GammaFactor gamma_factor(const SieveSystem& sys);

// prod_{p in Pi'} (1 - 1/p)^(-M).
Rational gamma_totient_ceiling(const SieveSystem& sys);

struct ClauseResult {
  std::string clause;  // "i" .. "v", "iv-disjoint"
  bool passed = true;
  std::uint64_t checked = 0;
  std::string witness;  // first counterexample, empty on pass
};

struct PropositionReport {
  std::string field;
  std::string family;
  std::uint64_t p = 0;
  int r = 0;
  int alpha_max = 0;
  std::uint64_t period = 0;  // p^alpha_max
  std::vector<std::pair<int, std::uint64_t>> omega_sizes;  // (alpha, #Omega-bar(p^alpha))
  std::vector<ClauseResult> clauses;

  bool all_passed() const;
  const ClauseResult& clause(std::string_view name) const;
};

using OmegaSource = std::function<ResidueSet(std::uint64_t p, int alpha)>;

struct VerifyOptions {
  // Replaces sys.omega_bar, e.g. for fault injection.
  OmegaSource omega;
  // Precomputed b_K values; must cover [1, max_m (a_m p^alpha_max + b_m)] when given.
  const BIndicatorRange* indicator = nullptr;
};

// Exhaustive check of the five structural clauses over k in [1, p^alpha_max].
// Requires p in Pi*.
PropositionReport verify_proposition(const SieveSystem& sys, std::uint64_t p, int alpha_max,
                                     const VerifyOptions& options = {});

}  // namespace normsieve
