#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "normsieve/field.hpp"
#include "normsieve/rational.hpp"

namespace normsieve {

// Partial Euler products over p <= prime_cutoff at a real point s > 1.
struct EulerProductConfig {
  FieldSpec field;
  int tuple_size;
  std::uint64_t prime_cutoff;
  double s;

  // Throws DomainError unless s > 1, cutoff >= 2 and tuple_size >= 1.
  void validate() const;
};

// Pi_union: unramified primes of residue degree > 1, up to limit.
std::vector<std::uint64_t> inert_type_primes(const FieldSpec& field, std::uint64_t limit);

// prod_{p <= cutoff, p in Pi_union} (1 + M p^-s).
double euler_f_partial(const EulerProductConfig& cfg);

// prod_{p <= cutoff} (1 - p^-s)^-1.
double zeta_partial(double s, std::uint64_t cutoff);

// prod_{p <= cutoff} (1 - chi_D(p) p^-s)^-1 for a quadratic field with discriminant D.
double dirichlet_l_partial(const FieldSpec& field, double s, std::uint64_t cutoff);

// prod_{p <= cutoff} (1 - p^(-f s))^(-g), ramified primes included.
double zeta_k_partial(const FieldSpec& field, double s, std::uint64_t cutoff);

// euler_f_partial / (zeta_partial^M / zeta_k_partial^(M/N)), at one cutoff.
double euler_product_ratio(const EulerProductConfig& cfg);

// sum of mu^2(k) M^omega(k) / k over k < t with every prime factor in Pi_union.
// Summed in a fixed order with compensation, so repeated calls agree bit for bit.
double tauberian_partial(const FieldSpec& field, int tuple_size, double t);

// The same sum as an exact rational; practical for t up to ~1e4.
Rational tauberian_partial_exact(const FieldSpec& field, int tuple_size, double t);

// (#{n <= x : b_K(n) = 1}) (log x)^(1 - 1/N) / x, for x >= 100.
double landau_ratio(const FieldSpec& field, std::uint64_t x);

// M (1 - 1/N).
Rational theorem_exponent(int tuple_size, int degree);

struct GridSample {
  std::uint64_t x;
  std::uint64_t count;
};

// Least-squares slope of ys against xs; needs >= 3 points with distinct xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

// Slope of log(x/S(x)) against log log x. Points with S = 0 or x < 3 are
// unusable; fewer than three usable points is an error.
double fit_exponent(std::span<const GridSample> grid);

// Slope of log(tauberian_partial(t)) against log log t.
double tauberian_growth_slope(const FieldSpec& field, int tuple_size, std::span<const double> ts);

}  // namespace normsieve
