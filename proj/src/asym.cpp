#include "normsieve/asym.hpp"

#include <cmath>
#include <limits>

#include "normsieve/arith.hpp"
#include "normsieve/bnum.hpp"
#include "normsieve/errors.hpp"

namespace normsieve {

namespace {

constexpr std::uint64_t kMaxCutoff = std::uint64_t{1} << 32;

std::vector<std::uint32_t> primes_through(std::uint64_t cutoff) {
  if (cutoff > kMaxCutoff) throw DomainError("prime cutoff too large");
  return primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(cutoff, kMaxCutoff - 1)));
}

// Neumaier summation.
struct CompensatedSum {
  long double sum = 0;
  long double carry = 0;

  void add(long double v) {
    const long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + carry; }
};

// Largest integer strictly below t.
u64 last_below(double t) {
  const double c = std::ceil(t);
  if (c > 9.0e15) throw DomainError("summation bound too large");
  return static_cast<u64>(c) - 1;
}

void check_tauberian_args(int tuple_size, double t) {
  if (tuple_size < 1) throw DomainError("tuple size must be positive");
  if (!(t > 1)) throw DomainError("tauberian_partial requires t > 1");
}

template <typename Visit>
void visit_squarefree(const std::vector<u64>& primes, std::size_t start, u64 k, int omega, u64 limit,
                      Visit& visit) {
  visit(k, omega);
  for (std::size_t i = start; i < primes.size(); ++i) {
    const u64 p = primes[i];
    if (p > limit / k) break;
    visit_squarefree(primes, i + 1, k * p, omega + 1, limit, visit);
  }
}

}  // namespace

void EulerProductConfig::validate() const {
  if (!(s > 1)) throw DomainError("Euler products need s > 1");
  if (prime_cutoff < 2) throw DomainError("prime cutoff must be at least 2");
  if (tuple_size < 1) throw DomainError("tuple size must be positive");
}

std::vector<std::uint64_t> inert_type_primes(const FieldSpec& field, std::uint64_t limit) {
  const ResidueDegreeTable degrees(field);
  std::vector<u64> out;
  for (std::uint32_t p : primes_through(limit)) {
    if (!field.is_ramified(p) && degrees.degree(p) > 1) out.push_back(p);
  }
  return out;
}

double euler_f_partial(const EulerProductConfig& cfg) {
  cfg.validate();
  long double product = 1;
  for (u64 p : inert_type_primes(cfg.field, cfg.prime_cutoff))
    product *= 1 + cfg.tuple_size * std::pow(static_cast<long double>(p), -static_cast<long double>(cfg.s));
  return static_cast<double>(product);
}

double zeta_partial(double s, std::uint64_t cutoff) {
  if (!(s > 1)) throw DomainError("zeta_partial requires s > 1");
  long double product = 1;
  for (std::uint32_t p : primes_through(cutoff))
    product /= 1 - std::pow(static_cast<long double>(p), -static_cast<long double>(s));
  return static_cast<double>(product);
}

double dirichlet_l_partial(const FieldSpec& field, double s, std::uint64_t cutoff) {
  if (field.kind() != FieldKind::quadratic) throw DomainError("dirichlet_l_partial needs a quadratic field");
  if (!(s > 1)) throw DomainError("dirichlet_l_partial requires s > 1");
  long double product = 1;
  const i64 disc = field.quadratic_discriminant();
  for (std::uint32_t p : primes_through(cutoff)) {
    const int chi = kronecker(disc, p);
    product /= 1 - chi * std::pow(static_cast<long double>(p), -static_cast<long double>(s));
  }
  return static_cast<double>(product);
}

double zeta_k_partial(const FieldSpec& field, double s, std::uint64_t cutoff) {
  if (!(s > 1)) throw DomainError("zeta_k_partial requires s > 1");
  long double product = 1;
  for (std::uint32_t p : primes_through(cutoff)) {
    const PrimeSplit split = residue_degree(field, p);
    const long double local = 1 - std::pow(static_cast<long double>(p), -static_cast<long double>(split.f * s));
    product /= std::pow(local, static_cast<long double>(split.g));
  }
  return static_cast<double>(product);
}

double euler_product_ratio(const EulerProductConfig& cfg) {
  cfg.validate();
  const long double f = euler_f_partial(cfg);
  const long double zeta = zeta_partial(cfg.s, cfg.prime_cutoff);
  const long double zeta_k = zeta_k_partial(cfg.field, cfg.s, cfg.prime_cutoff);
  const long double m = cfg.tuple_size;
  return static_cast<double>(f / (std::pow(zeta, m) / std::pow(zeta_k, m / cfg.field.degree())));
}

double tauberian_partial(const FieldSpec& field, int tuple_size, double t) {
  check_tauberian_args(tuple_size, t);
  const u64 limit = last_below(t);
  const auto primes = inert_type_primes(field, limit);
  std::vector<long double> weight_by_omega{1};
  CompensatedSum sum;
  auto visit = [&](u64 k, int omega) {
    while (static_cast<int>(weight_by_omega.size()) <= omega)
      weight_by_omega.push_back(weight_by_omega.back() * tuple_size);
    sum.add(weight_by_omega[omega] / static_cast<long double>(k));
  };
  visit_squarefree(primes, 0, 1, 0, limit, visit);
  return static_cast<double>(sum.value());
}

Rational tauberian_partial_exact(const FieldSpec& field, int tuple_size, double t) {
  check_tauberian_args(tuple_size, t);
  const u64 limit = last_below(t);
  const auto primes = inert_type_primes(field, limit);
  Rational sum = 0;
  auto visit = [&](u64 k, int omega) {
    BigInt weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(tuple_size), static_cast<unsigned long>(omega));
    sum += Rational(weight) / Rational(BigInt(std::to_string(k)));
  };
  visit_squarefree(primes, 0, 1, 0, limit, visit);
  return sum;
}

double landau_ratio(const FieldSpec& field, std::uint64_t x) {
  if (x < 100) throw DomainError("landau_ratio requires x >= 100");
  const auto count = static_cast<long double>(b_indicator_range(field, 1, x).count());
  const long double exponent = 1.0L - 1.0L / field.degree();
  return static_cast<double>(count * std::pow(std::log(static_cast<long double>(x)), exponent) / x);
}

Rational theorem_exponent(int tuple_size, int degree) {
  if (tuple_size < 1 || degree < 1) throw DomainError("theorem_exponent needs positive M and N");
  Rational e(tuple_size * (degree - 1), degree);
  e.canonicalize();
  return e;
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("regression inputs differ in length");
  const std::size_t n = xs.size();
  if (n < 3) throw DomainError("regression needs at least 3 points");
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw DomainError("regression abscissae are all equal");
  return static_cast<double>(sxy / sxx);
}

double fit_exponent(std::span<const GridSample> grid) {
  std::vector<double> xs, ys;
  for (const auto& [x, count] : grid) {
    if (count == 0 || x < 3) continue;
    const double lx = std::log(static_cast<double>(x));
    xs.push_back(std::log(lx));
    ys.push_back(std::log(static_cast<double>(x) / static_cast<double>(count)));
  }
  if (xs.size() < 3)
    throw DomainError("exponent fit needs at least 3 grid points with x >= 3 and S > 0, got " +
                      std::to_string(xs.size()));
  return least_squares_slope(xs, ys);
}

double tauberian_growth_slope(const FieldSpec& field, int tuple_size, std::span<const double> ts) {
  std::vector<double> xs, ys;
  for (double t : ts) {
    if (!(t > std::exp(1.0))) throw DomainError("growth slope needs every t > e");
    xs.push_back(std::log(std::log(t)));
    ys.push_back(std::log(tauberian_partial(field, tuple_size, t)));
  }
  return least_squares_slope(xs, ys);
}

}  // namespace normsieve
