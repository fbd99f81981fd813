#include <cmath>
#include <vector>

#include "doctest.h"
#include "normsieve/asym.hpp"
#include "normsieve/bnum.hpp"
#include "normsieve/tuples.hpp"

using namespace normsieve;

namespace {

const FieldSpec& gauss() {
  static const FieldSpec f = parse_field("quadratic:-1");
  return f;
}

EulerProductConfig cfg(const FieldSpec& f, int m, std::uint64_t cutoff, double s) {
  return EulerProductConfig{f, m, cutoff, s};
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(cfg(gauss(), 2, 2, 1.01).validate());
  CHECK_THROWS_AS(cfg(gauss(), 2, 2, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(cfg(gauss(), 2, 1, 2.0).validate(), DomainError);
  CHECK_THROWS_AS(cfg(gauss(), 0, 10, 2.0).validate(), DomainError);
  CHECK_THROWS_AS(euler_f_partial(cfg(gauss(), 2, 10, 0.5)), DomainError);
}

TEST_CASE("inert-type primes") {
  CHECK(inert_type_primes(gauss(), 30) == std::vector<std::uint64_t>{3, 7, 11, 19, 23});
  // Q(zeta_5): residue degree > 1 unless p = 1 mod 5; 5 ramifies totally.
  CHECK(inert_type_primes(parse_field("cyclotomic:5"), 20) == std::vector<std::uint64_t>{2, 3, 7, 13, 17, 19});
}

TEST_CASE("euler_f_partial examples") {
  CHECK(euler_f_partial(cfg(gauss(), 2, 2, 2.0)) == 1.0);
  CHECK(euler_f_partial(cfg(gauss(), 2, 10, 2.0)) == doctest::Approx(11.0 / 9 * 51.0 / 49).epsilon(1e-14));
  double previous = 1.0;
  for (std::uint64_t cutoff = 2; cutoff <= 5000; cutoff = cutoff * 3 / 2 + 1) {
    const double v = euler_f_partial(cfg(gauss(), 3, cutoff, 1.5));
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("zeta_k_partial examples") {
  CHECK(zeta_k_partial(gauss(), 2.0, 3) == doctest::Approx(4.0 / 3 * 81.0 / 80).epsilon(1e-14));
  CHECK(zeta_k_partial(gauss(), 2.0, 1) == 1.0);
  CHECK(zeta_partial(2.0, 1) == 1.0);
  CHECK(zeta_partial(2.0, 100000) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-5));
  for (const char* spec : {"quadratic:-1", "quadratic:-2", "quadratic:5", "quadratic:-23", "quadratic:13"}) {
    const auto f = parse_field(spec);
    for (double s : {1.5, 2.0, 3.0}) {
      CAPTURE(spec);
      CAPTURE(s);
      CHECK(zeta_k_partial(f, s, 2000) ==
            doctest::Approx(zeta_partial(s, 2000) * dirichlet_l_partial(f, s, 2000)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(dirichlet_l_partial(parse_field("cyclotomic:5"), 2.0, 10), DomainError);
}

TEST_CASE("Euler product ratio is bracketed and stable") {
  for (const char* spec : {"quadratic:-1", "quadratic:-2", "cyclotomic:5"}) {
    const auto f = parse_field(spec);
    for (int m : {2, 3}) {
      for (double s : {1.5, 2.0, 3.0}) {
        CAPTURE(spec);
        CAPTURE(m);
        CAPTURE(s);
        const double a = euler_product_ratio(cfg(f, m, 10000, s));
        const double b = euler_product_ratio(cfg(f, m, 20000, s));
        CHECK(a >= 0.1);
        CHECK(a <= 10.0);
        CHECK(std::abs(b / a - 1) < 0.05);
      }
    }
  }
}

TEST_CASE("tauberian partial sums") {
  CHECK(tauberian_partial_exact(gauss(), 2, 10) == Rational(41, 21));
  CHECK(tauberian_partial(gauss(), 2, 10) == doctest::Approx(41.0 / 21).epsilon(1e-15));
  CHECK(tauberian_partial(gauss(), 2, 2) == 1.0);
  CHECK(tauberian_partial_exact(gauss(), 2, 2) == 1);
  CHECK_THROWS_AS(tauberian_partial(gauss(), 2, 1.0), DomainError);
  for (const char* spec : {"quadratic:-1", "cyclotomic:5", "cyclotomic:7"}) {
    const auto f = parse_field(spec);
    for (int m : {1, 2, 3}) {
      CAPTURE(spec);
      CAPTURE(m);
      CHECK(tauberian_partial(f, m, 10000) ==
            doctest::Approx(tauberian_partial_exact(f, m, 10000).get_d()).epsilon(1e-14));
    }
  }
  double previous = 0;
  for (double t = 2; t <= 1e5; t *= 1.7) {
    const double v = tauberian_partial(gauss(), 2, t);
    CHECK(v >= previous);
    previous = v;
  }
  CHECK(tauberian_partial(gauss(), 2, 1e5) == tauberian_partial(gauss(), 2, 1e5));
}

TEST_CASE("tauberian growth slope for Gaussian pairs") {
  const std::vector<double> ts = {1e3, 1e4, 1e5, 1e6};
  const double slope = tauberian_growth_slope(gauss(), 2, ts);
  CHECK(slope > 0.7);
  CHECK(slope < 1.3);
  const std::vector<double> bad = {2, 1e3, 1e4};
  CHECK_THROWS_AS(tauberian_growth_slope(gauss(), 2, bad), DomainError);
}

TEST_CASE("landau ratio") {
  CHECK(landau_ratio(gauss(), 100) == doctest::Approx(43 * std::sqrt(std::log(100.0)) / 100).epsilon(1e-14));
  const double r4 = landau_ratio(gauss(), 10000);
  CHECK(r4 > 0.8);
  CHECK(r4 < 0.85);
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) count += two_squares_oracle(n);
  CHECK(r4 == doctest::Approx(count * std::sqrt(std::log(1e4)) / 1e4).epsilon(1e-14));
  for (const char* spec : {"quadratic:-1", "quadratic:2", "cyclotomic:5", "cyclotomic:8"}) {
    CHECK(landau_ratio(parse_field(spec), 100) > 0);
    CHECK(landau_ratio(parse_field(spec), 54321) > 0);
  }
  CHECK_THROWS_AS(landau_ratio(gauss(), 99), DomainError);
}

TEST_CASE("theorem exponent") {
  CHECK(theorem_exponent(2, 2) == 1);
  CHECK(theorem_exponent(3, 2) == Rational(3, 2));
  CHECK(theorem_exponent(2, 4) == Rational(3, 2));
  CHECK(theorem_exponent(3, 6) == Rational(5, 2));
  CHECK(theorem_exponent(1, 2) == Rational(1, 2));
  CHECK_THROWS_AS(theorem_exponent(0, 2), DomainError);
  CHECK_THROWS_AS(theorem_exponent(2, 0), DomainError);
}

TEST_CASE("fit_exponent recovers synthetic models") {
  std::vector<GridSample> power, flat;
  for (double x : {1e3, 1e4, 1e5, 1e6}) {
    power.push_back({static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(std::llround(x / std::pow(std::log(x), 1.5)))});
    flat.push_back({static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(x)});
  }
  CHECK(fit_exponent(power) == doctest::Approx(1.5).epsilon(0.01 / 1.5));
  CHECK(std::abs(fit_exponent(flat)) < 1e-12);

  std::vector<GridSample> sparse = {{1000, 10}, {10000, 0}, {100000, 50}, {2, 1}};
  CHECK_THROWS_AS(fit_exponent(sparse), DomainError);
  const std::vector<double> xs = {1, 1, 1};
  const std::vector<double> ys = {1, 2, 3};
  CHECK_THROWS_AS(least_squares_slope(xs, ys), DomainError);
  const std::vector<double> x2 = {1, 2};
  CHECK_THROWS_AS(least_squares_slope(x2, x2), DomainError);
}

TEST_CASE("Gaussian twins fitted exponent") {
  const std::vector<std::uint64_t> grid = {1000, 10000, 100000, 1000000};
  const auto counts = count_S_grid(gauss(), parse_family("1,0:1,1"), grid);
  std::vector<GridSample> samples;
  for (std::size_t i = 0; i < grid.size(); ++i) samples.push_back({grid[i], counts[i]});
  const double slope = fit_exponent(samples);
  CHECK(slope >= 0.7);
  CHECK(slope <= 1.3);
}
