#include <cstdint>
#include <map>

#include "doctest.h"
#include "normsieve/arith.hpp"
#include "normsieve/errors.hpp"
#include "normsieve/field.hpp"

using namespace normsieve;

namespace {

// Legendre symbol by Euler's criterion, for odd primes p.
int euler_legendre(i64 a, u64 p) {
  const u64 r = pow_mod(mod_floor(a, p), (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

std::vector<FieldSpec> sample_fields() {
  std::vector<FieldSpec> out;
  for (const char* spec : {"quadratic:-1", "quadratic:-2", "quadratic:-3", "quadratic:2", "quadratic:5",
                           "quadratic:-5", "quadratic:15", "cyclotomic:3", "cyclotomic:4", "cyclotomic:5",
                           "cyclotomic:8", "cyclotomic:12", "cyclotomic:15", "cyclotomic:9"}) {
    out.push_back(parse_field(spec));
  }
  return out;
}

}  // namespace

TEST_CASE("parse_field examples") {
  const auto gauss = parse_field("quadratic:-1");
  CHECK(gauss.degree() == 2);
  CHECK(gauss.discriminant_support() == std::vector<u64>{2});
  CHECK(gauss.quadratic_discriminant() == -4);
  CHECK(gauss.label() == "quadratic:-1");

  const auto c5 = parse_field("cyclotomic:5");
  CHECK(c5.degree() == static_cast<int>(totient(5)));
  CHECK(c5.degree() == 4);
  CHECK(c5.discriminant_support() == std::vector<u64>{5});

  CHECK(parse_field("quadratic:5").quadratic_discriminant() == 5);
  CHECK(parse_field("quadratic:-5").discriminant_support() == std::vector<u64>{2, 5});
  CHECK(parse_field("cyclotomic:12").degree() == 4);
  CHECK(parse_field("cyclotomic:12").discriminant_support() == std::vector<u64>{2, 3});
}

TEST_CASE("parse_field rejects bad input") {
  for (const char* bad : {"quadratic:4", "quadratic:0", "quadratic:1", "quadratic:-12", "cyclotomic:2",
                          "cyclotomic:6", "cyclotomic:10", "cyclotomic:1", "quadratic:", "quadratic:x",
                          "quadratic:3.5", "cubic:7", "quadratic-1", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_field(bad), DomainError);
  }
}

TEST_CASE("kronecker against Euler's criterion for odd primes") {
  for (u64 p : primes_up_to(200)) {
    if (p == 2) continue;
    for (i64 a = -300; a <= 300; ++a) REQUIRE(kronecker(a, static_cast<i64>(p)) == euler_legendre(a, p));
  }
}

TEST_CASE("kronecker conventions at 2, -1, 0 and composite moduli") {
  // (a|2): 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  for (i64 a = -40; a <= 40; ++a) {
    const i64 r = mod_floor(a, 8);
    const int want = (a % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
    REQUIRE(kronecker(a, 2) == want);
    REQUIRE(kronecker(a, -1) == (a < 0 ? -1 : 1));
    REQUIRE(kronecker(a, 0) == ((a == 1 || a == -1) ? 1 : 0));
  }
  // Multiplicativity in the lower argument defines the composite case.
  for (i64 a = -30; a <= 30; ++a) {
    for (i64 m = 1; m <= 60; ++m) {
      for (i64 n = 1; n <= 60; ++n) REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
  }
}

TEST_CASE("residue_degree examples") {
  const auto gauss = parse_field("quadratic:-1");
  CHECK(residue_degree(gauss, 5) == PrimeSplit{5, 1, 1, 2, false});
  CHECK(residue_degree(gauss, 3) == PrimeSplit{3, 2, 1, 1, false});
  CHECK(residue_degree(gauss, 2) == PrimeSplit{2, 1, 2, 1, true});
  CHECK(residue_degree(parse_field("cyclotomic:5"), 2).f == 4);
  CHECK(residue_degree(parse_field("cyclotomic:5"), 5) == PrimeSplit{5, 1, 4, 1, true});
  // Q(zeta_12) at 2: 12 = 4 * 3, f = ord_3(2) = 2, e = phi(4) = 2.
  CHECK(residue_degree(parse_field("cyclotomic:12"), 2) == PrimeSplit{2, 2, 2, 1, true});
  CHECK_THROWS_AS(residue_degree(gauss, 9), DomainError);
}

TEST_CASE("pi_class examples") {
  const auto gauss = parse_field("quadratic:-1");
  CHECK(pi_class(gauss, 7) == 2);
  CHECK_FALSE(pi_class(gauss, 2).has_value());
  CHECK(pi_class(parse_field("cyclotomic:8"), 17) == 1);
}

TEST_CASE("efg = N and ramification matches the discriminant for p <= 10^4") {
  for (const auto& field : sample_fields()) {
    CAPTURE(field.label());
    for (u64 p : primes_up_to(10000)) {
      const auto s = residue_degree(field, p);
      REQUIRE(s.e * s.f * s.g == field.degree());
      REQUIRE(s.ramified == field.is_ramified(p));
      REQUIRE(s.ramified == (s.e > 1));
      if (!s.ramified) REQUIRE(field.degree() % s.f == 0);
    }
  }
}

TEST_CASE("quadratic:-1 and cyclotomic:4 split identically") {
  const auto a = parse_field("quadratic:-1");
  const auto b = parse_field("cyclotomic:4");
  for (u64 p : primes_up_to(10000)) REQUIRE(residue_degree(a, p) == residue_degree(b, p));
}

TEST_CASE("quadratic splitting is periodic modulo |D|") {
  for (const char* spec : {"quadratic:-1", "quadratic:-2", "quadratic:5", "quadratic:-7", "quadratic:10"}) {
    const auto field = parse_field(spec);
    const u64 period = static_cast<u64>(std::abs(field.quadratic_discriminant()));
    std::map<u64, int> seen;
    for (u64 p : primes_up_to(10000)) {
      if (field.is_ramified(p)) continue;
      const int f = residue_degree(field, p).f;
      auto [it, inserted] = seen.emplace(p % period, f);
      REQUIRE(it->second == f);
    }
  }
}

TEST_CASE("cyclotomic residue degree is the least k with p^k = 1 mod m") {
  for (i64 m : {3, 5, 7, 8, 9, 12, 15, 16, 20, 21}) {
    const auto field = FieldSpec::cyclotomic(m);
    for (u64 p : primes_up_to(3000)) {
      if (field.is_ramified(p)) continue;
      int k = 1;
      u64 power = p % m;
      while (power != 1) {
        power = mul_mod(power, p, m);
        ++k;
      }
      REQUIRE(residue_degree(field, p).f == k);
    }
  }
}

TEST_CASE("ResidueDegreeTable agrees with residue_degree") {
  for (const auto& field : sample_fields()) {
    const ResidueDegreeTable table(field);
    for (u64 p : primes_up_to(20000)) REQUIRE(table.degree(p) == residue_degree(field, p).f);
  }
}
