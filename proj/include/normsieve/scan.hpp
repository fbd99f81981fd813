#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "normsieve/field.hpp"
#include "normsieve/rational.hpp"
#include "normsieve/sieve.hpp"
#include "normsieve/tuples.hpp"

namespace normsieve {

struct CountRow {
  std::uint64_t x;
  std::uint64_t count;    // S(x)
  Rational bound;         // (x + Y^2) / V_Y
  double ratio;           // S(x) (log x)^(M(1-1/N)) / x
};

struct CountReport {
  std::string field;
  std::string family;
  std::string y_rule;
  Rational exponent;  // M(1 - 1/N)
  GammaFactor gamma;
  std::vector<CountRow> rows;
  std::optional<double> fitted_exponent;  // absent when the grid cannot support a fit
  std::string fit_error;
};

// S(x) and the Selberg bound at every grid point. Grid must be nonempty and
// strictly increasing; the sqrt_x rule needs every x >= 2.
CountReport scan(const FieldSpec& field, const TupleFamily& family, std::span<const std::uint64_t> x_grid,
                 const YRule& rule);

// x = 10^k for k = from..to.
std::vector<std::uint64_t> geometric_grid(int from, int to);

// Header x,S,bound_num,bound_den,ratio,exponent_fit then one row per grid point.
std::string to_csv(const CountReport& report);

// CSV content plus field, family, gamma, Pi'. A timestamp is added only when given.
std::string to_json(const CountReport& report, const std::string& timestamp = {});

std::string to_json(const PropositionReport& report);

}  // namespace normsieve
