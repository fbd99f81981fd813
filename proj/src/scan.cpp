#include "normsieve/scan.hpp"

#include <cmath>

#include "normsieve/asym.hpp"
#include "normsieve/errors.hpp"

namespace normsieve {

std::vector<std::uint64_t> geometric_grid(int from, int to) {
  if (from < 0 || to < from || to > 18) throw DomainError("geometric grid exponents out of range");
  std::vector<std::uint64_t> grid;
  std::uint64_t x = 1;
  for (int k = 0; k <= to; ++k) {
    if (k >= from) grid.push_back(x);
    x *= 10;
  }
  return grid;
}

CountReport scan(const FieldSpec& field, const TupleFamily& family, std::span<const std::uint64_t> x_grid,
                 const YRule& rule) {
  if (x_grid.empty()) throw DomainError("scan grid is empty");
  const SieveSystem sys(field, family);
  CountReport report;
  report.field = field.label();
  report.family = family.to_string();
  report.y_rule = rule.to_string();
  report.exponent = theorem_exponent(family.size(), field.degree());
  report.gamma = gamma_factor(sys);

  const auto counts = count_S_grid(field, family, x_grid);
  const double exponent = report.exponent.get_d();
  std::vector<GridSample> samples;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const std::uint64_t x = x_grid[i];
    const SieveLevel level = rule.level_for(x);
    const double ratio = static_cast<double>(counts[i]) *
                         std::pow(std::log(static_cast<double>(x)), exponent) / static_cast<double>(x);
    report.rows.push_back({x, counts[i], selberg_upper_bound(sys, x, level), ratio});
    samples.push_back({x, counts[i]});
  }
  try {
    report.fitted_exponent = fit_exponent(samples);
  } catch (const DomainError& e) {
    report.fit_error = e.what();
  }
  return report;
}

}  // namespace normsieve
