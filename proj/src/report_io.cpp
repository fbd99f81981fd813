#include "normsieve/scan.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace normsieve {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_csv(const CountReport& report) {
  std::ostringstream out;
  out << "x,S,bound_num,bound_den,ratio,exponent_fit\n";
  const std::string fit = report.fitted_exponent ? format_real(*report.fitted_exponent) : "";
  for (const auto& row : report.rows) {
    out << row.x << ',' << row.count << ',' << row.bound.get_num().get_str() << ','
        << row.bound.get_den().get_str() << ',' << format_real(row.ratio) << ',' << fit << '\n';
  }
  return out.str();
}

std::string to_json(const CountReport& report, const std::string& timestamp) {
  nlohmann::ordered_json doc;
  auto& meta = doc["metadata"];
  meta["field"] = report.field;
  meta["family"] = report.family;
  meta["y_rule"] = report.y_rule;
  meta["theorem_exponent"] = to_string(report.exponent);
  meta["gamma"] = to_string(report.gamma.value);
  meta["pi_prime"] = report.gamma.primes;
  if (!timestamp.empty()) meta["timestamp"] = timestamp;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["x"] = row.x;
    r["S"] = row.count;
    r["bound_num"] = row.bound.get_num().get_str();
    r["bound_den"] = row.bound.get_den().get_str();
    r["ratio"] = format_real(row.ratio);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  if (report.fitted_exponent) {
    doc["exponent_fit"] = format_real(*report.fitted_exponent);
  } else {
    doc["exponent_fit"] = nullptr;
    doc["exponent_fit_error"] = report.fit_error;
  }
  return doc.dump(2) + "\n";
}

std::string to_json(const PropositionReport& report) {
  nlohmann::ordered_json doc;
  doc["field"] = report.field;
  doc["family"] = report.family;
  doc["p"] = report.p;
  doc["r"] = report.r;
  doc["alpha_max"] = report.alpha_max;
  doc["period"] = report.period;
  auto sizes = nlohmann::ordered_json::array();
  for (const auto& [alpha, size] : report.omega_sizes) sizes.push_back({{"alpha", alpha}, {"size", size}});
  doc["omega_bar_sizes"] = std::move(sizes);
  auto clauses = nlohmann::ordered_json::array();
  for (const auto& c : report.clauses) {
    nlohmann::ordered_json j;
    j["clause"] = c.clause;
    j["status"] = c.passed ? "pass" : "fail";
    j["checked"] = c.checked;
    if (!c.passed) j["witness"] = c.witness;
    clauses.push_back(std::move(j));
  }
  doc["clauses"] = std::move(clauses);
  doc["all_passed"] = report.all_passed();
  return doc.dump(2) + "\n";
}

}  // namespace normsieve
