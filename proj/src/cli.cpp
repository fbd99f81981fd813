#include "normsieve/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "normsieve/arith.hpp"
#include "normsieve/asym.hpp"
#include "normsieve/bnum.hpp"
#include "normsieve/errors.hpp"
#include "normsieve/field.hpp"
#include "normsieve/scan.hpp"
#include "normsieve/sieve.hpp"
#include "normsieve/tuples.hpp"

namespace normsieve::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw DomainError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::string join_set(const std::vector<std::uint64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  file << content;
}

// Values from --config, overridden by flags given on the command line.
struct Settings {
  std::string config_path;
  std::string field;
  std::string family;
  std::string grid;
  std::string y_rule = "sqrt_x";
  std::string format = "csv";
  std::string out_prefix;
  std::uint64_t seed = kDefaultFactorSeed;

  // Keys the subcommand has no flag for are ignored, so one file can serve every subcommand.
  void merge_config(const std::map<std::string, std::string>& values, const CLI::App& cmd) {
    auto take = [&](const char* key, const char* flag, std::string& target) {
      const auto it = values.find(key);
      const CLI::Option* opt = cmd.get_option_no_throw(flag);
      if (it != values.end() && opt != nullptr && opt->count() == 0) target = it->second;
    };
    take("field", "--field", field);
    take("family", "--family", family);
    take("grid", "--grid", grid);
    take("y_rule", "--y-rule", y_rule);
    take("outputs", "--format", format);
    // outputs may be written as a set, "csv,json".
    if (format == "csv,json" || format == "json,csv") format = "both";
    if (format != "csv" && format != "json" && format != "both")
      throw DomainError("outputs must be csv, json or csv,json, got '" + format + "'");
    take("out", "--out", out_prefix);
    const CLI::Option* seed_opt = cmd.get_option_no_throw("--seed");
    if (const auto it = values.find("seed"); it != values.end() && seed_opt != nullptr && seed_opt->count() == 0)
      seed = parse_u64(it->second, "seed");
  }
};

}  // namespace

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(number) + " is not key = value: '" + body + "'");
    values[trim(std::string_view(body).substr(0, eq))] = trim(std::string_view(body).substr(eq + 1));
  }
  return values;
}

std::vector<std::uint64_t> parse_grid(std::string_view text) {
  constexpr std::string_view pow10 = "pow10:";
  if (text.substr(0, pow10.size()) == pow10) {
    const auto range = text.substr(pow10.size());
    const auto dash = range.find('-');
    if (dash == std::string_view::npos) throw DomainError("grid pow10:<from>-<to> expected, got '" + std::string(text) + "'");
    return geometric_grid(static_cast<int>(parse_u64(range.substr(0, dash), "grid exponent")),
                          static_cast<int>(parse_u64(range.substr(dash + 1), "grid exponent")));
  }
  std::vector<std::uint64_t> grid;
  while (!text.empty()) {
    const auto comma = text.find(',');
    grid.push_back(parse_u64(trim(text.substr(0, comma)), "grid point"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (grid.empty()) throw DomainError("empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw DomainError("grid must be strictly increasing");
  }
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms of ideals: B-number counts, Selberg-sieve bounds and checks"};
  app.require_subcommand(1);
  Settings s;
  std::uint64_t n_value = 0, lo = 0, hi = 0, x = 0, p = 0, primes_limit = 0;
  int alpha_max = 0, tuple_size = 2;
  double t = 0;
  std::string y_text;
  bool with_timestamp = false;

  auto add_field = [&](CLI::App* cmd) { cmd->add_option("--field", s.field, "quadratic:<d> or cyclotomic:<m>"); };
  auto add_family = [&](CLI::App* cmd) { cmd->add_option("--family", s.family, "a1,b1:a2,b2:..."); };
  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", s.config_path, "key = value file; flags override it");
    cmd->add_option("--seed", s.seed, "factorization seed");
  };

  auto* field_info = app.add_subcommand("field-info", "degree, discriminant support and splitting");
  add_field(field_info);
  add_config(field_info);
  field_info->add_option("--primes", primes_limit, "also list the split of every prime up to this bound");

  auto* bnum = app.add_subcommand("bnum", "b_K(n) for one n or a window");
  add_field(bnum);
  add_config(bnum);
  auto* n_opt = bnum->add_option("--n", n_value);
  bnum->add_option("--lo", lo);
  bnum->add_option("--hi", hi);

  auto* count = app.add_subcommand("count", "S(x)");
  add_field(count);
  add_family(count);
  add_config(count);
  count->add_option("--x", x)->required();

  auto* scan_cmd = app.add_subcommand("scan", "S(x), bound and normalized ratio over a grid");
  add_field(scan_cmd);
  add_family(scan_cmd);
  add_config(scan_cmd);
  scan_cmd->add_option("--grid", s.grid, "x1,x2,... or pow10:<from>-<to> (default pow10:3-6)");
  scan_cmd->add_option("--y-rule", s.y_rule, "sqrt_x or fixed:<Y>");
  scan_cmd->add_option("--format", s.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
  scan_cmd->add_option("--out", s.out_prefix, "write <prefix>.csv / <prefix>.json instead of stdout");
  scan_cmd->add_flag("--timestamp", with_timestamp, "record the run time in the JSON metadata");

  auto* bound = app.add_subcommand("bound", "Selberg upper bound (x + Y^2)/V_Y");
  add_field(bound);
  add_family(bound);
  add_config(bound);
  bound->add_option("--x", x)->required();
  bound->add_option("--y-rule", s.y_rule, "sqrt_x or fixed:<Y>");

  auto* gamma = app.add_subcommand("gamma", "excluded primes Pi' and the factor gamma");
  add_field(gamma);
  add_config(gamma);
  add_family(gamma);

  auto* verify = app.add_subcommand("verify-prop", "exhaustive check of the residue-class clauses at p");
  add_field(verify);
  add_config(verify);
  add_family(verify);
  verify->add_option("--p", p)->required();
  verify->add_option("--alpha-max", alpha_max)->required();
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* tauberian = app.add_subcommand("tauberian", "restricted squarefree partial sum below t");
  add_field(tauberian);
  add_config(tauberian);
  tauberian->add_option("--M", tuple_size)->required();
  tauberian->add_option("--t", t)->required();

  auto* landau = app.add_subcommand("landau", "B-number count normalized by x/(log x)^(1-1/N)");
  add_field(landau);
  add_config(landau);
  landau->add_option("--x", x)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  auto echo = [&] {
    std::string line;
    for (std::size_t i = 1; i < args.size(); ++i) line += (i > 1 ? " " : "") + args[i];
    return line;
  };
  auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) {
      err << "usage error: " << cmd->get_name() << " requires " << flag << '\n';
      return false;
    }
    return true;
  };

  try {
    if (!s.config_path.empty()) {
      std::ifstream file(s.config_path);
      if (!file) throw DomainError("cannot read config file '" + s.config_path + "'");
      std::stringstream buffer;
      buffer << file.rdbuf();
      s.merge_config(parse_config(buffer.str()), *cmd);
    }
    if (!need(s.field, "--field")) return 2;
    const FieldSpec field = parse_field(s.field);
    const std::string name = cmd->get_name();

    if (name == "field-info") {
      out << "label=" << field.label() << '\n'
          << "degree=" << field.degree() << '\n'
          << "disc_support=" << join_set(field.discriminant_support()) << '\n';
      if (primes_limit >= 2) {
        out << "p,f,e,g,ramified,class\n";
        for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(primes_limit, 1u << 30)))) {
          const auto split = residue_degree(field, q);
          const auto cls = pi_class(field, q);
          out << q << ',' << split.f << ',' << split.e << ',' << split.g << ',' << (split.ramified ? 1 : 0) << ','
              << (cls ? std::to_string(*cls) : "") << '\n';
        }
      }
      return 0;
    }
    if (name == "bnum") {
      if (n_opt->count() > 0) {
        out << (is_b_number(field, static_cast<std::int64_t>(n_value)) ? 1 : 0) << '\n';
      } else if (bnum->count("--lo") > 0 && bnum->count("--hi") > 0) {
        out << b_indicator_range(field, lo, hi).to_bitstring() << '\n';
      } else {
        err << "usage error: bnum requires --n or both --lo and --hi\n";
        return 2;
      }
      return 0;
    }
    if (name == "tauberian") {
      out << format_real(tauberian_partial(field, tuple_size, t)) << '\n';
      return 0;
    }
    if (name == "landau") {
      out << format_real(landau_ratio(field, x)) << '\n';
      return 0;
    }

    if (!need(s.family, "--family")) return 2;
    const TupleFamily family = parse_family(s.family);

    if (name == "count") {
      out << count_S(field, family, x) << '\n';
      return 0;
    }
    if (name == "gamma") {
      const auto g = gamma_factor(SieveSystem(field, family));
      out << "Pi'=" << join_set(g.primes) << " gamma=" << to_string(g.value) << '\n';
      return 0;
    }
    if (name == "bound") {
      const SieveSystem sys(field, family);
      const SieveLevel level = parse_y_rule(s.y_rule).level_for(x);
      out << "bound=" << to_string(selberg_upper_bound(sys, x, level)) << " V_Y=" << to_string(v_y_exact(sys, level))
          << " Y^2=" << to_string(level.y_squared()) << '\n';
      return 0;
    }
    if (name == "verify-prop") {
      const auto report = verify_proposition(SieveSystem(field, family), p, alpha_max);
      if (verify_format == "json") {
        out << to_json(report);
      } else {
        for (const auto& c : report.clauses) {
          out << "clause " << c.clause << ": " << (c.passed ? "pass" : "fail") << " checked=" << c.checked;
          if (!c.passed) out << " witness: " << c.witness;
          out << '\n';
        }
        out << (report.all_passed() ? "all clauses pass" : "some clauses fail") << '\n';
      }
      return report.all_passed() ? 0 : 1;
    }
    if (name == "scan") {
      const auto grid = parse_grid(s.grid.empty() ? "pow10:3-6" : s.grid);
      if (grid.size() < 2 || static_cast<double>(grid.back()) < 1000.0 * static_cast<double>(grid.front()))
        err << "warning: grid spans fewer than 3 decades; the exponent fit is not meaningful\n";
      err << "scan: " << field.label() << " family " << family.to_string() << " up to x=" << grid.back() << '\n';
      const auto report = scan(field, family, grid, parse_y_rule(s.y_rule));
      if (!report.fitted_exponent) err << "warning: " << report.fit_error << '\n';
      const bool csv = s.format == "csv" || s.format == "both";
      const bool json = s.format == "json" || s.format == "both";
      const std::string stamp = with_timestamp ? utc_timestamp() : "";
      if (s.out_prefix.empty()) {
        if (csv) out << to_csv(report);
        if (json) out << to_json(report, stamp);
      } else {
        if (csv) write_file(s.out_prefix + ".csv", to_csv(report));
        if (json) write_file(s.out_prefix + ".json", to_json(report, stamp));
      }
      err << "scan: done\n";
      return 0;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n  input: " << echo() << '\n';
    return 1;
  } catch (const std::bad_alloc&) {
    err << "error: window too large to allocate\n  input: " << echo() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n  input: " << echo() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace normsieve::cli
