#include "normsieve/sieve.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "normsieve/arith.hpp"
#include "normsieve/errors.hpp"
#include "normsieve/factor.hpp"

namespace normsieve {

namespace {

BigInt to_big(u64 v) {
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return z;
}

BigInt big_pow(u64 p, unsigned long e) {
  BigInt z;
  mpz_pow_ui(z.get_mpz_t(), to_big(p).get_mpz_t(), e);
  return z;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) throw DomainError("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
  }
  std::string digits;
  BigInt scale = 1;
  bool seen_point = false, seen_digit = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) scale *= 10;
    } else if ((c == '-' || c == '+') && i == 0) {
      if (c == '-') digits.push_back('-');
    } else {
      throw DomainError("malformed number '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw DomainError("malformed number '" + std::string(text) + "'");
  Rational q(BigInt(digits), scale);
  q.canonicalize();
  return q;
}

// Largest d >= 0 with pred(d), for predicates true up to some bound; guess close to it.
template <typename Pred>
u64 largest_admitted(Pred pred, double guess) {
  u64 d = guess < 1 ? 0 : static_cast<u64>(guess);
  while (d > 0 && !pred(d)) --d;
  while (pred(d + 1)) ++d;
  return d;
}

}  // namespace

// ---- SieveLevel / YRule ----

SieveLevel::SieveLevel(Rational y_squared) : y_squared_(std::move(y_squared)) {
  if (y_squared_ <= 1) throw DomainError("sieve level Y must exceed 1");
}

SieveLevel SieveLevel::sqrt_of(std::uint64_t x) { return SieveLevel(Rational(to_big(x))); }

SieveLevel SieveLevel::fixed(const Rational& y) {
  if (y <= 1) throw DomainError("sieve level Y must exceed 1, got " + y.get_str());
  return SieveLevel(y * y);
}

double SieveLevel::y() const { return std::sqrt(y_squared_.get_d()); }

bool SieveLevel::admits(std::uint64_t d) const {
  if (d == 0) return false;
  const BigInt dd = to_big(d);
  return Rational(dd * dd) < y_squared_;
}

bool SieveLevel::admits_root(std::uint64_t d) const {
  if (d == 0) return false;
  const BigInt dd = to_big(d);
  return Rational(dd * dd * dd * dd) < y_squared_;
}

std::uint64_t SieveLevel::floor_below() const {
  return largest_admitted([this](u64 d) { return admits(d); }, y());
}

SieveLevel YRule::level_for(std::uint64_t x) const {
  return kind == Kind::sqrt_x ? SieveLevel::sqrt_of(x) : SieveLevel::fixed(fixed_y);
}

std::string YRule::to_string() const {
  return kind == Kind::sqrt_x ? "sqrt_x" : "fixed:" + fixed_y.get_str();
}

YRule parse_y_rule(std::string_view text) {
  if (text == "sqrt_x") return {};
  constexpr std::string_view prefix = "fixed:";
  if (text.substr(0, prefix.size()) == prefix) {
    YRule rule{YRule::Kind::fixed, parse_rational(text.substr(prefix.size()))};
    if (rule.fixed_y <= 1) throw DomainError("fixed sieve level must exceed 1");
    return rule;
  }
  throw DomainError("y rule must be sqrt_x or fixed:<Y>, got '" + std::string(text) + "'");
}

// ---- ResidueSet ----

bool ResidueSet::contains(std::uint64_t k) const {
  return std::binary_search(classes.begin(), classes.end(), k % modulus);
}

// ---- SieveSystem ----

SieveSystem::SieveSystem(FieldSpec field, TupleFamily family)
    : field_(std::move(field)), family_(std::move(family)), exclusion_product_(1) {
  std::vector<u64> primes;
  auto absorb = [&](i64 factor) {
    exclusion_product_ *= BigInt(std::to_string(factor));
    const u64 magnitude = static_cast<u64>(factor < 0 ? -factor : factor);
    for (const auto& [p, e] : factorize(magnitude).factors) primes.push_back(p);
  };
  const auto& pairs = family_.pairs();
  for (const auto& pr : pairs) absorb(pr.a);
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (m != k) absorb(cross_product(pairs[m], pairs[k]));
    }
  }
  if (exclusion_product_ == 0) throw InternalConsistencyError("exclusion product vanished for a validated family");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  exclusion_primes_ = std::move(primes);
}

bool SieveSystem::divides_exclusion_product(std::uint64_t p) const {
  return std::binary_search(exclusion_primes_.begin(), exclusion_primes_.end(), p);
}

std::optional<int> SieveSystem::pi_star_class(std::uint64_t p) const {
  const auto r = pi_class(field_, p);
  if (!r || *r <= 1) return std::nullopt;
  if (divides_exclusion_product(p)) return std::nullopt;
  // Literal exclusion; excludes nothing when M - 1 is not prime.
  if (p == static_cast<u64>(tuple_size() - 1)) return std::nullopt;
  return r;
}

bool SieveSystem::in_pi_star(std::uint64_t p) const { return pi_star_class(p).has_value(); }

std::vector<std::uint64_t> SieveSystem::pi_star_primes(std::uint64_t limit) const {
  std::vector<u64> out;
  if (limit > (u64{1} << 32)) throw DomainError("pi_star_primes limit too large");
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(limit))) {
    if (in_pi_star(p)) out.push_back(p);
  }
  return out;
}

std::uint64_t SieveSystem::omega_bar_size(std::uint64_t p, int alpha) const {
  if (alpha < 1) return 0;
  const auto r = pi_star_class(p);
  if (!r || (alpha - 1) % *r == 0) return 0;
  return static_cast<u64>(tuple_size()) * (p - 1);
}

ResidueSet SieveSystem::omega_bar(std::uint64_t p, int alpha) const {
  ResidueSet out;
  out.p = p;
  out.alpha = alpha;
  if (alpha < 1) return out;
  out.modulus = checked_pow(p, alpha);
  if (out.modulus >= (u64{1} << 62)) throw DomainError("p^alpha too large for residue enumeration");
  if (omega_bar_size(p, alpha) == 0) return out;
  const u64 q = out.modulus;
  const u64 step = q / p;  // p^(alpha-1)
  for (const auto& [a, b] : family_.pairs()) {
    // p is coprime to every a_m for p in Pi*.
    const u64 inv = inverse_mod(mod_floor(a, q), q);
    for (u64 j = 1; j < p; ++j) {
      const u64 shifted = mod_floor(static_cast<i128>(j) * step - b, q);
      out.classes.push_back(mul_mod(inv, shifted, q));
    }
  }
  std::sort(out.classes.begin(), out.classes.end());
  out.classes.erase(std::unique(out.classes.begin(), out.classes.end()), out.classes.end());
  return out;
}

Rational SieveSystem::theta(std::uint64_t p, int alpha) const {
  if (alpha < 0) throw DomainError("theta: negative exponent");
  Rational value = 1;
  for (int j = 1; j <= alpha; ++j) {
    const u64 size = omega_bar_size(p, j);
    if (size != 0) value -= Rational(to_big(size)) / Rational(big_pow(p, static_cast<unsigned long>(j)));
  }
  if (value <= 0)
    throw InternalConsistencyError("theta(" + std::to_string(p) + "^" + std::to_string(alpha) +
                                   ") = " + value.get_str() + " is not positive");
  return value;
}

Rational SieveSystem::local_factor(std::uint64_t p, int alpha) const {
  if (alpha < 1) throw DomainError("local_factor: exponent must be positive");
  return 1 / theta(p, alpha) - 1 / theta(p, alpha - 1);
}

// ---- V_Y and the bound ----

namespace {

struct LocalTerm {
  u64 power;
  Rational factor;
};

// Nonzero local factors of p^alpha for p^alpha <= limit.
std::vector<LocalTerm> local_terms(const SieveSystem& sys, u64 p, u64 limit) {
  std::vector<LocalTerm> terms;
  Rational previous = 1;  // 1/theta(p^(alpha-1))
  u64 power = p;
  for (int alpha = 2; power <= limit / p; ++alpha) {
    power *= p;
    const Rational inverse = 1 / sys.theta(p, alpha);
    Rational factor = inverse - previous;
    if (factor < 0)
      throw InternalConsistencyError("negative V_Y factor at " + std::to_string(p) + "^" + std::to_string(alpha));
    if (factor != 0) terms.push_back({power, std::move(factor)});
    previous = inverse;
  }
  return terms;
}

void accumulate_v_y(const std::vector<std::vector<LocalTerm>>& table, std::size_t start, u64 d, u64 limit,
                    const Rational& product, Rational& sum) {
  sum += product;
  for (std::size_t i = start; i < table.size(); ++i) {
    const auto& terms = table[i];
    if (terms.empty()) continue;
    if (terms.front().power > limit / d) break;
    for (const auto& term : terms) {
      if (term.power > limit / d) break;
      accumulate_v_y(table, i + 1, d * term.power, limit, product * term.factor, sum);
    }
  }
}

void accumulate_restricted(const std::vector<u64>& primes, std::size_t start, u64 d, u64 limit,
                           const Rational& term, const Rational& tuple_size, Rational& sum) {
  sum += term;
  for (std::size_t i = start; i < primes.size(); ++i) {
    const u64 p = primes[i];
    if (p > limit / d) break;
    accumulate_restricted(primes, i + 1, d * p, limit, term * tuple_size / Rational(to_big(p)), tuple_size, sum);
  }
}

}  // namespace

Rational v_y_exact(const SieveSystem& sys, const SieveLevel& level) {
  const u64 limit = level.floor_below();
  std::vector<std::vector<LocalTerm>> table;
  if (limit >= 4) {
    for (u64 p : sys.pi_star_primes(isqrt(limit))) table.push_back(local_terms(sys, p, limit));
  }
  Rational sum = 0;
  accumulate_v_y(table, 0, 1, limit, Rational(1), sum);
  return sum;
}

Rational v_y_restricted(const SieveSystem& sys, const SieveLevel& level) {
  const u64 limit = largest_admitted([&](u64 d) { return level.admits_root(d); }, std::sqrt(level.y()));
  const auto primes = sys.pi_star_primes(limit);
  Rational sum = 0;
  accumulate_restricted(primes, 0, 1, limit, Rational(1), Rational(sys.tuple_size()), sum);
  return sum;
}

Rational selberg_upper_bound(const SieveSystem& sys, std::uint64_t x, const SieveLevel& level) {
  return (Rational(to_big(x)) + level.y_squared()) / v_y_exact(sys, level);
}

GammaFactor gamma_factor(const SieveSystem& sys) {
  GammaFactor out;
  out.value = 1;
  const Rational tuple_size(sys.tuple_size());
  for (u64 p : sys.exclusion_primes()) {
    const auto r = pi_class(sys.field(), p);
    if (!r || *r <= 1) continue;
    out.primes.push_back(p);
    out.value *= 1 + tuple_size / Rational(to_big(p));
  }
  return out;
}

Rational gamma_totient_ceiling(const SieveSystem& sys) {
  Rational value = 1;
  for (u64 p : gamma_factor(sys).primes) {
    const Rational local(to_big(p), to_big(p - 1));
    for (int i = 0; i < sys.tuple_size(); ++i) value *= local;
  }
  return value;
}

// ---- Residue-class clauses ----

bool PropositionReport::all_passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

const ClauseResult& PropositionReport::clause(std::string_view name) const {
  for (const auto& c : clauses) {
    if (c.clause == name) return c;
  }
  throw DomainError("no clause named " + std::string(name));
}

namespace {

struct TermValuations {
  int total = 0;
  bool has_zero = false;
  bool has_exact = false;  // some term with p^(alpha-1) || term
};

void fail(ClauseResult& clause, std::string witness) {
  if (clause.passed) {
    clause.passed = false;
    clause.witness = std::move(witness);
  }
}

}  // namespace

PropositionReport verify_proposition(const SieveSystem& sys, std::uint64_t p, int alpha_max,
                                     const VerifyOptions& options) {
  const auto r = sys.pi_star_class(p);
  if (!r) throw DomainError("verify_proposition: " + std::to_string(p) + " is not in Pi* for this system");
  if (alpha_max < 1) throw DomainError("verify_proposition: alpha_max must be positive");
  const u64 period = checked_pow(p, alpha_max);
  if (period > (u64{1} << 32)) throw DomainError("verify_proposition: period p^alpha_max exceeds 2^32");

  const auto& pairs = sys.family().pairs();
  const int tuple_size = sys.tuple_size();
  const u64 expected_size = static_cast<u64>(tuple_size) * (p - 1);

  PropositionReport report;
  report.field = sys.field().label();
  report.family = sys.family().to_string();
  report.p = p;
  report.r = *r;
  report.alpha_max = alpha_max;
  report.period = period;
  auto named = [](const char* name) {
    ClauseResult c;
    c.clause = name;
    return c;
  };
  ClauseResult c1 = named("i"), c2 = named("ii"), c3 = named("iii"), c4 = named("iv"), c5 = named("v");

  std::vector<ResidueSet> sets(alpha_max + 1);
  std::vector<bool> required(alpha_max + 1, false);
  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    sets[alpha] = options.omega ? options.omega(p, alpha) : sys.omega_bar(p, alpha);
    required[alpha] = (alpha - 1) % *r != 0;
    auto& s = sets[alpha];
    report.omega_sizes.emplace_back(alpha, s.classes.size());
    ++c1.checked;
    const bool distinct = std::adjacent_find(s.classes.begin(), s.classes.end(),
                                             std::greater_equal<u64>()) == s.classes.end();
    const u64 want = required[alpha] ? expected_size : 0;
    if (s.classes.size() != want || !distinct)
      fail(c1, "alpha=" + std::to_string(alpha) + " size=" + std::to_string(s.classes.size()) +
                   " expected=" + std::to_string(want) + (distinct ? "" : " (repeated class)"));
  }

  // b_K lookups for clause (v).
  i128 top = 1;
  for (const auto& [a, b] : pairs) top = std::max(top, static_cast<i128>(a) * period + b);
  std::optional<BIndicatorRange> own_indicator;
  const BIndicatorRange* indicator = options.indicator;
  if (indicator && !(indicator->lo == 1 && static_cast<i128>(indicator->hi) >= top)) indicator = nullptr;
  if (!indicator && top <= (i128{1} << 31)) {
    own_indicator = b_indicator_range(sys.field(), 1, static_cast<u64>(top));
    indicator = &*own_indicator;
  }
  auto b_of = [&](i128 v) {
    if (v <= 0) return false;
    if (indicator) return indicator->at(static_cast<u64>(v));
    return is_b_number(sys.field(), static_cast<i64>(v));
  };

  auto values_at = [&](u64 k, int alpha) {
    TermValuations tv;
    for (const auto& [a, b] : pairs) {
      const i128 v = static_cast<i128>(a) * k + b;
      if (v == 0) {
        tv.has_zero = true;
        continue;
      }
      const int e = valuation(static_cast<u64>(v < 0 ? -v : v), p);
      tv.total += e;
      if (e == alpha - 1) tv.has_exact = true;
    }
    return tv;
  };

  for (int alpha = 2; alpha <= alpha_max; ++alpha) {
    if (sets[alpha].classes.empty()) continue;
    const u64 q = sets[alpha].modulus;
    for (u64 c : sets[alpha].classes) {
      for (u64 k = c == 0 ? q : c; k <= period; k += q) {
        const auto tv = values_at(k, alpha);
        auto where = [&] { return "alpha=" + std::to_string(alpha) + " k=" + std::to_string(k); };
        ++c2.checked;
        if (!tv.has_exact) fail(c2, where() + ": no term with exact valuation " + std::to_string(alpha - 1));
        ++c4.checked;
        if (tv.has_zero || tv.total != alpha - 1)
          fail(c4, where() + ": valuation of product is " + (tv.has_zero ? std::string("infinite") : std::to_string(tv.total)));
        for (int lower = 1; lower < alpha; ++lower) {
          if (!sets[lower].classes.empty() && sets[lower].contains(k))
            fail(c4, where() + " also lies in Omega(" + std::to_string(p) + "^" + std::to_string(lower) + ")");
        }
        ++c5.checked;
        bool all_b = true;
        for (const auto& [a, b] : pairs) {
          if (!b_of(static_cast<i128>(a) * k + b)) {
            all_b = false;
            break;
          }
        }
        if (all_b) fail(c5, where() + ": every term is a B-number");
      }
    }
  }

  // (iii): no k makes p divide two different terms.
  {
    std::vector<u64> residue(tuple_size), slope(tuple_size);
    for (int m = 0; m < tuple_size; ++m) {
      slope[m] = mod_floor(pairs[m].a, p);
      residue[m] = mod_floor(static_cast<i128>(pairs[m].a) + pairs[m].b, p);
    }
    for (u64 k = 1; k <= period; ++k) {
      int hits = 0;
      for (int m = 0; m < tuple_size; ++m) {
        hits += residue[m] == 0;
        residue[m] += slope[m];
        if (residue[m] >= p) residue[m] -= p;
      }
      if (hits > 1) fail(c3, "k=" + std::to_string(k) + ": p divides " + std::to_string(hits) + " terms");
    }
    c3.checked = period;
  }

  report.clauses = {c1, c2, c3, c4, c5};
  return report;
}

}  // namespace normsieve
