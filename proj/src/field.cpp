#include "normsieve/field.hpp"

#include <charconv>
#include <cstdlib>

#include "normsieve/arith.hpp"
#include "normsieve/errors.hpp"
#include "normsieve/factor.hpp"

namespace normsieve {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw DomainError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

// Unchecked split for a prime p.
PrimeSplit split_prime(const FieldSpec& field, u64 p) {
  if (field.kind() == FieldKind::quadratic) {
    switch (kronecker(field.quadratic_discriminant(), static_cast<i64>(p))) {
      case 1:
        return {p, 1, 1, 2, false};
      case -1:
        return {p, 2, 1, 1, false};
      default:
        return {p, 1, 2, 1, true};
    }
  }
  u64 m = static_cast<u64>(field.parameter());
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  const u64 f = multiplicative_order(p % m, m);
  const u64 e = v == 0 ? 1 : checked_pow(p, v - 1) * (p - 1);
  const u64 g = totient(m) / f;
  return {p, static_cast<int>(f), static_cast<int>(e), static_cast<int>(g), v > 0};
}

}  // namespace

FieldSpec FieldSpec::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw DomainError("quadratic field parameter must not be 0 or 1");
  if (d <= -(std::int64_t{1} << 60) || d >= (std::int64_t{1} << 60))
    throw DomainError("quadratic field parameter out of range");
  const u64 magnitude = static_cast<u64>(d < 0 ? -d : d);
  for (const auto& [p, e] : factorize(magnitude).factors) {
    if (e > 1) throw DomainError("quadratic field parameter " + std::to_string(d) + " is not squarefree");
  }
  FieldSpec field;
  field.kind_ = FieldKind::quadratic;
  field.parameter_ = d;
  field.degree_ = 2;
  field.discriminant_ = mod_floor(d, 4) == 1 ? d : 4 * d;
  const i64 disc = field.discriminant_;
  for (const auto& [p, e] : factorize(static_cast<u64>(disc < 0 ? -disc : disc)).factors)
    field.support_.push_back(p);
  field.label_ = "quadratic:" + std::to_string(d);
  return field;
}

FieldSpec FieldSpec::cyclotomic(std::int64_t m) {
  if (m < 3) throw DomainError("cyclotomic conductor must be at least 3");
  if (m % 4 == 2) throw DomainError("cyclotomic conductor " + std::to_string(m) + " is 2 mod 4");
  if (m > (std::int64_t{1} << 24)) throw DomainError("cyclotomic conductor too large");
  FieldSpec field;
  field.kind_ = FieldKind::cyclotomic;
  field.parameter_ = m;
  field.degree_ = static_cast<int>(totient(static_cast<u64>(m)));
  for (const auto& [p, e] : factorize(static_cast<u64>(m)).factors) field.support_.push_back(p);
  field.label_ = "cyclotomic:" + std::to_string(m);
  return field;
}

bool FieldSpec::is_ramified(std::uint64_t p) const {
  for (u64 q : support_) {
    if (q == p) return true;
  }
  return false;
}

FieldSpec parse_field(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw DomainError("field spec must be quadratic:<d> or cyclotomic:<m>, got '" + std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  const auto value = text.substr(colon + 1);
  if (kind == "quadratic") return FieldSpec::quadratic(parse_integer(value, "quadratic parameter"));
  if (kind == "cyclotomic") return FieldSpec::cyclotomic(parse_integer(value, "cyclotomic conductor"));
  throw DomainError("unknown field kind '" + std::string(kind) + "'");
}

int kronecker(std::int64_t a_in, std::int64_t n_in) {
  i128 a = a_in, n = n_in;
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // (a|2) = 0 for even a, 1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    const int a8 = static_cast<int>(mod_floor(a, 8));
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol for odd positive n.
  a = mod_floor(a, static_cast<u64>(n));
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const int n8 = static_cast<int>(n & 7);
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

PrimeSplit residue_degree(const FieldSpec& field, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("residue_degree: " + std::to_string(p) + " is not prime");
  return split_prime(field, p);
}

std::optional<int> pi_class(const FieldSpec& field, std::uint64_t p) {
  if (!is_prime(p) || field.is_ramified(p)) return std::nullopt;
  return split_prime(field, p).f;
}

ResidueDegreeTable::ResidueDegreeTable(const FieldSpec& field) : field_(field) {
  if (field.kind() == FieldKind::quadratic) {
    const i64 d = field.quadratic_discriminant();
    period_ = static_cast<u64>(d < 0 ? -d : d);
  } else {
    period_ = static_cast<u64>(field.parameter());
  }
  constexpr u64 kMaxTabulated = u64{1} << 20;
  if (period_ > kMaxTabulated) return;
  table_.assign(period_, 0);
  for (u64 c = 1; c < period_; ++c) {
    if (gcd(c, period_) != 1) continue;
    if (field.kind() == FieldKind::quadratic) {
      // chi_D(n) = (D|n) is a character mod |D| for fundamental D.
      table_[c] = kronecker(field.quadratic_discriminant(), static_cast<i64>(c)) == 1 ? 1 : 2;
    } else {
      table_[c] = static_cast<std::uint32_t>(multiplicative_order(c, period_));
    }
  }
}

int ResidueDegreeTable::degree(std::uint64_t p) const {
  if (!table_.empty()) {
    const std::uint32_t f = table_[p % period_];
    if (f != 0) return static_cast<int>(f);
  }
  return split_prime(field_, p).f;
}

}  // namespace normsieve
