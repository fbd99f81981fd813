#include "normsieve/tuples.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>

#include "normsieve/arith.hpp"
#include "normsieve/bnum.hpp"

namespace normsieve {

namespace {

constexpr i64 kCoefficientLimit = i64{1} << 31;
constexpr u64 kBlockBudget = u64{1} << 20;
constexpr u64 kMaxSpread = u64{1} << 16;
// Above this slope a window per block costs more than factoring each term.
constexpr i64 kPointwiseSlope = 256;

i64 parse_coefficient(std::string_view text) {
  i64 value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw DomainError("malformed family coefficient '" + std::string(text) + "'");
  return value;
}

// Progressions sharing a slope and lying close together are served by one window.
struct WindowGroup {
  i64 a;
  i64 b_min;
  i64 b_max;
  std::vector<i64> offsets;
};

std::vector<WindowGroup> group_progressions(const TupleFamily& family) {
  std::map<i64, std::vector<i64>> by_slope;
  for (const auto& [a, b] : family.pairs()) by_slope[a].push_back(b);
  std::vector<WindowGroup> groups;
  for (auto& [a, bs] : by_slope) {
    std::sort(bs.begin(), bs.end());
    for (i64 b : bs) {
      if (groups.empty() || groups.back().a != a ||
          static_cast<u64>(b - groups.back().b_min) > kMaxSpread) {
        groups.push_back({a, b, b, {}});
      }
      groups.back().b_max = b;
      groups.back().offsets.push_back(b);
    }
  }
  return groups;
}

}  // namespace

std::string TupleFamily::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) out += ':';
    out += std::to_string(pairs_[i].a) + ',' + std::to_string(pairs_[i].b);
  }
  return out;
}

DegenerateFamilyError::DegenerateFamilyError(int m, int k, std::int64_t value)
    : DomainError("degenerate family: progressions " + std::to_string(m) + " and " +
                  std::to_string(k) + " are proportional (cross-product " +
                  std::to_string(value) + ")"),
      m_(m),
      k_(k),
      cross_product_(value) {}

std::int64_t cross_product(const Progression& m, const Progression& k) {
  return m.a * k.b - k.a * m.b;
}

TupleFamily validate_family(std::vector<Progression> pairs) {
  if (pairs.size() < 2) throw DomainError("a family needs at least two progressions");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    if (a < 1)
      throw DomainError("progression " + std::to_string(i + 1) + " has nonpositive a = " + std::to_string(a));
    if (a >= kCoefficientLimit || b <= -kCoefficientLimit || b >= kCoefficientLimit)
      throw DomainError("progression " + std::to_string(i + 1) + " has a coefficient beyond 2^31");
  }
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    for (std::size_t k = m + 1; k < pairs.size(); ++k) {
      const i64 value = cross_product(pairs[m], pairs[k]);
      if (value == 0) throw DegenerateFamilyError(static_cast<int>(m + 1), static_cast<int>(k + 1), value);
    }
  }
  return TupleFamily(std::move(pairs));
}

TupleFamily parse_family(std::string_view text) {
  std::vector<Progression> pairs;
  while (true) {
    const auto colon = text.find(':');
    const auto item = text.substr(0, colon);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos)
      throw DomainError("malformed progression '" + std::string(item) + "', expected a,b");
    pairs.push_back({parse_coefficient(item.substr(0, comma)), parse_coefficient(item.substr(comma + 1))});
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  return validate_family(std::move(pairs));
}

std::uint64_t count_S(const FieldSpec& field, const TupleFamily& family, std::uint64_t x) {
  if (x == 0) return 0;
  const u64 grid[] = {x};
  return count_S_grid(field, family, grid).front();
}

std::vector<std::uint64_t> count_S_grid(const FieldSpec& field, const TupleFamily& family,
                                        std::span<const std::uint64_t> grid) {
  if (grid.empty()) return {};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1]))
      throw DomainError("count grid must be positive and strictly increasing");
  }
  const u64 x_max = grid.back();

  i128 top = 1;
  i64 a_max = 1;
  for (const auto& [a, b] : family.pairs()) {
    top = std::max(top, static_cast<i128>(a) * x_max + b);
    a_max = std::max(a_max, a);
  }
  if (top >= (i128{1} << 62)) throw DomainError("progression values exceed 2^62 at x = " + std::to_string(x_max));

  const auto groups = group_progressions(family);
  std::optional<NormIndicatorSieve> sieve;
  if (a_max <= kPointwiseSlope) sieve.emplace(field, static_cast<u64>(top));

  const u64 block = std::max<u64>(1, kBlockBudget / static_cast<u64>(a_max));
  std::vector<std::uint64_t> counts;
  counts.reserve(grid.size());
  std::size_t next = 0;
  u64 running = 0;
  std::vector<std::uint8_t> ok;
  for (u64 n0 = 1; n0 <= x_max; n0 += block) {
    const u64 n1 = std::min(x_max, n0 + block - 1);
    ok.assign(n1 - n0 + 1, 1);
    for (const auto& group : groups) {
      const i64 a = group.a;
      if (!sieve || a > kPointwiseSlope) {
        for (i64 b : group.offsets) {
          for (u64 n = n0; n <= n1; ++n) {
            if (ok[n - n0] && !is_b_number(field, a * static_cast<i64>(n) + b)) ok[n - n0] = 0;
          }
        }
        continue;
      }
      const i64 vhi = a * static_cast<i64>(n1) + group.b_max;
      if (vhi < 1) {
        std::fill(ok.begin(), ok.end(), 0);
        continue;
      }
      const i64 vlo = std::max<i64>(1, a * static_cast<i64>(n0) + group.b_min);
      const auto window = sieve->window(static_cast<u64>(vlo), static_cast<u64>(vhi));
      for (i64 b : group.offsets) {
        for (u64 n = n0; n <= n1; ++n) {
          const i64 v = a * static_cast<i64>(n) + b;
          if (v < 1 || !window.at(static_cast<u64>(v))) ok[n - n0] = 0;
        }
      }
    }
    for (u64 n = n0; n <= n1; ++n) {
      running += ok[n - n0];
      while (next < grid.size() && grid[next] == n) {
        counts.push_back(running);
        ++next;
      }
    }
  }
  return counts;
}

}  // namespace normsieve
