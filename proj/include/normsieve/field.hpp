#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normsieve {

enum class FieldKind { quadratic, cyclotomic };

// A normal number field whose prime decomposition law is an explicit
// congruence condition: Q(sqrt d) for squarefree d, or Q(zeta_m) with
// m >= 3, m != 2 mod 4.
class FieldSpec {
 public:
  static FieldSpec quadratic(std::int64_t d);
  static FieldSpec cyclotomic(std::int64_t m);

  FieldKind kind() const { return kind_; }
  // d for quadratic fields, m for cyclotomic ones.
  std::int64_t parameter() const { return parameter_; }
  int degree() const { return degree_; }
  // Field discriminant D (d or 4d) for quadratic fields; 0 for cyclotomic.
  std::int64_t quadratic_discriminant() const { return discriminant_; }
  // Primes dividing disc(K), increasing.
  const std::vector<std::uint64_t>& discriminant_support() const { return support_; }
  const std::string& label() const { return label_; }

  bool is_ramified(std::uint64_t p) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_;
  }

 private:
  FieldSpec() = default;

  FieldKind kind_ = FieldKind::quadratic;
  std::int64_t parameter_ = 0;
  int degree_ = 0;
  std::int64_t discriminant_ = 0;
  std::vector<std::uint64_t> support_;
  std::string label_;
};

// How the rational prime p factors in K: (p) = (P_1 ... P_g)^e, N(P_i) = p^f.
struct PrimeSplit {
  std::uint64_t p;
  int f;  // residue degree
  int e;  // ramification index
  int g;  // number of primes above p
  bool ramified;

  friend bool operator==(const PrimeSplit&, const PrimeSplit&) = default;
};

// Accepts "quadratic:<d>" and "cyclotomic:<m>".
FieldSpec parse_field(std::string_view text);

// Kronecker symbol (a|n), including the conventions at n = 2, n = -1 and n = 0.
int kronecker(std::int64_t a, std::int64_t n);

// Requires p prime (checked).
PrimeSplit residue_degree(const FieldSpec& field, std::uint64_t p);

// Decomposition class r with p in Pi_r, or nothing when p divides disc(K).
std::optional<int> pi_class(const FieldSpec& field, std::uint64_t p);

// Residue degrees by residue class, for hot loops over many primes. The
// degree of an unramified prime depends only on p mod |D| (quadratic) or
// p mod m (cyclotomic); small periods are tabulated up front.
class ResidueDegreeTable {
 public:
  explicit ResidueDegreeTable(const FieldSpec& field);

  // p must be prime; not checked.
  int degree(std::uint64_t p) const;

 private:
  FieldSpec field_;
  std::uint64_t period_;
  std::vector<std::uint32_t> table_;  // 0 marks residues sharing a factor with the period
};

}  // namespace normsieve
