#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmk/families.hpp"
#include "wmk/rational.hpp"
#include "wmk/strata.hpp"
#include "wmk/symq.hpp"
#include "wmk/verify.hpp"

namespace wmk::stringy {

enum class Mode { Symbolic, Numeric };

struct StringyReport {
  families::FamilyKind family = families::FamilyKind::CyclicL;
  unsigned l = 2;
  int r = 0;  // 0 when no field was fixed
  symq::QPolynomial polynomial;
  std::optional<Rational> numeric_value;
  BigInt euler_characteristic;
  std::vector<verify::Check> verification;
  bool operator==(const StringyReport&) const = default;
};

/// Closed forms of the stringy point count (independent of the stratum tables).
symq::QPolynomial theorem_polynomial(families::FamilyKind kind, unsigned l);
/// Closed-form Euler characteristic of a crepant resolution.
BigInt corollary_euler(families::FamilyKind kind, unsigned l);

/// Symbolic assembly only; needs no field. Carries the structural checks.
StringyReport stringy_point_count(families::FamilyKind kind, unsigned l);
/// Assembly for a validated spec; Numeric also evaluates at q = |field|.
/// The verification list holds the structural checks plus the oracle suite at `level`.
StringyReport stringy_point_count(const families::FamilySpec& spec, Mode mode,
                                  verify::Level level = verify::Level::Fast);

struct TruncatedSum {
  Rational partial;     // finite strata + progression members r <= J
  Rational tail_bound;  // exact geometric tail over r > J, summed over progressions
  Rational exact;       // polynomial value at q0
  bool within_bound() const;
};

/// Partial sum at q0 with progressions truncated at r <= J.
TruncatedSum truncated_sum(families::FamilyKind kind, unsigned l, const Rational& q0, long J);

/// Sum of coefficients of a point-count polynomial; cross-checked against the
/// zeta function prod (1 - q^i t)^{-a_i} through order t^6. Throws
/// NonIntegerCoefficient (or InternalError when the zeta check fails).
BigInt euler_characteristic(const symq::QPolynomial& poly);

/// Formal check: d/dt log prod_i (1 - q^i t)^{-a_i} = sum_m N(q^m) t^{m-1}
/// through t^{order-1}, where N is the point-count polynomial.
bool zeta_consistency(const symq::QPolynomial& poly, int order = 6);

/// Partitions of n into exactly j positive parts.
BigInt partitions(unsigned n, unsigned j);

struct MassReport {
  unsigned n = 1;
  symq::QPolynomial rhs;  // exponents 0, -1, ..., -(n-1)
  std::optional<Rational> lhs_enumerated;
  std::optional<Rational> rhs_value;
  std::optional<bool> match;
  std::string weighting = "1/#Aut";
  bool operator==(const MassReport&) const = default;
};

/// sum_{m=0}^{n-1} P(n, n-m) q^{-m}.
MassReport mass_rhs(unsigned n);

/// Automorphism-weighted count of quadratic etale algebras over F_q((t)),
/// weighted by q^{-discriminant exponent}, from an enumeration of square classes.
Rational mass_lhs_quadratic(const fq::FieldPtr& field);

/// mass_rhs(n), plus the enumerated left side when n = 2 and a field is given.
MassReport mass_report(unsigned n, const fq::FieldPtr& field);

}  // namespace wmk::stringy
