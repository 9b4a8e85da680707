#pragma once

// Stratification of the G-etale K-algebras (K = F_q((t))) for the four
// supported families, and the weighted sum
//   sum_A q^{3 - v(A)} / #C_G(H_A)
// assembled stratum by stratum.

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wmk/families.hpp"
#include "wmk/rational.hpp"
#include "wmk/symq.hpp"

namespace wmk::strata {

enum class StratumLabel { S1 = 1, S2, S3, S4, S5, S6, S7, S8 };
std::string to_string(StratumLabel label);
StratumLabel parse_label(const std::string& text);

/// Finite sub-stratum indexed by its v-value m.
struct FixedIndex {
  unsigned m = 0;
  bool operator==(const FixedIndex&) const = default;
};

/// Infinite sub-stratum j = modulus * r + residue, r >= 0.
struct Progression {
  unsigned residue = 0;
  unsigned modulus = 1;
  bool operator==(const Progression&) const = default;
};

using Sublabel = std::variant<FixedIndex, Progression>;

struct ExactCount {
  symq::QPolynomial value;
  bool operator==(const ExactCount&) const = default;
};

/// count(r) = coeff(q) * q^{slope * r + intercept}.
struct ProgressionCount {
  symq::QPolynomial coeff;
  long slope = 0;
  long intercept = 0;
  bool operator==(const ProgressionCount&) const = default;
};

using Count = std::variant<ExactCount, ProgressionCount>;

struct Stratum {
  families::FamilyKind family = families::FamilyKind::CyclicL;
  unsigned l = 2;
  StratumLabel label = StratumLabel::S1;
  /// Distinguishes sub-families sharing a label: "unramified", "ramified",
  /// "prime"/"free" (S3 split by centralizer), "m0"/"m1" (S7).
  std::string part;
  Sublabel sublabel = FixedIndex{};
  /// v = v + v_slope * r on a progression, constant otherwise.
  Rational v = 0;
  long v_slope = 0;
  unsigned long centralizer = 1;
  Count count = ExactCount{};
  /// Always false here: every count is a plain count of algebras weighted by
  /// the true centralizer order.
  bool pre_weighted = false;

  bool is_progression() const { return std::holds_alternative<Progression>(sublabel); }
  Rational v_at(long r) const { return v + v_slope * r; }
  /// Count of the r-th member (r ignored for finite strata).
  symq::QPolynomial count_at(long r = 0) const;
  /// "S3/prime/m=1" or "S7/m1/j=6r+5".
  std::string name() const;

  bool operator==(const Stratum&) const = default;
};

/// Complete list of strata with nonzero count, in table order.
std::vector<Stratum> enumerate_strata(families::FamilyKind kind, unsigned l);
std::vector<Stratum> enumerate_strata(const families::FamilySpec& spec);

/// Contribution of one stratum as assembly terms (one term, or a geometric series).
symq::SeriesTerm stratum_term(const Stratum& s);

/// Exact contribution of a single stratum.
symq::QRational stratum_contribution(const Stratum& s);

/// Total weighted sum; throws DivergentSeries / NonPolynomialResult.
symq::QPolynomial assemble_stratum_sum(std::span<const Stratum> strata);

/// Sum of the v = 0 contributions.
symq::QPolynomial unramified_contribution(std::span<const Stratum> strata);

enum class InertiaKind { Trivial, C3AS, ClKummer, CllKummer, C2Kummer, C2l, S3Mixed, C22Kummer };
std::string to_string(InertiaKind kind);

/// Classifying data of one G-etale algebra, enough to evaluate v.
struct EtaleClassDescriptor {
  InertiaKind kind = InertiaKind::Trivial;
  long j = 0;           // C3AS, S3Mixed
  int m = 0;            // S3Mixed
  unsigned val = 0;     // C2l, ClKummer, C2Kummer: v_K of the Kummer radicand (0 = unramified)
  long r = 0;           // C2l
  grp::GroupElem h;     // ClKummer, C2Kummer: generator; CllKummer, C22Kummer: h2
  grp::GroupElem h1;    // CllKummer, C22Kummer
};

Rational descriptor_v(const EtaleClassDescriptor& d, unsigned l);

/// Up to `limit` descriptors lying in the stratum, built from the stratum's
/// defining parameters (not from its v-value).
std::vector<EtaleClassDescriptor> sample_descriptors(const Stratum& s, const families::Family& fam,
                                                     std::size_t limit = 100);

/// A subgroup H_A realizing the stratum inside the built group (its generators).
std::vector<grp::GroupElem> representative_subgroup(const Stratum& s, const families::Family& fam);

}  // namespace wmk::strata
