#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmk/fq.hpp"
#include "wmk/grp.hpp"

namespace wmk::families {

enum class FamilyKind {
  CyclicL,   // C_l x| C_3
  CyclicLL,  // C_l^2 x| C_3
  Sym2,      // C_2^2 x| S_3
  SymLL,     // C_l^2 x| S_3, l != 2
};

/// "cyclic-l", "cyclic-ll", "sym-2", "sym-ll".
std::string to_string(FamilyKind kind);
FamilyKind parse_kind(std::string_view text);

struct FamilySpec {
  FamilyKind kind = FamilyKind::CyclicL;
  unsigned l = 2;
  fq::FieldPtr field;
  std::optional<unsigned> twist_e;  // CyclicL only
};

/// Validates the hypotheses (l prime and != 3, q = 1 mod l or 2l, twist
/// existence) and fills in the twist. Throws the matching HypothesisError.
FamilySpec make_spec(FamilyKind kind, unsigned l, int r);
FamilySpec make_spec(FamilyKind kind, unsigned l, const fq::FieldPtr& field);

/// Hypotheses on (kind, l) alone, independent of q.
void check_parameters(FamilyKind kind, unsigned l);

/// Smallest e in [2, l) with e^2 + e + 1 = 0 mod l.
std::optional<unsigned> find_twist(unsigned l);

/// Required divisor of q - 1: l for the cyclic kinds, 2l for the symmetric ones.
unsigned required_modulus(FamilyKind kind, unsigned l);

/// Smallest r with q = 3^r satisfying the divisibility hypothesis.
int smallest_degree(FamilyKind kind, unsigned l);

std::size_t expected_order(FamilyKind kind, unsigned l);

struct StandardMatrices {
  grp::GroupElem S;  // cyclic permutation
  grp::GroupElem T;  // signed transposition
};
StandardMatrices standard_matrices(const fq::FieldPtr& field);

struct Family {
  FamilySpec spec;
  grp::MatrixGroup group;
  fq::RootOfUnity zeta;  // primitive l-th root in the base field
  StandardMatrices std_mats;

  /// diag(zeta^a, zeta^b, zeta^c).
  grp::GroupElem diag(long a, long b, long c) const;
};

/// Closure of the family generators; asserts smallness and the expected order.
Family build_family(const FamilySpec& spec);

struct ClassRow {
  std::size_t element_order = 1;
  std::size_t class_size = 1;
  std::size_t centralizer_order = 1;
  std::vector<fq::Code> representative;  // row-major field codes
  bool operator==(const ClassRow&) const = default;
};

struct GroupSummary {
  FamilyKind kind = FamilyKind::CyclicL;
  unsigned l = 2;
  int r = 1;
  std::size_t order = 0;
  bool small = false;
  std::vector<ClassRow> classes;  // in conjugacy_classes order
  bool operator==(const GroupSummary&) const = default;
};

GroupSummary summarize(const Family& fam);

}  // namespace wmk::families
