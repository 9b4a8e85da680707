#include "wmk/families.hpp"

#include <vector>

#include "wmk/errors.hpp"

namespace wmk::families {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CyclicL: return "cyclic-l";
    case FamilyKind::CyclicLL: return "cyclic-ll";
    case FamilyKind::Sym2: return "sym-2";
    case FamilyKind::SymLL: return "sym-ll";
  }
  return "?";
}

FamilyKind parse_kind(std::string_view text) {
  if (text == "cyclic-l") return FamilyKind::CyclicL;
  if (text == "cyclic-ll") return FamilyKind::CyclicLL;
  if (text == "sym-2") return FamilyKind::Sym2;
  if (text == "sym-ll") return FamilyKind::SymLL;
  throw UnsupportedFamily("unknown family '" + std::string(text) + "'");
}

std::optional<unsigned> find_twist(unsigned l) {
  for (unsigned e = 2; e < l; ++e)
    if ((e * e + e + 1) % l == 0) return e;
  return std::nullopt;
}

unsigned required_modulus(FamilyKind kind, unsigned l) {
  return kind == FamilyKind::CyclicL || kind == FamilyKind::CyclicLL ? l : 2 * l;
}

std::size_t expected_order(FamilyKind kind, unsigned l) {
  switch (kind) {
    case FamilyKind::CyclicL: return 3 * l;
    case FamilyKind::CyclicLL: return 3 * l * l;
    case FamilyKind::Sym2: return 24;
    case FamilyKind::SymLL: return 6 * l * l;
  }
  return 0;
}

void check_parameters(FamilyKind kind, unsigned l) {
  if (kind == FamilyKind::Sym2 && l != 2) throw UnsupportedFamily("sym-2 requires l = 2");
  if (kind == FamilyKind::SymLL && l == 2)
    throw UnsupportedFamily("sym-ll requires l != 2 (use sym-2)");
  if (!fq::is_prime(l) || l == 3) throw UnsupportedFamily("l must be a prime different from 3");
  if (kind == FamilyKind::CyclicL && !find_twist(l))
    throw NoTwistError("no e with e^2+e+1 = 0 mod " + std::to_string(l) + " (requires l = 1 mod 3)");
}

int smallest_degree(FamilyKind kind, unsigned l) {
  return fq::degree_containing_roots(required_modulus(kind, l));
}

FamilySpec make_spec(FamilyKind kind, unsigned l, const fq::FieldPtr& field) {
  const unsigned mod = required_modulus(kind, l);
  if (fq::is_prime(l) && l != 3 && (field->order() - 1) % mod != 0) {
    throw DivisibilityError("q-1 not in " + std::string(mod == l ? "" : "2") + "l Z (q = " +
                            std::to_string(field->order()) + ", l = " + std::to_string(l) + ")");
  }
  check_parameters(kind, l);
  FamilySpec spec{kind, l, field, std::nullopt};
  if (kind == FamilyKind::CyclicL) spec.twist_e = find_twist(l);
  return spec;
}

FamilySpec make_spec(FamilyKind kind, unsigned l, int r) {
  if (r < 1 || r > fq::Field::kMaxDegree)
    throw PreconditionError("field degree r must lie in [1, " + std::to_string(fq::Field::kMaxDegree) + "]");
  return make_spec(kind, l, fq::build_field(r));
}

StandardMatrices standard_matrices(const fq::FieldPtr& field) {
  return {grp::GroupElem::from_ints(field, {0, 1, 0, 0, 0, 1, 1, 0, 0}),
          grp::GroupElem::from_ints(field, {0, 0, -1, 0, -1, 0, -1, 0, 0})};
}

grp::GroupElem Family::diag(long a, long b, long c) const {
  const fq::Field& F = *spec.field;
  const auto n = static_cast<long>(zeta.n);
  auto p = [&](long e) { return F.pow(zeta.zeta.code(), ((e % n) + n) % n); };
  return grp::GroupElem::diagonal(spec.field, p(a), p(b), p(c));
}

Family build_family(const FamilySpec& spec) {
  if (!spec.field) throw PreconditionError("family spec without a field");
  Family fam;
  fam.spec = spec;
  fam.zeta = fq::root_of_unity(spec.field, spec.l);
  if (fam.zeta.m != 1) throw DivisibilityError("l-th roots of unity are not in the base field");
  fam.std_mats = standard_matrices(spec.field);

  std::vector<grp::GroupElem> gens{fam.std_mats.S};
  const long l = spec.l;
  switch (spec.kind) {
    case FamilyKind::CyclicL: {
      if (!spec.twist_e) throw NoTwistError("cyclic-l family requires a twist exponent");
      const long e = *spec.twist_e;
      gens.push_back(fam.diag(1, e, (e * e) % l));
      break;
    }
    case FamilyKind::CyclicLL:
      gens.push_back(fam.diag(1, -1, 0));
      gens.push_back(fam.diag(0, 1, -1));
      break;
    case FamilyKind::Sym2:
    case FamilyKind::SymLL:
      gens.push_back(fam.std_mats.T);
      gens.push_back(fam.diag(1, -1, 0));
      gens.push_back(fam.diag(0, 1, -1));
      break;
  }
  fam.group = grp::generate_closure(spec.field, gens);
  if (!grp::is_small(fam.group)) throw SmallnessError("group contains a pseudo-reflection");
  if (fam.group.order() != expected_order(spec.kind, spec.l))
    throw InternalError("family closure has order " + std::to_string(fam.group.order()) + ", expected " +
                        std::to_string(expected_order(spec.kind, spec.l)));
  return fam;
}

GroupSummary summarize(const Family& fam) {
  GroupSummary out;
  out.kind = fam.spec.kind;
  out.l = fam.spec.l;
  out.r = fam.spec.field->degree();
  out.order = fam.group.order();
  out.small = grp::is_small(fam.group);
  for (const auto& cls : grp::conjugacy_classes(fam.group)) {
    const grp::GroupElem rep[1] = {cls.representative};
    const auto& e = cls.representative.entries();
    out.classes.push_back({cls.representative.order(), cls.size, grp::centralizer(fam.group, rep).order(),
                           std::vector<fq::Code>(e.begin(), e.end())});
  }
  return out;
}

}  // namespace wmk::families
