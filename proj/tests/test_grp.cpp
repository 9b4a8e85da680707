#include <doctest.h>

#include "wmk/errors.hpp"
#include "wmk/families.hpp"
#include "wmk/grp.hpp"

using namespace wmk;
using families::FamilyKind;

namespace {
families::Family fam(FamilyKind k, unsigned l, int r) { return families::build_family(families::make_spec(k, l, r)); }
}  // namespace

TEST_CASE("matrix basics") {
  const auto F = fq::build_field(2);
  const auto std_mats = families::standard_matrices(F);
  CHECK(std_mats.S.order() == 3);
  CHECK(std_mats.T.order() == 2);
  CHECK(std_mats.S.determinant() == 1);
  CHECK(std_mats.T.determinant() == 1);
  CHECK((std_mats.S * std_mats.S.inverse()).is_identity());
  CHECK(std_mats.S.fixed_space_dimension() == 1);
  CHECK(std_mats.S.pow(3).is_identity());
  CHECK(grp::GroupElem::identity(F).fixed_space_dimension() == 3);
}

TEST_CASE("group orders and classes") {
  const auto a = fam(FamilyKind::CyclicL, 13, 3);
  CHECK(a.group.order() == 39);
  CHECK(grp::conjugacy_classes(a.group).size() == 7);
  const auto b = fam(FamilyKind::Sym2, 2, 2);
  CHECK(b.group.order() == 24);
  CHECK(grp::conjugacy_classes(b.group).size() == 5);
  const auto c = fam(FamilyKind::SymLL, 5, 4);
  CHECK(c.group.order() == 150);
  CHECK(grp::is_small(c.group));
  const auto d = fam(FamilyKind::CyclicLL, 2, 1);
  CHECK(d.group.order() == 12);
}

TEST_CASE("orbit-stabilizer for every family group with |G| <= 200") {
  struct P {
    FamilyKind k;
    unsigned l;
    int r;
  };
  for (P p : {P{FamilyKind::CyclicL, 7, 6}, P{FamilyKind::CyclicL, 13, 3}, P{FamilyKind::CyclicLL, 2, 1},
              P{FamilyKind::CyclicLL, 5, 4}, P{FamilyKind::CyclicLL, 7, 6}, P{FamilyKind::Sym2, 2, 2},
              P{FamilyKind::SymLL, 5, 4}}) {
    const auto f = fam(p.k, p.l, p.r);
    REQUIRE(f.group.order() <= 200);
    std::size_t total = 0;
    for (const auto& cls : grp::conjugacy_classes(f.group)) {
      const grp::GroupElem rep[1] = {cls.representative};
      CHECK(cls.size * grp::centralizer(f.group, rep).order() == f.group.order());
      total += cls.size;
    }
    CHECK(total == f.group.order());
  }
}

TEST_CASE("every element has an inverse in the group") {
  const auto f = fam(FamilyKind::Sym2, 2, 2);
  for (const auto& g : f.group.elements()) {
    CHECK(f.group.contains(g.inverse()));
    CHECK((g * g.inverse()).is_identity());
  }
}

TEST_CASE("centralizer and normalizer of trivial pieces") {
  const auto f = fam(FamilyKind::SymLL, 5, 4);
  CHECK(grp::centralizer(f.group, {}).order() == f.group.order());
  const auto& els = f.group.elements();
  std::vector<grp::GroupElem> all(els.begin(), els.end());
  CHECK(grp::normalizer(f.group, all).order() == f.group.order());
  // The S_3 inside has trivial centralizer.
  const grp::GroupElem st[2] = {f.std_mats.S, f.std_mats.T};
  CHECK(grp::centralizer(f.group, st).order() == 1);
}

TEST_CASE("age") {
  const auto f = fam(FamilyKind::SymLL, 5, 4);
  CHECK(grp::age(grp::GroupElem::identity(f.spec.field)) == 0);
  CHECK(grp::age(f.diag(1, -2, 1)) == 1);
  CHECK(grp::age(f.std_mats.T) == 1);
  CHECK_THROWS_AS(grp::age(f.std_mats.S), WildElementError);
  // age(g) + age(g^-1) = number of eigenvalues != 1
  for (const auto& g : f.group.elements()) {
    if (g.order() % 3 == 0) continue;
    CHECK(grp::age(g) + grp::age(g.inverse()) == 3 - g.fixed_space_dimension());
  }
}

TEST_CASE("generate_closure rejects determinant != 1") {
  const auto F = fq::build_field(2);
  const grp::GroupElem g[1] = {grp::GroupElem::diagonal(F, F->generator(), 1, 1)};
  CHECK_THROWS(grp::generate_closure(F, g));
}
