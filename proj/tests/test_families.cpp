#include <doctest.h>

#include "wmk/errors.hpp"
#include "wmk/families.hpp"

using namespace wmk;
using families::FamilyKind;

TEST_CASE("kind names round-trip") {
  for (auto k : {FamilyKind::CyclicL, FamilyKind::CyclicLL, FamilyKind::Sym2, FamilyKind::SymLL})
    CHECK(families::parse_kind(families::to_string(k)) == k);
  CHECK_THROWS_AS(families::parse_kind("dihedral"), UnsupportedFamily);
}

TEST_CASE("twists") {
  CHECK(families::find_twist(7) == 2u);
  CHECK(families::find_twist(13) == 3u);
  CHECK_FALSE(families::find_twist(5).has_value());
  CHECK_FALSE(families::find_twist(2).has_value());
}

TEST_CASE("hypothesis failures") {
  CHECK_THROWS_AS(families::make_spec(FamilyKind::CyclicL, 5, 4), NoTwistError);
  CHECK_THROWS_AS(families::make_spec(FamilyKind::SymLL, 5, 2), DivisibilityError);
  CHECK_THROWS_AS(families::make_spec(FamilyKind::CyclicL, 13, 1), DivisibilityError);
  CHECK_THROWS_AS(families::make_spec(FamilyKind::SymLL, 2, 2), UnsupportedFamily);
  CHECK_THROWS_AS(families::make_spec(FamilyKind::Sym2, 5, 4), UnsupportedFamily);
  CHECK_THROWS_AS(families::check_parameters(FamilyKind::CyclicLL, 3), UnsupportedFamily);
  CHECK_THROWS_AS(families::check_parameters(FamilyKind::CyclicLL, 9), UnsupportedFamily);
  CHECK_THROWS_AS(families::make_spec(FamilyKind::CyclicLL, 2, 0), PreconditionError);
}

TEST_CASE("divisibility messages name the hypothesis") {
  try {
    families::make_spec(FamilyKind::SymLL, 5, 2);
    FAIL("expected DivisibilityError");
  } catch (const DivisibilityError& e) {
    CHECK(std::string(e.what()).find("q-1 not in 2l Z") != std::string::npos);
  }
}

TEST_CASE("smallest admissible degree") {
  CHECK(families::smallest_degree(FamilyKind::CyclicL, 13) == 3);
  CHECK(families::smallest_degree(FamilyKind::CyclicL, 7) == 6);
  CHECK(families::smallest_degree(FamilyKind::CyclicLL, 2) == 1);
  CHECK(families::smallest_degree(FamilyKind::Sym2, 2) == 2);
  CHECK(families::smallest_degree(FamilyKind::SymLL, 5) == 4);
  CHECK(families::smallest_degree(FamilyKind::SymLL, 13) == 3);
}

TEST_CASE("expected orders match closures") {
  struct P {
    FamilyKind k;
    unsigned l;
    std::size_t order;
  };
  for (P p : {P{FamilyKind::CyclicL, 13, 39}, P{FamilyKind::CyclicLL, 5, 75}, P{FamilyKind::Sym2, 2, 24},
              P{FamilyKind::SymLL, 5, 150}, P{FamilyKind::SymLL, 7, 294}}) {
    CHECK(families::expected_order(p.k, p.l) == p.order);
    const auto f = families::build_family(families::make_spec(p.k, p.l, families::smallest_degree(p.k, p.l)));
    CHECK(f.group.order() == p.order);
  }
}

TEST_CASE("summary") {
  const auto f = families::build_family(families::make_spec(FamilyKind::CyclicL, 13, 3));
  const auto g = families::summarize(f);
  CHECK(g.order == 39);
  CHECK(g.classes.size() == 7);
  CHECK(g.small);
  std::size_t total = 0;
  for (const auto& row : g.classes) {
    total += row.class_size;
    CHECK(row.class_size * row.centralizer_order == 39);
    CHECK(row.representative.size() == 9);
  }
  CHECK(total == 39);
}
