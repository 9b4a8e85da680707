#include <doctest.h>

#include "wmk/errors.hpp"
#include "wmk/families.hpp"
#include "wmk/vfun.hpp"

using namespace wmk;

TEST_CASE("cubic Artin-Schreier rule") {
  CHECK(vfun::v_c3(0) == 0);
  CHECK(vfun::v_c3(1) == 2);
  CHECK(vfun::v_c3(2) == 3);
  CHECK(vfun::v_c3(4) == 5);
  CHECK(vfun::v_c3(7) == 8);
  CHECK_THROWS_AS(vfun::v_c3(3), PreconditionError);
  CHECK_THROWS_AS(vfun::v_c3(-1), PreconditionError);
}

TEST_CASE("cyclic order 2l rule") {
  CHECK(vfun::v_c2l(5, 5, 1) == 1);
  CHECK(vfun::v_c2l(5, 1, 1) == 2);
  CHECK(vfun::v_c2l(5, 1, 2) == 2);
  CHECK(vfun::v_c2l(5, 2, 3) == 1);
  CHECK(vfun::v_c2l(5, 1, 4) == 1);
  CHECK(vfun::v_c2l(2, 1, 1) == 1);
  CHECK_THROWS_AS(vfun::v_c2l(5, 3, 1), PreconditionError);
  CHECK_THROWS_AS(vfun::v_c2l(5, 1, 5), PreconditionError);
}

TEST_CASE("S_3 rule") {
  CHECK(vfun::v_s3(0, 1) == 2);
  CHECK(vfun::v_s3(0, 2) == 3);
  CHECK(vfun::v_s3(0, 4) == 5);
  CHECK(vfun::v_s3(0, 5) == 6);
  CHECK(vfun::v_s3(1, 1) == 2);
  CHECK(vfun::v_s3(1, 5) == 4);
  CHECK(vfun::v_s3(1, 7) == 5);
  CHECK(vfun::v_s3(1, 11) == 7);
  CHECK_THROWS_AS(vfun::v_s3(0, 3), PreconditionError);
  CHECK_THROWS_AS(vfun::v_s3(1, 3), PreconditionError);
  CHECK_THROWS_AS(vfun::v_s3(2, 1), PreconditionError);
  // v is affine along each residue class: +3 per step of 3 (m = 0) or 6 (m = 1).
  for (long j = 1; j < 60; ++j)
    if (j % 3 != 0) CHECK(vfun::v_s3(0, j + 3) - vfun::v_s3(0, j) == 3);
  for (long j = 1; j < 60; j += 2)
    if (j % 3 != 0) CHECK(vfun::v_s3(1, j + 6) - vfun::v_s3(1, j) == 3);
}

TEST_CASE("tame rule is the age") {
  const auto f = families::build_family(families::make_spec(families::FamilyKind::SymLL, 5, 4));
  for (const auto& g : f.group.elements())
    if (g.order() % 3 != 0) CHECK(vfun::v_tame(g) == grp::age(g));
}

TEST_CASE("Vandermonde determinant is a constant unit mod 3") {
  const auto v = vfun::vandermonde_unit_check();
  CHECK(v.ok);
  CHECK(v.determinant == symq::QPolynomial(-2));
  CHECK(v.determinant_mod3 == 1);
}
