#include <doctest.h>

#include "wmk/errors.hpp"
#include "wmk/oracles.hpp"
#include "wmk/stringy.hpp"

using namespace wmk;
using families::FamilyKind;
using symq::QPolynomial;

namespace {
const QPolynomial q = QPolynomial::q();
}

TEST_CASE("assembly equals the closed forms") {
  for (unsigned l : {7u, 13u, 19u, 31u, 37u})
    CHECK(stringy::stringy_point_count(FamilyKind::CyclicL, l).polynomial == stringy::theorem_polynomial(FamilyKind::CyclicL, l));
  for (unsigned l : {2u, 5u, 7u, 11u, 13u, 17u})
    CHECK(stringy::stringy_point_count(FamilyKind::CyclicLL, l).polynomial == stringy::theorem_polynomial(FamilyKind::CyclicLL, l));
  for (unsigned l : {5u, 7u, 11u, 13u, 17u})
    CHECK(stringy::stringy_point_count(FamilyKind::SymLL, l).polynomial == stringy::theorem_polynomial(FamilyKind::SymLL, l));
  CHECK(stringy::stringy_point_count(FamilyKind::Sym2, 2).polynomial == q.pow(3) + 6 * q.pow(2) + q);
}

TEST_CASE("numeric values") {
  auto value = [](FamilyKind k, unsigned l, int r) {
    return *stringy::stringy_point_count(families::make_spec(k, l, r), stringy::Mode::Numeric, verify::Level::None)
                .numeric_value;
  };
  CHECK(value(FamilyKind::CyclicL, 13, 3) == 22653);
  CHECK(value(FamilyKind::CyclicLL, 2, 1) == 54);
  CHECK(value(FamilyKind::Sym2, 2, 2) == 1224);
  CHECK(value(FamilyKind::SymLL, 5, 4) == 597456);
}

TEST_CASE("report contents") {
  const auto rep =
      stringy::stringy_point_count(families::make_spec(FamilyKind::CyclicLL, 2, 1), stringy::Mode::Numeric, verify::Level::Fast);
  CHECK(rep.polynomial == q.pow(3) + 3 * q.pow(2));
  CHECK(rep.euler_characteristic == 4);
  CHECK(rep.r == 1);
  CHECK(verify::all_pass(rep.verification));
  const auto sym = stringy::stringy_point_count(families::make_spec(FamilyKind::SymLL, 5, 4), stringy::Mode::Symbolic,
                                                verify::Level::None);
  CHECK_FALSE(sym.numeric_value.has_value());
}

TEST_CASE("Euler characteristics") {
  CHECK(stringy::euler_characteristic(stringy::theorem_polynomial(FamilyKind::CyclicL, 13)) == 7);
  CHECK(stringy::euler_characteristic(stringy::theorem_polynomial(FamilyKind::CyclicLL, 2)) == 4);
  CHECK(stringy::euler_characteristic(stringy::theorem_polynomial(FamilyKind::CyclicLL, 5)) == 11);
  CHECK(stringy::euler_characteristic(stringy::theorem_polynomial(FamilyKind::Sym2, 2)) == 8);
  CHECK(stringy::euler_characteristic(stringy::theorem_polynomial(FamilyKind::SymLL, 5)) == 16);
  CHECK(stringy::euler_characteristic(q.pow(3)) == 1);
  for (unsigned l : {7u, 13u, 19u}) CHECK(stringy::corollary_euler(FamilyKind::CyclicL, l) == stringy::euler_characteristic(stringy::theorem_polynomial(FamilyKind::CyclicL, l)));
  for (unsigned l : {5u, 7u, 11u}) CHECK(stringy::corollary_euler(FamilyKind::SymLL, l) == stringy::euler_characteristic(stringy::theorem_polynomial(FamilyKind::SymLL, l)));
  CHECK_THROWS_AS(stringy::euler_characteristic(QPolynomial(Rational(3, 2)) * q), NonIntegerCoefficient);
}

TEST_CASE("zeta reconstruction") {
  CHECK(stringy::zeta_consistency(q.pow(3) + 4 * q.pow(2) + 2 * q));
  CHECK(stringy::zeta_consistency(q.pow(2) - 3 * q + 1));
  CHECK(stringy::zeta_consistency(QPolynomial(1), 3));
}

TEST_CASE("truncated sums") {
  struct P {
    FamilyKind k;
    unsigned l;
    long q0;
  };
  for (P p : {P{FamilyKind::CyclicL, 13, 27}, P{FamilyKind::CyclicLL, 2, 3}, P{FamilyKind::Sym2, 2, 9},
              P{FamilyKind::SymLL, 5, 81}}) {
    Rational previous = -1;
    for (long J = 0; J <= 8; ++J) {
      const auto t = stringy::truncated_sum(p.k, p.l, p.q0, J);
      CHECK(t.within_bound());
      CHECK(t.partial >= previous);
      previous = t.partial;
    }
    const auto t40 = stringy::truncated_sum(p.k, p.l, p.q0, 40);
    CHECK(t40.within_bound());
    CHECK(t40.tail_bound / t40.exact < Rational(1, 1'000'000'000));
  }
  const auto s = stringy::truncated_sum(FamilyKind::Sym2, 2, 9, 30);
  CHECK(s.exact == 1224);
  CHECK(s.within_bound());
  CHECK_THROWS_AS(stringy::truncated_sum(FamilyKind::Sym2, 2, 9, -1), PreconditionError);
}

TEST_CASE("partitions") {
  CHECK(stringy::partitions(4, 2) == 2);
  CHECK(stringy::partitions(5, 5) == 1);
  CHECK(stringy::partitions(3, 0) == 0);
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned j = 0; j <= n + 1; ++j) CHECK(stringy::partitions(n, j) == oracles::oracle_partitions(n, j));
}

TEST_CASE("mass formula") {
  const auto qi = [](int e) { return QPolynomial::monomial(1, -e); };
  CHECK(stringy::mass_rhs(2).rhs == 1 + qi(1));
  CHECK(stringy::mass_rhs(3).rhs == 1 + qi(1) + qi(2));
  CHECK(stringy::mass_rhs(4).rhs == 1 + qi(1) + 2 * qi(2) + qi(3));
  for (unsigned n = 1; n <= 8; ++n) CHECK(stringy::mass_rhs(n).rhs.coeffs().size() == n);
  CHECK(stringy::mass_lhs_quadratic(fq::build_field(1)) == Rational(4, 3));
  CHECK(stringy::mass_lhs_quadratic(fq::build_field(2)) == Rational(10, 9));
  CHECK(stringy::mass_lhs_quadratic(fq::build_field(3)) == Rational(28, 27));
  for (int r = 1; r <= 4; ++r) {
    const auto rep = stringy::mass_report(2, fq::build_field(r));
    CHECK(rep.match == true);
  }
  CHECK_FALSE(stringy::mass_report(3, fq::build_field(2)).match.has_value());
  CHECK_THROWS_AS(stringy::mass_rhs(0), PreconditionError);
}
