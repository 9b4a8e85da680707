#include <doctest.h>

#include <random>

#include "wmk/errors.hpp"
#include "wmk/symq.hpp"

using namespace wmk;
using symq::QPolynomial;
using symq::QRational;

namespace {

const QPolynomial q = QPolynomial::q();

QPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exp(-3, 5), num(-9, 9), den(1, 4);
  QPolynomial p;
  for (int i = terms(rng); i > 0; --i) p += QPolynomial::monomial(Rational(num(rng), den(rng)), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("display") {
  CHECK((q.pow(3) + 4 * q.pow(2) + 2 * q).to_string() == "q^3 + 4q^2 + 2q");
  CHECK((QPolynomial(Rational(3, 2)) * q - QPolynomial(Rational(3, 2))).to_string() == "(3/2)q - 3/2");
  CHECK(QPolynomial().to_string() == "0");
  CHECK((1 + QPolynomial::monomial(1, -1) + QPolynomial::monomial(2, -2)).to_string() == "1 + q^-1 + 2q^-2");
  CHECK((-q).to_string() == "-q");
}

TEST_CASE("degrees and evaluation") {
  const auto p = q.pow(3) + 6 * q.pow(2) + q;
  CHECK(p.degree() == 3);
  CHECK(p.low_degree() == 1);
  CHECK(p.eval(9) == 1224);
  CHECK(p.coefficient_sum() == 8);
  CHECK(QPolynomial::monomial(1, -2).eval(3) == Rational(1, 9));
  CHECK_FALSE(QPolynomial::monomial(1, -2).is_polynomial());
  CHECK_THROWS(QPolynomial().degree());
}

TEST_CASE("ring axioms on 1000 random instances") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + QPolynomial() == a);
    REQUIRE(a * QPolynomial(1) == a);
    REQUIRE((a - a).is_zero());
    REQUIRE((a * b).eval(5) == a.eval(5) * b.eval(5));
  }
}

TEST_CASE("division and gcd") {
  const auto a = (q - 1) * (q + 2) * (q * q + 1);
  const auto b = (q - 1) * (q + 5);
  const auto [quo, rem] = symq::divmod(a, b);
  CHECK(quo * b + rem == a);
  CHECK((rem.is_zero() || rem.degree() < b.degree()));
  CHECK(symq::gcd(a, b) == q - 1);
  CHECK(symq::gcd(2 * a, QPolynomial()) == a);
}

TEST_CASE("rational functions normalize idempotently") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto num = random_poly(rng), den = random_poly(rng);
    if (den.is_zero()) continue;
    QRational x(num, den);
    QRational y = x;
    y.normalize();
    CHECK(y == x);
    CHECK(y.numerator() == x.numerator());
    CHECK(y.denominator() == x.denominator());
    if (!y.denominator().is_zero()) CHECK(y.denominator().leading() == 1);
  }
  const QRational r((q - 1) * (q + 1), (q - 1) * q);
  // Powers of q move into the Laurent numerator.
  CHECK(r.as_polynomial() == 1 + QPolynomial::monomial(1, -1));
  CHECK(QRational((q * q - 1), (q - 1)).as_polynomial() == q + 1);
  CHECK_THROWS_AS(QRational(q, q + 1).as_polynomial(), NonPolynomialResult);
}

TEST_CASE("geometric sums") {
  // sum_{r>=0} (q-1) q^{1-r} = q^2
  CHECK(symq::sum_geometric(q - 1, 1, 1).as_polynomial() == q * q);
  CHECK_THROWS_AS(symq::sum_geometric(q, 0, 0), DivergentSeries);

  // Closed form vs 50-term partial sums with the explicit geometric tail bound.
  const QPolynomial coeff = 3 * (q - 1);
  for (int base : {0, 2}) {
    for (int ratio : {1, 2}) {
      const auto closed = symq::sum_geometric(coeff, base, ratio);
      for (long q0 : {3L, 9L, 27L}) {
        Rational partial;
        for (int r = 0; r < 50; ++r) partial += coeff.eval(q0) * rpow(q0, base - ratio * r);
        const Rational gap = closed.eval(q0) - partial;
        CHECK(gap >= 0);
        CHECK(gap <= coeff.eval(q0) * rpow(q0, base - 50 * ratio) * 2);
      }
    }
  }
}

TEST_CASE("assembly of series terms") {
  std::vector<symq::SeriesTerm> terms{{q - 1, 0, true, 1}, {QPolynomial(1), 3, false, 0}};
  CHECK(symq::assemble_terms(terms) == q.pow(3) + q);
  terms.push_back({QPolynomial(1), 0, true, 0});
  CHECK_THROWS_AS(symq::assemble_terms(terms), DivergentSeries);
  std::vector<symq::SeriesTerm> bad{{QPolynomial(1), 0, true, 1}};
  CHECK_THROWS_AS(symq::assemble_terms(bad), NonPolynomialResult);
}
