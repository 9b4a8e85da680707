#include <doctest.h>

#include "wmk/errors.hpp"
#include "wmk/json_io.hpp"

using namespace wmk;
using families::FamilyKind;
using json_io::Json;

namespace {

template <class T, class Parse>
void round_trip(const T& value, Parse parse) {
  const Json j = json_io::to_json(value);
  const Json reparsed = Json::parse(j.dump());
  CHECK(parse(reparsed) == value);
  CHECK(json_io::to_json(parse(reparsed)) == j);
}

}  // namespace

TEST_CASE("rationals are num/den strings") {
  CHECK(json_io::to_json(Rational(3, 2)) == "3/2");
  CHECK(json_io::to_json(Rational(-4)) == "-4");
  CHECK(json_io::rational_from_json("6/4") == Rational(3, 2));
  CHECK(json_io::rational_from_json(7) == 7);
  CHECK_THROWS_AS(json_io::rational_from_json(Json::array()), PreconditionError);
}

TEST_CASE("polynomials map exponents to coefficients") {
  const auto p = symq::QPolynomial::q().pow(3) + 4 * symq::QPolynomial::q() + symq::QPolynomial::monomial(Rational(1, 2), -1);
  const Json j = json_io::to_json(p);
  CHECK(j["coeffs"]["3"] == "1");
  CHECK(j["coeffs"]["-1"] == "1/2");
  round_trip(p, json_io::polynomial_from_json);
  CHECK_THROWS_AS(json_io::polynomial_from_json(Json::object()), PreconditionError);
}

TEST_CASE("strata round-trip") {
  for (auto [k, l] : std::vector<std::pair<FamilyKind, unsigned>>{
           {FamilyKind::CyclicL, 13}, {FamilyKind::CyclicLL, 5}, {FamilyKind::Sym2, 2}, {FamilyKind::SymLL, 7}})
    for (const auto& s : strata::enumerate_strata(k, l)) round_trip(s, json_io::stratum_from_json);
}

TEST_CASE("reports round-trip") {
  const auto rep = stringy::stringy_point_count(families::make_spec(FamilyKind::Sym2, 2, 2), stringy::Mode::Numeric,
                                                verify::Level::Fast);
  round_trip(rep, json_io::stringy_report_from_json);
  const Json j = json_io::to_json(rep);
  CHECK(j["numeric_value"] == "1224");
  CHECK(j["euler_characteristic"] == "8");
  CHECK(j["q"] == "9");

  round_trip(stringy::stringy_point_count(FamilyKind::CyclicL, 7), json_io::stringy_report_from_json);
  round_trip(stringy::mass_report(2, fq::build_field(2)), json_io::mass_report_from_json);
  round_trip(stringy::mass_report(5, nullptr), json_io::mass_report_from_json);

  const auto fam = families::build_family(families::make_spec(FamilyKind::CyclicL, 13, 3));
  round_trip(families::summarize(fam), json_io::group_summary_from_json);

  const auto t = stringy::truncated_sum(FamilyKind::Sym2, 2, 9, 5);
  const auto t2 = json_io::truncated_sum_from_json(Json::parse(json_io::to_json(t).dump()));
  CHECK(t2.partial == t.partial);
  CHECK(t2.tail_bound == t.tail_bound);
  CHECK(t2.exact == t.exact);

  const auto checks = verify::run_checks(families::make_spec(FamilyKind::CyclicLL, 2, 1), verify::Level::Fast);
  CHECK(json_io::checks_from_json(Json::parse(json_io::checks_to_json(checks).dump())) == checks);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(json_io::stringy_report_from_json(Json::parse(R"({"family": "sym-2"})")), PreconditionError);
  CHECK_THROWS_AS(json_io::stratum_from_json(Json::parse(R"({"family": "nope"})")), HypothesisError);
}
