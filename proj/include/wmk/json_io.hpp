#pragma once

// JSON encoding of every report type. Rationals are "num/den" strings (plain
// "n" for integers), polynomials are {"coeffs": {"<exp>": "<rational>"}} with a
// display string that is ignored on input.

#include <json.hpp>

#include "wmk/families.hpp"
#include "wmk/rational.hpp"
#include "wmk/strata.hpp"
#include "wmk/stringy.hpp"
#include "wmk/symq.hpp"
#include "wmk/verify.hpp"

namespace wmk::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const symq::QPolynomial& p);
symq::QPolynomial polynomial_from_json(const Json& j);

Json to_json(const verify::Check& c);
verify::Check check_from_json(const Json& j);

Json to_json(const strata::Stratum& s);
strata::Stratum stratum_from_json(const Json& j);

Json to_json(const stringy::StringyReport& r);
stringy::StringyReport stringy_report_from_json(const Json& j);

Json to_json(const stringy::MassReport& r);
stringy::MassReport mass_report_from_json(const Json& j);

Json to_json(const stringy::TruncatedSum& t);
stringy::TruncatedSum truncated_sum_from_json(const Json& j);

Json to_json(const families::GroupSummary& g);
families::GroupSummary group_summary_from_json(const Json& j);

Json checks_to_json(const std::vector<verify::Check>& checks);
std::vector<verify::Check> checks_from_json(const Json& j);

}  // namespace wmk::json_io
