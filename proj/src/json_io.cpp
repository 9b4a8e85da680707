#include "wmk/json_io.hpp"

#include "wmk/errors.hpp"

namespace wmk::json_io {

namespace {

Json optional_rational(const std::optional<Rational>& x) { return x ? to_json(*x) : Json(nullptr); }

std::optional<Rational> optional_rational_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from_json(j);
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw PreconditionError("rational must be a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const symq::QPolynomial& p) {
  Json coeffs = Json::object();
  // Highest exponent first, matching the display string.
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) coeffs[std::to_string(it->first)] = to_json(it->second);
  return Json{{"coeffs", coeffs}, {"display", p.to_string()}};
}

symq::QPolynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    symq::QPolynomial::Coeffs c;
    for (const auto& [k, v] : j.at("coeffs").items()) c[std::stoi(k)] = rational_from_json(v);
    return symq::QPolynomial(std::move(c));
  });
}

Json to_json(const verify::Check& c) {
  return Json{{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}, {"expected", c.expected}, {"actual", c.actual}};
}

verify::Check check_from_json(const Json& j) {
  return guarded("check", [&] {
    verify::Check c;
    c.name = j.at("name").get<std::string>();
    c.pass = j.at("pass").get<bool>();
    c.skipped = j.value("skipped", false);
    c.expected = j.at("expected").get<std::string>();
    c.actual = j.at("actual").get<std::string>();
    return c;
  });
}

Json checks_to_json(const std::vector<verify::Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

std::vector<verify::Check> checks_from_json(const Json& j) {
  std::vector<verify::Check> out;
  for (const auto& c : j) out.push_back(check_from_json(c));
  return out;
}

Json to_json(const strata::Stratum& s) {
  Json j{{"name", s.name()},
         {"family", families::to_string(s.family)},
         {"l", s.l},
         {"label", strata::to_string(s.label)},
         {"part", s.part}};
  if (const auto* p = std::get_if<strata::Progression>(&s.sublabel))
    j["sublabel"] = Json{{"residue", p->residue}, {"modulus", p->modulus}};
  else
    j["sublabel"] = Json{{"m", std::get<strata::FixedIndex>(s.sublabel).m}};
  j["v"] = to_json(s.v);
  j["v_slope"] = s.v_slope;
  j["centralizer"] = s.centralizer;
  if (const auto* e = std::get_if<strata::ExactCount>(&s.count)) {
    j["count"] = Json{{"exact", to_json(e->value)}};
  } else {
    const auto& p = std::get<strata::ProgressionCount>(s.count);
    j["count"] = Json{{"coeff", to_json(p.coeff)}, {"slope", p.slope}, {"intercept", p.intercept}};
  }
  j["pre_weighted"] = s.pre_weighted;
  return j;
}

strata::Stratum stratum_from_json(const Json& j) {
  return guarded("stratum", [&] {
    strata::Stratum s;
    s.family = families::parse_kind(j.at("family").get<std::string>());
    s.l = j.at("l").get<unsigned>();
    s.label = strata::parse_label(j.at("label").get<std::string>());
    s.part = j.at("part").get<std::string>();
    const auto& sub = j.at("sublabel");
    if (sub.contains("modulus"))
      s.sublabel = strata::Progression{sub.at("residue").get<unsigned>(), sub.at("modulus").get<unsigned>()};
    else
      s.sublabel = strata::FixedIndex{sub.at("m").get<unsigned>()};
    s.v = rational_from_json(j.at("v"));
    s.v_slope = j.at("v_slope").get<long>();
    s.centralizer = j.at("centralizer").get<unsigned long>();
    const auto& c = j.at("count");
    if (c.contains("exact"))
      s.count = strata::ExactCount{polynomial_from_json(c.at("exact"))};
    else
      s.count = strata::ProgressionCount{polynomial_from_json(c.at("coeff")), c.at("slope").get<long>(),
                                         c.at("intercept").get<long>()};
    s.pre_weighted = j.at("pre_weighted").get<bool>();
    return s;
  });
}

Json to_json(const stringy::StringyReport& r) {
  Json j{{"family", families::to_string(r.family)}, {"l", r.l}};
  j["r"] = r.r == 0 ? Json(nullptr) : Json(r.r);
  j["q"] = r.r == 0 ? Json(nullptr) : Json(to_string(ipow(3, static_cast<unsigned long>(r.r))));
  j["polynomial"] = to_json(r.polynomial);
  j["numeric_value"] = optional_rational(r.numeric_value);
  j["euler_characteristic"] = to_string(r.euler_characteristic);
  j["verification"] = checks_to_json(r.verification);
  return j;
}

stringy::StringyReport stringy_report_from_json(const Json& j) {
  return guarded("stringy report", [&] {
    stringy::StringyReport r;
    r.family = families::parse_kind(j.at("family").get<std::string>());
    r.l = j.at("l").get<unsigned>();
    r.r = j.at("r").is_null() ? 0 : j.at("r").get<int>();
    r.polynomial = polynomial_from_json(j.at("polynomial"));
    r.numeric_value = optional_rational_from(j.at("numeric_value"));
    r.euler_characteristic = BigInt(j.at("euler_characteristic").get<std::string>());
    r.verification = checks_from_json(j.at("verification"));
    return r;
  });
}

Json to_json(const stringy::MassReport& r) {
  Json j{{"n", r.n}, {"rhs", to_json(r.rhs)}};
  j["lhs_enumerated"] = optional_rational(r.lhs_enumerated);
  j["rhs_value"] = optional_rational(r.rhs_value);
  j["match"] = r.match ? Json(*r.match) : Json(nullptr);
  j["weighting"] = r.weighting;
  return j;
}

stringy::MassReport mass_report_from_json(const Json& j) {
  return guarded("mass report", [&] {
    stringy::MassReport r;
    r.n = j.at("n").get<unsigned>();
    r.rhs = polynomial_from_json(j.at("rhs"));
    r.lhs_enumerated = optional_rational_from(j.at("lhs_enumerated"));
    r.rhs_value = optional_rational_from(j.at("rhs_value"));
    if (!j.at("match").is_null()) r.match = j.at("match").get<bool>();
    r.weighting = j.at("weighting").get<std::string>();
    return r;
  });
}

Json to_json(const stringy::TruncatedSum& t) {
  return Json{{"partial", to_json(t.partial)},
              {"tail_bound", to_json(t.tail_bound)},
              {"exact", to_json(t.exact)},
              {"within_bound", t.within_bound()}};
}

stringy::TruncatedSum truncated_sum_from_json(const Json& j) {
  return guarded("truncated sum", [&] {
    stringy::TruncatedSum t;
    t.partial = rational_from_json(j.at("partial"));
    t.tail_bound = rational_from_json(j.at("tail_bound"));
    t.exact = rational_from_json(j.at("exact"));
    return t;
  });
}

Json to_json(const families::GroupSummary& g) {
  Json rows = Json::array();
  for (const auto& c : g.classes)
    rows.push_back(Json{{"element_order", c.element_order},
                        {"class_size", c.class_size},
                        {"centralizer_order", c.centralizer_order},
                        {"representative", c.representative}});
  return Json{{"family", families::to_string(g.kind)},
              {"l", g.l},
              {"r", g.r},
              {"q", to_string(ipow(3, static_cast<unsigned long>(g.r)))},
              {"order", g.order},
              {"class_count", g.classes.size()},
              {"small", g.small},
              {"classes", rows}};
}

families::GroupSummary group_summary_from_json(const Json& j) {
  return guarded("group summary", [&] {
    families::GroupSummary g;
    g.kind = families::parse_kind(j.at("family").get<std::string>());
    g.l = j.at("l").get<unsigned>();
    g.r = j.at("r").get<int>();
    g.order = j.at("order").get<std::size_t>();
    g.small = j.at("small").get<bool>();
    for (const auto& row : j.at("classes"))
      g.classes.push_back({row.at("element_order").get<std::size_t>(), row.at("class_size").get<std::size_t>(),
                           row.at("centralizer_order").get<std::size_t>(),
                           row.at("representative").get<std::vector<fq::Code>>()});
    return g;
  });
}

}  // namespace wmk::json_io
