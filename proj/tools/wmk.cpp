// wmk: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 hypothesis/input failure, 3 internal invariant failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "wmk/errors.hpp"
#include "wmk/families.hpp"
#include "wmk/json_io.hpp"
#include "wmk/strata.hpp"
#include "wmk/stringy.hpp"
#include "wmk/verify.hpp"

namespace {

using namespace wmk;
using families::FamilyKind;

struct Options {
  std::string family = "cyclic-l";
  unsigned l = 0;  // 0: default (2 for sym-2)
  std::optional<int> r;
  bool symbolic = false;
  std::optional<long> truncate;
  bool json = false;
  std::string level = "fast";
  unsigned n = 2;
};

FamilyKind kind_of(const Options& o) { return families::parse_kind(o.family); }

unsigned l_of(const Options& o) {
  if (o.l != 0) return o.l;
  if (kind_of(o) == FamilyKind::Sym2) return 2;
  throw PreconditionError("--l is required for " + o.family);
}

families::FamilySpec spec_of(const Options& o) {
  const FamilyKind kind = kind_of(o);
  const unsigned l = l_of(o);
  families::check_parameters(kind, l);
  const int r = o.r ? *o.r : families::smallest_degree(kind, l);
  if (r < 1) throw PreconditionError("--r must be >= 1");
  return families::make_spec(kind, l, r);
}

void print(const json_io::Json& j) { std::cout << j.dump(2) << '\n'; }

void print_checks(const std::vector<verify::Check>& checks) {
  for (const auto& c : checks) {
    const char* tag = c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL";
    std::cout << "  " << tag << "  " << c.name << "  expected " << c.expected << "  actual " << c.actual << '\n';
  }
}

int cmd_group(const Options& o) {
  const auto fam = families::build_family(spec_of(o));
  const auto g = families::summarize(fam);
  if (o.json) {
    print(json_io::to_json(g));
    return 0;
  }
  std::cout << "family " << families::to_string(g.kind) << "  l=" << g.l << "  q=3^" << g.r << '\n'
            << "order " << g.order << "\n"
            << "classes " << g.classes.size() << "\n"
            << "small " << (g.small ? "yes" : "no") << "\n"
            << "  elt-order  class-size  centralizer\n";
  for (const auto& c : g.classes)
    std::cout << "  " << c.element_order << "  " << c.class_size << "  " << c.centralizer_order << '\n';
  return 0;
}

int cmd_stringy(const Options& o) {
  const FamilyKind kind = kind_of(o);
  const unsigned l = l_of(o);
  stringy::StringyReport rep;
  std::optional<stringy::TruncatedSum> trunc;
  if (o.symbolic && !o.r) {
    rep = stringy::stringy_point_count(kind, l);
  } else {
    const auto spec = spec_of(o);
    const auto level = verify::parse_level(o.level);
    rep = stringy::stringy_point_count(spec, o.symbolic ? stringy::Mode::Symbolic : stringy::Mode::Numeric, level);
    if (o.truncate) trunc = stringy::truncated_sum(kind, l, Rational(spec.field->order()), *o.truncate);
  }
  if (o.truncate && !trunc) throw PreconditionError("--truncate needs a field (drop --symbolic or pass --r)");
  const bool ok = verify::all_pass(rep.verification) && (!trunc || trunc->within_bound());
  if (o.json) {
    auto j = json_io::to_json(rep);
    if (trunc) j["truncated_sum"] = json_io::to_json(*trunc);
    print(j);
    return ok ? 0 : 1;
  }
  std::cout << "family " << families::to_string(rep.family) << "  l=" << rep.l;
  if (rep.r) std::cout << "  q=" << ipow(3, static_cast<unsigned long>(rep.r)).get_str() << " (r=" << rep.r << ")";
  std::cout << "\npolynomial " << rep.polynomial.to_string() << '\n';
  if (rep.numeric_value) std::cout << "value " << to_string(*rep.numeric_value) << '\n';
  std::cout << "euler characteristic " << rep.euler_characteristic.get_str() << '\n';
  if (trunc) {
    std::cout << "truncated sum (J=" << *o.truncate << ") " << to_string(trunc->partial) << '\n'
              << "tail bound " << to_string(trunc->tail_bound) << '\n'
              << "exact - partial " << to_string(trunc->exact - trunc->partial) << '\n'
              << "within bound " << (trunc->within_bound() ? "yes" : "no") << '\n';
  }
  std::cout << "checks\n";
  print_checks(rep.verification);
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const auto checks = verify::run_checks(spec_of(o), verify::parse_level(o.level));
  const bool ok = verify::all_pass(checks);
  if (o.json) {
    print(json_io::Json{{"level", o.level}, {"all_pass", ok}, {"checks", json_io::checks_to_json(checks)}});
  } else {
    print_checks(checks);
    std::cout << (ok ? "all checks pass" : "verification FAILED") << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_euler(const Options& o) {
  const FamilyKind kind = kind_of(o);
  const unsigned l = l_of(o);
  if (o.r) spec_of(o);  // validates q against l when given
  const auto poly = stringy::stringy_point_count(kind, l).polynomial;
  const BigInt chi = stringy::euler_characteristic(poly);
  const BigInt closed = stringy::corollary_euler(kind, l);
  const bool ok = chi == closed;
  if (o.json) {
    print(json_io::Json{{"family", families::to_string(kind)},
                        {"l", l},
                        {"polynomial", json_io::to_json(poly)},
                        {"euler_characteristic", chi.get_str()},
                        {"closed_form", closed.get_str()},
                        {"match", ok}});
  } else {
    std::cout << chi.get_str() << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_mass(const Options& o) {
  fq::FieldPtr field;
  if (o.r) {
    if (*o.r < 1) throw PreconditionError("--r must be >= 1");
    field = fq::build_field(*o.r);
  }
  const auto rep = stringy::mass_report(o.n, field);
  if (o.json) {
    print(json_io::to_json(rep));
  } else {
    std::cout << "rhs " << rep.rhs.to_string() << '\n';
    if (rep.rhs_value) std::cout << "rhs value " << to_string(*rep.rhs_value) << '\n';
    if (rep.lhs_enumerated) std::cout << "lhs " << to_string(*rep.lhs_enumerated) << "  (weights " << rep.weighting << ")\n";
    if (rep.match) std::cout << "match " << (*rep.match ? "true" : "false") << '\n';
  }
  return rep.match.value_or(true) ? 0 : 1;
}

int cmd_strata(const Options& o) {
  const FamilyKind kind = kind_of(o);
  const unsigned l = l_of(o);
  const auto all = strata::enumerate_strata(kind, l);
  if (o.json) {
    json_io::Json arr = json_io::Json::array();
    for (const auto& s : all) arr.push_back(json_io::to_json(s));
    print(arr);
    return 0;
  }
  for (const auto& s : all) {
    std::cout << s.name() << "  v=" << to_string(s.v);
    if (s.v_slope) std::cout << "+" << s.v_slope << "r";
    std::cout << "  c=" << s.centralizer << "  count ";
    if (const auto* p = std::get_if<strata::ProgressionCount>(&s.count))
      std::cout << "(" << p->coeff.to_string() << ") q^(" << p->slope << "r+" << p->intercept << ")";
    else
      std::cout << s.count_at().to_string();
    std::cout << "  contribution " << strata::stratum_contribution(s).to_string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stringy point counts of A^3/G in characteristic 3"};
  app.require_subcommand(1);
  Options o;

  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "cyclic-l | cyclic-ll | sym-2 | sym-ll")->required();
    sub->add_option("--l", o.l, "prime l != 3 (defaults to 2 for sym-2)");
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

  auto* group = app.add_subcommand("group", "group order, classes, centralizers");
  family_opts(group);
  group->add_option("--r", o.r, "field degree, q = 3^r (default: smallest admissible)");
  json_flag(group);

  auto* st = app.add_subcommand("stringy", "stringy point count");
  family_opts(st);
  st->add_option("--r", o.r, "field degree, q = 3^r");
  st->add_flag("--symbolic", o.symbolic, "polynomial only");
  st->add_option("--truncate", o.truncate, "also sum progressions up to r <= J");
  st->add_option("--level", o.level, "verification level: none | fast | full");
  json_flag(st);

  auto* ver = app.add_subcommand("verify", "run the oracle suite");
  family_opts(ver);
  ver->add_option("--r", o.r, "field degree, q = 3^r");
  ver->add_option("--level", o.level, "fast | full");
  json_flag(ver);

  auto* eu = app.add_subcommand("euler", "Euler characteristic of a crepant resolution");
  family_opts(eu);
  eu->add_option("--r", o.r, "field degree (validated only)");
  json_flag(eu);

  auto* ma = app.add_subcommand("mass", "mass formula for etale algebras of degree n");
  ma->add_option("--n", o.n, "degree")->required();
  ma->add_option("--r", o.r, "field degree; enables the enumerated side for n = 2");
  json_flag(ma);

  auto* sa = app.add_subcommand("strata", "stratum table");
  family_opts(sa);
  json_flag(sa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group->parsed()) return cmd_group(o);
    if (st->parsed()) return cmd_stringy(o);
    if (ver->parsed()) return cmd_verify(o);
    if (eu->parsed()) return cmd_euler(o);
    if (ma->parsed()) return cmd_mass(o);
    if (sa->parsed()) return cmd_strata(o);
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
