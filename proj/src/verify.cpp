#include "wmk/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "wmk/errors.hpp"
#include "wmk/grp.hpp"
#include "wmk/oracles.hpp"
#include "wmk/strata.hpp"
#include "wmk/stringy.hpp"
#include "wmk/vfun.hpp"

namespace wmk::verify {

using families::FamilyKind;
using strata::Stratum;
using strata::StratumLabel;

std::string to_string(Level level) {
  switch (level) {
    case Level::None: return "none";
    case Level::Fast: return "fast";
    case Level::Full: return "full";
  }
  return "?";
}

Level parse_level(const std::string& text) {
  if (text == "none") return Level::None;
  if (text == "fast") return Level::Fast;
  if (text == "full") return Level::Full;
  throw PreconditionError("unknown verification level '" + text + "' (none, fast, full)");
}

std::uint64_t enumeration_budget(Level level) {
  switch (level) {
    case Level::None: return 0;
    case Level::Fast: return 1'000'000;
    case Level::Full: return 10'000'000;
  }
  return 0;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || c.skipped; });
}

namespace {

template <class K, class V>
std::string render(const std::map<K, V>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string render(const oracles::Tally& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [key, v] : t) {
    os << (first ? "" : ", ") << "(v=" << key.first << ",c=" << key.second << "):" << v;
    first = false;
  }
  os << '}';
  return os.str();
}

template <class T>
Check compare(std::string name, const T& expected, const T& actual) {
  Check c;
  c.name = std::move(name);
  c.pass = expected == actual;
  c.expected = render(expected);
  c.actual = render(actual);
  return c;
}

Check skipped(std::string name, const std::string& why) {
  Check c;
  c.name = std::move(name);
  c.skipped = true;
  c.expected = "-";
  c.actual = "skipped: " + why;
  return c;
}

Check boolean(std::string name, bool ok, std::string expected, std::string actual) {
  return Check{std::move(name), ok, false, std::move(expected), std::move(actual)};
}

long to_long(const Rational& x) {
  if (!is_integer(x)) throw InternalError("non-integral v-value " + wmk::to_string(x));
  return x.get_num().get_si();
}

/// Stratum-table prediction of an oracle tally: members with j <= j_max.
oracles::Tally table_tally(const std::vector<Stratum>& all, const std::function<bool(const Stratum&)>& pick,
                           const Rational& q, unsigned j_max) {
  oracles::Tally t;
  for (const auto& s : all) {
    if (!pick(s)) continue;
    if (!s.is_progression()) {
      const Rational c = s.count_at().eval(q);
      t[{to_long(s.v), s.centralizer}] += c.get_num();
      continue;
    }
    const auto p = std::get<strata::Progression>(s.sublabel);
    for (long r = 0; p.modulus * r + p.residue <= j_max; ++r)
      t[{to_long(s.v_at(r)), s.centralizer}] += s.count_at(r).eval(q).get_num();
  }
  // Drop zero entries so absent and zero compare equal.
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

std::function<bool(const Stratum&)> with_label(StratumLabel label, std::string part = "") {
  return [label, part](const Stratum& s) { return s.label == label && (part.empty() || s.part == part); };
}

/// Largest j in [1, start] with size(j) <= budget.
std::optional<unsigned> fit(unsigned start, std::uint64_t budget, const std::function<BigInt(unsigned)>& size) {
  for (unsigned j = start; j >= 1; --j)
    if (size(j) <= BigInt(static_cast<unsigned long>(budget))) return j;
  return std::nullopt;
}

std::map<long, std::uint64_t> expected_age_tally(unsigned l) {
  std::map<long, std::uint64_t> m{{0, 1}};
  const std::uint64_t v1 = (l - 1) * (l + 4) / 2, v2 = (l - 1) * (l - 2) / 2;
  if (v1) m[1] = v1;
  if (v2) m[2] = v2;
  return m;
}

void age_checks(unsigned l, std::uint64_t budget, std::vector<Check>& out) {
  using oracles::AgeTallyMode;
  const auto base = oracles::oracle_age_tallies(l, AgeTallyMode::Elements);
  out.push_back(compare("age-tallies", expected_age_tally(l), base));

  std::map<long, std::uint64_t> differing;
  for (unsigned k = 2; k < l; ++k)
    if (oracles::oracle_age_tallies(l, AgeTallyMode::Elements, k) != base) differing[k] = 1;
  out.push_back(boolean("age-root-invariance", differing.empty(), "same tally for every primitive root",
                        differing.empty() ? "same tally for every primitive root"
                                          : "differs for k in " + render(differing)));

  const std::uint64_t l2 = static_cast<std::uint64_t>(l) * l;
  if (l2 * l2 > budget) {
    out.push_back(skipped("generator-pair-tallies", std::to_string(l2 * l2) + " pairs"));
    return;
  }
  std::map<long, std::uint64_t> expected;
  for (const auto& [v, c] : expected_age_tally(l))
    if (v > 0) expected[v] = c * (l2 - l);
  out.push_back(compare("generator-pair-tallies", expected, oracles::oracle_age_tallies(l, AgeTallyMode::GeneratorPairs)));
}

void artin_schreier_checks(const fq::FieldPtr& field, std::uint64_t budget, std::vector<Check>& out) {
  const BigInt q(static_cast<unsigned long>(field->order()));
  const auto j_max = fit(7, budget, [&](unsigned j) { return oracles::artin_schreier_enumeration_size(field, j); });
  if (!j_max) {
    out.push_back(skipped("artin-schreier-counts", "3q exceeds the budget"));
  } else {
    std::map<unsigned, BigInt> expected{{0, 2}};
    for (unsigned j : oracles::admissible_conductors(*j_max))
      expected[j + 1] = 3 * (q - 1) * ipow(q, j - j / 3 - 1);
    out.push_back(compare("artin-schreier-counts", expected, oracles::oracle_artin_schreier_counts(field, *j_max, budget)));
  }
  // The reduction visits every polar part c_0 + ... + c_J t^{-J}: q^{J+1} items.
  const auto J = fit(6, budget, [&](unsigned j) { return ipow(q, j + 1); });
  if (!J) {
    out.push_back(skipped("artin-schreier-reduction", "q^2 exceeds the budget"));
    return;
  }
  const auto rc = oracles::oracle_as_reduction(field, *J, budget);
  std::ostringstream exp, act;
  exp << "image " << rc.expected_image_size << ", uniform fibers";
  act << "image " << rc.image_size << (rc.uniform_fibers ? ", uniform fibers" : ", non-uniform fibers");
  out.push_back(boolean("artin-schreier-reduction", rc.ok(), exp.str(), act.str()));
}

void structural_group_checks(const families::Family& fam, const std::vector<Stratum>& all, std::vector<Check>& out) {
  // Orbit-stabilizer on every class.
  const auto classes = grp::conjugacy_classes(fam.group);
  std::size_t total = 0;
  std::map<std::size_t, std::size_t> bad;
  for (const auto& cls : classes) {
    total += cls.size;
    const grp::GroupElem rep[1] = {cls.representative};
    const std::size_t c = grp::centralizer(fam.group, rep).order();
    if (cls.size * c != fam.group.order()) bad[cls.size] = c;
  }
  std::ostringstream act;
  act << classes.size() << " classes, sizes sum to " << total;
  if (!bad.empty()) act << ", failing (size:centralizer) " << render(bad);
  out.push_back(boolean("orbit-stabilizer", bad.empty() && total == fam.group.order(),
                        "|class|*|C(g)| = " + std::to_string(fam.group.order()), act.str()));

  // Centralizers of representative subgroups against the table.
  std::map<std::string, unsigned long> expected, actual;
  for (const auto& s : all) {
    const auto key = strata::to_string(s.label) + (s.part.empty() ? "" : "/" + s.part);
    expected[key] = s.centralizer;
    const auto gens = strata::representative_subgroup(s, fam);
    actual[key] = grp::centralizer(fam.group, gens).order();
  }
  out.push_back(compare("centralizers", expected, actual));

  // v-values recomputed from the defining data of sampled members.
  std::size_t sampled = 0;
  std::map<std::string, std::string> mismatches;
  for (const auto& s : all) {
    const auto samples = strata::sample_descriptors(s, fam, 12);
    for (std::size_t r = 0; r < samples.size(); ++r) {
      ++sampled;
      const Rational want = s.v_at(s.is_progression() ? static_cast<long>(r) : 0);
      const Rational got = strata::descriptor_v(samples[r], fam.spec.l);
      if (want != got) mismatches[s.name() + "#" + std::to_string(r)] = wmk::to_string(got) + "!=" + wmk::to_string(want);
    }
  }
  out.push_back(boolean("descriptor-v", mismatches.empty(), "v matches the table",
                        mismatches.empty() ? std::to_string(sampled) + " samples agree" : render(mismatches)));
}

void stratum_oracles(const families::Family& fam, const std::vector<Stratum>& all, std::uint64_t budget,
                     std::vector<Check>& out) {
  const auto& field = fam.spec.field;
  const Rational qr(field->order());
  const BigInt q(static_cast<unsigned long>(field->order()));
  const unsigned l = fam.spec.l;
  const FamilyKind kind = fam.spec.kind;
  const bool sym = kind == FamilyKind::Sym2 || kind == FamilyKind::SymLL;
  const std::uint64_t n = fam.group.order();

  // Pair-orbit oracles walk G x G.
  const bool pairs_fit = n * n <= 10 * budget;

  if (auto j = fit(5, budget, [&](unsigned jm) { return oracles::artin_schreier_enumeration_size(field, jm); })) {
    out.push_back(compare("stratum-S2", table_tally(all, with_label(StratumLabel::S2), qr, *j),
                          oracles::oracle_s2(fam, *j, budget)));
  } else {
    out.push_back(skipped("stratum-S2", "3q exceeds the budget"));
  }

  out.push_back(compare("stratum-S3", table_tally(all, with_label(StratumLabel::S3), qr, 0),
                        oracles::oracle_cyclic_kummer(fam, l, [](const grp::GroupElem& g) { return g.is_diagonal(); })));

  if (kind != FamilyKind::CyclicL) {
    const std::uint64_t l4 = static_cast<std::uint64_t>(l) * l * l * l;
    if (l4 <= budget)
      out.push_back(compare("stratum-S4", table_tally(all, with_label(StratumLabel::S4), qr, 0), oracles::oracle_s4(fam)));
    else
      out.push_back(skipped("stratum-S4", std::to_string(l4) + " pairs"));
  }
  if (!sym) return;

  out.push_back(compare("stratum-S5", table_tally(all, with_label(StratumLabel::S5), qr, 0),
                        oracles::oracle_cyclic_kummer(fam, 2, [](const grp::GroupElem& g) { return !g.is_diagonal(); })));
  out.push_back(compare("stratum-S6", table_tally(all, with_label(StratumLabel::S6), qr, 0),
                        oracles::oracle_cyclic_kummer(fam, 2 * l, [](const grp::GroupElem&) { return true; })));

  std::map<long, std::uint64_t> s6_table;
  for (const auto& [key, c] : table_tally(all, with_label(StratumLabel::S6), qr, 0)) s6_table[key.first] += c.get_ui();
  out.push_back(compare("stratum-S6-lemma", s6_table, oracles::oracle_s6_classes(l)));

  if (!pairs_fit) {
    out.push_back(skipped("stratum-S7", "|G|^2 exceeds the budget"));
    out.push_back(skipped("s3-embedding-classes", "|G|^2 exceeds the budget"));
  } else {
    out.push_back(compare("s3-embedding-classes", std::map<int, std::size_t>{{0, 1}},
                          std::map<int, std::size_t>{{0, oracles::s3_embedding_classes(fam.group)}}));
    for (int m : {0, 1}) {
      const auto name = "stratum-S7-m" + std::to_string(m);
      const auto size = [&](unsigned jm) {
        unsigned cnt = 0;
        for (unsigned j = 1; j <= jm; ++j) cnt += m == 0 ? j % 3 != 0 : std::gcd(j, 6u) == 1;
        return ipow(q, cnt);
      };
      if (auto j = fit(m == 0 ? 5 : 7, budget, size)) {
        out.push_back(compare(name, table_tally(all, with_label(StratumLabel::S7, "m" + std::to_string(m)), qr, *j),
                              oracles::oracle_s7(fam, m, *j, budget).by_v));
      } else {
        out.push_back(skipped(name, "q exceeds the budget"));
      }
    }
  }
  if (kind == FamilyKind::Sym2) {
    if (pairs_fit)
      out.push_back(compare("stratum-S8", table_tally(all, with_label(StratumLabel::S8), qr, 0), oracles::oracle_s8(fam)));
    else
      out.push_back(skipped("stratum-S8", "|G|^2 exceeds the budget"));
  }
}

void sort_checks(std::vector<Check>& checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

}  // namespace

std::vector<Check> structural_checks(FamilyKind kind, unsigned l) {
  std::vector<Check> out;
  const auto all = strata::enumerate_strata(kind, l);
  const auto poly = strata::assemble_stratum_sum(all);
  const auto closed = stringy::theorem_polynomial(kind, l);
  out.push_back(boolean("closed-form", poly == closed, closed.to_string(), poly.to_string()));

  const BigInt chi = stringy::corollary_euler(kind, l);
  const Rational sum = poly.coefficient_sum();
  out.push_back(boolean("euler-characteristic", sum == Rational(chi), chi.get_str(), wmk::to_string(sum)));

  const auto unram = strata::unramified_contribution(all);
  const auto q3 = symq::QPolynomial::monomial(1, 3);
  out.push_back(boolean("unramified-q3", unram == q3, q3.to_string(), unram.to_string()));

  bool zeta_ok = false;
  try {
    zeta_ok = stringy::zeta_consistency(poly, 7);
  } catch (const WmkError&) {
    zeta_ok = false;
  }
  out.push_back(boolean("zeta-consistency", zeta_ok, "d log Z/dt = sum N_m t^(m-1) to t^5",
                        zeta_ok ? "consistent" : "inconsistent"));

  const auto vd = vfun::vandermonde_unit_check();
  out.push_back(boolean("vandermonde-unit", vd.ok, "constant unit mod 3",
                        "det = " + vd.determinant.to_string() + ", mod 3 = " + std::to_string(vd.determinant_mod3)));
  sort_checks(out);
  return out;
}

std::vector<Check> oracle_checks(const families::Family& fam, Level level) {
  std::vector<Check> out;
  if (level == Level::None) return out;
  const std::uint64_t budget = enumeration_budget(level);
  const auto all = strata::enumerate_strata(fam.spec);
  age_checks(fam.spec.l, budget, out);
  artin_schreier_checks(fam.spec.field, budget, out);
  structural_group_checks(fam, all, out);
  stratum_oracles(fam, all, budget, out);
  sort_checks(out);
  return out;
}

std::vector<Check> run_checks(const families::FamilySpec& spec, Level level) {
  auto out = structural_checks(spec.kind, spec.l);
  if (level != Level::None) {
    const auto fam = families::build_family(spec);
    auto more = oracle_checks(fam, level);
    out.insert(out.end(), more.begin(), more.end());
  }
  sort_checks(out);
  return out;
}

}  // namespace wmk::verify
