#include <doctest.h>

#include <map>
#include <set>

#include "wmk/errors.hpp"
#include "wmk/strata.hpp"
#include "wmk/vfun.hpp"

using namespace wmk;
using families::FamilyKind;
using strata::StratumLabel;
using symq::QPolynomial;

namespace {

const QPolynomial q = QPolynomial::q();

QPolynomial cubic(long a2, long a1) { return q.pow(3) + a2 * q.pow(2) + a1 * q; }

QPolynomial sum_label(FamilyKind k, unsigned l, StratumLabel label) {
  symq::QRational total;
  for (const auto& s : strata::enumerate_strata(k, l))
    if (s.label == label) total += strata::stratum_contribution(s);
  return total.as_polynomial();
}

}  // namespace

TEST_CASE("assembled sums (frozen)") {
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::CyclicL, 7)) == cubic(3, 1));
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::CyclicL, 13)) == cubic(4, 2));
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::CyclicLL, 2)) == cubic(3, 0));
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::CyclicLL, 5)) == cubic(8, 2));
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::CyclicLL, 13)) == cubic(36, 22));
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::SymLL, 5)) == cubic(10, 5));
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::SymLL, 7)) == cubic(14, 8));
  CHECK(strata::assemble_stratum_sum(strata::enumerate_strata(FamilyKind::Sym2, 2)) == cubic(6, 1));
}

TEST_CASE("unramified strata sum to q^3") {
  for (auto [k, l] : std::vector<std::pair<FamilyKind, unsigned>>{
           {FamilyKind::CyclicL, 7}, {FamilyKind::CyclicL, 13}, {FamilyKind::CyclicL, 19}, {FamilyKind::CyclicLL, 2},
           {FamilyKind::CyclicLL, 5}, {FamilyKind::CyclicLL, 11}, {FamilyKind::Sym2, 2}, {FamilyKind::SymLL, 5},
           {FamilyKind::SymLL, 13}}) {
    const auto all = strata::enumerate_strata(k, l);
    CHECK(strata::unramified_contribution(all) == q.pow(3));
  }
}

TEST_CASE("per-label contributions") {
  // Artin-Schreier part: q^3/3 per class of order-3 elements plus 2q^2 (cyclic) or q^2 (symmetric).
  CHECK(sum_label(FamilyKind::CyclicL, 13, StratumLabel::S2) == QPolynomial(Rational(2, 3)) * q.pow(3) + 2 * q.pow(2));
  CHECK(sum_label(FamilyKind::SymLL, 5, StratumLabel::S2) == QPolynomial(Rational(1, 3)) * q.pow(3) + q.pow(2));
  // S_3 stabilizers contribute 2q^2 + q.
  CHECK(sum_label(FamilyKind::SymLL, 5, StratumLabel::S7) == 2 * q.pow(2) + q);
  CHECK(sum_label(FamilyKind::Sym2, 2, StratumLabel::S7) == 2 * q.pow(2) + q);
  CHECK(sum_label(FamilyKind::Sym2, 2, StratumLabel::S8) == QPolynomial(Rational(3, 4)) * q.pow(2));
}

TEST_CASE("symmetric S3 and S6 counts") {
  std::map<std::string, QPolynomial> counts;
  std::map<std::string, unsigned long> cent;
  for (const auto& s : strata::enumerate_strata(FamilyKind::SymLL, 5)) {
    counts[s.name()] = s.count_at();
    cent[s.name()] = s.centralizer;
  }
  CHECK(counts["S3/prime/m=0"] == QPolynomial(4));
  CHECK(counts["S3/prime/m=1"] == QPolynomial(10));
  CHECK(counts["S3/prime/m=2"] == QPolynomial(10));
  CHECK(cent["S3/prime/m=1"] == 50);
  CHECK(cent["S3/free/m=1"] == 25);
  CHECK(counts["S6/m=0"] == QPolynomial(4));
  CHECK(counts["S6/m=1"] == QPolynomial(38));
  CHECK(counts["S6/m=2"] == QPolynomial(30));
  CHECK(cent["S6/m=1"] == 10);
  CHECK(cent["S7/m0/j=3r+1"] == 1);
  CHECK(counts.count("S8/m=1") == 0);
}

TEST_CASE("progressions") {
  for (const auto& s : strata::enumerate_strata(FamilyKind::Sym2, 2)) {
    if (!s.is_progression()) continue;
    const auto p = std::get<strata::Progression>(s.sublabel);
    const auto& c = std::get<strata::ProgressionCount>(s.count);
    for (long r = 0; r < 6; ++r) {
      CHECK(s.count_at(r) == c.coeff.shift(static_cast<int>(c.slope * r + c.intercept)));
      const long j = p.modulus * r + p.residue;
      if (s.label == StratumLabel::S2) CHECK(s.v_at(r) == vfun::v_c3(j));
    }
    CHECK(strata::stratum_term(s).decay > 0);
    CHECK_FALSE(s.pre_weighted);
  }
}

TEST_CASE("names and labels") {
  for (int i = 1; i <= 8; ++i) {
    const auto label = static_cast<StratumLabel>(i);
    CHECK(strata::parse_label(strata::to_string(label)) == label);
  }
  CHECK_THROWS(strata::parse_label("S9"));
  const auto all = strata::enumerate_strata(FamilyKind::SymLL, 5);
  std::set<std::string> names;
  for (const auto& s : all) names.insert(s.name());
  CHECK(names.size() == all.size());
  CHECK(names.count("S3/prime/m=1") == 1);
  CHECK(names.count("S7/m1/j=6r+5") == 1);
}

TEST_CASE("unsupported parameters") {
  CHECK_THROWS_AS(strata::enumerate_strata(FamilyKind::CyclicL, 5), NoTwistError);
  CHECK_THROWS_AS(strata::enumerate_strata(FamilyKind::SymLL, 2), UnsupportedFamily);
}

TEST_CASE("representative subgroups realize the centralizer orders") {
  struct P {
    FamilyKind k;
    unsigned l;
  };
  for (P p : {P{FamilyKind::CyclicL, 13}, P{FamilyKind::CyclicLL, 2}, P{FamilyKind::CyclicLL, 5},
              P{FamilyKind::Sym2, 2}, P{FamilyKind::SymLL, 5}}) {
    const auto fam = families::build_family(families::make_spec(p.k, p.l, families::smallest_degree(p.k, p.l)));
    for (const auto& s : strata::enumerate_strata(fam.spec)) {
      const auto gens = strata::representative_subgroup(s, fam);
      CHECK_MESSAGE(grp::centralizer(fam.group, gens).order() == s.centralizer, s.name());
    }
  }
}

TEST_CASE("sampled descriptors reproduce v") {
  const auto fam = families::build_family(families::make_spec(FamilyKind::Sym2, 2, 2));
  for (const auto& s : strata::enumerate_strata(fam.spec)) {
    const auto samples = strata::sample_descriptors(s, fam, 8);
    for (std::size_t r = 0; r < samples.size(); ++r)
      CHECK_MESSAGE(strata::descriptor_v(samples[r], 2) == s.v_at(s.is_progression() ? static_cast<long>(r) : 0),
                    s.name());
  }
}
