#include <doctest.h>

#include "wmk/errors.hpp"
#include "wmk/oracles.hpp"
#include "wmk/verify.hpp"

using namespace wmk;
using families::FamilyKind;
using oracles::AgeTallyMode;

namespace {
using U = std::map<unsigned, BigInt>;
using A = std::map<long, std::uint64_t>;
}  // namespace

TEST_CASE("Artin-Schreier representative counts (frozen)") {
  CHECK(oracles::oracle_artin_schreier_counts(fq::build_field(1), 7) ==
        U{{0, 2}, {2, 6}, {3, 18}, {5, 54}, {6, 162}, {8, 486}});
  CHECK(oracles::oracle_artin_schreier_counts(fq::build_field(2), 7) ==
        U{{0, 2}, {2, 24}, {3, 216}, {5, 1944}, {6, 17496}, {8, 157464}});
}

TEST_CASE("reduction modulo wp hits every representative equally often") {
  const auto r3 = oracles::oracle_as_reduction(fq::build_field(1), 6);
  CHECK(r3.ok());
  CHECK(r3.image_size == 243);
  const auto r9 = oracles::oracle_as_reduction(fq::build_field(2), 4);
  CHECK(r9.ok());
  CHECK(r9.image_size == 2187);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(oracles::oracle_artin_schreier_counts(fq::build_field(4), 7, 1000), EnumerationCapExceeded);
  CHECK(oracles::artin_schreier_enumeration_size(fq::build_field(2), 7) == 3 * 59049);
  CHECK(oracles::admissible_conductors(7) == std::vector<unsigned>{1, 2, 4, 5, 7});
}

TEST_CASE("age tallies over C_l^2 (frozen)") {
  CHECK(oracles::oracle_age_tallies(2, AgeTallyMode::Elements) == A{{0, 1}, {1, 3}});
  CHECK(oracles::oracle_age_tallies(5, AgeTallyMode::Elements) == A{{0, 1}, {1, 18}, {2, 6}});
  CHECK(oracles::oracle_age_tallies(7, AgeTallyMode::Elements) == A{{0, 1}, {1, 33}, {2, 15}});
  CHECK(oracles::oracle_age_tallies(13, AgeTallyMode::Elements) == A{{0, 1}, {1, 102}, {2, 66}});
  CHECK(oracles::oracle_age_tallies(2, AgeTallyMode::GeneratorPairs) == A{{1, 6}});
  CHECK(oracles::oracle_age_tallies(5, AgeTallyMode::GeneratorPairs) == A{{1, 360}, {2, 120}});
}

TEST_CASE("age tallies do not depend on the primitive root") {
  for (unsigned l : {5u, 7u, 13u}) {
    const auto base = oracles::oracle_age_tallies(l, AgeTallyMode::Elements);
    for (unsigned k = 2; k < l; ++k) CHECK(oracles::oracle_age_tallies(l, AgeTallyMode::Elements, k) == base);
  }
}

TEST_CASE("order-2l Kummer classes (frozen)") {
  CHECK(oracles::oracle_s6_classes(2) == A{{0, 1}, {1, 5}});
  CHECK(oracles::oracle_s6_classes(5) == A{{0, 4}, {1, 38}, {2, 30}});
  CHECK(oracles::oracle_s6_classes(7) == A{{0, 6}, {1, 75}, {2, 63}});
}

TEST_CASE("Kummer field types") {
  // (Z/n)^2 has n + 1 cyclic subgroups of order n when n is prime.
  const auto t5 = oracles::kummer_field_types(5);
  std::uint64_t total = 0;
  for (const auto& [val, c] : t5) total += c;
  CHECK(total == 6);
  CHECK(t5.at(0) == 1);
}

TEST_CASE("S_3 embeddings form one class") {
  for (auto [k, l, r] : std::vector<std::tuple<FamilyKind, unsigned, int>>{{FamilyKind::Sym2, 2, 2},
                                                                          {FamilyKind::SymLL, 5, 4}}) {
    const auto fam = families::build_family(families::make_spec(k, l, r));
    CHECK(oracles::s3_embedding_classes(fam.group) == 1);
  }
}

TEST_CASE("brute-force partitions") {
  CHECK(oracles::oracle_partitions(4, 2) == 2);
  CHECK(oracles::oracle_partitions(12, 4) == 15);
  CHECK(oracles::oracle_partitions(0, 0) == 1);
  CHECK(oracles::oracle_partitions(3, 4) == 0);
}

TEST_CASE("full oracle suite agrees with the stratum tables") {
  struct P {
    FamilyKind k;
    unsigned l;
    int r;
  };
  for (P p : {P{FamilyKind::CyclicL, 13, 3}, P{FamilyKind::CyclicL, 7, 6}, P{FamilyKind::CyclicLL, 2, 1},
              P{FamilyKind::CyclicLL, 5, 4}, P{FamilyKind::Sym2, 2, 2}, P{FamilyKind::SymLL, 5, 4}}) {
    const auto checks = verify::run_checks(families::make_spec(p.k, p.l, p.r), verify::Level::Fast);
    for (const auto& c : checks) {
      INFO(families::to_string(p.k), " l=", p.l, " ", c.name, ": expected ", c.expected, " actual ", c.actual);
      CHECK((c.pass || c.skipped));
    }
    CHECK(checks.size() >= 10);
    CHECK(std::is_sorted(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  }
}
