#pragma once

// Brute-force enumerations that recount every stratum independently of the
// closed-form tables: Artin-Schreier representatives, Kummer classes crossed
// with G-conjugacy classes of homomorphisms, and age tallies over C_l^2.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "wmk/families.hpp"
#include "wmk/fq.hpp"
#include "wmk/rational.hpp"

namespace wmk::oracles {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// j in [1, j_max] with 3 !| j.
std::vector<unsigned> admissible_conductors(unsigned j_max);

/// Number of representatives 3 * q^{#admissible j} the enumeration visits.
BigInt artin_schreier_enumeration_size(const fq::FieldPtr& field, unsigned j_max);

/// Enumerates every reduced representative a = c + sum_{3 !| j <= j_max} a_j t^{-j}
/// (c a coset representative of k / wp(k)) and tallies by m: m = 0 for
/// j = 0 with a != 0, m = j + 1 for pole order j > 0. Throws
/// EnumerationCapExceeded above `cap` representatives.
std::map<unsigned, BigInt> oracle_artin_schreier_counts(const fq::FieldPtr& field, unsigned j_max,
                                                        std::uint64_t cap = kDefaultEnumerationCap);

struct ReductionCheck {
  BigInt domain_size;          // all polar parts of order <= J plus a constant
  BigInt image_size;           // distinct reduced representatives reached
  BigInt expected_image_size;  // 3 * q^{#admissible j <= J}
  bool uniform_fibers = false;
  bool ok() const { return image_size == expected_image_size && uniform_fibers; }
};

/// Reduces every Laurent tail c_0 + sum_{j <= J} c_j t^{-j} modulo wp(K)
/// (t^{-3j} terms via cube roots, the constant via coset representatives) and
/// checks that the image is exactly the representative set with equal fibers.
ReductionCheck oracle_as_reduction(const fq::FieldPtr& field, unsigned J,
                                   std::uint64_t cap = kDefaultEnumerationCap);

enum class AgeTallyMode { Elements, GeneratorPairs };

/// Tally of age over C_l^2 (elements), or of age(h2) over ordered generating
/// pairs (h1, h2). The ages use zeta_l^k as primitive root.
std::map<long, std::uint64_t> oracle_age_tallies(unsigned l, AgeTallyMode mode, unsigned k = 1);

/// Cyclic subgroups of order n in (Z/n)^2 = K^x / (K^x)^n, keyed by
/// v_K of the normalized radicand (0 = unramified, else gcd(t-exponent, n)).
std::map<unsigned, std::uint64_t> kummer_field_types(unsigned n);

/// Degree-2l Kummer types crossed with the generator choices h^{2i-1}
/// (taken up to conjugation by the normalizer of H_A), v from the rule
/// for cyclic stabilizers of order 2l. Keyed by v.
std::map<long, std::uint64_t> oracle_s6_classes(unsigned l);

/// (v, #C_G(H_A)) -> number of G-etale algebras.
using Tally = std::map<std::pair<long, unsigned long>, BigInt>;

/// Cyclic stabilizers of order n | q-1: Kummer fields times G-classes of
/// elements h of order n accepted by `keep`; v = age(h^g) with g = gcd of the
/// radicand's t-exponent and n (0 when unramified).
Tally oracle_cyclic_kummer(const families::Family& fam, unsigned n,
                           const std::function<bool(const grp::GroupElem&)>& keep);

/// Cubic Artin-Schreier stabilizers with conductor j <= j_max (v = j + 1):
/// fields from the representative enumeration, times G-classes of elements of order 3.
Tally oracle_s2(const families::Family& fam, unsigned j_max, std::uint64_t cap = kDefaultEnumerationCap);

/// C_l^2 stabilizer: G-orbits of ordered generating pairs of the diagonal subgroup, v = age(h2).
Tally oracle_s4(const families::Family& fam);

/// Klein stabilizers other than the diagonal one (l = 2): orbits of generating pairs, v = age(h2).
Tally oracle_s8(const families::Family& fam);

/// S_3 stabilizers with v_K(alpha^2) = m and pole order j <= j_max: nonzero
/// b in the relevant Artin-Schreier space up to sign, times quadratic types,
/// times G-classes of embeddings of S_3. Keyed by (v, centralizer) as above;
/// the second map is keyed by j.
struct S7Tally {
  Tally by_v;
  std::map<long, BigInt> by_j;
};
S7Tally oracle_s7(const families::Family& fam, int m, unsigned j_max,
                  std::uint64_t cap = kDefaultEnumerationCap);

/// Number of G-orbits of ordered pairs (s, t) generating a subgroup isomorphic to S_3.
std::size_t s3_embedding_classes(const grp::MatrixGroup& group);

/// Partitions of n into exactly j positive parts, by listing every
/// nonincreasing sequence (independent of any recurrence).
std::uint64_t oracle_partitions(unsigned n, unsigned j);

}  // namespace wmk::oracles
