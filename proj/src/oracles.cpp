#include "wmk/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "wmk/errors.hpp"
#include "wmk/grp.hpp"
#include "wmk/parallel.hpp"
#include "wmk/vfun.hpp"

namespace wmk::oracles {

using fq::Code;
using grp::GroupElem;

namespace {

long to_long(const Rational& x) {
  if (!is_integer(x)) throw InternalError("expected an integral v-value, got " + wmk::to_string(x));
  return x.get_num().get_si();
}

std::uint64_t checked_size(const BigInt& size, std::uint64_t cap) {
  if (size > BigInt(static_cast<unsigned long>(cap)))
    throw EnumerationCapExceeded("enumeration of " + size.get_str() + " items exceeds cap " + std::to_string(cap));
  return size.get_ui();
}

/// Decomposes a mixed-radix index into base-q digits, least significant first.
void digits_of(std::uint64_t index, std::uint64_t q, std::vector<Code>& out) {
  for (auto& d : out) {
    d = static_cast<Code>(index % q);
    index /= q;
  }
}

/// Conjugation table: conj[x][i] = index of x e_i x^{-1} inside `members`.
std::vector<std::vector<std::uint32_t>> conjugation_table(const grp::MatrixGroup& G,
                                                          const std::vector<GroupElem>& members) {
  std::unordered_map<GroupElem::Entries, std::uint32_t, grp::EntriesHash> index;
  for (std::uint32_t i = 0; i < members.size(); ++i) index.emplace(members[i].entries(), i);
  std::vector<std::vector<std::uint32_t>> table(G.order(), std::vector<std::uint32_t>(members.size()));
  for (std::size_t x = 0; x < G.order(); ++x) {
    const GroupElem& g = G.elements()[x];
    const GroupElem gi = g.inverse();
    for (std::uint32_t i = 0; i < members.size(); ++i) {
      auto it = index.find((g * members[i] * gi).entries());
      if (it == index.end()) throw InternalError("conjugation does not preserve the member set");
      table[x][i] = it->second;
    }
  }
  return table;
}

struct PairOrbit {
  std::uint32_t first, second;
  std::size_t size;
};

/// G-orbits on a set of index pairs, using a conjugation table.
std::vector<PairOrbit> pair_orbits(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                   const std::vector<std::vector<std::uint32_t>>& conj) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> remaining(pairs.begin(), pairs.end());
  std::vector<PairOrbit> out;
  while (!remaining.empty()) {
    const auto [a, b] = *remaining.begin();
    std::set<std::pair<std::uint32_t, std::uint32_t>> orbit;
    for (const auto& row : conj) orbit.emplace(row[a], row[b]);
    for (const auto& p : orbit) {
      if (!remaining.erase(p)) throw InternalError("pair set is not closed under conjugation");
    }
    out.push_back({a, b, orbit.size()});
  }
  return out;
}

}  // namespace

std::vector<unsigned> admissible_conductors(unsigned j_max) {
  std::vector<unsigned> out;
  for (unsigned j = 1; j <= j_max; ++j)
    if (j % 3 != 0) out.push_back(j);
  return out;
}

BigInt artin_schreier_enumeration_size(const fq::FieldPtr& field, unsigned j_max) {
  return 3 * ipow(BigInt(static_cast<unsigned long>(field->order())), admissible_conductors(j_max).size());
}

std::map<unsigned, BigInt> oracle_artin_schreier_counts(const fq::FieldPtr& field, unsigned j_max,
                                                        std::uint64_t cap) {
  const auto js = admissible_conductors(j_max);
  const std::uint64_t total = checked_size(artin_schreier_enumeration_size(field, j_max), cap);
  const std::uint64_t q = field->order();
  const auto& reps = field->wp_coset_reps();

  using Counts = std::map<unsigned, std::uint64_t>;
  auto partials = parallel_chunks<Counts>(total, [&](std::uint64_t lo, std::uint64_t hi, Counts& out) {
    std::vector<Code> coeffs(js.size());
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Code constant = reps[i % 3];
      digits_of(i / 3, q, coeffs);
      unsigned pole = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] != 0) {
          pole = js[k];
          break;
        }
      }
      if (pole > 0)
        ++out[pole + 1];
      else if (constant != 0)
        ++out[0];
    }
  });
  std::map<unsigned, BigInt> merged;
  for (const auto& part : partials)
    for (const auto& [m, c] : part) merged[m] += BigInt(static_cast<unsigned long>(c));
  return merged;
}

ReductionCheck oracle_as_reduction(const fq::FieldPtr& field, unsigned J, std::uint64_t cap) {
  const fq::Field& F = *field;
  const std::uint64_t q = F.order();
  const auto js = admissible_conductors(J);
  ReductionCheck out;
  out.domain_size = ipow(BigInt(static_cast<unsigned long>(q)), J + 1);
  out.expected_image_size = artin_schreier_enumeration_size(field, J);
  const std::uint64_t domain = checked_size(out.domain_size, cap);
  const std::uint64_t image = checked_size(out.expected_image_size, cap);

  std::vector<std::uint64_t> fibers(image, 0);
  std::vector<Code> c(J + 1);
  for (std::uint64_t i = 0; i < domain; ++i) {
    digits_of(i, q, c);  // c[0] constant, c[j] coefficient of t^{-j}
    std::vector<Code> tail = c;
    for (unsigned j = J; j >= 3; --j) {
      if (j % 3 != 0 || tail[j] == 0) continue;
      tail[j / 3] = F.add(tail[j / 3], F.cube_root(tail[j]));
      tail[j] = 0;
    }
    std::uint64_t key = 0;
    for (std::size_t k = js.size(); k-- > 0;) key = key * q + tail[js[k]];
    key = key * 3 + static_cast<std::uint64_t>(F.wp_coset_index(tail[0]));
    ++fibers[key];
  }
  std::uint64_t reached = 0;
  std::set<std::uint64_t> sizes;
  for (auto f : fibers) {
    if (f > 0) ++reached;
    sizes.insert(f);
  }
  out.image_size = BigInt(static_cast<unsigned long>(reached));
  out.uniform_fibers = sizes.size() == 1;
  return out;
}

std::map<long, std::uint64_t> oracle_age_tallies(unsigned l, AgeTallyMode mode, unsigned k) {
  if (l % 3 == 0) throw PreconditionError("age tallies need l coprime to 3");
  const auto field = fq::build_field(fq::degree_containing_roots(l));
  const auto root = fq::root_of_unity(field, l);
  const fq::Field& F = *field;
  std::vector<GroupElem> elems;
  for (long a = 0; a < static_cast<long>(l); ++a)
    for (long b = 0; b < static_cast<long>(l); ++b) {
      const long c = ((-(a + b)) % static_cast<long>(l) + l) % l;
      elems.push_back(GroupElem::diagonal(field, F.pow(root.zeta.code(), a), F.pow(root.zeta.code(), b),
                                          F.pow(root.zeta.code(), c)));
    }
  std::vector<long> ages;
  ages.reserve(elems.size());
  for (const auto& g : elems) ages.push_back(to_long(grp::age(g, root, k)));

  std::map<long, std::uint64_t> tally;
  if (mode == AgeTallyMode::Elements) {
    for (long a : ages) ++tally[a];
    return tally;
  }
  const std::size_t full = static_cast<std::size_t>(l) * l;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const GroupElem pair[2] = {elems[i], elems[j]};
      if (grp::generate_closure(field, pair).order() == full) ++tally[ages[j]];
    }
  return tally;
}

std::map<unsigned, std::uint64_t> kummer_field_types(unsigned n) {
  // Elements of (Z/n)^2 as (x, y) = (exponent of mu, exponent of t).
  std::set<std::vector<std::pair<unsigned, unsigned>>> subgroups;
  std::map<unsigned, std::uint64_t> out;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      std::vector<std::pair<unsigned, unsigned>> members;
      for (unsigned k = 0; k < n; ++k) members.emplace_back((k * x) % n, (k * y) % n);
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (members.size() != n) continue;
      if (!subgroups.insert(members).second) continue;
      const unsigned g = std::gcd(y, n);
      ++out[g == n ? 0u : g];
    }
  return out;
}

std::map<long, std::uint64_t> oracle_s6_classes(unsigned l) {
  using families::FamilyKind;
  const FamilyKind kind = l == 2 ? FamilyKind::Sym2 : FamilyKind::SymLL;
  const auto fam = families::build_family(families::make_spec(kind, l, families::smallest_degree(kind, l)));
  const GroupElem g0 = fam.diag(0, 1, -1) * fam.std_mats.T;
  const unsigned n = 2 * l;
  if (g0.order() != n) throw InternalError("S6 generator does not have order 2l");

  std::vector<unsigned> exps;
  for (unsigned k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) exps.push_back(k);
  std::vector<GroupElem> powers;
  for (unsigned k : exps) powers.push_back(g0.pow(k));

  const GroupElem gens[1] = {g0};
  const auto N = grp::normalizer(fam.group, gens);
  std::vector<char> seen(exps.size(), 0);
  std::vector<unsigned> reps;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(exps[i]);
    for (const auto& x : N.elements()) {
      const GroupElem c = x * powers[i] * x.inverse();
      for (std::size_t j = 0; j < exps.size(); ++j)
        if (powers[j] == c) seen[j] = 1;
    }
  }

  std::map<long, std::uint64_t> tally;
  for (const auto& [val, fields] : kummer_field_types(n))
    for (unsigned k : reps) {
      const long v = val == 0 ? 0 : to_long(vfun::v_c2l(l, val, static_cast<long>(k % l)));
      tally[v] += fields;
    }
  return tally;
}

Tally oracle_cyclic_kummer(const families::Family& fam, unsigned n,
                           const std::function<bool(const GroupElem&)>& keep) {
  if ((fam.spec.field->order() - 1) % n != 0) throw PreconditionError("K lacks the n-th roots of unity");
  const auto types = kummer_field_types(n);
  Tally tally;
  for (const auto& cls : grp::conjugacy_classes(fam.group)) {
    const GroupElem& h = cls.representative;
    if (h.order() != n || !keep(h)) continue;
    const unsigned long c = fam.group.order() / cls.size;
    for (const auto& [val, fields] : types) {
      const long v = val == 0 ? 0 : to_long(grp::age(h.pow(val)));
      tally[{v, c}] += BigInt(static_cast<unsigned long>(fields));
    }
  }
  return tally;
}

Tally oracle_s2(const families::Family& fam, unsigned j_max, std::uint64_t cap) {
  const auto reps = oracle_artin_schreier_counts(fam.spec.field, j_max, cap);
  Tally tally;
  for (const auto& cls : grp::conjugacy_classes(fam.group)) {
    if (cls.representative.order() != 3) continue;
    const unsigned long c = fam.group.order() / cls.size;
    // a and -a = 2a define the same cubic field.
    for (const auto& [m, count] : reps) tally[{static_cast<long>(m), c}] += count / 2;
  }
  return tally;
}

Tally oracle_s4(const families::Family& fam) {
  std::vector<GroupElem> diag;
  for (const auto& g : fam.group.elements())
    if (g.is_diagonal()) diag.push_back(g);
  const std::size_t full = static_cast<std::size_t>(fam.spec.l) * fam.spec.l;
  if (diag.size() != full) throw InternalError("diagonal subgroup has the wrong order");
  const auto conj = conjugation_table(fam.group, diag);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < diag.size(); ++i)
    for (std::uint32_t j = 0; j < diag.size(); ++j) {
      const GroupElem gens[2] = {diag[i], diag[j]};
      if (grp::generate_closure(fam.spec.field, gens).order() == full) pairs.emplace_back(i, j);
    }
  Tally tally;
  for (const auto& o : pair_orbits(pairs, conj)) {
    const long v = to_long(grp::age(diag[o.second]));
    tally[{v, fam.group.order() / o.size}] += 1;
  }
  return tally;
}

Tally oracle_s8(const families::Family& fam) {
  const auto& els = fam.group.elements();
  std::vector<GroupElem> members(els.begin(), els.end());
  const auto conj = conjugation_table(fam.group, members);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < members.size(); ++i)
    for (std::uint32_t j = 0; j < members.size(); ++j) {
      const GroupElem& a = members[i];
      const GroupElem& b = members[j];
      if (i == j || a.order() != 2 || b.order() != 2 || !(a * b == b * a)) continue;
      if (a.is_diagonal() && b.is_diagonal()) continue;
      pairs.emplace_back(i, j);
    }
  Tally tally;
  for (const auto& o : pair_orbits(pairs, conj)) {
    const long v = to_long(grp::age(members[o.second]));
    tally[{v, fam.group.order() / o.size}] += 1;
  }
  return tally;
}

namespace {
std::vector<std::size_t> s3_embedding_orbit_sizes(const grp::MatrixGroup& G) {
  const auto& els = G.elements();
  std::vector<GroupElem> members(els.begin(), els.end());
  const auto conj = conjugation_table(G, members);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    if (members[i].order() != 3) continue;
    const GroupElem inv = members[i].inverse();
    for (std::uint32_t j = 0; j < members.size(); ++j) {
      const GroupElem& t = members[j];
      if (t.order() != 2) continue;
      if (t * members[i] * t.inverse() == inv) pairs.emplace_back(i, j);
    }
  }
  std::vector<std::size_t> sizes;
  for (const auto& o : pair_orbits(pairs, conj)) sizes.push_back(o.size);
  return sizes;
}
}  // namespace

std::size_t s3_embedding_classes(const grp::MatrixGroup& group) { return s3_embedding_orbit_sizes(group).size(); }

S7Tally oracle_s7(const families::Family& fam, int m, unsigned j_max, std::uint64_t cap) {
  if (m != 0 && m != 1) throw PreconditionError("m must be 0 or 1");
  const fq::Field& F = *fam.spec.field;
  std::vector<unsigned> js;
  for (unsigned j = 1; j <= j_max; ++j)
    if (m == 0 ? j % 3 != 0 : std::gcd(j, 6u) == 1) js.push_back(j);

  // Quadratic subfields Q = K(alpha): square classes mu^i t^e with e = m, excluding the trivial class.
  std::set<std::pair<bool, int>> classes;
  for (Code c = 1; c < F.order(); ++c) classes.emplace(F.is_square(c), m);
  const std::size_t quadratic_types = m == 0 ? classes.size() - 1 : classes.size();

  const auto orbit_sizes = s3_embedding_orbit_sizes(fam.group);

  const BigInt size = ipow(BigInt(static_cast<unsigned long>(F.order())), js.size());
  const std::uint64_t total = checked_size(size, cap);
  // b = sum_j b_j * basis_j; count b up to sign by keeping b < -b.
  using Counts = std::map<unsigned, std::uint64_t>;
  auto partials = parallel_chunks<Counts>(total, [&](std::uint64_t lo, std::uint64_t hi, Counts& out) {
    std::vector<Code> b(js.size()), neg(js.size());
    for (std::uint64_t i = lo; i < hi; ++i) {
      digits_of(i, F.order(), b);
      unsigned pole = 0;
      for (std::size_t k = b.size(); k-- > 0;)
        if (b[k] != 0) {
          pole = js[k];
          break;
        }
      if (pole == 0) continue;
      for (std::size_t k = 0; k < b.size(); ++k) neg[k] = F.neg(b[k]);
      if (std::lexicographical_compare(b.rbegin(), b.rend(), neg.rbegin(), neg.rend())) ++out[pole];
    }
  });
  std::map<unsigned, BigInt> b_counts;
  for (const auto& part : partials)
    for (const auto& [j, c] : part) b_counts[j] += BigInt(static_cast<unsigned long>(c));
  S7Tally out;
  for (const auto& [j, bc] : b_counts) {
    const BigInt per_embedding = bc * static_cast<unsigned long>(quadratic_types);
    out.by_j[j] = per_embedding * static_cast<unsigned long>(orbit_sizes.size());
    const long v = to_long(vfun::v_s3(m, j));
    for (std::size_t s : orbit_sizes) out.by_v[{v, fam.group.order() / s}] += per_embedding;
  }
  return out;
}

namespace {
void extend_partition(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts, unsigned j,
                      std::uint64_t& count) {
  if (remaining == 0) {
    if (parts.size() == j) ++count;
    return;
  }
  if (parts.size() == j) return;
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    extend_partition(remaining - p, p, parts, j, count);
    parts.pop_back();
  }
}
}  // namespace

std::uint64_t oracle_partitions(unsigned n, unsigned j) {
  if (n == 0) return j == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<unsigned> parts;
  extend_partition(n, n, parts, j, count);
  return count;
}

}  // namespace wmk::oracles
