#include "wmk/grp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "wmk/errors.hpp"

namespace wmk::grp {

GroupElem::GroupElem(FieldPtr field, const Entries& entries)
    : field_(std::move(field)), entries_(entries) {
  if (!field_) throw PreconditionError("matrix without a field");
  for (Code c : entries_)
    if (c >= field_->order()) throw PreconditionError("matrix entry out of range");
}

GroupElem GroupElem::identity(const FieldPtr& field) { return diagonal(field, 1, 1, 1); }

GroupElem GroupElem::diagonal(const FieldPtr& field, Code a, Code b, Code c) {
  return GroupElem(field, Entries{a, 0, 0, 0, b, 0, 0, 0, c});
}

GroupElem GroupElem::from_ints(const FieldPtr& field, const std::array<int, 9>& entries) {
  Entries e{};
  for (std::size_t i = 0; i < 9; ++i) e[i] = field->from_int(entries[i]);
  return GroupElem(field, e);
}

GroupElem GroupElem::operator*(const GroupElem& o) const {
  if (field_ != o.field_) throw PreconditionError("mixed-field matrix product");
  const fq::Field& F = *field_;
  Entries out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Code acc = 0;
      for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(at(i, k), o.at(k, j)));
      out[static_cast<std::size_t>(3 * i + j)] = acc;
    }
  }
  GroupElem r;
  r.field_ = field_;
  r.entries_ = out;
  return r;
}

Code GroupElem::determinant() const {
  const fq::Field& F = *field_;
  auto m = [&](int i, int j) { return at(i, j); };
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return F.sub(F.mul(m(r0, c0), m(r1, c1)), F.mul(m(r0, c1), m(r1, c0)));
  };
  Code d = F.mul(m(0, 0), minor(1, 2, 1, 2));
  d = F.sub(d, F.mul(m(0, 1), minor(1, 2, 0, 2)));
  d = F.add(d, F.mul(m(0, 2), minor(1, 2, 0, 1)));
  return d;
}

GroupElem GroupElem::inverse() const {
  const fq::Field& F = *field_;
  const Code det = determinant();
  if (det == 0) throw PreconditionError("singular matrix has no inverse");
  const Code inv_det = F.inv(det);
  Entries out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Cofactor C_{ji} goes to position (i, j).
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Code cof = F.sub(F.mul(at(r0, c0), at(r1, c1)), F.mul(at(r0, c1), at(r1, c0)));
      out[static_cast<std::size_t>(3 * i + j)] = F.mul(cof, inv_det);
    }
  }
  return GroupElem(field_, out);
}

GroupElem GroupElem::pow(std::int64_t e) const {
  GroupElem base = e < 0 ? inverse() : *this;
  std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  GroupElem result = identity(field_);
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Code GroupElem::trace() const {
  const fq::Field& F = *field_;
  return F.add(F.add(at(0, 0), at(1, 1)), at(2, 2));
}

std::array<Code, 3> GroupElem::characteristic_polynomial() const {
  const fq::Field& F = *field_;
  auto minor = [&](int a, int b) {
    return F.sub(F.mul(at(a, a), at(b, b)), F.mul(at(a, b), at(b, a)));
  };
  const Code c2 = F.neg(trace());
  const Code c1 = F.add(F.add(minor(0, 1), minor(0, 2)), minor(1, 2));
  const Code c0 = F.neg(determinant());
  return {c0, c1, c2};
}

int GroupElem::fixed_space_dimension() const {
  const fq::Field& F = *field_;
  std::array<std::array<Code, 3>, 3> a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = i == j ? F.sub(at(i, j), 1) : at(i, j);
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const Code inv = F.inv(a[rank][col]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Code factor = F.mul(a[r][col], inv);
      for (int c = 0; c < 3; ++c) a[r][c] = F.sub(a[r][c], F.mul(factor, a[rank][c]));
    }
    ++rank;
  }
  return 3 - rank;
}

bool GroupElem::is_identity() const { return entries_ == Entries{1, 0, 0, 0, 1, 0, 0, 0, 1}; }

bool GroupElem::is_diagonal() const {
  return at(0, 1) == 0 && at(0, 2) == 0 && at(1, 0) == 0 && at(1, 2) == 0 && at(2, 0) == 0 &&
         at(2, 1) == 0;
}

std::uint64_t GroupElem::order(std::uint64_t cap) const {
  GroupElem x = *this;
  std::uint64_t n = 1;
  while (!x.is_identity()) {
    x = x * *this;
    if (++n > cap) throw PreconditionError("element order exceeds cap");
  }
  return n;
}

std::size_t EntriesHash::operator()(const GroupElem::Entries& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Code c : e) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

MatrixGroup MatrixGroup::from_elements(FieldPtr field, std::vector<GroupElem> elements,
                                       std::vector<GroupElem> generators) {
  MatrixGroup g;
  g.field_ = std::move(field);
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  g.index_.reserve(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i].entries(), i);
  return g;
}

std::size_t MatrixGroup::index_of(const GroupElem& g) const {
  auto it = index_.find(g.entries());
  if (it == index_.end()) throw PreconditionError("element is not in the group");
  return it->second;
}

MatrixGroup generate_closure(const FieldPtr& field, std::span<const GroupElem> gens, std::size_t cap) {
  std::vector<GroupElem> sorted(gens.begin(), gens.end());
  for (const auto& g : sorted) {
    if (g.field() != field) throw PreconditionError("generators must share one field");
    if (g.determinant() != 1) throw PreconditionError("generator does not have determinant 1");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<GroupElem> elements{GroupElem::identity(field)};
  std::unordered_map<GroupElem::Entries, std::size_t, EntriesHash> seen;
  seen.emplace(elements.front().entries(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : sorted) {
      GroupElem y = elements[head] * g;
      if (seen.emplace(y.entries(), elements.size()).second) {
        elements.push_back(std::move(y));
        if (elements.size() > cap)
          throw PreconditionError("group closure exceeds cap of " + std::to_string(cap) + " elements");
      }
    }
  }
  return MatrixGroup::from_elements(field, std::move(elements), std::move(sorted));
}

MatrixGroup generate_closure(std::span<const GroupElem> gens, std::size_t cap) {
  if (gens.empty()) throw PreconditionError("closure of an empty list needs an explicit field");
  return generate_closure(gens.front().field(), gens, cap);
}

std::vector<ConjugacyClass> conjugacy_classes(const MatrixGroup& group) {
  const auto& els = group.elements();
  std::vector<GroupElem> inverses;
  inverses.reserve(els.size());
  for (const auto& g : els) inverses.push_back(g.inverse());

  std::vector<char> assigned(els.size(), 0);
  std::vector<ConjugacyClass> out;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (assigned[i]) continue;
    ConjugacyClass cls{els[i], 0};
    for (std::size_t k = 0; k < els.size(); ++k) {
      const std::size_t j = group.index_of(els[k] * els[i] * inverses[k]);
      if (!assigned[j]) {
        assigned[j] = 1;
        ++cls.size;
        if (els[j] < cls.representative) cls.representative = els[j];
      }
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return out;
}

namespace {
MatrixGroup subgroup_from_filter(const MatrixGroup& group, std::vector<GroupElem> members) {
  // Greedy generating set: keep an element when it is not yet generated.
  std::vector<GroupElem> gens;
  MatrixGroup current = generate_closure(group.field(), gens);
  for (const auto& g : members) {
    if (current.contains(g)) continue;
    gens.push_back(g);
    current = generate_closure(group.field(), gens);
  }
  if (current.order() != members.size()) throw InternalError("filtered subset is not a subgroup");
  return MatrixGroup::from_elements(group.field(), std::move(members), std::move(gens));
}
}  // namespace

MatrixGroup centralizer(const MatrixGroup& group, std::span<const GroupElem> subset) {
  for (const auto& h : subset)
    if (!group.contains(h)) throw PreconditionError("centralizer: subset element is not in the group");
  std::vector<GroupElem> members;
  for (const auto& g : group.elements()) {
    bool commutes = true;
    for (const auto& h : subset)
      if (!(g * h == h * g)) {
        commutes = false;
        break;
      }
    if (commutes) members.push_back(g);
  }
  return subgroup_from_filter(group, std::move(members));
}

MatrixGroup normalizer(const MatrixGroup& group, std::span<const GroupElem> subset) {
  for (const auto& h : subset)
    if (!group.contains(h)) throw PreconditionError("normalizer: subset element is not in the group");
  const MatrixGroup sub = generate_closure(group.field(), subset);
  std::vector<GroupElem> members;
  for (const auto& g : group.elements()) {
    const GroupElem gi = g.inverse();
    bool normalizes = true;
    for (const auto& h : sub.generators())
      if (!sub.contains(g * h * gi)) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(g);
  }
  return subgroup_from_filter(group, std::move(members));
}

bool is_small(const MatrixGroup& group) {
  return std::none_of(group.elements().begin(), group.elements().end(),
                      [](const GroupElem& g) { return g.fixed_space_dimension() == 2; });
}

std::vector<unsigned> eigen_exponents(const GroupElem& g, const fq::RootOfUnity& root, unsigned k) {
  if (g.field() != root.base) throw PreconditionError("root of unity built over a different field");
  const std::uint64_t n = g.order();
  if (n % 3 == 0) throw WildElementError("age is undefined for an element of order divisible by 3");
  if (root.n % n != 0) throw PreconditionError("root of unity order is not a multiple of the element order");
  if (std::gcd(k, root.n) != 1) throw PreconditionError("root exponent must be coprime to n");

  const fq::Field& E = *root.extension;
  const auto cp = g.characteristic_polynomial();
  // Monic cubic, little-endian, embedded in the extension.
  std::vector<Code> poly{root.embedding(cp[0]), root.embedding(cp[1]), root.embedding(cp[2]), 1};
  const Code zeta = E.pow(root.zeta.code(), k);

  std::vector<unsigned> exps;
  Code x = 1;
  for (unsigned a = 0; a < root.n && poly.size() > 1; ++a, x = E.mul(x, zeta)) {
    for (;;) {
      // Synthetic division by (X - x).
      std::vector<Code> quotient(poly.size() - 1);
      Code carry = 0;
      for (std::size_t i = poly.size(); i-- > 1;) {
        carry = E.add(poly[i], E.mul(carry, x));
        quotient[i - 1] = carry;
      }
      const Code remainder = E.add(poly[0], E.mul(carry, x));
      if (remainder != 0) break;
      exps.push_back(a);
      poly = std::move(quotient);
      if (poly.size() == 1) break;
    }
  }
  if (exps.size() != 3) throw InternalError("characteristic polynomial does not split over mu_n");
  return exps;
}

Rational age(const GroupElem& g, const fq::RootOfUnity& root, unsigned k) {
  const auto exps = eigen_exponents(g, root, k);
  const long sum = std::accumulate(exps.begin(), exps.end(), 0L);
  return make_rational(sum, root.n);
}

Rational age(const GroupElem& g) {
  const std::uint64_t n = g.order();
  if (n % 3 == 0) throw WildElementError("age is undefined for an element of order divisible by 3");
  const auto root = fq::root_of_unity(g.field(), static_cast<unsigned>(n));
  return age(g, root);
}

}  // namespace wmk::grp
