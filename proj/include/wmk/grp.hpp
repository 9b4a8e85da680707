#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "wmk/fq.hpp"
#include "wmk/rational.hpp"

namespace wmk::grp {

using fq::Code;
using fq::FieldPtr;

/// A 3x3 matrix over F_q, row-major.
class GroupElem {
 public:
  using Entries = std::array<Code, 9>;

  GroupElem() = default;
  GroupElem(FieldPtr field, const Entries& entries);

  static GroupElem identity(const FieldPtr& field);
  static GroupElem diagonal(const FieldPtr& field, Code a, Code b, Code c);
  /// Entries given as integers mod 3 (for the permutation-type matrices).
  static GroupElem from_ints(const FieldPtr& field, const std::array<int, 9>& entries);

  const FieldPtr& field() const { return field_; }
  const Entries& entries() const { return entries_; }
  Code at(int row, int col) const { return entries_[static_cast<std::size_t>(3 * row + col)]; }
  fq::FqElem elem(int row, int col) const { return {field_, at(row, col)}; }

  GroupElem operator*(const GroupElem& o) const;
  /// Inverse via the adjugate; requires a nonzero determinant.
  GroupElem inverse() const;
  GroupElem pow(std::int64_t e) const;

  Code determinant() const;
  Code trace() const;
  /// Coefficients (c0, c1, c2) with det(xI - g) = x^3 + c2 x^2 + c1 x + c0.
  std::array<Code, 3> characteristic_polynomial() const;
  /// dim ker(g - 1).
  int fixed_space_dimension() const;
  bool is_identity() const;
  bool is_diagonal() const;
  /// Multiplicative order; throws if it exceeds the cap.
  std::uint64_t order(std::uint64_t cap = 1u << 20) const;

  bool operator==(const GroupElem& o) const { return entries_ == o.entries_; }
  std::strong_ordering operator<=>(const GroupElem& o) const { return entries_ <=> o.entries_; }

 private:
  FieldPtr field_;
  Entries entries_{};
};

struct EntriesHash {
  std::size_t operator()(const GroupElem::Entries& e) const noexcept;
};

class MatrixGroup {
 public:
  MatrixGroup() = default;

  /// Wraps a list that is already known to be a group (closed, with identity).
  static MatrixGroup from_elements(FieldPtr field, std::vector<GroupElem> elements,
                                   std::vector<GroupElem> generators);

  const FieldPtr& field() const { return field_; }
  const std::vector<GroupElem>& generators() const { return generators_; }
  const std::vector<GroupElem>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const GroupElem& g) const { return index_.count(g.entries()) != 0; }
  std::size_t index_of(const GroupElem& g) const;

 private:
  FieldPtr field_;
  std::vector<GroupElem> generators_;
  std::vector<GroupElem> elements_;
  std::unordered_map<GroupElem::Entries, std::size_t, EntriesHash> index_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first closure from the identity; generators are applied in
/// ascending matrix order, so the element order is deterministic.
MatrixGroup generate_closure(const FieldPtr& field, std::span<const GroupElem> gens,
                             std::size_t cap = kDefaultClosureCap);
MatrixGroup generate_closure(std::span<const GroupElem> gens, std::size_t cap = kDefaultClosureCap);

struct ConjugacyClass {
  GroupElem representative;  // smallest member
  std::size_t size = 0;
};

/// Classes sorted by representative.
std::vector<ConjugacyClass> conjugacy_classes(const MatrixGroup& group);

/// {g in G : gh = hg for all h in H}; throws if some h is not in G.
MatrixGroup centralizer(const MatrixGroup& group, std::span<const GroupElem> subset);

/// {g in G : g X g^-1 = X} for the subgroup X generated by `subset`.
MatrixGroup normalizer(const MatrixGroup& group, std::span<const GroupElem> subset);

/// True iff no element has a fixed space of dimension exactly 2.
bool is_small(const MatrixGroup& group);

/// Exponents a_i in [0, n) of the eigenvalues zeta^{a_i}, ascending, where
/// zeta = root.zeta^k. root.n must be a multiple of the element order and
/// k must be coprime to root.n.
std::vector<unsigned> eigen_exponents(const GroupElem& g, const fq::RootOfUnity& root,
                                      unsigned k = 1);

/// age(g) = (sum a_i)/n using the deterministic primitive root for n = ord(g).
Rational age(const GroupElem& g);
Rational age(const GroupElem& g, const fq::RootOfUnity& root, unsigned k = 1);

}  // namespace wmk::grp
