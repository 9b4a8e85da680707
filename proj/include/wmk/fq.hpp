#pragma once

// Arithmetic in F_{3^r}.
//
// An element is stored as a dense code: the base-3 integer whose digits are
// its coefficients in the power basis of the modulus root, little-endian.
// Multiplication and addition go through exp/log/Zech tables built from the
// field's primitive generator, so every operation is a handful of lookups.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace wmk::fq {

using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr int kCharacteristic = 3;
  static constexpr int kMaxDegree = 13;

  /// Deterministic: the same degree always yields the same modulus and tables.
  static FieldPtr build(int degree);

  int characteristic() const { return kCharacteristic; }
  int degree() const { return degree_; }
  Code order() const { return order_; }
  /// Little-endian, length degree+1, leading coefficient 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// The primitive generator mu of the multiplicative group.
  Code generator() const { return generator_; }

  Code add(Code a, Code b) const;
  Code neg(Code a) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::int64_t e) const;

  /// Discrete log base the generator; a must be nonzero.
  std::uint32_t log(Code a) const;
  Code exp(std::uint64_t e) const { return exp_[e % (order_ - 1)]; }

  std::uint64_t multiplicative_order(Code a) const;
  bool is_square(Code a) const;
  /// Unique cube root (the Frobenius is bijective).
  Code cube_root(Code a) const;

  /// x -> x^3 - x.
  Code wp(Code a) const;
  bool in_wp_image(Code a) const { return wp_image_[a] != 0; }
  /// {0, r1, r2}: 0 and the smallest codes of the two nonzero cosets of wp(k).
  const std::vector<Code>& wp_coset_reps() const { return wp_reps_; }
  /// Index i with a - reps[i] in wp(k).
  int wp_coset_index(Code a) const;

  std::vector<int> coefficients(Code a) const;
  Code from_coefficients(std::span<const int> coeffs) const;

  /// Code of the element c (an integer mod 3) of the prime field.
  Code from_int(std::int64_t c) const;

 private:
  Field() = default;

  int degree_ = 0;
  Code order_ = 0;
  std::vector<int> modulus_;
  Code generator_ = 0;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
  std::vector<Code> neg_;
  std::vector<char> wp_image_;
  std::vector<Code> wp_reps_;
};

/// Value-semantic element handle; cheap to copy.
class FqElem {
 public:
  FqElem() = default;
  FqElem(FieldPtr field, Code code);

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<int> coefficients() const { return field_->coefficients(code_); }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem pow(std::int64_t e) const;
  FqElem inverse() const;
  std::uint64_t multiplicative_order() const;

  bool operator==(const FqElem& o) const;
  std::strong_ordering operator<=>(const FqElem& o) const { return code_ <=> o.code_; }

 private:
  FieldPtr field_;
  Code code_ = 0;
};

FieldPtr build_field(int r);
FqElem primitive_generator(const FieldPtr& field);
FqElem wp_map(const FqElem& x);
std::vector<FqElem> wp_coset_reps(const FieldPtr& field);

/// Field homomorphism F_{3^r} -> F_{3^{rm}}, realized by sending the modulus
/// root to the smallest-code root of the same modulus in the larger field.
class Embedding {
 public:
  Embedding() = default;
  Embedding(FieldPtr small, FieldPtr big);
  const FieldPtr& source() const { return small_; }
  const FieldPtr& target() const { return big_; }
  Code operator()(Code a) const { return table_[a]; }

 private:
  FieldPtr small_;
  FieldPtr big_;
  std::vector<Code> table_;
};

/// Primitive n-th root of unity over a base field, in the smallest extension
/// F_{q^m} containing mu_n.
struct RootOfUnity {
  FieldPtr base;
  FieldPtr extension;  // identical object to base when m == 1
  unsigned n = 1;
  unsigned m = 1;
  FqElem zeta;
  Embedding embedding;

  /// a in [0, n) with y = zeta^a; throws if y is not an n-th root of unity.
  unsigned discrete_log(const FqElem& y) const;
};

RootOfUnity root_of_unity(const FieldPtr& base, unsigned n);

/// Smallest m >= 1 with q^m = 1 mod n (n coprime to 3).
unsigned multiplicative_order_mod(std::uint64_t q, unsigned n);

/// Smallest r >= 1 with n | 3^r - 1.
int degree_containing_roots(unsigned n);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

}  // namespace wmk::fq
