#pragma once

// Exact Laurent polynomials and rational functions in one formal variable q.

#include <map>
#include <span>
#include <string>
#include <utility>

#include "wmk/rational.hpp"

namespace wmk::symq {

class QPolynomial {
 public:
  using Coeffs = std::map<int, Rational>;

  QPolynomial() = default;
  QPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QPolynomial(long constant) : QPolynomial(Rational(constant)) {}  // NOLINT
  explicit QPolynomial(Coeffs coeffs);

  static QPolynomial monomial(const Rational& c, int exp);
  static QPolynomial q() { return monomial(1, 1); }

  const Coeffs& coeffs() const { return coeffs_; }
  Rational coeff(int exp) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest / lowest exponent; both throw on the zero polynomial.
  int degree() const;
  int low_degree() const;
  bool is_polynomial() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }
  const Rational& leading() const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Multiplication by q^k.
  QPolynomial shift(int k) const;
  QPolynomial pow(unsigned e) const;
  Rational eval(const Rational& q0) const;
  Rational coefficient_sum() const;

  /// e.g. "q^3 + 4q^2 + 2q", "(2/3)q^3 - q^-1", "0".
  std::string to_string() const;

 private:
  void prune();
  Coeffs coeffs_;
};

/// Euclidean division of genuine polynomials; throws on a zero divisor.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);
/// Monic gcd (zero when both inputs are zero).
QPolynomial gcd(QPolynomial a, QPolynomial b);

class QRational {
 public:
  QRational() : num_(0), den_(1) {}
  QRational(const QPolynomial& p);  // NOLINT(google-explicit-constructor)
  QRational(QPolynomial num, QPolynomial den);

  const QPolynomial& numerator() const { return num_; }
  const QPolynomial& denominator() const { return den_; }
  bool is_polynomial() const;
  /// Laurent polynomial value; throws NonPolynomialResult otherwise.
  QPolynomial as_polynomial() const;
  Rational eval(const Rational& q0) const;

  QRational operator-() const;
  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  bool operator==(const QRational& o) const;

  /// Canonical form: coprime numerator and denominator, the denominator a
  /// monic polynomial with nonzero constant term, every power of q moved into
  /// the (Laurent) numerator. Idempotent.
  void normalize();
  std::string to_string() const;

 private:
  QPolynomial num_;
  QPolynomial den_;
};

/// sum_{r >= 0} coeff * q^base * q^(-ratio * r) = coeff q^base q^ratio / (q^ratio - 1).
QRational sum_geometric(const QPolynomial& coeff, int base_exp, int ratio_exp);

/// One summand of a stringy assembly: coeff * q^base_exp, or the geometric
/// series sum_{r>=0} coeff * q^(base_exp - decay * r) when geometric is set.
struct SeriesTerm {
  QPolynomial coeff;
  int base_exp = 0;
  bool geometric = false;
  int decay = 0;
};

QRational sum_terms(std::span<const SeriesTerm> terms);
/// sum_terms, asserting the total is a polynomial. Throws DivergentSeries on a
/// geometric term with decay <= 0 and NonPolynomialResult on leftover denominators.
QPolynomial assemble_terms(std::span<const SeriesTerm> terms);

}  // namespace wmk::symq
