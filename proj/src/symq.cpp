#include "wmk/symq.hpp"

#include <stdexcept>

#include "wmk/errors.hpp"

namespace wmk::symq {

QPolynomial::QPolynomial(const Rational& constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

QPolynomial::QPolynomial(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& [e, c] : coeffs_) c.canonicalize();
  prune();
}

QPolynomial QPolynomial::monomial(const Rational& c, int exp) { return QPolynomial(Coeffs{{exp, c}}); }

void QPolynomial::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

Rational QPolynomial::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int QPolynomial::degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

int QPolynomial::low_degree() const {
  if (coeffs_.empty()) throw std::domain_error("low degree of the zero polynomial");
  return coeffs_.begin()->first;
}

const Rational& QPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.rbegin()->second;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
  prune();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] -= c;
  prune();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  Coeffs out;
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : o.coeffs_) out[ea + eb] += ca * cb;
  coeffs_ = std::move(out);
  prune();
  return *this;
}

QPolynomial QPolynomial::shift(int k) const {
  Coeffs out;
  for (const auto& [e, c] : coeffs_) out.emplace(e + k, c);
  QPolynomial p;
  p.coeffs_ = std::move(out);
  return p;
}

QPolynomial QPolynomial::pow(unsigned e) const {
  QPolynomial result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rational QPolynomial::eval(const Rational& q0) const {
  Rational total = 0;
  for (const auto& [e, c] : coeffs_) total += c * rpow(q0, e);
  return total;
}

Rational QPolynomial::coefficient_sum() const {
  Rational total = 0;
  for (const auto& [e, c] : coeffs_) total += c;
  return total;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int e = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string cs = wmk::to_string(c);
    if (e == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += is_integer(c) ? cs : "(" + cs + ")";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!a.is_polynomial() || !b.is_polynomial()) throw std::domain_error("divmod needs genuine polynomials");
  QPolynomial quotient, remainder = a;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!remainder.is_zero() && remainder.degree() >= db) {
    const QPolynomial step = QPolynomial::monomial(remainder.leading() / lb, remainder.degree() - db);
    quotient += step;
    remainder -= step * b;
  }
  return {quotient, remainder};
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  return a * QPolynomial(1 / lead);
}

QRational::QRational(const QPolynomial& p) : num_(p), den_(1) {}

QRational::QRational(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial(1);
    return;
  }
  const int shift = num_.low_degree() - den_.low_degree();
  QPolynomial n = num_.shift(-num_.low_degree());
  QPolynomial d = den_.shift(-den_.low_degree());
  const QPolynomial g = gcd(n, d);
  n = divmod(n, g).first;
  d = divmod(d, g).first;
  const Rational lead = d.leading();
  n *= QPolynomial(1 / lead);
  d *= QPolynomial(1 / lead);
  num_ = n.shift(shift);
  den_ = d;
}

bool QRational::is_polynomial() const { return den_ == QPolynomial(1); }

QPolynomial QRational::as_polynomial() const {
  if (!is_polynomial())
    throw NonPolynomialResult("non-polynomial result " + to_string() + " (residual denominator " +
                              den_.to_string() + ")");
  return num_;
}

Rational QRational::eval(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (d == 0) throw std::domain_error("rational function has a pole at this point");
  return num_.eval(q0) / d;
}

QRational QRational::operator-() const {
  QRational out = *this;
  out.num_ = -out.num_;
  return out;
}

QRational operator+(const QRational& a, const QRational& b) {
  if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
  return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

bool QRational::operator==(const QRational& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string QRational::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational sum_geometric(const QPolynomial& coeff, int base_exp, int ratio_exp) {
  if (ratio_exp < 1) throw DivergentSeries("geometric ratio exponent must be positive");
  const QPolynomial qr = QPolynomial::monomial(1, ratio_exp);
  return QRational(coeff.shift(base_exp + ratio_exp), qr - QPolynomial(1));
}

QRational sum_terms(std::span<const SeriesTerm> terms) {
  QPolynomial finite;
  QRational series;
  for (const auto& t : terms) {
    if (!t.geometric) {
      finite += t.coeff.shift(t.base_exp);
      continue;
    }
    if (t.decay <= 0)
      throw DivergentSeries("geometric term " + t.coeff.to_string() + " * q^" + std::to_string(t.base_exp) +
                            " has nonnegative slope " + std::to_string(-t.decay));
    series += sum_geometric(t.coeff, t.base_exp, t.decay);
  }
  return series + QRational(finite);
}

QPolynomial assemble_terms(std::span<const SeriesTerm> terms) { return sum_terms(terms).as_polynomial(); }

}  // namespace wmk::symq
