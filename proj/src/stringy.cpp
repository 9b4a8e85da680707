#include "wmk/stringy.hpp"

#include <set>
#include <utility>
#include <vector>

#include "wmk/errors.hpp"

namespace wmk::stringy {

using families::FamilyKind;
using symq::QPolynomial;

namespace {

QPolynomial cubic(const Rational& a2, const Rational& a1) {
  return QPolynomial(QPolynomial::Coeffs{{3, Rational(1)}, {2, a2}, {1, a1}});
}

/// Truncated power series in t with Laurent-polynomial coefficients in q.
using Series = std::vector<QPolynomial>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// (1 - x t)^{-a} = sum_k binom(a + k - 1, k) x^k t^k, for any integer a.
Series inverse_power(const QPolynomial& x, const Rational& a, std::size_t n) {
  Series out(n);
  Rational binom = 1;
  QPolynomial xk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = xk * QPolynomial(binom);
    binom = binom * (a + static_cast<long>(k)) / static_cast<long>(k + 1);
    xk *= x;
  }
  return out;
}

}  // namespace

QPolynomial theorem_polynomial(FamilyKind kind, unsigned l) {
  families::check_parameters(kind, l);
  const Rational L(l);
  switch (kind) {
    case FamilyKind::CyclicL: return cubic(2 + (L - 1) / 6, (L - 1) / 6);
    case FamilyKind::CyclicLL: return cubic(2 + (L - 1) * (L + 4) / 6, (L - 1) * (L - 2) / 6);
    case FamilyKind::SymLL: return cubic((L + 5) * (L + 7) / 12, (L + 1) * (L + 5) / 12);
    case FamilyKind::Sym2: return cubic(6, 1);
  }
  throw InternalError("unknown family");
}

BigInt corollary_euler(FamilyKind kind, unsigned l) {
  families::check_parameters(kind, l);
  const Rational L(l);
  Rational chi;
  switch (kind) {
    case FamilyKind::CyclicL: chi = 3 + (L - 1) / 3; break;
    case FamilyKind::CyclicLL: chi = 3 + (L * L - 1) / 3; break;
    case FamilyKind::Sym2:
    case FamilyKind::SymLL: chi = (L - 1) * (L - 2) / 6 + 2 * L + 4; break;
  }
  if (!is_integer(chi)) throw InternalError("non-integral Euler characteristic");
  return chi.get_num();
}

StringyReport stringy_point_count(FamilyKind kind, unsigned l) {
  const auto strata = strata::enumerate_strata(kind, l);
  StringyReport rep;
  rep.family = kind;
  rep.l = l;
  rep.polynomial = strata::assemble_stratum_sum(strata);
  rep.euler_characteristic = euler_characteristic(rep.polynomial);
  rep.verification = verify::structural_checks(kind, l);
  return rep;
}

StringyReport stringy_point_count(const families::FamilySpec& spec, Mode mode, verify::Level level) {
  StringyReport rep = stringy_point_count(spec.kind, spec.l);
  rep.r = spec.field->degree();
  if (mode == Mode::Numeric) rep.numeric_value = rep.polynomial.eval(Rational(spec.field->order()));
  rep.verification = verify::run_checks(spec, level);
  return rep;
}

bool TruncatedSum::within_bound() const {
  const Rational gap = exact - partial;
  return gap >= 0 && gap <= tail_bound;
}

TruncatedSum truncated_sum(FamilyKind kind, unsigned l, const Rational& q0, long J) {
  if (J < 0) throw PreconditionError("truncation J must be >= 0");
  if (q0 <= 1) throw PreconditionError("q0 must exceed 1");
  const auto strata = strata::enumerate_strata(kind, l);
  TruncatedSum out;
  for (const auto& s : strata) {
    const auto t = strata::stratum_term(s);
    const Rational c = t.coeff.eval(q0);
    if (!t.geometric) {
      out.partial += c * rpow(q0, t.base_exp);
      continue;
    }
    if (t.decay <= 0) throw DivergentSeries("non-decaying progression " + s.name());
    for (long r = 0; r <= J; ++r) out.partial += c * rpow(q0, t.base_exp - t.decay * r);
    const Rational ratio = rpow(q0, -t.decay);
    out.tail_bound += c * rpow(q0, t.base_exp - t.decay * (J + 1)) / (1 - ratio);
  }
  out.exact = strata::assemble_stratum_sum(strata).eval(q0);
  return out;
}

bool zeta_consistency(const QPolynomial& poly, int order) {
  const auto n = static_cast<std::size_t>(order);
  Series z(n);
  z[0] = 1;
  for (const auto& [i, a] : poly.coeffs()) z = series_mul(z, inverse_power(QPolynomial::monomial(1, i), a, n), n);

  // Z'/Z = L solves Z' = Z * L term by term (Z[0] = 1).
  Series dz(n);
  for (std::size_t k = 1; k < n; ++k) dz[k - 1] = z[k] * QPolynomial(Rational(static_cast<long>(k)));
  Series logd(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    QPolynomial acc = dz[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= z[i] * logd[k - i];
    logd[k] = acc;
  }
  // Coefficient of t^{m-1} must be N(q^m) = sum_i a_i q^{i m}.
  for (std::size_t m = 1; m < n; ++m) {
    QPolynomial nm;
    for (const auto& [i, a] : poly.coeffs()) nm += QPolynomial::monomial(a, i * static_cast<int>(m));
    if (!(logd[m - 1] == nm)) return false;
  }
  return true;
}

BigInt euler_characteristic(const QPolynomial& poly) {
  for (const auto& [e, c] : poly.coeffs()) {
    if (!is_integer(c))
      throw NonIntegerCoefficient("coefficient " + to_string(c) + " of q^" + std::to_string(e) + " is not an integer");
    if (e < 0) throw PreconditionError("point-count polynomial has a negative power of q");
  }
  if (!zeta_consistency(poly, 7)) throw InternalError("zeta-function reconstruction disagrees with the point counts");
  return poly.coefficient_sum().get_num();
}

BigInt partitions(unsigned n, unsigned j) {
  if (j > n) return 0;
  // table[a][b] = P(a, b) for a <= n, b <= j
  std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(j + 1, 0));
  table[0][0] = 1;
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = 1; b <= std::min(a, j); ++b) table[a][b] = table[a - 1][b - 1] + table[a - b][b];
  return table[n][j];
}

MassReport mass_rhs(unsigned n) {
  if (n == 0) throw PreconditionError("mass formula needs n >= 1");
  MassReport rep;
  rep.n = n;
  for (unsigned m = 0; m < n; ++m)
    rep.rhs += QPolynomial::monomial(Rational(partitions(n, n - m)), -static_cast<int>(m));
  return rep;
}

Rational mass_lhs_quadratic(const fq::FieldPtr& field) {
  // K^x / K^x2 is generated by the square class of a unit and the parity of
  // the valuation; each class labels one quadratic etale algebra.
  std::set<std::pair<bool, int>> classes;
  for (fq::Code c = 1; c < field->order(); ++c)
    for (int e = 0; e < 2; ++e) classes.emplace(field->is_square(c), e);
  const Rational q(field->order());
  Rational total;
  for (const auto& [square, e] : classes) {
    (void)square;
    // Every quadratic etale algebra (split or field) has #Aut = 2; disc exponent = valuation parity.
    total += Rational(1, 2) * rpow(q, -e);
  }
  return total;
}

MassReport mass_report(unsigned n, const fq::FieldPtr& field) {
  MassReport rep = mass_rhs(n);
  if (!field) return rep;
  const Rational q(field->order());
  rep.rhs_value = rep.rhs.eval(q);
  if (n == 2) {
    rep.lhs_enumerated = mass_lhs_quadratic(field);
    rep.match = *rep.lhs_enumerated == *rep.rhs_value;
  }
  return rep;
}

}  // namespace wmk::stringy
