#include "wmk/vfun.hpp"

#include <array>
#include <numeric>
#include <string>

#include "wmk/errors.hpp"

namespace wmk::vfun {

Rational v_tame(const grp::GroupElem& h) { return grp::age(h); }

Rational v_c3(long j) {
  if (j < 0) throw PreconditionError("conductor must be nonnegative");
  if (j == 0) return 0;
  if (j % 3 == 0) throw PreconditionError("no reduced Artin-Schreier representative with 3 | j");
  return j + 1;
}

Rational v_c2l(unsigned l, unsigned val, long r) {
  if (val == l) return 1;
  if (val != 1 && val != 2) throw PreconditionError("v_K(alpha^{2l}) must be 1, 2 or l");
  if (r < 1 || r > static_cast<long>(l) - 1) throw PreconditionError("r must lie in [1, l-1]");
  // r >= l/2  <=>  2r >= l
  return 2 * r >= static_cast<long>(l) ? 1 : 2;
}

Rational v_s3(int m, long j) {
  if (j <= 0) throw PreconditionError("pole order j must be positive");
  if (m == 0) {
    if (j % 3 == 0) throw PreconditionError("m = 0 needs 3 !| j");
    return ceil_div(j, 3) + ceil_div(2 * j, 3);
  }
  if (m == 1) {
    if (std::gcd(j, 6L) != 1) throw PreconditionError("m = 1 needs gcd(j, 6) = 1");
    return 1 + ceil_div(j, 6) + ceil_div(2 * j - 3, 6);
  }
  throw PreconditionError("m must be 0 or 1");
}

VandermondeResult vandermonde_unit_check() {
  using symq::QPolynomial;
  const QPolynomial b = QPolynomial::q();
  const QPolynomial one(1);
  const std::array<std::array<QPolynomial, 3>, 3> m{{
      {one, one, one},
      {b + one, b, b - one},
      {(b + one).pow(2), b.pow(2), (b - one).pow(2)},
  }};
  auto minor = [&](int c0, int c1) { return m[1][c0] * m[2][c1] - m[1][c1] * m[2][c0]; };
  const QPolynomial det = m[0][0] * minor(1, 2) - m[0][1] * minor(0, 2) + m[0][2] * minor(0, 1);

  VandermondeResult out;
  out.determinant = det;
  const bool constant = det.is_zero() || (det.coeffs().size() == 1 && det.coeffs().begin()->first == 0);
  if (!constant || !is_integer(det.coeff(0))) return out;
  const long c = det.coeff(0).get_num().get_si();
  out.determinant_mod3 = ((c % 3) + 3) % 3;
  out.ok = out.determinant_mod3 != 0;
  return out;
}

}  // namespace wmk::vfun
