#pragma once

#include "wmk/grp.hpp"
#include "wmk/rational.hpp"
#include "wmk/symq.hpp"

namespace wmk::vfun {

/// Tame stabilizer: v equals the age of the generator acting on a uniformizer.
Rational v_tame(const grp::GroupElem& h);

/// Cyclic cubic Artin-Schreier extension with reduced conductor j:
/// 0 when unramified (j = 0), j + 1 otherwise. Throws when 3 | j > 0.
Rational v_c3(long j);

/// Cyclic extension of degree 2l with v_K(alpha^{2l}) = val in {1, 2, l};
/// r in [1, l-1] is the residue mod l of the generator exponent.
Rational v_c2l(unsigned l, unsigned val, long r);

/// S_3-extension with v_K(alpha^2) = m and Artin-Schreier pole order j over
/// the quadratic subfield. m = 0 needs 3 !| j; m = 1 needs gcd(j, 6) = 1.
Rational v_s3(int m, long j);

struct VandermondeResult {
  bool ok = false;
  symq::QPolynomial determinant;  // over Z, in the indeterminate (printed as q)
  long determinant_mod3 = 0;      // constant term reduced to [0, 3)
};

/// det [[1,1,1],[b+1,b,b-1],[(b+1)^2,b^2,(b-1)^2]] in Z[b]; ok iff it is a
/// constant whose reduction mod 3 is a unit.
VandermondeResult vandermonde_unit_check();

}  // namespace wmk::vfun
