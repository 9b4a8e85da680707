#include "wmk/rational.hpp"

#include <stdexcept>

namespace wmk {

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_den() == 1;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rpow(const Rational& base, long exp) {
  Rational b = base;
  if (exp < 0) {
    if (b == 0) throw std::domain_error("0 raised to a negative power");
    b = 1 / b;
    exp = -exp;
  }
  Rational out(ipow(b.get_num(), static_cast<unsigned long>(exp)),
               ipow(b.get_den(), static_cast<unsigned long>(exp)));
  out.canonicalize();
  return out;
}

}  // namespace wmk
