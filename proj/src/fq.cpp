#include "wmk/fq.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wmk/errors.hpp"

namespace wmk::fq {

namespace {

using Poly3 = std::vector<int>;  // little-endian coefficients in {0,1,2}

int mod3(std::int64_t x) { return static_cast<int>(((x % 3) + 3) % 3); }

void trim(Poly3& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic polynomial f.
Poly3 reduce(Poly3 a, const Poly3& f) {
  const std::size_t d = f.size() - 1;
  trim(a);
  while (a.size() > d) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] = mod3(a[shift + i] - lead * f[i]);
    trim(a);
  }
  return a;
}

Poly3 mulmod(const Poly3& a, const Poly3& b, const Poly3& f) {
  if (a.empty() || b.empty()) return {};
  Poly3 out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod3(out[i + j] + a[i] * b[j]);
  return reduce(std::move(out), f);
}

Poly3 powmod(Poly3 base, std::uint64_t e, const Poly3& f) {
  Poly3 result{1};
  base = reduce(std::move(base), f);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f);
    base = mulmod(base, base, f);
    e >>= 1;
  }
  return result;
}

bool is_one(const Poly3& p) { return p.size() == 1 && p[0] == 1; }

std::uint64_t pow3(int r) {
  std::uint64_t q = 1;
  for (int i = 0; i < r; ++i) q *= 3;
  return q;
}

Poly3 digits(std::uint64_t code, int r) {
  Poly3 out(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(code % 3);
    code /= 3;
  }
  return out;
}

std::uint64_t undigits(const Poly3& p) {
  std::uint64_t code = 0;
  for (std::size_t i = p.size(); i-- > 0;) code = code * 3 + static_cast<std::uint64_t>(p[i]);
  return code;
}

// A monic f of degree r whose root has multiplicative order 3^r - 1 in
// F_3[x]/(f) makes that ring have 3^r - 1 units, hence f is irreducible.
bool is_primitive_modulus(const Poly3& f, std::uint64_t q) {
  if (f[0] == 0) return false;
  const Poly3 x{0, 1};
  if (!is_one(powmod(x, q - 1, f))) return false;
  for (std::uint64_t p : prime_factors(q - 1))
    if (is_one(powmod(x, (q - 1) / p, f))) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned multiplicative_order_mod(std::uint64_t q, unsigned n) {
  if (n == 0 || std::gcd(q, static_cast<std::uint64_t>(n)) != 1)
    throw PreconditionError("multiplicative order undefined: gcd(q, n) != 1");
  if (n == 1) return 1;
  std::uint64_t x = q % n;
  unsigned m = 1;
  while (x != 1) {
    x = (x * q) % n;
    ++m;
  }
  return m;
}

int degree_containing_roots(unsigned n) {
  return static_cast<int>(multiplicative_order_mod(3, n));
}

FieldPtr Field::build(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw PreconditionError("field degree must lie in [1, " + std::to_string(kMaxDegree) + "]");

  auto field = std::shared_ptr<Field>(new Field());
  Field& F = *field;
  F.degree_ = degree;
  const std::uint64_t q = pow3(degree);
  F.order_ = static_cast<Code>(q);

  if (degree == 1) {
    F.modulus_ = {0, 1};
  } else {
    for (std::uint64_t c = 0; c < q; ++c) {
      Poly3 f = digits(c, degree);
      f.push_back(1);
      if (is_primitive_modulus(f, q)) {
        F.modulus_ = std::move(f);
        break;
      }
    }
    if (F.modulus_.empty()) throw InternalError("no primitive modulus found");
  }

  // Slow multiplication used only while building the tables.
  auto slow_mul = [&](Code a, Code b) -> Code {
    if (degree == 1) return static_cast<Code>((a * b) % 3);
    return static_cast<Code>(undigits([&] {
      Poly3 p = mulmod(digits(a, degree), digits(b, degree), F.modulus_);
      p.resize(static_cast<std::size_t>(degree), 0);
      return p;
    }()));
  };
  auto slow_pow = [&](Code a, std::uint64_t e) -> Code {
    Code result = 1;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };
  const auto factors = prime_factors(q - 1);
  auto is_generator = [&](Code a) {
    if (slow_pow(a, q - 1) != 1) return false;
    for (std::uint64_t p : factors)
      if (slow_pow(a, (q - 1) / p) == 1) return false;
    return true;
  };

  for (Code c = 1; c < q; ++c) {
    if (is_generator(c)) {
      F.generator_ = c;
      break;
    }
  }

  F.exp_.assign(q - 1, 0);
  F.log_.assign(q, 0);
  Code x = 1;
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    F.exp_[i] = x;
    F.log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, F.generator_);
  }

  F.neg_.assign(q, 0);
  for (Code a = 0; a < q; ++a) {
    Poly3 d = digits(a, degree);
    for (int& v : d) v = mod3(-v);
    F.neg_[a] = static_cast<Code>(undigits(d));
  }

  // zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0.
  F.zech_.assign(q - 1, -1);
  for (std::uint64_t d = 0; d + 1 < q; ++d) {
    Poly3 s = digits(F.exp_[d], degree);
    s[0] = mod3(s[0] + 1);
    const Code sum = static_cast<Code>(undigits(s));
    F.zech_[d] = sum == 0 ? -1 : static_cast<std::int32_t>(F.log_[sum]);
  }

  F.wp_image_.assign(q, 0);
  for (Code a = 0; a < q; ++a) F.wp_image_[F.wp(a)] = 1;
  F.wp_reps_ = {0};
  for (Code a = 1; a < q && F.wp_reps_.size() < 3; ++a) {
    bool fresh = true;
    for (Code r : F.wp_reps_)
      if (F.in_wp_image(F.sub(a, r))) fresh = false;
    if (fresh) F.wp_reps_.push_back(a);
  }
  if (F.wp_reps_.size() != 3) throw InternalError("k/wp(k) does not have three cosets");

  return field;
}

Code Field::add(Code a, Code b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t la = log_[a];
  const std::uint32_t n = order_ - 1;
  std::uint32_t d = log_[b] + n - la;
  if (d >= n) d -= n;
  const std::int32_t z = zech_[d];
  if (z < 0) return 0;
  std::uint32_t e = la + static_cast<std::uint32_t>(z);
  if (e >= n) e -= n;
  return exp_[e];
}

Code Field::neg(Code a) const { return neg_[a]; }

Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t n = order_ - 1;
  std::uint32_t e = log_[a] + log_[b];
  if (e >= n) e -= n;
  return exp_[e];
}

Code Field::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  const std::uint32_t n = order_ - 1;
  return exp_[(n - log_[a]) % n];
}

Code Field::pow(Code a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = order_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Code a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

std::uint64_t Field::multiplicative_order(Code a) const {
  if (a == 0) throw std::domain_error("order of zero");
  const std::uint64_t n = order_ - 1;
  return n / std::gcd(n, static_cast<std::uint64_t>(log_[a]));
}

bool Field::is_square(Code a) const { return a == 0 || log_[a] % 2 == 0; }

Code Field::cube_root(Code a) const {
  // Frobenius has order r, so its inverse is x -> x^{3^{r-1}}.
  Code x = a;
  for (int i = 0; i + 1 < degree_; ++i) x = mul(mul(x, x), x);
  return x;
}

Code Field::wp(Code a) const { return sub(mul(mul(a, a), a), a); }

int Field::wp_coset_index(Code a) const {
  for (std::size_t i = 0; i < wp_reps_.size(); ++i)
    if (in_wp_image(sub(a, wp_reps_[i]))) return static_cast<int>(i);
  throw InternalError("element lies in no coset of wp(k)");
}

std::vector<int> Field::coefficients(Code a) const { return digits(a, degree_); }

Code Field::from_coefficients(std::span<const int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(degree_))
    throw PreconditionError("coefficient vector has wrong length");
  Poly3 p(coeffs.begin(), coeffs.end());
  for (int& v : p) v = mod3(v);
  return static_cast<Code>(undigits(p));
}

Code Field::from_int(std::int64_t c) const { return static_cast<Code>(mod3(c)); }

FqElem::FqElem(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw PreconditionError("element without a field");
  if (code_ >= field_->order()) throw PreconditionError("element code out of range");
}

namespace {
void require_same(const FqElem& a, const FqElem& b) {
  if (a.field() != b.field()) throw PreconditionError("mixed-field arithmetic");
}
}  // namespace

FqElem FqElem::operator+(const FqElem& o) const {
  require_same(*this, o);
  return {field_, field_->add(code_, o.code_)};
}
FqElem FqElem::operator-(const FqElem& o) const {
  require_same(*this, o);
  return {field_, field_->sub(code_, o.code_)};
}
FqElem FqElem::operator-() const { return {field_, field_->neg(code_)}; }
FqElem FqElem::operator*(const FqElem& o) const {
  require_same(*this, o);
  return {field_, field_->mul(code_, o.code_)};
}
FqElem FqElem::operator/(const FqElem& o) const {
  require_same(*this, o);
  return {field_, field_->div(code_, o.code_)};
}
FqElem FqElem::pow(std::int64_t e) const { return {field_, field_->pow(code_, e)}; }
FqElem FqElem::inverse() const { return {field_, field_->inv(code_)}; }
std::uint64_t FqElem::multiplicative_order() const { return field_->multiplicative_order(code_); }
bool FqElem::operator==(const FqElem& o) const {
  return code_ == o.code_ && field_ == o.field_;
}

FieldPtr build_field(int r) { return Field::build(r); }

FqElem primitive_generator(const FieldPtr& field) { return {field, field->generator()}; }

FqElem wp_map(const FqElem& x) { return {x.field(), x.field()->wp(x.code())}; }

std::vector<FqElem> wp_coset_reps(const FieldPtr& field) {
  std::vector<FqElem> out;
  for (Code c : field->wp_coset_reps()) out.emplace_back(field, c);
  return out;
}

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (big_->degree() % small_->degree() != 0)
    throw PreconditionError("embedding requires the source degree to divide the target degree");
  const Field& S = *small_;
  const Field& B = *big_;
  table_.assign(S.order(), 0);
  if (small_ == big_) {
    std::iota(table_.begin(), table_.end(), Code{0});
    return;
  }
  if (S.degree() == 1) {
    for (Code a = 0; a < 3; ++a) table_[a] = B.from_int(a);
    return;
  }
  // Smallest-code root of the source modulus inside the target.
  Code root = 0;
  bool found = false;
  for (Code c = 0; c < B.order() && !found; ++c) {
    Code value = 0;
    for (std::size_t i = S.modulus().size(); i-- > 0;)
      value = B.add(B.mul(value, c), B.from_int(S.modulus()[i]));
    if (value == 0) {
      root = c;
      found = true;
    }
  }
  if (!found) throw InternalError("source modulus has no root in the target field");
  std::vector<Code> powers(static_cast<std::size_t>(S.degree()));
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = B.mul(powers[i - 1], root);
  for (Code a = 0; a < S.order(); ++a) {
    const auto coeffs = S.coefficients(a);
    Code image = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      image = B.add(image, B.mul(B.from_int(coeffs[i]), powers[i]));
    table_[a] = image;
  }
}

unsigned RootOfUnity::discrete_log(const FqElem& y) const {
  if (y.field() != extension) throw PreconditionError("discrete log: element not in the extension field");
  FqElem x(extension, 1);
  for (unsigned a = 0; a < n; ++a) {
    if (x == y) return a;
    x = x * zeta;
  }
  throw PreconditionError("discrete log: element is not an n-th root of unity");
}

RootOfUnity root_of_unity(const FieldPtr& base, unsigned n) {
  if (n == 0) throw PreconditionError("root of unity order must be positive");
  if (n % 3 == 0) throw PreconditionError("no primitive n-th root of unity in characteristic 3 when 3 | n");
  RootOfUnity out;
  out.base = base;
  out.n = n;
  out.m = multiplicative_order_mod(base->order(), n);
  out.extension = out.m == 1 ? base : build_field(base->degree() * static_cast<int>(out.m));
  out.embedding = Embedding(base, out.extension);
  const std::uint64_t big_q_minus_1 = out.extension->order() - 1;
  out.zeta = FqElem(out.extension, out.extension->exp(big_q_minus_1 / n));
  return out;
}

}  // namespace wmk::fq
