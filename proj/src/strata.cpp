#include "wmk/strata.hpp"

#include <functional>
#include <stdexcept>

#include "wmk/errors.hpp"
#include "wmk/vfun.hpp"

namespace wmk::strata {

using families::FamilyKind;
using symq::QPolynomial;

std::string to_string(StratumLabel label) { return "S" + std::to_string(static_cast<int>(label)); }

StratumLabel parse_label(const std::string& text) {
  if (text.size() == 2 && text[0] == 'S' && text[1] >= '1' && text[1] <= '8')
    return static_cast<StratumLabel>(text[1] - '0');
  throw std::invalid_argument("bad stratum label: " + text);
}

std::string to_string(InertiaKind kind) {
  switch (kind) {
    case InertiaKind::Trivial: return "TRIVIAL";
    case InertiaKind::C3AS: return "C3_AS";
    case InertiaKind::ClKummer: return "CL_KUMMER";
    case InertiaKind::CllKummer: return "CLL_KUMMER";
    case InertiaKind::C2Kummer: return "C2_KUMMER";
    case InertiaKind::C2l: return "C2L";
    case InertiaKind::S3Mixed: return "S3_MIXED";
    case InertiaKind::C22Kummer: return "C22_KUMMER";
  }
  return "?";
}

QPolynomial Stratum::count_at(long r) const {
  if (const auto* e = std::get_if<ExactCount>(&count)) return e->value;
  const auto& p = std::get<ProgressionCount>(count);
  return p.coeff.shift(static_cast<int>(p.slope * r + p.intercept));
}

std::string Stratum::name() const {
  std::string out = to_string(label);
  if (!part.empty()) out += "/" + part;
  if (const auto* f = std::get_if<FixedIndex>(&sublabel)) return out + "/m=" + std::to_string(f->m);
  const auto& p = std::get<Progression>(sublabel);
  return out + "/j=" + std::to_string(p.modulus) + "r+" + std::to_string(p.residue);
}

namespace {

class TableBuilder {
 public:
  TableBuilder(FamilyKind kind, unsigned l) : kind_(kind), l_(l) {}

  void fixed(StratumLabel label, std::string part, unsigned m, const Rational& count, unsigned long centralizer) {
    if (!is_integer(count) || count < 0)
      throw InternalError("stratum count " + wmk::to_string(count) + " is not a nonnegative integer");
    if (count == 0) return;
    Stratum s = base(label, std::move(part), centralizer);
    s.sublabel = FixedIndex{m};
    s.v = m;
    s.count = ExactCount{QPolynomial(count)};
    out_.push_back(std::move(s));
  }

  /// Members j = modulus * r + residue; count(j) = coeff * q^{exponent(j)}, v = v(j).
  void progression(StratumLabel label, std::string part, unsigned residue, unsigned modulus,
                   const QPolynomial& coeff, const std::function<long(long)>& exponent,
                   const std::function<Rational(long)>& v, unsigned long centralizer) {
    auto j_of = [&](long r) { return static_cast<long>(modulus) * r + residue; };
    const long e0 = exponent(j_of(0));
    const long slope = exponent(j_of(1)) - e0;
    const Rational v0 = v(j_of(0));
    const Rational v_slope = v(j_of(1)) - v0;
    for (long r = 2; r < 12; ++r) {
      if (exponent(j_of(r)) != e0 + slope * r || v(j_of(r)) != v0 + v_slope * r)
        throw InternalError("progression is not affine in r");
    }
    if (slope < 0) throw InternalError("progression count exponent has negative slope");
    if (!is_integer(v_slope)) throw InternalError("progression v-slope is not an integer");
    Stratum s = base(label, std::move(part), centralizer);
    s.sublabel = Progression{residue, modulus};
    s.v = v0;
    s.v_slope = v_slope.get_num().get_si();
    s.count = ProgressionCount{coeff, slope, e0};
    out_.push_back(std::move(s));
  }

  std::vector<Stratum> take() { return std::move(out_); }

 private:
  Stratum base(StratumLabel label, std::string part, unsigned long centralizer) const {
    Stratum s;
    s.family = kind_;
    s.l = l_;
    s.label = label;
    s.part = std::move(part);
    s.centralizer = centralizer;
    return s;
  }

  FamilyKind kind_;
  unsigned l_;
  std::vector<Stratum> out_;
};

Rational R(long n, long d = 1) { return make_rational(n, d); }

/// Cubic Artin-Schreier stratum: unramified part plus the two progressions j = 1, 2 mod 3.
void add_s2(TableBuilder& b, long unramified, const Rational& ramified_scale) {
  b.fixed(StratumLabel::S2, "unramified", 0, unramified, 3);
  const QPolynomial coeff = QPolynomial(ramified_scale) * (QPolynomial::q() - QPolynomial(1));
  auto exponent = [](long j) { return j - floor_div(j, 3) - 1; };
  auto v = [](long j) { return vfun::v_c3(j); };
  for (unsigned c : {1u, 2u}) b.progression(StratumLabel::S2, "ramified", c, 3, coeff, exponent, v, 3);
}

void add_s7(TableBuilder& b) {
  const QPolynomial qm1 = QPolynomial::q() - QPolynomial(1);
  auto exp0 = [](long j) { return j - floor_div(j, 3) - 1; };
  auto v0 = [](long j) { return vfun::v_s3(0, j); };
  for (unsigned c : {1u, 2u}) b.progression(StratumLabel::S7, "m0", c, 3, QPolynomial(R(1, 2)) * qm1, exp0, v0, 1);
  auto exp1 = [](long j) { return j - floor_div(j, 2) - floor_div(j, 3) + floor_div(j, 6) - 1; };
  auto v1 = [](long j) { return vfun::v_s3(1, j); };
  for (unsigned c : {1u, 5u}) b.progression(StratumLabel::S7, "m1", c, 6, qm1, exp1, v1, 1);
}

}  // namespace

std::vector<Stratum> enumerate_strata(FamilyKind kind, unsigned l) {
  families::check_parameters(kind, l);
  TableBuilder b(kind, l);
  const long L = l;
  const long half = L / 2;
  using SL = StratumLabel;
  switch (kind) {
    case FamilyKind::CyclicL:
      b.fixed(SL::S1, "", 0, 1, 3 * l);
      add_s2(b, 2, 3);
      b.fixed(SL::S3, "", 0, R(L - 1, 3), l);
      b.fixed(SL::S3, "", 1, R(L * (L - 1), 6), l);
      b.fixed(SL::S3, "", 2, R(L * (L - 1), 6), l);
      break;
    case FamilyKind::CyclicLL:
      b.fixed(SL::S1, "", 0, 1, 3 * l * l);
      add_s2(b, 2, 3);
      b.fixed(SL::S3, "", 0, R(L * L - 1, 3), l * l);
      b.fixed(SL::S3, "", 1, R(L * (L - 1) * (L + 4), 6), l * l);
      b.fixed(SL::S3, "", 2, R(L * (L - 1) * (L - 2), 6), l * l);
      b.fixed(SL::S4, "", 1, R((L - 1) * (L + 4) * (L * L - L), 6), l * l);
      b.fixed(SL::S4, "", 2, R((L - 1) * (L - 2) * (L * L - L), 6), l * l);
      break;
    case FamilyKind::Sym2:
    case FamilyKind::SymLL:
      b.fixed(SL::S1, "", 0, 1, 6 * l * l);
      add_s2(b, 1, R(3, 2));
      b.fixed(SL::S3, "prime", 0, L - 1, 2 * l * l);
      b.fixed(SL::S3, "prime", 1, L * half, 2 * l * l);
      b.fixed(SL::S3, "prime", 2, L * (L - 1 - half), 2 * l * l);
      b.fixed(SL::S3, "free", 0, R((L - 1) * (L - 2), 6), l * l);
      b.fixed(SL::S3, "free", 1, R(L, 6) * (R((L - 1) * (L + 4), 2) - 3 * half), l * l);
      b.fixed(SL::S3, "free", 2, R(L, 6) * (R((L - 1) * (L - 2), 2) - 3 * (L - 1 - half)), l * l);
      b.fixed(SL::S4, "", 1, R((L - 1) * (L + 4) * (L * L - L), 12), l * l);
      b.fixed(SL::S4, "", 2, R((L - 1) * (L - 2) * (L * L - L), 12), l * l);
      b.fixed(SL::S5, "", 0, 1, 2 * l);
      b.fixed(SL::S5, "", 1, 2, 2 * l);
      if (l == 2) {
        b.fixed(SL::S6, "", 0, 1, 4);
        b.fixed(SL::S6, "", 1, 5, 4);
      } else {
        b.fixed(SL::S6, "", 0, L - 1, 2 * l);
        b.fixed(SL::S6, "", 1, 3 * L * (L - 1) / 2 + 2 * (L - 1), 2 * l);
        b.fixed(SL::S6, "", 2, 3 * L * (L - 1) / 2, 2 * l);
      }
      add_s7(b);
      if (l == 2) b.fixed(SL::S8, "", 1, 3, 4);
      break;
  }
  return b.take();
}

std::vector<Stratum> enumerate_strata(const families::FamilySpec& spec) {
  return enumerate_strata(spec.kind, spec.l);
}

symq::SeriesTerm stratum_term(const Stratum& s) {
  if (s.centralizer == 0) throw InternalError("zero centralizer order in " + s.name());
  if (!is_integer(s.v)) throw InternalError("non-integral v in " + s.name());
  const long v0 = s.v.get_num().get_si();
  const QPolynomial inv_c(make_rational(1, static_cast<std::int64_t>(s.centralizer)));
  symq::SeriesTerm t;
  if (const auto* e = std::get_if<ExactCount>(&s.count)) {
    t.coeff = e->value * inv_c;
    t.base_exp = static_cast<int>(3 - v0);
    return t;
  }
  const auto& p = std::get<ProgressionCount>(s.count);
  t.coeff = p.coeff * inv_c;
  t.base_exp = static_cast<int>(p.intercept + 3 - v0);
  t.geometric = true;
  t.decay = static_cast<int>(s.v_slope - p.slope);
  return t;
}

symq::QRational stratum_contribution(const Stratum& s) {
  const symq::SeriesTerm t = stratum_term(s);
  return symq::sum_terms(std::span<const symq::SeriesTerm>(&t, 1));
}

QPolynomial assemble_stratum_sum(std::span<const Stratum> strata) {
  std::vector<symq::SeriesTerm> terms;
  terms.reserve(strata.size());
  for (const auto& s : strata) terms.push_back(stratum_term(s));
  return symq::assemble_terms(terms);
}

QPolynomial unramified_contribution(std::span<const Stratum> strata) {
  QPolynomial total;
  for (const auto& s : strata)
    if (!s.is_progression() && s.v == 0) total += stratum_contribution(s).as_polynomial();
  return total;
}

Rational descriptor_v(const EtaleClassDescriptor& d, unsigned l) {
  switch (d.kind) {
    case InertiaKind::Trivial: return 0;
    case InertiaKind::C3AS: return vfun::v_c3(d.j);
    case InertiaKind::ClKummer:
    case InertiaKind::C2Kummer: return d.val == 0 ? Rational(0) : vfun::v_tame(d.h);
    case InertiaKind::CllKummer:
    case InertiaKind::C22Kummer: return vfun::v_tame(d.h);
    case InertiaKind::C2l: return d.val == 0 ? Rational(0) : vfun::v_c2l(l, d.val, d.r);
    case InertiaKind::S3Mixed: return vfun::v_s3(d.m, d.j);
  }
  throw InternalError("unknown descriptor kind");
}

std::vector<EtaleClassDescriptor> sample_descriptors(const Stratum& s, const families::Family& fam,
                                                     std::size_t limit) {
  std::vector<EtaleClassDescriptor> out;
  const auto m = s.is_progression() ? 0u : std::get<FixedIndex>(s.sublabel).m;
  const long l = fam.spec.l;
  switch (s.label) {
    case StratumLabel::S1:
      out.push_back({});
      break;
    case StratumLabel::S2:
      if (!s.is_progression()) {
        EtaleClassDescriptor d;
        d.kind = InertiaKind::C3AS;
        out.push_back(d);
      } else {
        const auto p = std::get<Progression>(s.sublabel);
        for (std::size_t r = 0; r < limit; ++r) {
          EtaleClassDescriptor d;
          d.kind = InertiaKind::C3AS;
          d.j = static_cast<long>(p.modulus * r + p.residue);
          out.push_back(d);
        }
      }
      break;
    case StratumLabel::S3:
      // Unramified members have any h; the prime part is parametrized by
      // h = diag(z^a, z^{-2a}, z^a) with a <= floor(l/2) exactly when v = 1.
      if (m == 0 || s.part == "prime") {
        for (long a = 1; a < l && out.size() < limit; ++a) {
          const bool low = 2 * a <= l;
          if (m == 1 && !low) continue;
          if (m == 2 && low) continue;
          EtaleClassDescriptor d;
          d.kind = InertiaKind::ClKummer;
          d.val = m == 0 ? 0 : 1;
          d.h = fam.diag(a, -2 * a, a);
          out.push_back(d);
        }
      }
      break;
    case StratumLabel::S5: {
      EtaleClassDescriptor d;
      d.kind = InertiaKind::C2Kummer;
      d.h = fam.std_mats.T;
      d.val = m == 0 ? 0 : 1;
      out.push_back(d);
      break;
    }
    case StratumLabel::S6:
      if (m == 0) {
        EtaleClassDescriptor d;
        d.kind = InertiaKind::C2l;
        out.push_back(d);
      } else if (l == 2) {
        for (unsigned val : {1u, 2u}) {
          EtaleClassDescriptor d;
          d.kind = InertiaKind::C2l;
          d.val = val;
          d.r = 1;
          out.push_back(d);
        }
      }
      break;
    case StratumLabel::S7: {
      const auto p = std::get<Progression>(s.sublabel);
      for (std::size_t r = 0; r < limit; ++r) {
        EtaleClassDescriptor d;
        d.kind = InertiaKind::S3Mixed;
        d.m = s.part == "m0" ? 0 : 1;
        d.j = static_cast<long>(p.modulus * r + p.residue);
        out.push_back(d);
      }
      break;
    }
    case StratumLabel::S8: {
      const grp::GroupElem T = fam.std_mats.T;
      const grp::GroupElem D = fam.diag(1, 0, 1);
      const std::vector<std::pair<grp::GroupElem, grp::GroupElem>> pairs{{T, D}, {D, T}, {T, D * T}};
      for (const auto& [h1, h2] : pairs) {
        EtaleClassDescriptor d;
        d.kind = InertiaKind::C22Kummer;
        d.h1 = h1;
        d.h = h2;
        out.push_back(d);
      }
      break;
    }
    case StratumLabel::S4:
      break;
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

namespace {
bool two_equal_entries(const grp::GroupElem& g) {
  return g.at(0, 0) == g.at(1, 1) || g.at(0, 0) == g.at(2, 2) || g.at(1, 1) == g.at(2, 2);
}
}  // namespace

std::vector<grp::GroupElem> representative_subgroup(const Stratum& s, const families::Family& fam) {
  const auto& M = fam.std_mats;
  switch (s.label) {
    case StratumLabel::S1: return {};
    case StratumLabel::S2: return {M.S};
    case StratumLabel::S3: {
      const unsigned m = std::get<FixedIndex>(s.sublabel).m;
      for (const auto& g : fam.group.elements()) {
        if (!g.is_diagonal() || g.is_identity()) continue;
        if (s.part == "prime" && !two_equal_entries(g)) continue;
        if (s.part == "free" && two_equal_entries(g)) continue;
        if (m > 0 && grp::age(g) != m) continue;
        return {g};
      }
      throw InternalError("no diagonal element realizes " + s.name());
    }
    case StratumLabel::S4: return {fam.diag(1, -1, 0), fam.diag(0, 1, -1)};
    case StratumLabel::S5: return {M.T};
    case StratumLabel::S6: return {fam.diag(0, 1, -1) * M.T};
    case StratumLabel::S7: return {M.S, M.T};
    case StratumLabel::S8: return {M.T, fam.diag(1, 0, 1)};
  }
  throw InternalError("unknown stratum label");
}

}  // namespace wmk::strata
