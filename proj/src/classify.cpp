#include "poncelet/classify.hpp"

#include <algorithm>
#include <cmath>

#include "poncelet/cayley.hpp"
#include "poncelet/error.hpp"

namespace poncelet {

Center Center::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw Error(ErrorCode::Parse, "centre must look like X,Y");
  }
  return Center{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string_view to_string(QuarticTag tag) {
  switch (tag) {
    case QuarticTag::FourRealSimple: return "FourRealSimple";
    case QuarticTag::TwoRealTwoComplex: return "TwoRealTwoComplex";
    case QuarticTag::TwoComplexPairs: return "TwoComplexPairs";
    case QuarticTag::RealDoubleTwoRealSimple: return "RealDoubleTwoRealSimple";
    case QuarticTag::RealDoubleComplexPair: return "RealDoubleComplexPair";
    case QuarticTag::RealTripleRealSimple: return "RealTripleRealSimple";
    case QuarticTag::TwoRealDoubles: return "TwoRealDoubles";
    case QuarticTag::ComplexDoublePair: return "ComplexDoublePair";
    case QuarticTag::RealQuadruple: return "RealQuadruple";
  }
  return "?";
}

std::vector<int> QuarticShape::real_multiplicities() const {
  switch (tag) {
    case QuarticTag::FourRealSimple: return {1, 1, 1, 1};
    case QuarticTag::TwoRealTwoComplex: return {1, 1};
    case QuarticTag::TwoComplexPairs: return {};
    case QuarticTag::RealDoubleTwoRealSimple: return {2, 1, 1};
    case QuarticTag::RealDoubleComplexPair: return {2};
    case QuarticTag::RealTripleRealSimple: return {3, 1};
    case QuarticTag::TwoRealDoubles: return {2, 2};
    case QuarticTag::ComplexDoublePair: return {};
    case QuarticTag::RealQuadruple: return {4};
  }
  return {};
}

QuarticShape rees_classify(const Rational& a4, const Rational& a3, const Rational& a2, const Rational& a1,
                           const Rational& a0) {
  if (a4 == 0) throw Error(ErrorCode::NotQuartic, "leading coefficient is zero");
  const auto inv = quartic_invariants(a4, a3, a2, a1, a0);
  QuarticShape s{};
  s.disc_sign = sign(inv.disc);
  s.p_sign = sign(inv.P);
  s.d_sign = sign(inv.D);
  s.r_sign = sign(inv.R);
  s.o_sign = sign(inv.O);

  if (s.disc_sign < 0) {
    s.tag = QuarticTag::TwoRealTwoComplex;
  } else if (s.disc_sign > 0) {
    s.tag = (s.p_sign < 0 && s.d_sign < 0) ? QuarticTag::FourRealSimple : QuarticTag::TwoComplexPairs;
  } else if (s.p_sign < 0 && s.d_sign < 0 && s.o_sign > 0) {
    s.tag = QuarticTag::RealDoubleTwoRealSimple;
  } else if ((s.p_sign <= 0 && s.d_sign > 0) ||
             (s.p_sign > 0 && s.o_sign > 0 && (s.d_sign < 0 || s.r_sign != 0))) {
    s.tag = QuarticTag::RealDoubleComplexPair;
  } else if (s.p_sign < 0 && s.o_sign == 0) {
    s.tag = QuarticTag::RealTripleRealSimple;
  } else if (s.d_sign == 0 && s.p_sign < 0) {
    s.tag = QuarticTag::TwoRealDoubles;
  } else if (s.d_sign == 0 && s.p_sign > 0 && s.r_sign == 0) {
    s.tag = QuarticTag::ComplexDoublePair;
  } else if (s.d_sign == 0 && s.o_sign == 0) {
    s.tag = QuarticTag::RealQuadruple;
  } else {
    throw Error(ErrorCode::CheckFailed, "quartic invariants outside the case table");
  }
  return s;
}

QuarticShape rees_classify(const UniPoly& quartic) {
  if (quartic.degree() != 4) throw Error(ErrorCode::NotQuartic, "polynomial is not of degree 4");
  return rees_classify(quartic.coeff(4), quartic.coeff(3), quartic.coeff(2), quartic.coeff(1), quartic.coeff(0));
}

UniPoly p_polynomial(int n, const Center& e) { return specialize(locus(n).canonical, e.x, e.y); }

namespace {

void require_pair_n(int n) {
  if (n < 3 || n > 7) throw Error(ErrorCode::UnsupportedN, "pair classification supports 3 <= n <= 7");
}

std::string region_label(int n, const Center& e) {
  const Rational u = e.norm2();
  switch (n) {
    case 3: return e.on_unit_circle() ? "S1" : "off-S1";
    case 4:
      if (e.at_focus()) return "focus";
      if (e.on_unit_circle()) return "S1";
      if (e.x == 0) return "latus-rectum-line";
      return "generic";
    default: break;
  }
  if (e.in_sigma()) return "excluded";
  if (n == 5) {
    const int s = sign((u - e.y) * (u + e.y));
    return s > 0 ? "Gamma5+" : s == 0 ? "Gamma5" : "Gamma5-";
  }
  if (n == 6) {
    const int s = sign(u * u * u - e.y * e.y);
    return s > 0 ? "Gamma6+" : s == 0 ? "Gamma6" : "Gamma6-";
  }
  const int psi1 = sign(psi_values(e)[0]);
  if (psi1 == 0) return "R1";
  return (psi1 > 0 && u < 1) ? "R1+&S1-" : "R1-|S1+";
}

}  // namespace

PairClassification pair_classify(int n, const Center& e) {
  require_pair_n(n);
  PairClassification out;
  out.n = n;
  out.center = e;
  out.region = region_label(n, e);
  const UniPoly f = p_polynomial(n, e);
  if (f.is_zero()) {
    out.isoperiodic = true;
    out.count = -1;
    return out;
  }
  out.p_roots = sturm_real_roots(f, true);
  out.count = static_cast<int>(out.p_roots.size());
  return out;
}

Rational unique_p_for_4(const Center& e) {
  if (e.at_focus()) throw Error(ErrorCode::AtFocus, "every p gives a 4-pair at the focus");
  if (e.x == 0) throw Error(ErrorCode::OnLatusRectumLine, "no 4-pair for a centre on the latus rectum line");
  if (e.on_unit_circle()) throw Error(ErrorCode::OnUnitCircle, "no 4-pair for a centre on the unit circle");
  const Rational u = e.norm2();
  return -e.x * (u - 1) / u;
}

namespace {

ClosedFormRoots closed_form(double x, double y, bool six, std::optional<bool> exact_real) {
  const double u = x * x + y * y;
  const double inner = six ? u * u * u - y * y : u * u - y * y;
  const double lead = six ? -x * (2 * u + 1) : -x;
  const double scale = six ? (u - 1) / (2 * u * (u + 1)) : (u - 1) / (2 * u);
  ClosedFormRoots r;
  r.real = exact_real.value_or(inner >= 0);
  const std::complex<double> root = r.real ? std::complex<double>(std::sqrt(std::max(inner, 0.0)), 0)
                                           : std::complex<double>(0, std::sqrt(std::max(-inner, 0.0)));
  r.plus = (lead + root) * scale;
  r.minus = (lead - root) * scale;
  return r;
}

void require_off_sigma(const Center& e) {
  if (e.in_sigma()) throw Error(ErrorCode::ExcludedCenter, "centre lies on the unit circle or at the focus");
}

void require_off_sigma(double x, double y) {
  if ((x == 0 && y == 0) || x * x + y * y == 1) {
    throw Error(ErrorCode::ExcludedCenter, "centre lies on the unit circle or at the focus");
  }
}

}  // namespace

ClosedFormRoots roots_5_closed_form(const Center& e) {
  require_off_sigma(e);
  const Rational u = e.norm2();
  return closed_form(to_double(e.x), to_double(e.y), false, sign(u * u - e.y * e.y) >= 0);
}

ClosedFormRoots roots_6_closed_form(const Center& e) {
  require_off_sigma(e);
  const Rational u = e.norm2();
  return closed_form(to_double(e.x), to_double(e.y), true, sign(u * u * u - e.y * e.y) >= 0);
}

ClosedFormRoots roots_5_closed_form(double x, double y) {
  require_off_sigma(x, y);
  return closed_form(x, y, false, std::nullopt);
}

ClosedFormRoots roots_6_closed_form(double x, double y) {
  require_off_sigma(x, y);
  return closed_form(x, y, true, std::nullopt);
}

std::optional<int> isoperiodic_n(const Center& e) {
  std::optional<int> out;
  if (e.on_unit_circle()) out = 3;
  if (e.at_focus()) out = 4;
  for (int n = 3; n <= 7; ++n) {
    const bool vanishes = p_polynomial(n, e).is_zero();
    if (vanishes != (out == n)) {
      throw Error(ErrorCode::CheckFailed, "isoperiodicity disagrees with the locus for n = " + std::to_string(n));
    }
  }
  return out;
}

LaurentPoly3 psi_polynomial(int j) {
  const auto x = LaurentPoly3::x();
  const auto y = LaurentPoly3::y();
  const LaurentPoly3 u = x * x + y * y;
  switch (j) {
    case 1:
      return Rational(16) * u.pow(6) +
             LaurentPoly3::parse(
                 "-x^10 - 71*x^8*y^2 + x^8 - 247*x^6*y^4 + 43*x^6*y^2 - 325*x^4*y^6 + 108*x^4*y^4"
                 " - 23*x^4*y^2 - 188*x^2*y^8 + 91*x^2*y^6 - 2*x^2*y^4 + 3*x^2*y^2 - 40*y^10 + 25*y^8"
                 " + 5*y^6 - 5*y^4 - y^2");
    case 2: return x * x - Rational(2) * y * y + LaurentPoly3(2);
    case 3:
      return Rational(4) * u.pow(3) - Rational(7) * u.pow(2) + Rational(2) * u + Rational(3) * x.pow(4) +
             LaurentPoly3(1);
    case 4: return Rational(12) * u.pow(2) - Rational(13) * u + Rational(12) * y * y + LaurentPoly3(1);
    case 5: return Rational(2) * x * x + y * y - LaurentPoly3(1);
    default: throw Error(ErrorCode::UnsupportedN, "Psi index must be 1..5");
  }
}

std::array<Rational, 5> psi_values(const Center& e) {
  static const std::array<LaurentPoly3, 5> psi = {psi_polynomial(1), psi_polynomial(2), psi_polynomial(3),
                                                  psi_polynomial(4), psi_polynomial(5)};
  std::array<Rational, 5> out;
  for (std::size_t j = 0; j < 5; ++j) out[j] = psi[j].evaluate(Rational(0), e.x, e.y);
  return out;
}

}  // namespace poncelet
