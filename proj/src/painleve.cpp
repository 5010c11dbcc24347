#include "poncelet/painleve.hpp"

#include <algorithm>
#include <cmath>

#include "poncelet/error.hpp"

namespace poncelet {

PVIParams picard_params() { return {Rational(0), Rational(0), Rational(0), Rational(1, 2)}; }

PVIParams okamoto_params() { return {Rational(1, 8), Rational(-1, 8), Rational(1, 8), Rational(3, 8)}; }

Jet2 sqrt(const Jet2& a) {
  const Complex s = std::sqrt(a.value);
  const Complex s1 = a.d1 / (2.0 * s);
  return {s, s1, (a.d2 - 2.0 * s1 * s1) / (2.0 * s)};
}

CurveDerivatives curve_derivatives(const Jet2& x, const Jet2& y) {
  return {y.d1 / x.d1, (y.d2 * x.d1 - y.d1 * x.d2) / (x.d1 * x.d1 * x.d1)};
}

namespace {

constexpr double kSingular = 1e-12;

bool near(Complex a, Complex b) { return std::abs(a - b) < kSingular * std::max(1.0, std::abs(b)); }

std::array<Complex, 3> cardano(Complex a, Complex b, Complex c) {
  // Monic lambda^3 + a lambda^2 + b lambda + c.
  const Complex shift = -a / 3.0;
  const Complex pp = b - a * a / 3.0;
  const Complex qq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  std::array<Complex, 3> t;
  const Complex disc = std::sqrt(qq * qq / 4.0 + pp * pp * pp / 27.0);
  Complex inner = -qq / 2.0 + disc;
  if (std::abs(-qq / 2.0 - disc) > std::abs(inner)) inner = -qq / 2.0 - disc;
  const Complex cube = std::pow(inner, 1.0 / 3.0);
  for (int k = 0; k < 3; ++k) {
    const Complex ck = cube * std::pow(omega, k);
    t[static_cast<std::size_t>(k)] = std::abs(ck) == 0 ? Complex(0) : ck - pp / (3.0 * ck);
  }
  std::array<Complex, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    Complex r = t[k] + shift;
    for (int it = 0; it < 3; ++it) {
      const Complex f = ((r + a) * r + b) * r + c;
      const Complex df = (3.0 * r + 2.0 * a) * r + b;
      if (std::abs(df) == 0) break;
      r -= f / df;
    }
    out[k] = r;
  }
  return out;
}

}  // namespace

std::array<Complex, 3> cubic_spectrum(double ex, double ey, Complex p) {
  if (std::abs(p) == 0) throw Error(ErrorCode::DegenerateParabola, "p = 0 is not a parabola");
  if (ex == 1 && ey == 0) {
    const Complex root = std::sqrt(p * p * p * (p + 4.0));
    const Complex mid = -(p * p + 2.0 * p);
    return {Complex(-1), (mid + root) / 2.0, (mid - root) / 2.0};
  }
  if (ex == 0 && ey == 0) {
    const Complex root = std::sqrt(p * p * p * p - 4.0 * p * p);
    return {Complex(-1), (-p * p + root) / 2.0, (-p * p - root) / 2.0};
  }
  // -lambda^3 + theta1 lambda^2 + theta2 lambda + delta2, made monic.
  const Complex theta1 = -p * p - 2.0 * p * ex + ey * ey - 1.0;
  const Complex theta2 = -2.0 * p * p - 2.0 * p * ex;
  const Complex delta2 = -p * p;
  auto roots = cardano(-theta1, -theta2, -delta2);
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  return roots;
}

std::string to_string(Family f) { return f == Family::N3 ? "N3" : "N4"; }

Complex okamoto(Complex y0, Complex dy0_dx, Complex x) {
  const Complex den = x * (x - 1.0) * dy0_dx - y0 * (y0 - 1.0);
  if (std::abs(den) < kSingular) throw Error(ErrorCode::SingularDenominator, "Okamoto denominator vanishes");
  return y0 + y0 * (y0 - 1.0) * (y0 - x) / den;
}

double pvi_residual(Complex x, Complex y, Complex dy_dx, Complex d2y_dx2, const PVIParams& params) {
  if (near(x, 0) || near(x, 1)) throw Error(ErrorCode::SingularInput, "x at a fixed singularity");
  if (near(y, 0) || near(y, 1) || near(y, x)) throw Error(ErrorCode::SingularInput, "y at a pole of the equation");
  const double a = to_double(params.alpha), b = to_double(params.beta);
  const double g = to_double(params.gamma), d = to_double(params.delta);
  const Complex rhs = 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - x)) * dy_dx * dy_dx -
                      (1.0 / x + 1.0 / (x - 1.0) + 1.0 / (y - x)) * dy_dx +
                      y * (y - 1.0) * (y - x) / (x * x * (x - 1.0) * (x - 1.0)) *
                          (a + b * x / (y * y) + g * (x - 1.0) / ((y - 1.0) * (y - 1.0)) +
                           d * x * (x - 1.0) / ((y - x) * (y - x)));
  return std::abs(d2y_dx2 - rhs);
}

double hitchin_residual(Complex x, Complex y) {
  const Complex y2 = y * y, y3 = y2 * y;
  return std::abs(x * y3 * (y + 2.0) + x * x * x * (2.0 * y - 1.0) - x * x * y * (y3 - 2.0 * y2 + 6.0 * y - 2.0) -
                  y2 * y2);
}

namespace {

void fill(PVISolutionPoint& pt, const Jet2& x, const Jet2& y0, const Jet2& y, Complex printed_dy0) {
  pt.x = x.value;
  pt.y0 = y0.value;
  pt.y = y.value;
  const auto c0 = curve_derivatives(x, y0);
  const auto c1 = curve_derivatives(x, y);
  pt.dy0_dx = c0.dy_dx;
  pt.d2y0_dx2 = c0.d2y_dx2;
  pt.dy_dx = c1.dy_dx;
  pt.d2y_dx2 = c1.d2y_dx2;
  if (std::abs(pt.dy0_dx - printed_dy0) > 1e-9 * std::max(1.0, std::abs(printed_dy0))) {
    throw Error(ErrorCode::CheckFailed, "dy0/dx differs from its closed form");
  }
  pt.residual_y0 = pvi_residual(pt.x, pt.y0, pt.dy0_dx, pt.d2y0_dx2, picard_params());
  pt.residual_y = pvi_residual(pt.x, pt.y, pt.dy_dx, pt.d2y_dx2, okamoto_params());
  pt.okamoto_residual = std::abs(okamoto(pt.y0, printed_dy0, pt.x) - pt.y);
}

}  // namespace

PVISolutionPoint solution_n3(Complex p) {
  if (near(p, 0) || near(p, -4)) throw Error(ErrorCode::BranchPoint, "p^3 (p + 4) vanishes");
  if (near(p, -1)) throw Error(ErrorCode::Pole, "y has a pole at p = -1");
  const Jet2 t = Jet2::variable(p);
  const Jet2 s = sqrt(t * t * t * (t + 4.0));
  const Jet2 base = t * t + 2.0 * t;
  const Jet2 x = (base - 2.0 + s) / (2.0 * s);
  const Jet2 y0 = (base + s) / (2.0 * s);
  const Jet2 y = ((base + s) * (-(t * t) - 4.0 * t + 3.0 * s)) / (4.0 * t * (t + 1.0) * s);
  PVISolutionPoint pt;
  pt.family = Family::N3;
  pt.p = p;
  fill(pt, x, y0, y, -p / 3.0);
  pt.relation_residual = hitchin_residual(pt.x, pt.y);
  return pt;
}

PVISolutionPoint solution_n4(Complex p) {
  if (near(p, 0) || near(p, 2) || near(p, -2)) throw Error(ErrorCode::BranchPoint, "p^2 (p^2 - 4) vanishes");
  const Jet2 t = Jet2::variable(p);
  const Jet2 t2 = t * t;
  const Jet2 s = sqrt(t2 * (t2 - 4.0));
  const Jet2 x = (t2 - 2.0 + s) / (2.0 * s);
  const Jet2 y0 = 0.5 * (t2 / s + 1.0);
  const Jet2 y = (t2 + s) / (2.0 * t2);
  PVISolutionPoint pt;
  pt.family = Family::N4;
  pt.p = p;
  fill(pt, x, y0, y, p * p / 2.0);
  const Complex expected = pt.y0 / (2.0 * pt.y0 - 1.0);
  if (std::abs(pt.y - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
    throw Error(ErrorCode::CheckFailed, "y differs from y0 / (2 y0 - 1)");
  }
  pt.relation_residual = std::max(std::abs(pt.y * pt.y - 2.0 * pt.x * pt.y + pt.x),
                                  std::abs(pt.y0 * pt.y0 - 2.0 * pt.x * pt.y0 + pt.x));
  return pt;
}

PVISolutionPoint solution(Family family, Complex p) {
  return family == Family::N3 ? solution_n3(p) : solution_n4(p);
}

FamilySample sample_family(Family family, const std::vector<Complex>& p_values) {
  FamilySample out;
  for (const Complex p : p_values) {
    try {
      PVISolutionPoint pt = solution(family, p);
      out.max_residual = std::max({out.max_residual, pt.residual_y0, pt.residual_y});
      out.max_relation_residual = std::max(out.max_relation_residual, pt.relation_residual);
      out.points.push_back(pt);
    } catch (const Error& e) {
      out.failures.emplace_back(p, e.what());
    }
  }
  return out;
}

}  // namespace poncelet
