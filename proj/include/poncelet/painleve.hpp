#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "poncelet/rational.hpp"

namespace poncelet {

using Complex = std::complex<double>;

struct PVIParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
};

/// (0, 0, 0, 1/2): the Picard equation.
PVIParams picard_params();
/// (1/8, -1/8, 1/8, 3/8): its Okamoto image.
PVIParams okamoto_params();

/// Value with first and second derivative in one variable; arithmetic is
/// the truncated chain rule.
struct Jet2 {
  Complex value;
  Complex d1;
  Complex d2;

  static Jet2 constant(Complex c) { return {c, 0.0, 0.0}; }
  static Jet2 variable(Complex v) { return {v, 1.0, 0.0}; }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2}; }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2}; }
  friend Jet2 operator-(const Jet2& a) { return {-a.value, -a.d1, -a.d2}; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.value * b.value, a.d1 * b.value + a.value * b.d1, a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    const Complex q = a.value / b.value;
    const Complex q1 = (a.d1 - q * b.d1) / b.value;
    return {q, q1, (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.value};
  }
  friend Jet2 operator*(Complex c, const Jet2& a) { return {c * a.value, c * a.d1, c * a.d2}; }
  friend Jet2 operator+(const Jet2& a, Complex c) { return {a.value + c, a.d1, a.d2}; }
  friend Jet2 operator-(const Jet2& a, Complex c) { return {a.value - c, a.d1, a.d2}; }
};

/// Principal square root.
Jet2 sqrt(const Jet2& a);

/// dy/dx and d2y/dx2 for a curve (x(p), y(p)) given as jets in p.
struct CurveDerivatives {
  Complex dy_dx;
  Complex d2y_dx2;
};
CurveDerivatives curve_derivatives(const Jet2& x, const Jet2& y);

/// Zeros of det(lambda D(E) + P(p)) as {lambda_1, lambda_+, lambda_-}. For
/// E = (1,0) and E = (0,0) the closed factorizations are used; otherwise a
/// complex Cardano solve returns the roots ordered by descending real part.
std::array<Complex, 3> cubic_spectrum(double ex, double ey, Complex p);

enum class Family { N3, N4 };

std::string to_string(Family f);

struct PVISolutionPoint {
  Family family = Family::N3;
  Complex p;
  Complex x;
  Complex y0;
  Complex y;
  Complex dy0_dx;
  Complex d2y0_dx2;
  Complex dy_dx;
  Complex d2y_dx2;
  double residual_y0 = 0;  ///< Picard parameters
  double residual_y = 0;   ///< Okamoto-image parameters
  /// Hitchin quartic for N3, y^2 - 2xy + x for N4.
  double relation_residual = 0;
  /// |okamoto(y0, printed dy0/dx, x) - y|.
  double okamoto_residual = 0;
};

/// Circle through the focus, E = (1,0). Throws BranchPoint at p = 0, -4 and
/// Pole at p = -1; CheckFailed if dy0/dx differs from -p/3.
PVISolutionPoint solution_n3(Complex p);

/// Circle centred at the focus. Throws BranchPoint at p = 0, +-2;
/// CheckFailed if dy0/dx differs from p^2/2 or y from y0 / (2 y0 - 1).
PVISolutionPoint solution_n4(Complex p);

PVISolutionPoint solution(Family family, Complex p);

/// y0 + y0 (y0 - 1)(y0 - x) / (x (x - 1) y0' - y0 (y0 - 1)).
Complex okamoto(Complex y0, Complex dy0_dx, Complex x);

/// |y'' - RHS| of the sixth Painleve equation. Throws SingularInput at a
/// pole of the right-hand side.
double pvi_residual(Complex x, Complex y, Complex dy_dx, Complex d2y_dx2, const PVIParams& params);

double hitchin_residual(Complex x, Complex y);

struct FamilySample {
  std::vector<PVISolutionPoint> points;
  std::vector<std::pair<Complex, std::string>> failures;
  double max_residual = 0;  ///< over both PVI residuals
  double max_relation_residual = 0;
};

FamilySample sample_family(Family family, const std::vector<Complex>& p_values);

}  // namespace poncelet
