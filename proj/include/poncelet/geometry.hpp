#pragma once

#include <array>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <vector>

#include "poncelet/rational.hpp"

namespace poncelet {

using Complex = std::complex<double>;
/// 113-bit binary floating point, for configurations that double cannot
/// resolve to the closure tolerance.
using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;

Quad to_quad(const Rational& r);

struct Point2 {
  Complex x;
  Complex y;
};

/// Circle of radius 1; complex centres allow analytic continuation.
struct Circle {
  Complex cx;
  Complex cy;
};

/// y^2 = 2 p x + p^2, focus at the origin, directrix x = -p.
struct Parabola {
  double p = 1;
};

struct NormalizedPair {
  Circle circle;
  Parabola parabola;
};

/// Rescales the plane by 1/radius so the circle has radius 1; the focus
/// stays at the origin.
NormalizedPair normalize(double cx, double cy, double radius, double p);

/// a x + b y + c = 0.
struct Line {
  Complex a;
  Complex b;
  Complex c;
};

/// Both roots of t^2 - 2 y0 t + (2 p x0 + p^2) = 0, i.e. the contact
/// heights of the two tangents from `point`.
std::array<Complex, 2> tangent_params(const Point2& point, const Parabola& par);

/// Tangent at contact height t: p x - t y + (t^2 + p^2) / 2 = 0.
Line tangent_line(const Parabola& par, Complex t);

/// Contact point ((t^2 - p^2) / (2p), t).
Point2 contact_point(const Parabola& par, Complex t);

struct NextVertex {
  Point2 point;
  bool tangent = false;  ///< line touches the circle at `current`
};

/// Second intersection of `line` with the circle. Throws NotOnCircle,
/// NotOnLine, or DegenerateStep for an isotropic line.
NextVertex next_vertex(const Circle& circle, const Line& line, const Point2& current);

struct TraceResult {
  std::vector<Point2> vertices;        ///< n + 1 entries, the last closing the loop
  std::vector<Complex> tangency_params;  ///< tangent of edge k, n entries
  double closure_residual = 0;
  bool closed = false;
  int steps = 0;
  /// Smallest k >= 1 returning to the starting vertex and tangent, 0 if none.
  int period = 0;
  /// Largest |line(vertex)| over both ends of every edge.
  double max_line_residual = 0;
};

constexpr double kClosureTol = 1e-9;

/// n tangent-chord steps starting on the tangent with contact height
/// start_t. Throws DegenerateStep when a vertex lands on the parabola.
TraceResult poncelet_trace(const Circle& circle, const Parabola& par, Complex start_t, int n);

/// Real circle centre and parabola in 113-bit precision.
struct PreciseSetup {
  Quad cx;
  Quad cy;
  Quad p;
};

/// poncelet_trace in 113-bit arithmetic; results are rounded to double.
TraceResult poncelet_trace(const PreciseSetup& setup, Complex start_t, int n);

/// Deterministic start parameters, real and complex mixed.
std::vector<Complex> default_starts(int count);

/// True iff every clean start traces a polygon of minimal period exactly n.
/// Starts hitting DegenerateStep are skipped; at least three must remain.
bool closes_after(const Circle& circle, const Parabola& par, int n, int num_starts = 8);
bool closes_after(const PreciseSetup& setup, int n, int num_starts = 8);

}  // namespace poncelet
