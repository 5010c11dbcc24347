#include "poncelet/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

using std::abs;
using std::sqrt;

// The same algorithm runs in double and in 113-bit arithmetic; C is the
// complex type, R its real type.
template <class C, class R>
struct Kernel {
  struct P {
    C x;
    C y;
  };
  struct L {
    C a;
    C b;
    C c;
  };

  C cx, cy;
  R p;

  // Bilinear (not Hermitian) product: the circle equation is polynomial.
  static C dot(const C& ax, const C& ay, const C& bx, const C& by) { return ax * bx + ay * by; }
  static R norm2(const C& z) {
    const R a = abs(z);
    return a * a;
  }
  static R to_r(double v) { return R(v); }

  static bool larger(const C& a, const C& b) {
    const R ar = a.real(), br = b.real();
    if (abs(ar - br) > to_r(1e-12) * std::max(to_r(1), R(abs(ar)))) return ar > br;
    return a.imag() > b.imag();
  }

  R circle_residual(const P& v) const {
    const C dx = v.x - cx, dy = v.y - cy;
    return R(abs(dot(dx, dy, dx, dy) - C(1))) / std::max(to_r(1), R(norm2(dx) + norm2(dy)));
  }

  static R line_residual(const L& l, const P& v) {
    const R scale = std::max(to_r(1), R(abs(l.a * v.x) + abs(l.b * v.y) + abs(l.c)));
    return R(abs(l.a * v.x + l.b * v.y + l.c)) / scale;
  }

  L tangent(const C& t) const { return {C(p), -t, (t * t + C(p * p)) / R(2)}; }

  P contact(const C& t) const { return {(t * t - C(p * p)) / C(2 * p), t}; }

  // Outgoing tangent at v, the root farther from `incoming`.
  C outgoing(const P& v, const C& incoming) const {
    const C disc = v.y * v.y - C(2 * p) * v.x - C(p * p);
    const C root = sqrt(disc);
    if (abs(root) < to_r(1e-10) * std::max(to_r(1), R(abs(v.y)))) {
      throw Error(ErrorCode::DegenerateStep, "vertex lies on the parabola");
    }
    const C a = v.y + root, b = v.y - root;
    const R da = abs(a - incoming), db = abs(b - incoming);
    C t;
    if (abs(da - db) > to_r(1e-12) * std::max(to_r(1), da)) {
      t = da > db ? a : b;
    } else {
      t = larger(a, b) ? a : b;
    }
    const C q = t * t - C(2) * v.y * t + C(2 * p) * v.x + C(p * p);
    const C dq = C(2) * t - C(2) * v.y;
    if (abs(dq) > 0) t -= q / dq;
    return t;
  }

  std::pair<P, bool> next(const L& line, const P& cur) const {
    if (circle_residual(cur) > 1e-10) throw Error(ErrorCode::NotOnCircle, "vertex is off the circle");
    if (line_residual(line, cur) > 1e-9) throw Error(ErrorCode::NotOnLine, "vertex is off the line");
    const C dx = -line.b, dy = line.a;
    const C dd = dot(dx, dy, dx, dy);
    if (abs(dd) < to_r(1e-14) * (norm2(dx) + norm2(dy))) throw Error(ErrorCode::DegenerateStep, "isotropic line");
    const C s = C(-2) * dot(dx, dy, cur.x - cx, cur.y - cy) / dd;
    const bool tangent_flag = abs(s) * sqrt(norm2(dx) + norm2(dy)) < 1e-12;
    return {tangent_flag ? cur : P{cur.x + s * dx, cur.y + s * dy}, tangent_flag};
  }

  static Complex down(const C& z) { return {static_cast<double>(R(z.real())), static_cast<double>(R(z.imag()))}; }

  TraceResult trace(const C& start_t, int n) const {
    if (p == 0) throw Error(ErrorCode::DegenerateParabola, "p = 0 is not a parabola");
    if (n < 1) throw Error(ErrorCode::UnsupportedN, "trace needs n >= 1");

    // Start vertex: the tangent at start_t meets the circle twice.
    const P c = contact(start_t);
    const C dx = start_t, dy = C(p);
    const C a = dot(dx, dy, dx, dy);
    if (abs(a) < to_r(1e-14) * (norm2(dx) + norm2(dy))) throw Error(ErrorCode::DegenerateStep, "isotropic start line");
    const C ex = c.x - cx, ey = c.y - cy;
    const C b = dot(dx, dy, ex, ey);
    const C root = sqrt(b * b - a * (dot(ex, ey, ex, ey) - C(1)));
    const C s1 = (-b + root) / a, s2 = (-b - root) / a;
    const P v1{c.x + s1 * dx, c.y + s1 * dy};
    const P v2{c.x + s2 * dx, c.y + s2 * dy};
    const bool pick1 = abs(v1.x - v2.x) > 1e-12 ? larger(v1.x, v2.x) : larger(v1.y, v2.y);

    TraceResult r;
    r.steps = n;
    std::vector<P> verts{pick1 ? v1 : v2};
    R max_line = 0;
    C t = start_t;
    for (int k = 0; k < n; ++k) {
      const L line = tangent(t);
      r.tangency_params.push_back(down(t));
      const P v = verts.back();
      const P nv = next(line, v).first;
      max_line = std::max({max_line, line_residual(line, v), line_residual(line, nv)});
      verts.push_back(nv);
      t = outgoing(nv, t);
      const P& v0 = verts.front();
      if (r.period == 0 && R(abs(nv.x - v0.x) + abs(nv.y - v0.y)) < kClosureTol &&
          R(abs(t - start_t)) < kClosureTol * std::max(to_r(1), R(abs(start_t)))) {
        r.period = k + 1;
      }
    }
    for (const P& v : verts) r.vertices.push_back({down(v.x), down(v.y)});
    const P& v0 = verts.front();
    const P& vn = verts.back();
    const R dxn = abs(vn.x - v0.x), dyn = abs(vn.y - v0.y);
    r.closure_residual = static_cast<double>(R(sqrt(dxn * dxn + dyn * dyn)));
    r.max_line_residual = static_cast<double>(max_line);
    r.closed = r.closure_residual < kClosureTol;
    return r;
  }

  bool closes(int n, int num_starts) const {
    if (n < 3) throw Error(ErrorCode::UnsupportedN, "closure needs n >= 3");
    if (num_starts < 3) throw Error(ErrorCode::UnsupportedN, "closure needs at least three starts");
    int clean = 0;
    bool all = true;
    for (const Complex t : default_starts(num_starts + 8)) {
      if (clean == num_starts) break;
      try {
        const TraceResult r = trace(C(R(t.real()), R(t.imag())), n);
        ++clean;
        all = all && r.closed && r.period == n;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateStep) throw;
      }
    }
    if (clean < 3) throw Error(ErrorCode::DegenerateStep, "fewer than three clean starts");
    return all;
  }
};

using DoubleKernel = Kernel<Complex, double>;
using QuadKernel = Kernel<QuadComplex, Quad>;

DoubleKernel kernel(const Circle& circle, const Parabola& par) { return {circle.cx, circle.cy, par.p}; }

QuadKernel kernel(const PreciseSetup& s) {
  return {QuadComplex(s.cx), QuadComplex(s.cy), s.p};
}

}  // namespace

Quad to_quad(const Rational& r) {
  // Numerator and denominator are exact integers; one rounding in the divide.
  return Quad(r.get_num().get_str()) / Quad(r.get_den().get_str());
}

NormalizedPair normalize(double cx, double cy, double radius, double p) {
  if (!(radius > 0)) throw Error(ErrorCode::SingularInput, "circle radius must be positive");
  if (p == 0) throw Error(ErrorCode::DegenerateParabola, "p = 0 is not a parabola");
  return {Circle{cx / radius, cy / radius}, Parabola{p / radius}};
}

std::array<Complex, 2> tangent_params(const Point2& point, const Parabola& par) {
  if (par.p == 0) throw Error(ErrorCode::DegenerateParabola, "p = 0 is not a parabola");
  const Complex root = std::sqrt(point.y * point.y - 2.0 * par.p * point.x - par.p * par.p);
  return {point.y + root, point.y - root};
}

Line tangent_line(const Parabola& par, Complex t) { return {par.p, -t, (t * t + par.p * par.p) / 2.0}; }

Point2 contact_point(const Parabola& par, Complex t) { return {(t * t - par.p * par.p) / (2.0 * par.p), t}; }

NextVertex next_vertex(const Circle& circle, const Line& line, const Point2& current) {
  const auto [pt, tangent] = kernel(circle, Parabola{1}).next({line.a, line.b, line.c}, {current.x, current.y});
  return {{pt.x, pt.y}, tangent};
}

TraceResult poncelet_trace(const Circle& circle, const Parabola& par, Complex start_t, int n) {
  return kernel(circle, par).trace(start_t, n);
}

TraceResult poncelet_trace(const PreciseSetup& setup, Complex start_t, int n) {
  return kernel(setup).trace(QuadComplex(Quad(start_t.real()), Quad(start_t.imag())), n);
}

std::vector<Complex> default_starts(int count) {
  std::vector<Complex> out;
  for (int j = 0; j < count; ++j) {
    if (j % 2 == 0) {
      out.emplace_back(-1.3 + 0.47 * j, 0.0);
    } else {
      out.emplace_back(0.35 - 0.21 * j, 0.3 + 0.07 * j);
    }
  }
  return out;
}

bool closes_after(const Circle& circle, const Parabola& par, int n, int num_starts) {
  return kernel(circle, par).closes(n, num_starts);
}

bool closes_after(const PreciseSetup& setup, int n, int num_starts) { return kernel(setup).closes(n, num_starts); }

}  // namespace poncelet
