#pragma once

#include <vector>

#include "poncelet/laurent_poly.hpp"
#include "poncelet/rational.hpp"
#include "poncelet/uni_poly.hpp"

namespace poncelet {

using PolyMatrix = std::vector<std::vector<LaurentPoly3>>;

/// Returns q with a == b * q. Pure p-power divisors always succeed; anything
/// else must divide exactly or NotDivisible is thrown.
LaurentPoly3 poly_div_exact(const LaurentPoly3& a, const LaurentPoly3& b);

/// Determinant of a square matrix: cofactor expansion up to 4x4, Bareiss
/// fraction-free elimination (with exact division) above that.
LaurentPoly3 poly_det(const PolyMatrix& m);
LaurentPoly3 poly_det_bareiss(const PolyMatrix& m);
LaurentPoly3 poly_det_cofactor(const PolyMatrix& m);

/// Scales `a` by the unique rational times p-power that makes it a primitive
/// integer polynomial with lowest p exponent 0 and a positive leading
/// coefficient in lex order p > x > y.
LaurentPoly3 canonicalize(const LaurentPoly3& a);

/// Substitutes x and y, leaving a polynomial in p. Requires nonnegative p
/// exponents.
UniPoly specialize(const LaurentPoly3& a, const Rational& x, const Rational& y);

struct RealRoot {
  double value = 0;
  int multiplicity = 1;
  Rational lo;  ///< isolating interval [lo, hi]
  Rational hi;
};

using RootList = std::vector<RealRoot>;

/// Interval width reached before a root is reported.
inline const Rational kRootWidth{1, 1000000000000};

/// All distinct real roots, ascending, with multiplicities from the
/// square-free decomposition. Each isolating interval has width below
/// kRootWidth and holds exactly one root of the source polynomial; the
/// square-free factor carrying that root changes sign across it. With
/// `exclude_zero` the root p = 0 is dropped.
RootList sturm_real_roots(const UniPoly& f, bool exclude_zero = false);

/// Shrinks the isolating interval of `root` (a root of `f`) below `width`
/// and returns its midpoint.
Rational refine_root(const UniPoly& f, const RealRoot& root, const Rational& width);

/// Sturm sequence f, f', -rem(...), ... of `f`.
std::vector<UniPoly> sturm_sequence(const UniPoly& f);
int sign_variations(const std::vector<UniPoly>& seq, const Rational& at);

/// Closed-form discriminants for degree 2, 3, 4 (coefficients highest
/// first), generic over any commutative ring with +, -, * and integer
/// scaling.
template <typename T>
T discriminant_quadratic(const T& a, const T& b, const T& c) {
  return b * b - Rational(4) * a * c;
}

template <typename T>
T discriminant_cubic(const T& a, const T& b, const T& c, const T& d) {
  return b * b * c * c - Rational(4) * a * c * c * c - Rational(4) * b * b * b * d - Rational(27) * a * a * d * d +
         Rational(18) * a * b * c * d;
}

template <typename T>
T discriminant_quartic(const T& A, const T& B, const T& C, const T& D, const T& E) {
  const T A2 = A * A, B2 = B * B, C2 = C * C, D2 = D * D, E2 = E * E;
  return B2 * C2 * D2 - Rational(4) * A * C2 * C * D2 - Rational(4) * B2 * B * D2 * D +
         Rational(18) * A * B * C * D2 * D - Rational(27) * A2 * D2 * D2 - Rational(4) * B2 * C2 * C * E +
         Rational(16) * A * C2 * C2 * E + Rational(18) * B2 * B * C * D * E - Rational(80) * A * B * C2 * D * E -
         Rational(6) * A * B2 * D2 * E + Rational(144) * A2 * C * D2 * E - Rational(27) * B2 * B2 * E2 +
         Rational(144) * A * B2 * C * E2 - Rational(128) * A2 * C2 * E2 - Rational(192) * A2 * B * D * E2 +
         Rational(256) * A2 * A * E2 * E;
}

/// Auxiliary quantities of the quartic A p^4 + B p^3 + C p^2 + D p + E used
/// by the root-structure classification.
template <typename T>
struct QuarticInvariants {
  T disc, P, D, R, O;
};

template <typename T>
QuarticInvariants<T> quartic_invariants(const T& A, const T& B, const T& C, const T& D, const T& E) {
  QuarticInvariants<T> q;
  q.disc = discriminant_quartic(A, B, C, D, E);
  q.P = Rational(8) * A * C - Rational(3) * B * B;
  q.D = Rational(-3) * B * B * B * B - Rational(16) * A * A * C * C + Rational(64) * A * A * A * E +
        Rational(16) * A * B * B * C - Rational(16) * A * A * B * D;
  q.R = B * B * B + Rational(8) * A * A * D - Rational(4) * A * B * C;
  q.O = C * C + Rational(12) * A * E - Rational(3) * B * D;
  return q;
}

/// Exact discriminant for degree 2..4. For quartics the closed formula and
/// the resultant route are both evaluated and must agree.
Rational discriminant(const UniPoly& f);
Rational discriminant_closed_form(const UniPoly& f);
/// (-1)^{n(n-1)/2} res(f, f') / lc(f), any degree >= 1.
Rational discriminant_by_resultant(const UniPoly& f);

/// Symbolic discriminant in p of a polynomial whose coefficients are
/// polynomials in x, y (p-degree 2..4, nonnegative p exponents).
LaurentPoly3 discriminant_p(const LaurentPoly3& a);

/// Coefficients of `a` in p, highest first, requiring 0 <= p exponent.
std::vector<LaurentPoly3> p_coefficients_descending(const LaurentPoly3& a);

}  // namespace poncelet
