#pragma once

#include <vector>

#include "poncelet/laurent_poly.hpp"
#include "poncelet/rational.hpp"

namespace poncelet {

/// Coefficients of det(lambda * D(E) + P(p)) = delta1 l^3 + theta1 l^2 +
/// theta2 l + delta2 for the unit circle D centred at E = (x, y) and the
/// parabola y^2 = 2px + p^2.
struct PencilCoeffs {
  LaurentPoly3 delta1;
  LaurentPoly3 theta1;
  LaurentPoly3 theta2;
  LaurentPoly3 delta2;
};

PencilCoeffs pencil_coeffs();

/// Normalized Taylor data of sqrt(f(lambda)): entry k is k! * A0 * A_k,
/// where A_k are the series coefficients and A0^2 = delta2. A0 itself is
/// never formed, so no branch of sqrt(-p^2) is chosen.
class AtildeSequence {
 public:
  explicit AtildeSequence(std::vector<LaurentPoly3> entries) : entries_(std::move(entries)) {}

  /// 1-based, as in the recursion.
  const LaurentPoly3& at(int k) const { return entries_.at(static_cast<std::size_t>(k - 1)); }
  int size() const { return static_cast<int>(entries_.size()); }

 private:
  std::vector<LaurentPoly3> entries_;
};

/// Entries 1..count, memoized process-wide.
AtildeSequence atilde_sequence(int count);

/// Hankel determinant of the normalized coefficients (entry Ã_k / k!):
/// m x m with Ã_{i+j} for n = 2m+1, (m-1) x (m-1) with Ã_{i+j+1} for n = 2m
/// (i, j starting at 1).
LaurentPoly3 hankel_raw(int n);

constexpr int kMaxLocusN = 12;

struct LocusPolynomial {
  int n = 0;
  LaurentPoly3 raw_hankel;
  std::vector<int> divisors_removed;
  LaurentPoly3 canonical;
};

/// Canonical n-Poncelet locus in (p, x, y): the Hankel determinant with the
/// factors belonging to every proper divisor period k (3 <= k < n) divided
/// out. Requires 3 <= n <= kMaxLocusN.
const LocusPolynomial& locus(int n);

/// locus(n) with p fixed, canonicalized as a polynomial in x, y.
LaurentPoly3 locus_at_p(int n, const Rational& p);

}  // namespace poncelet
