#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/laurent_poly.hpp"
#include "poncelet/polycore.hpp"
#include "poncelet/rational.hpp"
#include "poncelet/uni_poly.hpp"

namespace poncelet {

/// Centre E = (x, y) of the unit circle, in focus-centred coordinates.
struct Center {
  Rational x;
  Rational y;

  /// "X,Y" with each coordinate in parse_rational() syntax.
  static Center parse(std::string_view text);
  Rational norm2() const { return x * x + y * y; }
  bool on_unit_circle() const { return norm2() == 1; }
  bool at_focus() const { return x == 0 && y == 0; }
  /// S^1 together with the focus.
  bool in_sigma() const { return on_unit_circle() || at_focus(); }
};

enum class QuarticTag {
  FourRealSimple,
  TwoRealTwoComplex,
  TwoComplexPairs,
  RealDoubleTwoRealSimple,
  RealDoubleComplexPair,
  RealTripleRealSimple,
  TwoRealDoubles,
  ComplexDoublePair,
  RealQuadruple,
};

std::string_view to_string(QuarticTag tag);

struct QuarticShape {
  QuarticTag tag;
  int disc_sign = 0;
  int p_sign = 0;
  int d_sign = 0;
  int r_sign = 0;
  int o_sign = 0;

  /// Multiplicities of the distinct real roots implied by the tag,
  /// descending.
  std::vector<int> real_multiplicities() const;
};

/// Root structure of a4 p^4 + ... + a0 decided from exact signs of the
/// discriminant and the auxiliary quantities P, D, R, O (Rees's table).
QuarticShape rees_classify(const Rational& a4, const Rational& a3, const Rational& a2, const Rational& a1,
                           const Rational& a0);
QuarticShape rees_classify(const UniPoly& quartic);

/// locus(n).canonical specialised at E; the zero polynomial when every p works.
UniPoly p_polynomial(int n, const Center& e);

struct PairClassification {
  int n = 0;
  Center center;
  RootList p_roots;  ///< real nonzero roots
  std::string region;
  int count = 0;  ///< distinct real nonzero roots; -1 when every p works
  bool isoperiodic = false;
};

/// Poncelet pairs for 3 <= n <= 7. Region labels come from exact signs:
/// n=3 "S1" / "off-S1"; n=4 "focus" / "S1" / "latus-rectum-line" /
/// "generic"; n>=5 "excluded" on S^1 or the focus, else "Gamma5+",
/// "Gamma5", "Gamma5-" (n=5), "Gamma6+", "Gamma6", "Gamma6-" (n=6),
/// "R1+&S1-", "R1", "R1-|S1+" (n=7).
PairClassification pair_classify(int n, const Center& e);

/// The single p giving a 4-Poncelet pair.
Rational unique_p_for_4(const Center& e);

struct ClosedFormRoots {
  std::complex<double> plus;
  std::complex<double> minus;
  bool real = false;
};

ClosedFormRoots roots_5_closed_form(const Center& e);
ClosedFormRoots roots_6_closed_form(const Center& e);
/// Double-precision variants for centres that are not rational (points
/// on the Gamma curves); reality is then decided in floating point.
ClosedFormRoots roots_5_closed_form(double x, double y);
ClosedFormRoots roots_6_closed_form(double x, double y);

/// 3 on the unit circle, 4 at the focus, nothing otherwise. Cross-checked
/// against the specialised loci for n = 3..7.
std::optional<int> isoperiodic_n(const Center& e);

/// Psi_1..Psi_5 evaluated exactly.
std::array<Rational, 5> psi_values(const Center& e);
/// Psi_j (1 <= j <= 5) as polynomials in x, y.
LaurentPoly3 psi_polynomial(int j);

}  // namespace poncelet
