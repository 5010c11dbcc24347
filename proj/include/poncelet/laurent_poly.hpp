#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poncelet/rational.hpp"

namespace poncelet {

/// Exponent triple of p^ep * x^ex * y^ey. Only the p exponent may be
/// negative. Ordering is lexicographic with p > x > y.
struct Monomial {
  int p = 0;
  int x = 0;
  int y = 0;

  auto operator<=>(const Monomial&) const = default;

  Monomial operator*(const Monomial& o) const { return {p + o.p, x + o.x, y + o.y}; }
  bool divides(const Monomial& o) const { return x <= o.x && y <= o.y; }
  Monomial operator/(const Monomial& o) const { return {p - o.p, x - o.x, y - o.y}; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    auto h = static_cast<std::size_t>(static_cast<unsigned>(m.p + 4096));
    h = h * 1000003u ^ static_cast<std::size_t>(m.x);
    h = h * 1000003u ^ static_cast<std::size_t>(m.y);
    return h;
  }
};

/// Polynomial over Q in x, y that is Laurent in p. Terms are kept sorted in
/// descending lex order with no zero coefficients, so two equal polynomials
/// have identical term vectors.
class LaurentPoly3 {
 public:
  using Term = std::pair<Monomial, Rational>;

  LaurentPoly3() = default;
  LaurentPoly3(const Rational& c);  // NOLINT: implicit constant promotion
  LaurentPoly3(long c) : LaurentPoly3(Rational(c)) {}  // NOLINT

  static LaurentPoly3 monomial(const Rational& c, Monomial m);
  static LaurentPoly3 from_terms(std::vector<Term> terms);
  static LaurentPoly3 p() { return monomial(1, {1, 0, 0}); }
  static LaurentPoly3 x() { return monomial(1, {0, 1, 0}); }
  static LaurentPoly3 y() { return monomial(1, {0, 0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Rational coeff(const Monomial& m) const;

  int min_p() const;
  int max_p() const;
  int degree_x() const;
  int degree_y() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{}); }

  LaurentPoly3 operator-() const;
  LaurentPoly3& operator+=(const LaurentPoly3& o);
  LaurentPoly3& operator-=(const LaurentPoly3& o);
  LaurentPoly3& operator*=(const LaurentPoly3& o);
  LaurentPoly3& operator*=(const Rational& c);
  LaurentPoly3& operator/=(const Rational& c);

  friend LaurentPoly3 operator+(LaurentPoly3 a, const LaurentPoly3& b) { return a += b; }
  friend LaurentPoly3 operator-(LaurentPoly3 a, const LaurentPoly3& b) { return a -= b; }
  friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b);
  friend LaurentPoly3 operator*(LaurentPoly3 a, const Rational& c) { return a *= c; }
  friend LaurentPoly3 operator*(const Rational& c, LaurentPoly3 a) { return a *= c; }
  friend LaurentPoly3 operator/(LaurentPoly3 a, const Rational& c) { return a /= c; }
  friend bool operator==(const LaurentPoly3& a, const LaurentPoly3& b) { return a.terms_ == b.terms_; }

  /// Multiplies by p^k (k may be negative).
  LaurentPoly3 shift_p(int k) const;
  LaurentPoly3 pow(unsigned e) const;

  /// Applies the sign flips p -> -p, x -> -x, y -> -y as requested.
  LaurentPoly3 reflect(bool flip_p, bool flip_x, bool flip_y) const;

  /// Coefficient of p^k as a polynomial in x, y, for k = min_p()..max_p().
  /// Entry i holds the coefficient of p^(min_p() + i).
  std::vector<LaurentPoly3> coefficients_in_p() const;

  Rational evaluate(const Rational& p, const Rational& x, const Rational& y) const;
  double evaluate(double p, double x, double y) const;
  std::complex<double> evaluate(std::complex<double> p, std::complex<double> x, std::complex<double> y) const;

  /// Substitutes a nonzero value for p, leaving a polynomial in x, y.
  LaurentPoly3 substitute_p(const Rational& p) const;

  /// Text form: terms like `3/2*p^-1*x^2*y`, descending lex order, joined
  /// by " + " / " - ". Zero prints as "0".
  std::string to_string() const;
  static LaurentPoly3 parse(std::string_view text);

 private:
  void normalize();

  std::vector<Term> terms_;
};

}  // namespace poncelet
