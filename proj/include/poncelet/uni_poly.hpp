#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "poncelet/rational.hpp"

namespace poncelet {

/// Dense univariate polynomial over Q; coefficient i multiplies p^i.
/// The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly monomial(const Rational& c, int degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rational& c);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;

  Rational evaluate(const Rational& p) const;
  double evaluate(double p) const;
  std::complex<double> evaluate(std::complex<double> p) const;
  int sign_at(const Rational& p) const;

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) is 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Square-free decomposition f = lc * prod_i g_i^i with pairwise coprime
/// square-free g_i. Entry i-1 holds g_i (possibly constant 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

/// Resultant over Q via the Euclidean remainder sequence.
Rational resultant(const UniPoly& f, const UniPoly& g);

}  // namespace poncelet
