#include "poncelet/uni_poly.hpp"

#include <algorithm>

#include "poncelet/error.hpp"
#include "poncelet/laurent_poly.hpp"

namespace poncelet {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1), Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const Rational& c) {
  std::vector<Rational> out = a.c_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  return *this * Rational(1 / lc);
}

Rational UniPoly::evaluate(const Rational& p) const {
  Rational out = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * p + *it;
  return out;
}

double UniPoly::evaluate(double p) const {
  double out = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * p + it->get_d();
  return out;
}

std::complex<double> UniPoly::evaluate(std::complex<double> p) const {
  std::complex<double> out = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * p + it->get_d();
  return out;
}

int UniPoly::sign_at(const Rational& p) const { return sgn(evaluate(p)); }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  if (degree() < d.degree()) return {UniPoly{}, *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  const Rational inv_lc = 1 / d.leading();
  for (int k = degree(); k >= d.degree(); --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] * inv_lc;
    if (factor == 0) continue;
    const int shift = k - d.degree();
    quo[static_cast<std::size_t>(shift)] = factor;
    for (int j = 0; j <= d.degree(); ++j) {
      rem[static_cast<std::size_t>(shift + j)] -= factor * d.c_[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string() const {
  std::vector<LaurentPoly3::Term> terms;
  for (int i = 0; i <= degree(); ++i) terms.emplace_back(Monomial{i, 0, 0}, c_[static_cast<std::size_t>(i)]);
  return LaurentPoly3::from_terms(std::move(terms)).to_string();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of 0");
  // Yun's algorithm.
  std::vector<UniPoly> out;
  if (f.degree() == 0) return out;
  UniPoly fm = f.monic();
  UniPoly d = fm.derivative();
  UniPoly a = gcd(fm, d);
  UniPoly b = fm.divmod(a).first;
  UniPoly c = d.divmod(a).first;
  UniPoly e = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = gcd(b, e);
    out.push_back(g);
    b = b.divmod(g).first;
    c = e.divmod(g).first;
    e = c - b.derivative();
  }
  return out;
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() < g.degree()) {
    Rational r = resultant(g, f);
    return (f.degree() * g.degree()) % 2 ? Rational(-r) : r;
  }
  if (g.degree() == 0) return pow(g.leading(), static_cast<unsigned>(f.degree()));
  // res(f, g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} res(g, r)
  UniPoly r = f.divmod(g).second;
  if (r.is_zero()) return 0;
  Rational out = pow(g.leading(), static_cast<unsigned>(f.degree() - r.degree())) * resultant(g, r);
  return (f.degree() * g.degree()) % 2 ? Rational(-out) : out;
}

}  // namespace poncelet
