#include "poncelet/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "poncelet/error.hpp"

namespace poncelet {

LaurentPoly3 poly_div_exact(const LaurentPoly3& a, const LaurentPoly3& b) {
  if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.size() == 1 && b.leading().first.x == 0 && b.leading().first.y == 0) {
    return a.shift_p(-b.leading().first.p) / b.leading().second;
  }

  // Clear p-powers so both sides are honest polynomials; a Laurent quotient
  // then exists iff a polynomial one does (p is prime and p does not divide
  // the shifted divisor).
  const int sa = -a.min_p();
  const int sb = -b.min_p();
  LaurentPoly3 rem = a.shift_p(sa);
  const LaurentPoly3 divisor = b.shift_p(sb);
  const auto& [lead_m, lead_c] = divisor.leading();

  std::vector<LaurentPoly3::Term> quotient;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (m.p < lead_m.p || !lead_m.divides(m)) {
      throw Error(ErrorCode::NotDivisible, "nonzero remainder");
    }
    LaurentPoly3::Term t{m / lead_m, c / lead_c};
    rem -= LaurentPoly3::monomial(t.second, t.first) * divisor;
    quotient.push_back(std::move(t));
  }
  return LaurentPoly3::from_terms(std::move(quotient)).shift_p(sb - sa);
}

namespace {

void check_square(const PolyMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::UnsupportedDegree, "empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(ErrorCode::UnsupportedDegree, "matrix is not square");
  }
}

// Laplace expansion along the first unused row, memoized on the set of
// remaining columns.
LaurentPoly3 cofactor_minor(const PolyMatrix& m, std::size_t row, unsigned cols,
                            std::map<unsigned, LaurentPoly3>& memo) {
  const std::size_t n = m.size();
  if (row == n) return LaurentPoly3(1);
  if (auto it = memo.find(cols); it != memo.end()) return it->second;
  LaurentPoly3 total;
  int parity = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (!(cols & (1u << c))) continue;
    if (!m[row][c].is_zero()) {
      LaurentPoly3 term = m[row][c] * cofactor_minor(m, row + 1, cols & ~(1u << c), memo);
      if (parity & 1) total -= term;
      else total += term;
    }
    ++parity;
  }
  memo.emplace(cols, total);
  return total;
}

}  // namespace

LaurentPoly3 poly_det_cofactor(const PolyMatrix& m) {
  check_square(m);
  std::map<unsigned, LaurentPoly3> memo;
  return cofactor_minor(m, 0, (1u << m.size()) - 1u, memo);
}

LaurentPoly3 poly_det_bareiss(const PolyMatrix& input) {
  check_square(input);
  PolyMatrix a = input;
  const std::size_t n = a.size();
  LaurentPoly3 prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return {};
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = poly_div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

LaurentPoly3 poly_det(const PolyMatrix& m) {
  check_square(m);
  return m.size() <= 4 ? poly_det_cofactor(m) : poly_det_bareiss(m);
}

LaurentPoly3 canonicalize(const LaurentPoly3& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot canonicalize 0");
  LaurentPoly3 out = a.shift_p(-a.min_p());
  Integer den_lcm = 1;
  for (const auto& t : out.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : out.terms()) {
    Integer scaled = t.second.get_num() * (den_lcm / t.second.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (out.leading().second < 0) scale = -scale;
  return out * scale;
}

UniPoly specialize(const LaurentPoly3& a, const Rational& x, const Rational& y) {
  if (a.is_zero()) return {};
  if (a.min_p() < 0) throw Error(ErrorCode::NegativePExponent, "specialize needs a polynomial in p");
  std::vector<Rational> coeffs(static_cast<std::size_t>(a.max_p() + 1), Rational(0));
  for (const auto& [m, c] : a.terms()) {
    coeffs[static_cast<std::size_t>(m.p)] += c * pow(x, static_cast<unsigned>(m.x)) * pow(y, static_cast<unsigned>(m.y));
  }
  return UniPoly(std::move(coeffs));
}

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f};
  if (f.degree() < 1) return seq;
  seq.push_back(f.derivative());
  while (true) {
    UniPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rational& at) {
  int variations = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = s.sign_at(at);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++variations;
    last = sg;
  }
  return variations;
}

namespace {

struct Isolator {
  UniPoly g;  // square-free
  std::vector<UniPoly> seq;
  int multiplicity;

  // Number of roots of g in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return sign_variations(seq, lo) - sign_variations(seq, hi); }
};

struct Isolated {
  const Isolator* owner;
  Rational lo, hi;
  bool exact = false;
};

Rational cauchy_bound(const UniPoly& g) {
  Rational m = 0;
  for (int i = 0; i < g.degree(); ++i) m = std::max(m, Rational(abs(g.coeff(i) / g.leading())));
  return m + 1;
}

// Encloses the exact rational root r in a small interval holding no other
// root, with g nonzero at both ends.
void enclose_exact(const Isolator& iso, Isolated& out, const Rational& r, const Rational& width) {
  Rational delta = width / 4;
  while (iso.count(r - delta, r + delta) != 1 || iso.g.sign_at(r - delta) == 0 || iso.g.sign_at(r + delta) == 0) {
    delta /= 2;
  }
  out.lo = r - delta;
  out.hi = r + delta;
  out.exact = true;
}

// Precondition: exactly one root of g in (lo, hi].
void refine(const Isolator& iso, Isolated& iv, const Rational& width) {
  while (true) {
    if (iso.g.sign_at(iv.hi) == 0) {
      enclose_exact(iso, iv, Rational(iv.hi), width);
      return;
    }
    if (iv.hi - iv.lo < width && iso.g.sign_at(iv.lo) != 0) return;
    Rational mid = (iv.lo + iv.hi) / 2;
    if (iso.count(iv.lo, mid) == 1) iv.hi = mid;
    else iv.lo = mid;
  }
}

void isolate(const Isolator& iso, const Rational& lo, const Rational& hi, int known, std::vector<Isolated>& out) {
  if (known == 0) return;
  if (known == 1) {
    Isolated iv{&iso, lo, hi};
    refine(iso, iv, kRootWidth);
    out.push_back(std::move(iv));
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = iso.count(lo, mid);
  isolate(iso, lo, mid, left, out);
  isolate(iso, mid, hi, known - left, out);
}

// Nearest double to the root: bisection on the sign change of g until the
// bracket is below one ulp.
// get_d truncates; pick whichever neighbouring double is nearer.
double nearest_double(const Rational& r) {
  const double a = r.get_d();
  const double b = std::nextafter(a, sign(r) >= 0 ? HUGE_VAL : -HUGE_VAL);
  return abs(Rational(b) - r) < abs(Rational(a) - r) ? b : a;
}

double polish_value(const Isolated& iv) {
  if (iv.exact) return nearest_double((iv.lo + iv.hi) / 2);
  const UniPoly& g = iv.owner->g;
  Rational lo = iv.lo, hi = iv.hi;
  const int s_lo = g.sign_at(lo);
  for (int it = 0; it < 400; ++it) {
    const double a = lo.get_d(), b = hi.get_d();
    if (a == b || std::nextafter(std::nextafter(a, b), b) >= b) {
      const Rational ulp = abs(Rational(std::nextafter(a, b)) - Rational(a));
      if (hi - lo < ulp / 8) break;
    }
    Rational mid = (lo + hi) / 2;
    const int s = g.sign_at(mid);
    if (s == 0) return nearest_double(mid);
    (s == s_lo ? lo : hi) = mid;
  }
  return nearest_double((lo + hi) / 2);
}

}  // namespace

RootList sturm_real_roots(const UniPoly& f_in, bool exclude_zero) {
  if (f_in.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of 0");
  UniPoly f = f_in;
  if (exclude_zero) {
    std::size_t k = 0;
    while (f.coeffs()[k] == 0) ++k;
    f = UniPoly(std::vector<Rational>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
  }

  std::vector<Isolator> isolators;
  const auto parts = squarefree_decomposition(f);
  isolators.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() >= 1) isolators.push_back({parts[i], sturm_sequence(parts[i]), static_cast<int>(i + 1)});
  }

  std::vector<Isolated> found;
  for (const auto& iso : isolators) {
    Rational bound = cauchy_bound(iso.g);
    isolate(iso, -bound, bound, iso.count(-bound, bound), found);
  }
  std::sort(found.begin(), found.end(), [](const Isolated& a, const Isolated& b) { return a.lo < b.lo; });

  // Roots of different square-free factors are distinct, so overlapping
  // neighbours separate after further refinement.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < found.size(); ++i) {
      if (found[i].hi >= found[i + 1].lo) {
        again = true;
        for (std::size_t j : {i, i + 1}) {
          Rational w = (found[j].hi - found[j].lo) / 2;
          if (found[j].exact) {
            enclose_exact(*found[j].owner, found[j], Rational((found[j].lo + found[j].hi) / 2), w);
          } else {
            refine(*found[j].owner, found[j], w);
          }
        }
      }
    }
    std::sort(found.begin(), found.end(), [](const Isolated& a, const Isolated& b) { return a.lo < b.lo; });
  }

  RootList out;
  out.reserve(found.size());
  for (auto& iv : found) {
    RealRoot r;
    r.lo = iv.lo;
    r.hi = iv.hi;
    r.multiplicity = iv.owner->multiplicity;
    r.value = polish_value(iv);
    out.push_back(std::move(r));
  }
  return out;
}

Rational refine_root(const UniPoly& f, const RealRoot& root, const Rational& width) {
  const UniPoly g = f.divmod(gcd(f, f.derivative())).first;
  Rational lo = root.lo, hi = root.hi;
  const int s_lo = g.sign_at(lo);
  if (s_lo == 0) return lo;
  if (g.sign_at(hi) == 0) return hi;
  if (s_lo == g.sign_at(hi)) throw Error(ErrorCode::CheckFailed, "interval does not bracket a root");
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    const int s = g.sign_at(mid);
    if (s == 0) return mid;
    (s == s_lo ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

Rational discriminant_by_resultant(const UniPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::UnsupportedDegree, "discriminant of a constant");
  Rational d = resultant(f, f.derivative()) / f.leading();
  return (n * (n - 1) / 2) % 2 ? Rational(-d) : d;
}

Rational discriminant_closed_form(const UniPoly& f) {
  const auto& c = f.coeffs();
  switch (f.degree()) {
    case 2: return discriminant_quadratic<Rational>(c[2], c[1], c[0]);
    case 3: return discriminant_cubic<Rational>(c[3], c[2], c[1], c[0]);
    case 4: return discriminant_quartic<Rational>(c[4], c[3], c[2], c[1], c[0]);
    default: throw Error(ErrorCode::UnsupportedDegree, "closed-form discriminant needs degree 2..4");
  }
}

Rational discriminant(const UniPoly& f) {
  Rational closed = discriminant_closed_form(f);
  if (f.degree() == 4 && closed != discriminant_by_resultant(f)) {
    throw Error(ErrorCode::CheckFailed, "quartic discriminant routes disagree for " + f.to_string());
  }
  return closed;
}

std::vector<LaurentPoly3> p_coefficients_descending(const LaurentPoly3& a) {
  if (a.is_zero()) return {};
  if (a.min_p() < 0) throw Error(ErrorCode::NegativePExponent, "expected a polynomial in p");
  std::vector<LaurentPoly3> out(static_cast<std::size_t>(a.max_p() + 1));
  auto by_power = a.coefficients_in_p();
  const int lo = a.min_p();
  for (std::size_t i = 0; i < by_power.size(); ++i) {
    out[out.size() - 1 - (static_cast<std::size_t>(lo) + i)] = by_power[i];
  }
  return out;
}

LaurentPoly3 discriminant_p(const LaurentPoly3& a) {
  auto c = p_coefficients_descending(a);
  switch (static_cast<int>(c.size()) - 1) {
    case 2: return discriminant_quadratic(c[0], c[1], c[2]);
    case 3: return discriminant_cubic(c[0], c[1], c[2], c[3]);
    case 4: return discriminant_quartic(c[0], c[1], c[2], c[3], c[4]);
    default: throw Error(ErrorCode::UnsupportedDegree, "symbolic discriminant needs p-degree 2..4");
  }
}

}  // namespace poncelet
