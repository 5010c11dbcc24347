// Acceptance suite: one PASS/FAIL line per criterion, exit status = number
// of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "poncelet/cayley.hpp"
#include "poncelet/classify.hpp"
#include "poncelet/error.hpp"
#include "poncelet/geometry.hpp"
#include "poncelet/identities.hpp"
#include "poncelet/painleve.hpp"
#include "poncelet/polycore.hpp"
#include "support.hpp"

using namespace poncelet;
using poncelet::testing::RandomRationals;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << what;
    pass = pass && ok;
  }
};

// The trace oracle runs in 113-bit arithmetic: centres close to the unit
// circle with small p are too ill-conditioned for double at 1e-9.
bool oracle_closes(const Center& e, const Rational& p, int n) {
  return closes_after(PreciseSetup{to_quad(e.x), to_quad(e.y), to_quad(p)}, n, 8);
}

Rational fine_width() {
  Rational w(1);
  for (int i = 0; i < 30; ++i) w /= 10;
  return w;
}

/// Root value accurate far beyond double, as an exact rational.
Rational precise_root(const UniPoly& f, const RealRoot& r) { return refine_root(f, r, fine_width()); }

Outcome identity_group(const std::string& group, const std::function<bool(const IdentityResult&)>& select) {
  Outcome o;
  int checked = 0;
  for (const auto& r : golden_identities()) {
    if (r.group != group || !select(r)) continue;
    ++checked;
    o.require(r.pass, r.name + " differs: " + r.detail);
  }
  o.require(checked > 0, "no identities in group " + group);
  if (o.pass) o.note << checked << " identities exact";
  return o;
}

Outcome criterion1() {
  return identity_group("locus", [](const IdentityResult&) { return true; });
}

Outcome criterion2() {
  return identity_group("example", [](const IdentityResult&) { return true; });
}

Outcome criterion3() {
  Outcome o = identity_group("factorization", [](const IdentityResult&) { return true; });
  o.require(locus(6).divisors_removed == std::vector<int>{3}, "n = 6 should remove exactly the k = 3 factor");
  return o;
}

Outcome criterion4() {
  return identity_group("discriminant", [](const IdentityResult&) { return true; });
}

Outcome criterion5() {
  Outcome o;
  RandomRationals rnd(poncelet::testing::seed() + 5);
  int root_checks = 0, non_root_checks = 0;
  for (int i = 0; i < 100 && o.pass; ++i) {
    const Center e = rnd.center_off_sigma();
    for (int n = 3; n <= 6; ++n) {
      const UniPoly f = p_polynomial(n, e);
      if (f.is_zero()) continue;
      for (const auto& r : sturm_real_roots(f, true)) {
        ++root_checks;
        const bool ok = oracle_closes(e, precise_root(f, r), n);
        o.require(ok, "root p = " + std::to_string(r.value) + " for n = " + std::to_string(n) + " at (" +
                          to_string(e.x) + ", " + to_string(e.y) + ") does not close");
      }
    }
  }
  for (int i = 0; i < 100 && o.pass; ++i) {
    const Center e = rnd.center_off_sigma();
    const int n = 3 + i % 4;
    Rational p;
    do {
      p = rnd.nonzero(24, 8);
    } while (std::abs(to_double(p_polynomial(n, e).evaluate(p))) < 1e-3);
    ++non_root_checks;
    const bool closes = oracle_closes(e, p, n);
    o.require(!closes, "non-root p = " + to_string(p) + " for n = " + std::to_string(n) + " closes");
  }
  if (o.pass) o.note << root_checks << " Cayley roots close, " << non_root_checks << " non-roots stay open";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const Rational ps[] = {testing::q(1, 2), testing::q(-1, 2), 1, -1, 3, -3};
  int found = 0;
  for (int m = 2; found < 20; ++m) {
    for (int k = 1; k < m && found < 20; ++k) {
      if (std::gcd(m, k) != 1) continue;
      const Center e{testing::q(m * m - k * k, m * m + k * k), testing::q(2 * m * k, m * m + k * k)};
      ++found;
      o.require(e.on_unit_circle(), "Pythagorean point off the circle");
      o.require(p_polynomial(3, e).is_zero(), "Q3 does not vanish on the unit circle");
      for (const auto& p : ps) o.require(oracle_closes(e, p, 3), "no 3-closure on the circle");
    }
  }
  const Center focus{0, 0};
  o.require(p_polynomial(4, focus).is_zero(), "Q4 does not vanish at the focus");
  for (const auto& p : ps) o.require(oracle_closes(focus, p, 4), "no 4-closure at the focus");
  RandomRationals rnd(poncelet::testing::seed() + 6);
  for (int i = 0; i < 50; ++i) {
    const Center e = rnd.center_off_sigma();
    for (int n = 5; n <= 7; ++n) o.require(!p_polynomial(n, e).is_zero(), "locus vanishes identically off Sigma");
  }
  if (o.pass) o.note << "20 circle points, focus, 50 generic centres";
  return o;
}

bool has_root(const RootList& roots, double value, int multiplicity) {
  return std::any_of(roots.begin(), roots.end(), [&](const RealRoot& r) {
    return std::abs(r.value - value) < 1e-9 && r.multiplicity == multiplicity;
  });
}

Outcome criterion7() {
  Outcome o;
  const Center e4{2, 0};
  o.require(unique_p_for_4(e4) == Rational(-3, 2), "p* at (2,0) is not -3/2");
  o.require(has_root(sturm_real_roots(p_polynomial(4, e4), true), -1.5, 1), "Sturm misses -3/2");
  o.require(oracle_closes(e4, testing::q(-3, 2), 4), "(2,0), p = -3/2 does not close");

  const Center e5{0, 2};
  const double r5 = 3 * std::sqrt(3.0) / 4;
  const auto cf = roots_5_closed_form(e5);
  o.require(cf.real && std::abs(std::abs(cf.plus.real()) - r5) < 1e-12 && std::abs(cf.plus + cf.minus) < 1e-12,
            "closed form at (0,2) is not +-3 sqrt(3)/4");
  const RootList roots5 = sturm_real_roots(p_polynomial(5, e5), true);
  o.require(roots5.size() == 2 && has_root(roots5, r5, 1) && has_root(roots5, -r5, 1), "Sturm disagrees at (0,2)");
  for (const auto& r : roots5) {
    o.require(oracle_closes(e5, precise_root(p_polynomial(5, e5), r), 5), "(0,2) root does not close");
  }

  const Center eh{Rational(1, 2), Rational(1, 2)};
  const RootList rh = sturm_real_roots(p_polynomial(5, eh), true);
  o.require(rh.size() == 1 && has_root(rh, 0.25, 2), "(1/2,1/2) lacks the double root 1/4");
  o.require(rh.size() == 1 && rh[0].lo <= Rational(1, 4) && Rational(1, 4) <= rh[0].hi, "1/4 not isolated");
  o.require(oracle_closes(eh, testing::q(1, 4), 5), "(1/2,1/2), p = 1/4 does not close");
  if (o.pass) o.note << "closed forms, Sturm and trace agree";
  return o;
}

/// Random quartic with a mix of repeated, real and complex factors.
UniPoly random_quartic(RandomRationals& rnd, int kind) {
  const auto lin = [](const Rational& r) { return UniPoly{-r, 1}; };
  const auto cpx = [&](void) {
    const Rational b = rnd.next(6, 3), c = b * b / 4 + rnd.nonzero(6, 4) * rnd.nonzero(6, 4);
    return UniPoly{c, b, 1};
  };
  const Rational a = rnd.nonzero(9, 4);
  const Rational r1 = rnd.next(6, 3), r2 = rnd.next(6, 3), r3 = rnd.next(6, 3), r4 = rnd.next(6, 3);
  UniPoly f;
  switch (kind % 10) {
    case 0: f = lin(r1) * lin(r2) * lin(r3) * lin(r4); break;
    case 1: f = lin(r1) * lin(r2) * cpx(); break;
    case 2: f = cpx() * cpx(); break;
    case 3: f = lin(r1) * lin(r1) * lin(r2) * lin(r3); break;
    case 4: f = lin(r1) * lin(r1) * cpx(); break;
    case 5: f = lin(r1) * lin(r1) * lin(r1) * lin(r2); break;
    case 6: f = lin(r1) * lin(r1) * lin(r2) * lin(r2); break;
    case 7: {
      const UniPoly q = cpx();
      f = q * q;
      break;
    }
    case 8: f = lin(r1) * lin(r1) * lin(r1) * lin(r1); break;
    default:
      f = UniPoly{rnd.next(), rnd.next(), rnd.next(), rnd.next(), rnd.nonzero()};
      break;
  }
  return f * a;
}

std::vector<int> sturm_profile(const UniPoly& f) {
  std::vector<int> m;
  for (const auto& r : sturm_real_roots(f)) m.push_back(r.multiplicity);
  std::sort(m.rbegin(), m.rend());
  return m;
}

Outcome criterion8() {
  Outcome o;
  RandomRationals rnd(poncelet::testing::seed() + 8);
  for (int i = 0; i < 1000; ++i) {
    const UniPoly f = random_quartic(rnd, i);
    const QuarticShape s = rees_classify(f);
    o.require(s.real_multiplicities() == sturm_profile(f),
              "shape " + std::string(to_string(s.tag)) + " disagrees with Sturm for " + f.to_string());
  }
  o.require(rees_classify(1, 0, -5, 0, 4).tag == QuarticTag::FourRealSimple, "p^4 - 5p^2 + 4");
  o.require(rees_classify(1, 0, 0, 0, 1).tag == QuarticTag::TwoComplexPairs, "p^4 + 1");
  o.require(rees_classify(1, 0, 0, 0, 0).tag == QuarticTag::RealQuadruple, "p^4");
  if (o.pass) o.note << "1000 quartics and 3 worked examples agree";
  return o;
}

Outcome criterion9() {
  Outcome o;
  RandomRationals rnd(poncelet::testing::seed() + 9);
  int nonneg = 0;
  for (int i = 0; i < 500; ++i) {
    const Center e = i % 2 ? rnd.center_off_sigma() : rnd.center_in_disk();
    const UniPoly f = p_polynomial(7, e);
    o.require(f.degree() == 4, "Q7 is not quartic off Sigma");
    if (f.degree() != 4) continue;
    const auto inv = quartic_invariants(f.coeff(4), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    o.require(inv.D < 0, "D >= 0 at (" + to_string(e.x) + ", " + to_string(e.y) + ")");
    if (inv.disc >= 0) {
      ++nonneg;
      o.require(inv.P < 0, "Disc >= 0 but P >= 0");
    }
  }
  if (o.pass) o.note << "500 centres, " << nonneg << " with Disc >= 0";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto check = [&](Family fam, const std::vector<double>& ps, double relation_tol) {
    for (double p : ps) {
      const PVISolutionPoint pt = solution(fam, p);
      const std::string tag = to_string(fam) + " p = " + std::to_string(p);
      o.require(pt.residual_y0 < 1e-7, tag + ": Picard residual " + std::to_string(pt.residual_y0));
      o.require(pt.residual_y < 1e-7, tag + ": Okamoto-image residual " + std::to_string(pt.residual_y));
      o.require(pt.relation_residual < relation_tol, tag + ": algebraic relation");
      o.require(pt.okamoto_residual < 1e-9, tag + ": Okamoto chain");
    }
  };
  try {
    check(Family::N3, {1, 2, 5, -5, -6}, 1e-8);
    check(Family::N4, {2.5, 3, 4, -3}, 1e-9);
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  if (o.pass) o.note << "9 points, all residuals within tolerance";
  return o;
}

Outcome criterion11() {
  Outcome o;
  RandomRationals rnd(poncelet::testing::seed() + 11);
  int two = 0, four = 0;
  for (int i = 0; i < 400; ++i) {
    const Center e = i % 2 ? rnd.center_off_sigma() : rnd.center_in_disk();
    const Rational psi1 = psi_values(e)[0];
    if (psi1 == 0) continue;
    const int count = pair_classify(7, e).count;
    if (psi1 < 0 || e.norm2() > 1) {
      ++two;
      o.require(count == 2, "expected 2 roots at (" + to_string(e.x) + ", " + to_string(e.y) + ")");
    } else {
      ++four;
      o.require(count == 4, "expected 4 roots at (" + to_string(e.x) + ", " + to_string(e.y) + ")");
    }
  }
  o.require(four > 0 && two > 0, "sampling missed a region");
  const RootList r = pair_classify(7, Center{0, Rational(1, 2)}).p_roots;
  o.require(r.size() == 2 && std::abs(r[0].value + 1.42724) < 1e-5 && std::abs(r[1].value - 1.42724) < 1e-5,
            "(0,1/2) roots are not +-1.42724");
  if (o.pass) o.note << two << " two-root and " << four << " four-root centres";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"golden locus identities", criterion1},
      {"loci at p = 1/2", criterion2},
      {"n = 6 factorization", criterion3},
      {"discriminant identities", criterion4},
      {"trace oracle agrees with Cayley", criterion5},
      {"isoperiodicity", criterion6},
      {"closed-form roots", criterion7},
      {"quartic root classification", criterion8},
      {"n = 7 discriminant signs", criterion9},
      {"Painleve VI solutions", criterion10},
      {"n = 7 region counts", criterion11},
  };
  std::cout << "seed " << poncelet::testing::seed() << '\n';
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.note.str() << ", " << std::fixed << std::setprecision(2) << secs << "s)\n"
              << std::defaultfloat;
  }
  return failed;
}
