#include <doctest.h>

#include <cmath>

#include "poncelet/cayley.hpp"
#include "poncelet/classify.hpp"
#include "poncelet/error.hpp"
#include "poncelet/polycore.hpp"
#include "support.hpp"

using namespace poncelet;
using testing::q;

namespace {

UniPoly from_factors(std::initializer_list<UniPoly> fs) {
  UniPoly out({Rational(1)});
  for (const auto& f : fs) out = out * f;
  return out;
}

UniPoly lin(long r) { return UniPoly({q(-r), q(1)}); }
UniPoly quad_irred(long c) { return UniPoly({q(c), q(0), q(1)}); }

QuarticTag tag(const UniPoly& f) { return rees_classify(f).tag; }

}  // namespace

TEST_CASE("rees table on every root pattern") {
  CHECK(tag(from_factors({lin(1), lin(2), lin(3), lin(4)})) == QuarticTag::FourRealSimple);
  CHECK(tag(from_factors({lin(1), lin(2), quad_irred(1)})) == QuarticTag::TwoRealTwoComplex);
  CHECK(tag(from_factors({quad_irred(1), quad_irred(4)})) == QuarticTag::TwoComplexPairs);
  CHECK(tag(from_factors({lin(1), lin(1), lin(2), lin(-3)})) == QuarticTag::RealDoubleTwoRealSimple);
  CHECK(tag(from_factors({lin(1), lin(1), quad_irred(1)})) == QuarticTag::RealDoubleComplexPair);
  CHECK(tag(from_factors({lin(1), lin(1), lin(1), lin(-2)})) == QuarticTag::RealTripleRealSimple);
  CHECK(tag(from_factors({lin(1), lin(1), lin(-2), lin(-2)})) == QuarticTag::TwoRealDoubles);
  CHECK(tag(from_factors({quad_irred(3), quad_irred(3)})) == QuarticTag::ComplexDoublePair);
  CHECK(tag(from_factors({lin(2), lin(2), lin(2), lin(2)})) == QuarticTag::RealQuadruple);
}

TEST_CASE("double root with complex pair and vanishing D") {
  const UniPoly f({q(3645, 16), q(-270), q(135, 2), q(0), q(5)});
  const auto s = rees_classify(f);
  CHECK(s.disc_sign == 0);
  CHECK(s.d_sign == 0);
  CHECK(s.tag == QuarticTag::RealDoubleComplexPair);
  CHECK(s.real_multiplicities() == std::vector<int>{2});
}

TEST_CASE("rees multiplicities match square-free decomposition") {
  testing::RandomRationals rng;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 4; ++i) c.push_back(rng.next(3, 2));
    c.push_back(rng.nonzero(3, 2));
    const UniPoly f(c);
    std::vector<int> mult;
    for (const auto& r : sturm_real_roots(f)) mult.push_back(r.multiplicity);
    std::sort(mult.rbegin(), mult.rend());
    CAPTURE(f.to_string());
    CHECK(rees_classify(f).real_multiplicities() == mult);
  }
}

TEST_CASE("rees rejects non-quartics") {
  CHECK_THROWS_AS(rees_classify(UniPoly({q(1), q(1)})), Error);
  CHECK_THROWS_AS(rees_classify(q(0), q(1), q(1), q(1), q(1)), Error);
}

TEST_CASE("centre parsing") {
  const auto e = Center::parse("3/5,-4/5");
  CHECK(e.on_unit_circle());
  CHECK(e.in_sigma());
  CHECK(Center::parse("0,0").at_focus());
  CHECK_THROWS_AS(Center::parse("1"), Error);
  CHECK_THROWS_AS(Center::parse("1,2,3"), Error);
}

TEST_CASE("quadrilateral pairs") {
  CHECK(unique_p_for_4({q(1, 2), q(0)}) == q(3, 2));
  CHECK(unique_p_for_4({q(2), q(0)}) == q(-3, 2));
  CHECK_THROWS_AS(unique_p_for_4({q(0), q(0)}), Error);
  CHECK_THROWS_AS(unique_p_for_4({q(0), q(1, 2)}), Error);
  CHECK_THROWS_AS(unique_p_for_4({q(3, 5), q(4, 5)}), Error);
  const auto c = pair_classify(4, {q(1, 2), q(0)});
  REQUIRE(c.count == 1);
  CHECK(c.p_roots[0].value == doctest::Approx(1.5));
  CHECK(c.region == "generic");
}

TEST_CASE("isoperiodic centres") {
  CHECK(isoperiodic_n({q(0), q(0)}) == 4);
  CHECK(isoperiodic_n({q(3, 5), q(4, 5)}) == 3);
  CHECK_FALSE(isoperiodic_n({q(1, 3), q(1, 7)}).has_value());
  const auto c = pair_classify(3, {q(0), q(1)});
  CHECK(c.isoperiodic);
  CHECK(c.count == -1);
}

TEST_CASE("pentagon regions and roots") {
  const auto c = pair_classify(5, {q(0), q(2)});
  CHECK(c.region == "Gamma5+");
  REQUIRE(c.count == 2);
  CHECK(c.p_roots[1].value == doctest::Approx(3 * std::sqrt(3.0) / 4));
  const auto on = pair_classify(5, {q(1, 2), q(1, 2)});
  CHECK(on.region == "Gamma5");
  REQUIRE(on.count == 1);
  CHECK(on.p_roots[0].multiplicity == 2);
  CHECK(pair_classify(5, {q(1, 10), q(1, 2)}).count == 0);
  CHECK(pair_classify(5, {q(0), q(1)}).region == "excluded");
}

TEST_CASE("closed forms agree with sturm roots") {
  testing::RandomRationals rng;
  for (int trial = 0; trial < 60; ++trial) {
    const Center e = rng.center_off_sigma();
    for (int n : {5, 6}) {
      const auto cf = n == 5 ? roots_5_closed_form(e) : roots_6_closed_form(e);
      const auto c = pair_classify(n, e);
      CAPTURE(n);
      CAPTURE(to_string(e.x));
      CAPTURE(to_string(e.y));
      if (!cf.real) {
        CHECK(c.count == 0);
        continue;
      }
      for (const auto& r : c.p_roots) {
        const double d = std::min(std::abs(r.value - cf.plus.real()), std::abs(r.value - cf.minus.real()));
        CHECK(d < 1e-9 * std::max(1.0, std::abs(r.value)));
      }
    }
  }
}

TEST_CASE("hexagon double root on its boundary curve") {
  const double x = std::sqrt(15.0) / 8;
  const auto cf = roots_6_closed_form(x, 0.125);
  CHECK(cf.real);
  CHECK(cf.plus.real() == doctest::Approx(9 * std::sqrt(15.0) / 40));
  CHECK(cf.minus.real() == doctest::Approx(9 * std::sqrt(15.0) / 40));
  CHECK_THROWS_AS(roots_6_closed_form(0.0, 0.0), Error);
}

TEST_CASE("heptagon") {
  const auto c = pair_classify(7, {q(0), q(1, 2)});
  CHECK(c.region == "R1-|S1+");
  REQUIRE(c.count == 2);
  CHECK(c.p_roots[0].value == doctest::Approx(-1.42724).epsilon(1e-4));
  CHECK(c.p_roots[1].value == doctest::Approx(1.42724).epsilon(1e-4));
  CHECK_THROWS_AS(pair_classify(8, {q(0), q(1, 2)}), Error);
}

TEST_CASE("heptagon O invariant factorization") {
  const auto coeffs = p_coefficients_descending(locus(7).canonical);
  REQUIRE(coeffs.size() == 5);
  const auto inv = quartic_invariants(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
  const auto x = LaurentPoly3::x(), y = LaurentPoly3::y();
  const LaurentPoly3 u = x * x + y * y;
  const LaurentPoly3 expected = Rational(-16) * u.pow(2) * (u - LaurentPoly3(1)).pow(5) *
                                (Rational(12) * u * u - Rational(13) * u + Rational(12) * x * x + LaurentPoly3(1));
  CHECK(inv.O == expected);
}
