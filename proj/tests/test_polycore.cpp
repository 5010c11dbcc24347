#include <doctest.h>

#include "poncelet/error.hpp"
#include "poncelet/polycore.hpp"
#include "support.hpp"

using namespace poncelet;
using testing::q;

namespace {

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly f({Rational(1)});
  for (const auto& r : roots) f = f * UniPoly({-r, Rational(1)});
  return f;
}

}  // namespace

TEST_CASE("rational parsing canonicalizes") {
  CHECK(parse_rational("4/4") == 1);
  CHECK(parse_rational("-6/8") == q(-3, 4));
  CHECK(parse_rational("0.25") == q(1, 4));
  CHECK(to_string(q(6, -4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("laurent polynomial arithmetic") {
  const auto p = LaurentPoly3::p(), x = LaurentPoly3::x(), y = LaurentPoly3::y();
  const LaurentPoly3 a = p * x + y * y - LaurentPoly3(1);
  CHECK(a - a == LaurentPoly3());
  CHECK((a * a).evaluate(q(2), q(1, 2), q(3)) == q(81));
  CHECK(LaurentPoly3::parse(a.to_string()) == a);
  CHECK(a.shift_p(-2).min_p() == -2);
  CHECK(poly_div_exact(a * (x + p), x + p) == a);
  CHECK_THROWS_AS(poly_div_exact(a, x + p), Error);
}

TEST_CASE("canonicalize fixes scale and sign") {
  const auto x = LaurentPoly3::x(), y = LaurentPoly3::y();
  const LaurentPoly3 a = x * x + y - LaurentPoly3(3);
  CHECK(canonicalize(q(-5, 3) * a) == canonicalize(a));
  CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
}

TEST_CASE("determinant algorithms agree") {
  const auto p = LaurentPoly3::p(), x = LaurentPoly3::x(), y = LaurentPoly3::y();
  PolyMatrix m = {{p, x, LaurentPoly3(1)}, {x, y * y, p - x}, {LaurentPoly3(2), y, x * p}};
  CHECK(poly_det_bareiss(m) == poly_det_cofactor(m));
  CHECK(poly_det(m) == poly_det_cofactor(m));
}

TEST_CASE("sturm roots with multiplicities") {
  const UniPoly f = from_roots({q(1, 3), q(1, 3), q(-2), q(5, 2), q(5, 2), q(5, 2)});
  const auto roots = sturm_real_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].value == doctest::Approx(-2));
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].value == doctest::Approx(1.0 / 3));
  CHECK(roots[1].multiplicity == 2);
  CHECK(roots[2].multiplicity == 3);
  for (const auto& r : roots) CHECK(r.lo <= r.hi);
}

TEST_CASE("sturm root value is the nearest double") {
  const UniPoly f({q(-2), q(0), q(1)});
  const auto roots = sturm_real_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[1].value == std::sqrt(2.0));
  const Rational fine = refine_root(f, roots[1], q(1, 1000000000));
  CHECK(std::abs(to_double(fine) - std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("exclude_zero drops the root at zero") {
  const UniPoly f = from_roots({q(0), q(1), q(-1)});
  CHECK(sturm_real_roots(f).size() == 3);
  CHECK(sturm_real_roots(f, true).size() == 2);
}

TEST_CASE("square-free decomposition") {
  const UniPoly a = from_roots({q(1)}), b = from_roots({q(2)}), c = from_roots({q(-3)});
  const auto parts = squarefree_decomposition(a * b * b * c * c * c);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == a);
  CHECK(parts[1] == b);
  CHECK(parts[2] == c);
}

TEST_CASE("discriminant formulas agree on random polynomials") {
  testing::RandomRationals rng;
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = 2 + trial % 3;
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(rng.next());
    c.push_back(rng.nonzero());
    const UniPoly f(c);
    CHECK(discriminant_closed_form(f) == discriminant_by_resultant(f));
  }
}

TEST_CASE("discriminant vanishes on repeated roots") {
  CHECK(discriminant(from_roots({q(1), q(1), q(3), q(4)})) == 0);
  CHECK(discriminant(from_roots({q(1), q(2), q(3), q(4)})) > 0);
  CHECK(discriminant(UniPoly({q(1), q(0), q(1)})) < 0);
}

TEST_CASE("gcd and resultant") {
  const UniPoly a = from_roots({q(1), q(2)}), b = from_roots({q(2), q(5)});
  CHECK(gcd(a, b) == from_roots({q(2)}));
  CHECK(resultant(a, b) == 0);
  CHECK(resultant(from_roots({q(1)}), from_roots({q(4)})) != 0);
}
