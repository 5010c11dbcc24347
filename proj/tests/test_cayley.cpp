#include <doctest.h>

#include "poncelet/cayley.hpp"
#include "poncelet/error.hpp"
#include "poncelet/polycore.hpp"
#include "support.hpp"

using namespace poncelet;
using testing::q;

TEST_CASE("triangle locus is the unit circle") {
  CHECK(locus(3).canonical == LaurentPoly3::parse("x^2 + y^2 - 1"));
  CHECK(locus(3).divisors_removed.empty());
}

TEST_CASE("quadrilateral locus") {
  CHECK(locus(4).canonical == LaurentPoly3::parse("p*x^2 + p*y^2 + x^3 + x*y^2 - x"));
}

TEST_CASE("locus at a fixed p") {
  const auto at = locus_at_p(5, q(1, 2));
  CHECK(at.max_p() == 0);
  CHECK(canonicalize(at) == canonicalize(locus(5).canonical.substitute_p(q(1, 2))));
}

TEST_CASE("loci are polynomial in p and even in y") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto& c = locus(n).canonical;
    CHECK(c.min_p() >= 0);
    CHECK(c.reflect(false, false, true) == c);
  }
}

TEST_CASE("proper divisors are removed") {
  CHECK(locus(6).divisors_removed == std::vector<int>{3});
  CHECK(locus(8).divisors_removed == std::vector<int>{4});
  CHECK(locus(12).divisors_removed == std::vector<int>{3, 4, 6});
  CHECK(locus(7).divisors_removed.empty());
}

TEST_CASE("hankel ratio for n = 6") {
  const auto ratio = poly_div_exact(hankel_raw(6), hankel_raw(3));
  CHECK(canonicalize(ratio) == locus(6).canonical);
}

TEST_CASE("locus degree in p") {
  CHECK(locus(5).canonical.max_p() == 2);
  CHECK(locus(6).canonical.max_p() == 2);
  CHECK(locus(7).canonical.max_p() == 4);
}

TEST_CASE("pencil coefficients are consistent") {
  const auto pc = pencil_coeffs();
  CHECK_FALSE(pc.delta2.is_zero());
  const auto seq = atilde_sequence(6);
  CHECK(seq.size() == 6);
}

TEST_CASE("p-discriminant of the pentagon locus") {
  const auto d = discriminant_p(locus(5).canonical);
  CHECK(d.max_p() == 0);
  const auto x = LaurentPoly3::x(), y = LaurentPoly3::y();
  const LaurentPoly3 u = x * x + y * y;
  const LaurentPoly3 w = u - LaurentPoly3(1);
  CHECK(canonicalize(d) == canonicalize(w.pow(2) * (u * u - y * y)));
}

TEST_CASE("unsupported n") {
  CHECK_THROWS_AS(locus(2), Error);
}
