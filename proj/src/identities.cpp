#include "poncelet/identities.hpp"

#include <functional>

#include "poncelet/cayley.hpp"
#include "poncelet/classify.hpp"
#include "poncelet/error.hpp"
#include "poncelet/polycore.hpp"

namespace poncelet {

namespace {

struct Vars {
  LaurentPoly3 p = LaurentPoly3::p();
  LaurentPoly3 x = LaurentPoly3::x();
  LaurentPoly3 y = LaurentPoly3::y();
  LaurentPoly3 u = x * x + y * y;
  LaurentPoly3 w = u - LaurentPoly3(1);
};

LaurentPoly3 c(long v) { return LaurentPoly3(v); }

}  // namespace

LaurentPoly3 reference_locus(int n) {
  const Vars v;
  const auto& [p, x, y, u, w] = v;
  switch (n) {
    case 3: return w;
    case 4: return u * p + x * w;
    case 5: return c(4) * u * p.pow(2) + c(4) * x * w * p - w.pow(3);
    case 6:
      return c(4) * u * (u + c(1)) * p.pow(2) + c(4) * x * (c(2) * u + c(1)) * w * p +
             (c(3) * x * x - y * y + c(1)) * w.pow(2);
    case 7:
      return c(16) * u.pow(3) * p.pow(4) + c(48) * x * u.pow(2) * w * p.pow(3) +
             c(4) * u * w.pow(2) * (c(13) * x * x + y * y - c(1)) * p.pow(2) +
             c(4) * x * w.pow(3) * (c(5) * x * x + y * y - c(1)) * p - w.pow(6);
    default: throw Error(ErrorCode::UnsupportedN, "reference loci exist for 3 <= n <= 7");
  }
}

LaurentPoly3 reference_discriminant(int n) {
  const Vars v;
  const auto& [p, x, y, u, w] = v;
  switch (n) {
    case 5: return c(16) * w.pow(2) * (u - y) * (u + y);
    case 6: return c(16) * w.pow(2) * (u.pow(3) - y * y);
    default: throw Error(ErrorCode::UnsupportedN, "reference discriminants exist for n = 5, 6");
  }
}

LaurentPoly3 reference_quartic_invariant(const std::string& which) {
  const Vars v;
  const auto& [p, x, y, u, w] = v;
  if (which == "Disc") return c(-65536) * u.pow(6) * w.pow(15) * psi_polynomial(1);
  if (which == "P") return c(-256) * u.pow(4) * w.pow(2) * psi_polynomial(2);
  if (which == "D") return c(-65536) * u.pow(8) * w.pow(4) * psi_polynomial(3);
  if (which == "O") return c(-16) * u.pow(2) * w.pow(5) * psi_polynomial(4);
  if (which == "R") return c(-4096) * x * u.pow(6) * w.pow(3) * psi_polynomial(5);
  throw Error(ErrorCode::Parse, "unknown quartic invariant '" + which + "'");
}

namespace {

IdentityResult compare(std::string group, std::string name, const LaurentPoly3& got, const LaurentPoly3& want) {
  IdentityResult r{std::move(group), std::move(name), got == want, {}};
  if (!r.pass) {
    const LaurentPoly3 diff = got - want;
    r.detail = "difference has " + std::to_string(diff.size()) + " terms, leading " +
               LaurentPoly3::from_terms({diff.leading()}).to_string();
  }
  return r;
}

IdentityResult guarded(const std::string& group, const std::string& name, const std::function<IdentityResult()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {group, name, false, e.what()};
  }
}

}  // namespace

std::vector<IdentityResult> golden_identities() {
  std::vector<IdentityResult> out;
  for (int n = 3; n <= 7; ++n) {
    const std::string name = "Q" + std::to_string(n) + " canonical locus";
    out.push_back(guarded("locus", name, [&] { return compare("locus", name, locus(n).canonical, reference_locus(n)); }));
  }

  const Vars v;
  out.push_back(guarded("example", "Q3 at p = 1/2", [&] {
    return compare("example", "Q3 at p = 1/2", locus_at_p(3, Rational(1, 2)), v.w);
  }));
  out.push_back(guarded("example", "Q4 at p = 1/2", [&] {
    return compare("example", "Q4 at p = 1/2", locus_at_p(4, Rational(1, 2)), v.u + c(2) * v.x * v.w);
  }));

  out.push_back(guarded("factorization", "hankel(6) / hankel(3)", [&] {
    const LaurentPoly3 q = poly_div_exact(hankel_raw(6), hankel_raw(3));
    return compare("factorization", "hankel(6) / hankel(3)", canonicalize(q), reference_locus(6));
  }));

  for (int n : {5, 6}) {
    const std::string name = "Disc_p Q" + std::to_string(n);
    out.push_back(guarded("discriminant", name, [&] {
      return compare("discriminant", name, discriminant_p(locus(n).canonical), reference_discriminant(n));
    }));
  }

  const auto coeffs = p_coefficients_descending(locus(7).canonical);
  const auto inv = quartic_invariants(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
  const std::pair<const char*, const LaurentPoly3*> q7[] = {
      {"Disc", &inv.disc}, {"P", &inv.P}, {"D", &inv.D}, {"O", &inv.O}, {"R", &inv.R}};
  for (const auto& [which, value] : q7) {
    const std::string name = std::string(which) + " of Q7";
    out.push_back(guarded("discriminant", name, [&] {
      return compare("discriminant", name, *value, reference_quartic_invariant(which));
    }));
  }
  return out;
}

}  // namespace poncelet
