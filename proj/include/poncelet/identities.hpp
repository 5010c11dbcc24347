#pragma once

#include <string>
#include <vector>

#include "poncelet/laurent_poly.hpp"

namespace poncelet {

/// Closed forms of the n-Poncelet loci, 3 <= n <= 7, as polynomials in
/// (p, x, y) written out term by term.
LaurentPoly3 reference_locus(int n);

/// Closed forms of Disc_p of the n = 5 and n = 6 loci.
LaurentPoly3 reference_discriminant(int n);

/// Factored forms of Disc, P, D, O, R of the n = 7 quartic in p.
/// `which` is one of "Disc", "P", "D", "O", "R".
LaurentPoly3 reference_quartic_invariant(const std::string& which);

struct IdentityResult {
  std::string group;  ///< "locus", "example", "factorization", "discriminant"
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every golden identity, in a fixed order.
std::vector<IdentityResult> golden_identities();

}  // namespace poncelet
