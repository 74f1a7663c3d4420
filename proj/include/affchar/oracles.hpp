// Independent cross-checks.
//
// Everything here recomputes quantities of the main code path by a different
// method and is used only from tests and the verify suites: weight
// multiplicities via the Freudenthal recursion, dimensions via the Weyl
// product formula, Cherednik lower sets by brute-force enumeration and by the
// convex-hull description, and sl(2) tensor decompositions by the
// Clebsch-Gordan rule.  None of these routines call the Demazure-operator
// character path.

#pragma once

#include "affchar/afweight.hpp"
#include "affchar/cartan.hpp"
#include "affchar/charring.hpp"

#include <string>
#include <vector>

namespace affchar::oracles {

// Weight multiplicities of V_lambda from the Freudenthal recursion, using the
// exact integer-scaled invariant form.
FinChar freudenthal_char(const RootSystem& rs, const Weight& lambda);

// dim V_lambda by the Weyl product formula.
Zint weyl_dimension(const RootSystem& rs, const Weight& lambda);

// All weights mu of the Cherednik lower set Sigma(lambda) with pi-basis
// coordinates bounded by |mu_i| <= box, enumerated directly from the
// definition (antidominant comparison, then within-orbit comparison).
std::vector<Weight> sigma_set_brute(const RootSystem& rs, const Weight& lambda, int box);

// Same set computed through the convex-hull description: mu lies in
// Sigma(lambda) iff mu is congruent to lambda mod the root lattice and lies in
// the convex hull of Sigma(lambda).  Rank <= 2 only (exact 2d geometry).
std::vector<Weight> sigma_set_hull(const RootSystem& rs, const Weight& lambda, int box);

// Multiset of sl(2) irreducible summands of V_{a1} x ... x V_{an} (weights
// a_i * pi), by the Clebsch-Gordan rule; returns multiplicities indexed by
// highest weight coordinate.
std::vector<long long> sl2_tensor_decompose(const std::vector<int>& factors);

// Character-formula check for the truncated integrable character chL of
// L(top), which must be down-normalized from top and truncated at >= depth:
// multiplies chL by the denominator product over the affinization's root
// content and compares with the signed breadth-first orbit sum of
// top + rho_hat, rho_hat = (rho, dual Coxeter number, 0).  Outward orbit
// steps never raise the delta coordinate, so pruning the walk at
// delta < -depth loses nothing inside the truncation window.  The delta
// coordinate of top is ignored (a pure grading shift).
bool weyl_kac_check(const RootSystem& rs, const AffineWeight& top,
                    const GradedCharacter& chL, int32_t depth,
                    std::string* diag = nullptr);

}  // namespace affchar::oracles
