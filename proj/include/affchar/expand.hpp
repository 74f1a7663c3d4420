// Triangular basis expansions of graded characters.
//
// Characters of the thin families (and their thick counterparts, truncated)
// form triangular systems over Z[[q]]: the q^0 slice of a basis character is
// ch V_mu (symmetric bases) or e^mu plus strictly lower terms (thin basis).
// Expansions peel the residual from the lowest q-degree up; coefficients are
// q-polynomials per weight.  An expansion is exact when both the input and
// every basis character involved are exact polynomials; otherwise it is valid
// up to the recorded depth.

#pragma once

#include "affchar/cartan.hpp"
#include "affchar/charring.hpp"
#include "affchar/intz.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affchar {

using QPoly = std::map<int32_t, Zint>;  // exponent -> coefficient, no zeros

void qpoly_add(QPoly& p, int32_t e, const Zint& c);
QPoly qpoly_truncated(const QPoly& p, int32_t n);
Zint qpoly_at_one(const QPoly& p);
std::string qpoly_str(const QPoly& p);

enum class Family { Irrep, Thin, Weyl, Thick };

struct BasisDesc {
  Family family = Family::Weyl;
  long long level = 1;  // ignored for Irrep
};

struct Expansion {
  BasisDesc basis;
  std::optional<int32_t> qmax;  // nullopt = exact
  std::map<Weight, QPoly> coeffs;
};

// Expansion in a W-invariant basis (Irrep, Weyl, Thick).  Input must be
// normalized with nonnegative exponents and W-invariant.  depth = nullopt
// demands an exact expansion (input untruncated, basis not Thick); otherwise
// the result is valid to the given depth, which must not exceed the input's
// exact window.
Expansion expand_symmetric(const RootSystem& rs, const GradedCharacter& f,
                           BasisDesc basis, std::optional<int32_t> depth);

// Expansion in the thin Demazure basis at the target level; peels a maximal
// weight of the residual slice (in the Cherednik order) first.  The result
// does not depend on the peeling order among incomparable maxima.
Expansion expand_thin(const RootSystem& rs, const GradedCharacter& f, long long k_target,
                      std::optional<int32_t> depth);

// Branching of the level-k local Weyl character into the level-(k+1) family:
// coefficient map lam -> (W^(k)_mu : W^(k+1)_lam)_q.  Exact; memoized.
const Expansion& branching_weyl(const RootSystem& rs, const Weight& mu, long long k);

// branching_weyl compared against the affine-orbit prediction: when
// <theta^vee, lam> < k, the coefficient at lam is q^m with m the delta-drop
// from orbit_equiv, or zero when mu's orbit misses lam.  Returns mismatches.
struct OrbitMismatch {
  Weight lambda, mu;
  QPoly got, expected;
};
std::vector<OrbitMismatch> orbit_branching_verify(const RootSystem& rs, long long k,
                                                  const std::vector<Weight>& lambdas,
                                                  const std::vector<Weight>& mus);

// Graded reciprocity: multiplicity of the level-k thick Weyl character of mu
// in the projective character of lam equals the graded multiplicity
// [W^(k)_mu : V_lam]_q, compared up to the given depth.
bool reciprocity_check(const RootSystem& rs, const Weight& lam, const Weight& mu,
                       long long k, int32_t depth, std::string* diag = nullptr);

// Product of local Weyl characters (levels l_i <= k) expanded in the
// level-(k+1) Weyl basis; the coefficients are the level-restricted graded
// multiplicity polynomials.  depth = nullopt expands exactly.
std::map<Weight, QPoly> kostka(const RootSystem& rs,
                               const std::vector<std::pair<long long, Weight>>& factors,
                               long long k, std::optional<int32_t> depth);

}  // namespace affchar
