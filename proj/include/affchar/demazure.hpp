// Graded character families of the twisted affinization.
//
// For a finite root system with lacing number r, the affinization used here
// has real roots alpha + n*delta where short alpha occur at every n and long
// alpha only at multiples of r, plus imaginary roots n*delta.  The families:
//
//   thin_gch(lam, k)       level-k thin Demazure character: apply the word
//                          carrying the dominant representative of
//                          lam + k Lambda_0 back to lam, normalized upward
//                          from the extremal generator.
//   weyl_gch(lam, k)       local Weyl character = thin at the antidominant
//                          representative; W-invariant with q^0 slice
//                          ch V_lam.
//   integrable_gch(Lam, N) truncated ch L(Lam), normalized downward from the
//                          highest weight.
//   projective_gch         ch V_lam times the loop-generator product (PBW
//                          over negative loop degrees), truncated.
//   thick_weyl_gch         thick Weyl character, computed from the flipped
//                          integrable character when the level dominates the
//                          weight and otherwise by level descent through the
//                          Weyl-module branching matrices.
//   demext_check           verifies that the quotient of the two Demazure
//                          characters predicted at the critical hyperplane
//                          <theta^vee, lam> = k is a single monomial.
//
// thin_gch / weyl_gch are memoized; the returned references stay valid for
// the process lifetime and are bound to shared_root_system instances.

#pragma once

#include "affchar/afweight.hpp"
#include "affchar/cartan.hpp"
#include "affchar/charring.hpp"

#include <functional>
#include <string>

namespace affchar {

// Optional sink for coarse progress lines during long computations (thick
// level descent and window retries).  Null by default; the command-line
// driver points it at standard error.
extern std::function<void(const std::string&)> progress_sink;

const GradedCharacter& thin_gch(const RootSystem& rs, const Weight& lam, long long k);
const GradedCharacter& weyl_gch(const RootSystem& rs, const Weight& lam, long long k);

GradedCharacter integrable_gch(const RootSystem& rs, const AffineWeight& top, int32_t depth);

// Same truncated character through the affine Freudenthal recursion instead
// of operator sweeps.  Cheap at high level where sweeps are not, so the thick
// descent uses it for its internal base characters; the two implementations
// are cross-checked in the test suite.
GradedCharacter integrable_freudenthal(const RootSystem& rs, const AffineWeight& top,
                                       int32_t depth);

GradedCharacter projective_gch(const RootSystem& rs, const Weight& lam, long long k_ctx,
                               int32_t depth);

GradedCharacter thick_weyl_gch(const RootSystem& rs, const Weight& lam, long long k,
                               int32_t depth);

// Character identity behind the critical-hyperplane extension: requires
// <theta^vee, lam> = k >= 2 and dominant lam.  On success the difference of
// the two recipe characters is the single monomial e^lam; diagnostic details
// are appended to *diag when provided.
bool demext_check(const RootSystem& rs, const Weight& lam, long long k,
                  std::string* diag = nullptr);

}  // namespace affchar
