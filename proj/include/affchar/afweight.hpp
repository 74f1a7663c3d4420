// Affine weights and the affine Weyl action.
//
// An affine weight is stored as (finite part in the pi-basis, level, delta
// coordinate).  The finite lattice embeds by pi_i -> Pi_i - <theta^vee,pi_i>
// Pi_0, so the pairing with alpha_0^vee = K - theta^vee is
// level - <theta^vee, finite>; the pairing with alpha_i^vee (i >= 1) is the
// i-th pi-coordinate.  Affine node indices run over 0..rank, with index i >= 1
// naming the finite simple root alpha_i (Bourbaki numbering, so index i maps
// to 0-based finite coordinate i-1).
//
// Reduced words list reflection letters in application order: applying the
// letters front to back to the dominant representative reproduces the input
// weight, and the same front-to-back fold over Demazure operators computes
// the associated Demazure character.

#pragma once

#include "affchar/cartan.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace affchar {

struct AffineWeight {
  Weight finite;
  long long level = 0;
  long long delta = 0;

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.finite == b.finite && a.level == b.level && a.delta == b.delta;
  }
  friend bool operator!=(const AffineWeight& a, const AffineWeight& b) {
    return !(a == b);
  }
};

inline AffineWeight embed(const Weight& w, long long level, long long delta = 0) {
  return AffineWeight{w, level, delta};
}

// The simple root alpha_j as an affine weight (alpha_0 = delta - theta).
AffineWeight affine_simple_root(const RootSystem& rs, int j);

long long affine_pairing(const RootSystem& rs, int i, const AffineWeight& w);
AffineWeight affine_reflect(const RootSystem& rs, int i, const AffineWeight& w);

// Entries <alpha_i^vee, alpha_j> of the affinized Cartan matrix.
long long affine_cartan_entry(const RootSystem& rs, int i, int j);

bool affine_dominant(const RootSystem& rs, const AffineWeight& w);

// Dominant representative and a reduced word for the minimal Weyl element
// carrying it to the input (letters in application order; ties broken by the
// smallest negative node index).  Requires level >= 1.
std::pair<AffineWeight, std::vector<int>> to_dominant_affine(const RootSystem& rs,
                                                             AffineWeight w);

// Cherednik order on the finite weight lattice: lam <= mu iff lam_- lies in
// mu_- + Q_+, or the antidominant representatives agree and lam lies in
// mu + Q_+.
bool cherednik_leq(const RootSystem& rs, const Weight& lam, const Weight& mu);

// mu in Sigma(lambda), the lower set of lambda.
bool sigma_contains(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// If mu + k Lambda_0 lies in the affine Weyl orbit of lambda + k Lambda_0 - m
// delta... equivalently: returns m >= 0 with mu + k Lambda_0 - m delta in
// W_af (lambda + k Lambda_0), or nullopt.  Requires dominant lambda, k >= 1.
std::optional<long long> orbit_equiv(const RootSystem& rs, const Weight& lambda,
                                     const Weight& mu, long long k);

// Root content of the affinization per loop degree: real roots alpha +
// n*delta exist for short alpha at every n and for long alpha at multiples of
// the lacing number; the n*delta root space has dimension rank at multiples
// of the lacing number and short_simple_count otherwise.
struct LoopStructure {
  const RootSystem* rs;

  explicit LoopStructure(const RootSystem& r) : rs(&r) {}

  // Is alpha + n*delta a root, for a finite root of the given norm class?
  bool real_allowed(int norm_half, long long n) const {
    if (n % rs->lacing == 0) return true;
    return norm_half == 1;
  }
  // Dimension of the n*delta root space, n != 0.
  int imag_mult(long long n) const {
    if (n % rs->lacing == 0) return rs->rank;
    return rs->short_simple_count;
  }
};

}  // namespace affchar
