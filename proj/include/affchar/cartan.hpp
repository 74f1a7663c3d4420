// Finite root systems and finite characters.
//
// Conventions (Bourbaki numbering throughout):
//   cartan[i][j] = <alpha_i^vee, alpha_j>, so the pi-basis coordinates of the
//   simple root alpha_j form column j of the Cartan matrix.  The symmetrizers
//   sym[i] = d_i are normalized with d = 1 on short simple roots, so the
//   lacing number r = max d_i is 1 for ADE, 2 for BCF and 3 for G_2.
//   theta is the dominant *short* root (for simply-laced types this is the
//   highest root); theta_covee holds theta^vee in the alpha^vee basis, so
//   <theta^vee, lambda> = sum_i theta_covee[i] * lambda[i].
//
// Finite characters are sparse integer maps on the weight lattice.  The
// irreducible character ch V_lambda is produced by the composite of Demazure
// operators along a reduced word for the longest Weyl element; an independent
// Freudenthal-recursion implementation lives in oracles.hpp and can be turned
// on as a cross-check.

#pragma once

#include "affchar/intz.hpp"
#include "affchar/weight.hpp"

#include <array>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affchar {

using FinChar = std::unordered_map<Weight, Zint, WeightHash>;

struct RootSystem {
  char type = 'A';
  int rank = 1;

  std::array<std::array<int, kMaxRank>, kMaxRank> cartan{};
  std::array<int, kMaxRank> sym{};  // d_i, short = 1
  int lacing = 1;                   // r

  struct Root {
    std::array<int, kMaxRank> alpha{};  // simple-root coordinates
    Weight wt;                          // pi-basis coordinates
    std::array<int, kMaxRank> covee{};  // coroot in the alpha^vee basis
    int norm_half = 1;                  // d_beta = (beta,beta)/2, short = 1
  };
  std::vector<Root> positive;

  Weight theta;                             // dominant short root
  std::array<int, kMaxRank> theta_alpha{};  // alpha-coords of theta
  std::array<int, kMaxRank> theta_covee{};  // theta^vee in alpha^vee coords
  int short_simple_count = 0;
  int dual_coxeter = 0;  // 1 + <theta^vee, rho>

  long long det_cartan = 1;
  // Adjugate of the Cartan matrix: cartan * adj = det * I.  Used for exact
  // root-lattice membership tests and the dominance-compatible height
  // functional det * height.
  std::array<std::array<long long, kMaxRank>, kMaxRank> adj_cartan{};
  // gram[i][j] = det * (pi_i, pi_j) with (short root, short root) = 2;
  // integer because (pi_i, pi_j) = d_i * (A^{-1})_{ij}.
  std::array<std::array<long long, kMaxRank>, kMaxRank> gram{};

  std::vector<int> w0_word;  // longest element, letters in application order

  int pairing(int i, const Weight& w) const { return w.c[i]; }
  long long theta_pairing(const Weight& w) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i) s += static_cast<long long>(theta_covee[i]) * w.c[i];
    return s;
  }
  Weight simple_root(int j) const {
    Weight r;
    for (int i = 0; i < rank; ++i) r.c[i] = cartan[i][j];
    return r;
  }
  Weight reflect(int i, const Weight& w) const {
    Weight r = w;
    int32_t ci = w.c[i];
    for (int k = 0; k < rank; ++k) r.c[k] -= ci * cartan[k][i];
    return r;
  }
  bool is_dominant(const Weight& w) const {
    for (int i = 0; i < rank; ++i)
      if (w.c[i] < 0) return false;
    return true;
  }
  Weight rho() const {
    Weight r;
    for (int i = 0; i < rank; ++i) r.c[i] = 1;
    return r;
  }
  // det * sum of alpha-coordinates; strictly monotone for the dominance order.
  long long height_num(const Weight& w) const;
  // det * (a, b) in the short-root-squared-2 normalization.
  long long form_num(const Weight& a, const Weight& b) const;

  // Solves cartan * x = v; returns false if v is not in the root lattice.
  bool root_coords(const Weight& v, std::array<long long, kMaxRank>& x) const;
  bool in_root_lattice(const Weight& v) const;
  // v in Q_+ (nonnegative integer combination of simple roots)?
  bool in_pos_root_cone(const Weight& v) const;
};

// Constructs and validates the root system; throws std::invalid_argument for
// a type/rank combination outside A(>=1) B(>=2) C(>=2) D(>=4) E(6..8) F4 G2.
RootSystem make_root_system(char type, int rank);

// Process-lifetime instance per (type, rank); memoized characters bind to
// these so returned references never dangle.
const RootSystem& shared_root_system(char type, int rank);

// Dominant representative together with a reduced word w such that applying
// the listed reflections to the output, front to back, reproduces the input.
std::pair<Weight, std::vector<int>> to_dominant_finite(const RootSystem& rs, Weight w);
Weight dominant_rep(const RootSystem& rs, const Weight& w);
Weight antidominant_rep(const RootSystem& rs, const Weight& w);

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

// Demazure string operator on finite characters (index i >= 0 finite).
FinChar finite_demazure(const RootSystem& rs, int i, const FinChar& f);

// ch V_lambda for dominant lambda; memoized per root system.
const FinChar& finite_irrep_char(const RootSystem& rs, const Weight& lambda);

// Writes s as an integer combination of irreducible characters.  Requires a
// W-invariant input; throws std::invalid_argument otherwise.
std::vector<std::pair<Weight, Zint>> decompose_slice(const RootSystem& rs, const FinChar& s);

// Global verification switch: when set, finite_irrep_char cross-checks every
// freshly computed character against the Freudenthal recursion.
void set_cartan_verification(bool on);

namespace detail {
void fin_add(FinChar& f, const Weight& w, const Zint& c);
void fin_axpy(FinChar& f, const Zint& a, const FinChar& g);
void fin_prune(FinChar& f);
}  // namespace detail

}  // namespace affchar
