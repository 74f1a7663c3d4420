#include "affchar/afweight.hpp"

#include <algorithm>
#include <stdexcept>

namespace affchar {

AffineWeight affine_simple_root(const RootSystem& rs, int j) {
  if (j == 0) return AffineWeight{-rs.theta, 0, 1};
  return AffineWeight{rs.simple_root(j - 1), 0, 0};
}

long long affine_pairing(const RootSystem& rs, int i, const AffineWeight& w) {
  if (i == 0) return w.level - rs.theta_pairing(w.finite);
  return w.finite.c[i - 1];
}

AffineWeight affine_reflect(const RootSystem& rs, int i, const AffineWeight& w) {
  long long c = affine_pairing(rs, i, w);
  AffineWeight r = w;
  if (i == 0) {
    // subtract c * alpha_0 = c * (delta - theta)
    for (int k = 0; k < rs.rank; ++k)
      r.finite.c[k] += static_cast<int32_t>(c) * rs.theta.c[k];
    r.delta -= c;
  } else {
    Weight a = rs.simple_root(i - 1);
    for (int k = 0; k < rs.rank; ++k)
      r.finite.c[k] -= static_cast<int32_t>(c) * a.c[k];
  }
  return r;
}

long long affine_cartan_entry(const RootSystem& rs, int i, int j) {
  return affine_pairing(rs, i, affine_simple_root(rs, j));
}

bool affine_dominant(const RootSystem& rs, const AffineWeight& w) {
  for (int i = 0; i <= rs.rank; ++i)
    if (affine_pairing(rs, i, w) < 0) return false;
  return true;
}

std::pair<AffineWeight, std::vector<int>> to_dominant_affine(const RootSystem& rs,
                                                             AffineWeight w) {
  if (w.level < 1)
    throw std::domain_error("to_dominant_affine: level >= 1 required");
  std::vector<int> discovery;
  long long steps = 0;
  while (true) {
    int neg = -1;
    for (int i = 0; i <= rs.rank; ++i)
      if (affine_pairing(rs, i, w) < 0) { neg = i; break; }
    if (neg < 0) break;
    w = affine_reflect(rs, neg, w);
    discovery.push_back(neg);
    if (++steps > 100000000LL)
      throw std::logic_error("to_dominant_affine: did not terminate");
  }
  std::reverse(discovery.begin(), discovery.end());
  return {w, discovery};
}

bool cherednik_leq(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  Weight lm = antidominant_rep(rs, lam);
  Weight mm = antidominant_rep(rs, mu);
  if (lm == mm) return rs.in_pos_root_cone(lam - mu);
  return rs.in_pos_root_cone(lm - mm);
}

bool sigma_contains(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return cherednik_leq(rs, mu, lambda);
}

std::optional<long long> orbit_equiv(const RootSystem& rs, const Weight& lambda,
                                     const Weight& mu, long long k) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("orbit_equiv: lambda not dominant");
  if (k < 1) throw std::domain_error("orbit_equiv: level >= 1 required");
  auto [dom, word] = to_dominant_affine(rs, embed(mu, k));
  (void)word;
  if (dom.finite == lambda) return dom.delta;
  return std::nullopt;
}

}  // namespace affchar
