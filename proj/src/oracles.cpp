#include "affchar/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affchar::oracles {

namespace {

// Antidominant orbit representative found by plain orbit search, so the
// oracle does not depend on the production dominance algorithm.
Weight antidominant_by_scan(const RootSystem& rs, const Weight& w) {
  for (const Weight& x : weyl_orbit(rs, w)) {
    bool anti = true;
    for (int i = 0; i < rs.rank; ++i)
      if (x.c[i] > 0) anti = false;
    if (anti) return x;
  }
  throw std::logic_error("orbit without antidominant element");
}

}  // namespace

FinChar freudenthal_char(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("freudenthal_char: weight not dominant");
  const Weight rho = rs.rho();

  // Dominant weights below lambda, reached by subtracting positive roots
  // while staying dominant.
  std::set<Weight> dom;
  std::vector<Weight> queue{lambda};
  dom.insert(lambda);
  while (!queue.empty()) {
    Weight mu = queue.back();
    queue.pop_back();
    for (const auto& beta : rs.positive) {
      Weight nu = mu - beta.wt;
      if (rs.is_dominant(nu) && dom.insert(nu).second) queue.push_back(nu);
    }
  }
  std::vector<Weight> order(dom.begin(), dom.end());
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    long long ha = rs.height_num(a), hb = rs.height_num(b);
    if (ha != hb) return ha > hb;
    return a < b;
  });

  std::map<Weight, Zint> mult;
  mult[lambda] = Zint(1);
  const long long nlam = rs.form_num(lambda + rho, lambda + rho);
  for (const Weight& mu : order) {
    if (mu == lambda) continue;
    Zint num;
    for (const auto& beta : rs.positive) {
      Weight nu = mu;
      while (true) {
        nu = nu + beta.wt;
        auto it = mult.find(dominant_rep(rs, nu));
        if (it == mult.end()) break;  // weight strings are contiguous
        num += it->second * Zint(rs.form_num(nu, beta.wt));
      }
    }
    num *= Zint(2);
    long long den = nlam - rs.form_num(mu + rho, mu + rho);
    if (den <= 0) throw std::logic_error("Freudenthal denominator not positive");
    mult[mu] = num.divexact(Zint(den));
  }

  FinChar out;
  for (const auto& [mu, m] : mult)
    for (const Weight& x : weyl_orbit(rs, mu)) out.emplace(x, m);
  return out;
}

Zint weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  const Weight rho = rs.rho();
  Zint num(1), den(1);
  for (const auto& beta : rs.positive) {
    long long a = 0, b = 0;
    for (int i = 0; i < rs.rank; ++i) {
      a += static_cast<long long>(beta.covee[i]) * (lambda.c[i] + rho.c[i]);
      b += static_cast<long long>(beta.covee[i]) * rho.c[i];
    }
    num *= Zint(a);
    den *= Zint(b);
  }
  return num.divexact(den);
}

namespace {

bool sigma_member(const RootSystem& rs, const Weight& lambda,
                  const Weight& lambda_minus, const Weight& mu) {
  Weight mu_minus = antidominant_by_scan(rs, mu);
  if (mu_minus == lambda_minus) return rs.in_pos_root_cone(mu - lambda);
  return rs.in_pos_root_cone(mu_minus - lambda_minus);
}

void box_walk(const RootSystem& rs, int box, const std::function<void(Weight)>& fn,
              Weight cur = Weight{}, int i = 0) {
  if (i == rs.rank) {
    fn(cur);
    return;
  }
  for (int v = -box; v <= box; ++v) {
    cur.c[i] = v;
    box_walk(rs, box, fn, cur, i + 1);
  }
}

}  // namespace

std::vector<Weight> sigma_set_brute(const RootSystem& rs, const Weight& lambda, int box) {
  Weight lm = antidominant_by_scan(rs, lambda);
  std::vector<Weight> out;
  box_walk(rs, box, [&](Weight mu) {
    if (!rs.in_root_lattice(lambda - mu)) return;
    if (sigma_member(rs, lambda, lm, mu)) out.push_back(mu);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> sigma_set_hull(const RootSystem& rs, const Weight& lambda, int box) {
  if (rs.rank > 2)
    throw std::invalid_argument("sigma_set_hull: rank <= 2 only");
  // Full Sigma(lambda): orbits of every antidominant nu in lambda_- + Q_+,
  // restricted on the top orbit by the within-orbit clause.
  Weight lm = antidominant_by_scan(rs, lambda);
  long long span = 1;
  for (int i = 0; i < rs.rank; ++i) span += std::abs(lambda.c[i]);
  span *= 4;
  std::vector<Weight> full;
  std::function<void(Weight, int)> walk = [&](Weight q, int i) {
    if (i == rs.rank) {
      Weight nu = lm + q;
      bool anti = true;
      for (int k = 0; k < rs.rank; ++k)
        if (nu.c[k] > 0) anti = false;
      if (!anti) return;
      for (const Weight& x : weyl_orbit(rs, nu)) {
        if (nu == lm && !rs.in_pos_root_cone(x - lambda)) continue;
        full.push_back(x);
      }
      return;
    }
    for (long long v = 0; v <= span; ++v) {
      Weight nx = q;
      for (int k = 0; k < rs.rank; ++k) nx.c[k] += static_cast<int32_t>(v) * rs.cartan[k][i];
      walk(nx, i + 1);
    }
  };
  walk(Weight{}, 0);

  std::vector<Weight> result;
  if (rs.rank == 1) {
    int32_t lo = full[0].c[0], hi = full[0].c[0];
    for (const Weight& w : full) {
      lo = std::min(lo, w.c[0]);
      hi = std::max(hi, w.c[0]);
    }
    box_walk(rs, box, [&](Weight mu) {
      if (!rs.in_root_lattice(lambda - mu)) return;
      if (mu.c[0] >= lo && mu.c[0] <= hi) result.push_back(mu);
    });
  } else {
    // Exact 2d convex hull (monotone chain) and point-in-polygon tests.
    std::vector<std::array<long long, 2>> pts;
    for (const Weight& w : full) pts.push_back({w.c[0], w.c[1]});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const std::array<long long, 2>& o, const std::array<long long, 2>& a,
                    const std::array<long long, 2>& b) {
      return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::array<long long, 2>> hull;
    if (pts.size() <= 2) {
      hull = pts;
    } else {
      std::vector<std::array<long long, 2>> lo, hi;
      for (const auto& p : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
        lo.push_back(p);
      }
      for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
        hi.push_back(*it);
      }
      hull.assign(lo.begin(), lo.end() - 1);
      hull.insert(hull.end(), hi.begin(), hi.end() - 1);
    }
    auto inside = [&](long long x, long long y) {
      if (hull.size() == 1) return x == hull[0][0] && y == hull[0][1];
      if (hull.size() == 2) {
        // On the segment: collinear and within the bounding box.
        if (cross(hull[0], hull[1], {x, y}) != 0) return false;
        return std::min(hull[0][0], hull[1][0]) <= x && x <= std::max(hull[0][0], hull[1][0]) &&
               std::min(hull[0][1], hull[1][1]) <= y && y <= std::max(hull[0][1], hull[1][1]);
      }
      for (size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, {x, y}) < 0) return false;
      }
      return true;
    };
    box_walk(rs, box, [&](Weight mu) {
      if (!rs.in_root_lattice(lambda - mu)) return;
      if (inside(mu.c[0], mu.c[1])) result.push_back(mu);
    });
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<long long> sl2_tensor_decompose(const std::vector<int>& factors) {
  std::map<int, long long> acc;
  acc[0] = 1;
  for (int a : factors) {
    std::map<int, long long> nx;
    for (const auto& [h, m] : acc)
      for (int r = std::abs(h - a); r <= h + a; r += 2) nx[r] += m;
    acc = nx;
  }
  int top = acc.empty() ? 0 : acc.rbegin()->first;
  std::vector<long long> out(top + 1, 0);
  for (const auto& [h, m] : acc) out[h] = m;
  return out;
}

bool weyl_kac_check(const RootSystem& rs, const AffineWeight& top,
                    const GradedCharacter& chL, int32_t depth, std::string* diag) {
  if (!affine_dominant(rs, top))
    throw std::domain_error("weyl_kac_check: highest weight not dominant");
  if (chL.anchor() != Anchor::Normalized || !chL.qmax() || *chL.qmax() < depth)
    throw std::domain_error("weyl_kac_check: character must be normalized and truncated at >= depth");

  const Weight rho_fin = rs.rho();
  const AffineWeight start{top.finite + rho_fin, top.level + rs.dual_coxeter, 0};

  // Signed orbit sum of top + rho_hat.  The starting point is regular
  // dominant, so breadth-first distance equals reflection length and the sign
  // is the distance parity.
  GradedCharacter num(rs, top.level, Anchor::Normalized);
  std::set<std::pair<Weight, long long>> seen;
  std::deque<std::pair<AffineWeight, int>> queue;
  seen.insert({start.finite, start.delta});
  queue.emplace_back(start, 0);
  size_t guard = 0;
  while (!queue.empty()) {
    auto [v, par] = queue.front();
    queue.pop_front();
    if (++guard > 4000000) throw std::runtime_error("weyl_kac_check: orbit walk too large");
    num.add_term(v.finite - rho_fin, static_cast<int32_t>(-v.delta), Zint(par ? -1 : 1));
    for (int i = 0; i <= rs.rank; ++i) {
      AffineWeight w = affine_reflect(rs, i, v);
      if (w.delta < -static_cast<long long>(depth)) continue;
      if (seen.insert({w.finite, w.delta}).second) queue.emplace_back(w, par ^ 1);
    }
  }
  num.truncate(depth);

  // Denominator product: (1 - e^{-alpha}) at loop degree 0 for positive
  // alpha, (1 - q^n e^{-+alpha}) for each real root alpha + n*delta with
  // n >= 1, and (1 - q^n) with the imaginary multiplicity.
  LoopStructure loops(rs);
  GradedCharacter den = GradedCharacter::monomial(rs, 0, Anchor::Normalized, Weight{}, 0);
  den.truncate(depth);
  auto mul_factor = [&](const Weight& w, int32_t e) {
    GradedCharacter f(rs, 0, Anchor::Normalized);
    f.add_term(Weight{}, 0, Zint(1));
    f.add_term(w, e, Zint(-1));
    f.truncate(depth);
    den = den.mul(f);
  };
  for (const auto& rt : rs.positive) mul_factor(-rt.wt, 0);
  for (int32_t n = 1; n <= depth; ++n) {
    for (const auto& rt : rs.positive)
      if (loops.real_allowed(rt.norm_half, n)) {
        mul_factor(-rt.wt, n);
        mul_factor(rt.wt, n);
      }
    for (int m = loops.imag_mult(n); m > 0; --m) mul_factor(Weight{}, n);
  }

  GradedCharacter lhs = truncated_copy(chL, depth).mul(den);
  if (lhs == num) return true;
  if (diag) {
    GradedCharacter d = lhs;
    d.axpy(Zint(-1), num);
    std::ostringstream os;
    os << "character times denominator differs from the orbit sum in " << d.term_count()
       << " monomials (depth " << depth << ")";
    *diag = os.str();
  }
  return false;
}

}  // namespace affchar::oracles
