#include "affchar/demazure.hpp"

#include "affchar/expand.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affchar {

std::function<void(const std::string&)> progress_sink;

namespace {

void progress(const std::string& line) {
  if (progress_sink) progress_sink(line);
}

using FamKey = std::tuple<char, int, std::array<int32_t, kMaxRank>, long long>;

FamKey fam_key(const RootSystem& rs, const Weight& lam, long long k) {
  return {rs.type, rs.rank, lam.c, k};
}

}  // namespace

const GradedCharacter& thin_gch(const RootSystem& rs, const Weight& lam, long long k) {
  if (k < 1) throw std::domain_error("thin characters need level >= 1");
  static std::mutex mu;
  static std::map<FamKey, std::unique_ptr<GradedCharacter>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[fam_key(rs, lam, k)];
  if (!slot) {
    const RootSystem& srs = shared_root_system(rs.type, rs.rank);
    auto [top, word] = to_dominant_affine(srs, embed(lam, k, 0));
    GradedCharacter f = GradedCharacter::monomial(srs, k, Anchor::Raw, top.finite,
                                                  static_cast<int32_t>(top.delta));
    f = apply_word(word, f);
    slot = std::make_unique<GradedCharacter>(normalized_up(f, 0));
  }
  return *slot;
}

const GradedCharacter& weyl_gch(const RootSystem& rs, const Weight& lam, long long k) {
  if (!rs.is_dominant(lam))
    throw std::invalid_argument("Weyl characters are indexed by dominant weights");
  return thin_gch(rs, antidominant_rep(rs, lam), k);
}

GradedCharacter integrable_gch(const RootSystem& rs, const AffineWeight& top,
                               int32_t depth) {
  GradedCharacter f = saturate(rs, top, depth);
  GradedCharacter g = normalized_down(f, static_cast<int32_t>(top.delta));
  g.truncate(depth);
  return g;
}

GradedCharacter integrable_freudenthal(const RootSystem& rs, const AffineWeight& top,
                                       int32_t depth) {
  if (top.level < 1) throw std::domain_error("integrable characters need level >= 1");
  if (!affine_dominant(rs, top))
    throw std::invalid_argument("integrable characters are indexed by dominant weights");
  if (depth < 0) throw std::invalid_argument("negative truncation depth");

  const long long k = top.level;
  const long long det = rs.det_cartan;
  const long long dtop = top.delta;
  const long long dfloor = dtop - depth;
  LoopStructure loops(rs);

  // det * (x|y) for affine weights x = (xf, xk, xd): the finite form pairs the
  // finite parts, and the level pairs against the delta coordinate.
  auto dform = [&](const Weight& xf, long long xk, long long xd, const Weight& yf,
                   long long yk, long long yd) {
    return rs.form_num(xf, yf) + det * (xk * yd + yk * xd);
  };
  const Weight rho = rs.rho();
  const long long hv = rs.dual_coxeter;
  const Weight top_sh = top.finite + rho;
  const long long top_norm = dform(top_sh, k + hv, dtop, top_sh, k + hv, dtop);

  // nu lies below top iff top - nu is a nonnegative combination of the affine
  // simple roots; the alpha_0 count equals the delta drop.
  auto below_top = [&](const AffineWeight& nu) {
    long long n0 = dtop - nu.delta;
    if (n0 < 0) return false;
    Weight diff = top.finite - nu.finite;
    for (int i = 0; i < rs.rank; ++i)
      diff.c[i] += static_cast<int32_t>(n0 * rs.theta.c[i]);
    return rs.in_pos_root_cone(diff);
  };

  // Dominant-representative multiplicities from the Casimir identity
  //   (|top+rho|^2 - |nu+rho|^2) mult(nu) =
  //       2 sum_{alpha > 0} mult(alpha) sum_{j >= 1} mult(nu+j alpha) (nu+j alpha|alpha),
  // evaluated lazily: every referenced weight is strictly closer to the top,
  // either in delta or in the finite dominance order.
  std::map<Mono, long long> memo;
  std::set<Mono> inflight;
  auto mult = [&](auto&& self, const AffineWeight& nu0) -> long long {
    AffineWeight dom = to_dominant_affine(rs, nu0).first;
    if (dom.delta > dtop || !below_top(dom)) return 0;
    const Mono key = make_mono(dom.finite, static_cast<int32_t>(dom.delta));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (dom.finite == top.finite && dom.delta == dtop) return memo[key] = 1;
    if (!inflight.insert(key).second)
      throw std::logic_error("integrable multiplicity recursion cycled");

    long long num = 0;
    // Sum over an ascending root string; contributions stop at the first
    // weight outside the support (supports are unbroken along root strings).
    auto ascend = [&](const Weight& awt, long long n, long long layer_mult) {
      AffineWeight nu = dom;
      for (long long j = 1;; ++j) {
        nu.finite = nu.finite + awt;
        nu.delta += n;
        if (nu.delta > dtop) break;
        long long m = self(self, nu);
        if (m == 0) break;
        num += layer_mult * m * dform(nu.finite, k, nu.delta, awt, 0, n);
        if (j > 1000000) throw std::logic_error("runaway root string");
      }
    };
    for (const auto& rt : rs.positive) {
      ascend(rt.wt, 0, 1);
      for (long long n = 1; n <= dtop - dom.delta; ++n) {
        if (!loops.real_allowed(rt.norm_half, n)) continue;
        ascend(rt.wt, n, 1);
        ascend(-rt.wt, n, 1);
      }
    }
    for (long long n = 1; n <= dtop - dom.delta; ++n)
      ascend(Weight{}, n, loops.imag_mult(n));

    const Weight sh = dom.finite + rho;
    const long long den = top_norm - dform(sh, k + hv, dom.delta, sh, k + hv, dom.delta);
    if (den <= 0) throw std::logic_error("Casimir norm did not decrease below the top");
    if ((2 * num) % den != 0) throw std::logic_error("non-integral multiplicity");
    inflight.erase(key);
    return memo[key] = (2 * num) / den;
  };

  // Walk each dominant representative's orbit through the window; paths to the
  // dominant chamber never lower delta, so pruning below the floor is safe.
  GradedCharacter out(rs, k, Anchor::Normalized);
  std::set<std::pair<Weight, long long>> seen;
  for (long long e = dtop; e >= dfloor; --e) {
    Weight w;
    for (int i = 0; i < rs.rank; ++i) w.c[i] = 0;
    while (true) {
      if (rs.theta_pairing(w) <= k) {
        AffineWeight cand{w, k, e};
        if (below_top(cand)) {
          long long m = mult(mult, cand);
          if (m > 0 && !seen.count({w, e})) {
            std::vector<AffineWeight> queue{cand};
            seen.insert({w, e});
            while (!queue.empty()) {
              AffineWeight v = queue.back();
              queue.pop_back();
              out.add_term(v.finite, static_cast<int32_t>(dtop - v.delta), Zint(m));
              for (int i = 0; i <= rs.rank; ++i) {
                AffineWeight r = affine_reflect(rs, i, v);
                if (r.delta < dfloor) continue;
                if (seen.insert({r.finite, r.delta}).second) queue.push_back(r);
              }
            }
          }
        }
      }
      int i = 0;
      for (; i < rs.rank; ++i) {
        if (rs.theta_pairing(w) + rs.theta_covee[i] <= k) {
          ++w.c[i];
          break;
        }
        for (int j = 0; j <= i; ++j) w.c[j] = 0;
      }
      if (i == rs.rank) break;
    }
  }
  out.truncate(depth);
  return out;
}

GradedCharacter projective_gch(const RootSystem& rs, const Weight& lam, long long k_ctx,
                               int32_t depth) {
  if (!rs.is_dominant(lam))
    throw std::invalid_argument("projective characters are indexed by dominant weights");
  if (depth < 0) throw std::invalid_argument("negative truncation depth");

  GradedCharacter f(rs, k_ctx, Anchor::Normalized);
  for (const auto& [w, c] : finite_irrep_char(rs, lam)) f.add_term(w, 0, c);
  f.truncate(depth);

  LoopStructure loops(rs);
  for (int32_t n = 1; n <= depth; ++n) {
    for (const auto& rt : rs.positive) {
      if (!loops.real_allowed(rt.norm_half, n)) continue;
      for (int sign : {1, -1}) {
        GradedCharacter fac(rs, 0, Anchor::Normalized);
        Weight step = sign > 0 ? rt.wt : -rt.wt;
        Weight cur;
        for (int32_t j = 0; j * n <= depth; ++j) {
          fac.add_term(cur, j * n, Zint(1));
          cur = cur + step;
        }
        fac.truncate(depth);
        f = f.mul(fac);
      }
    }
    GradedCharacter fac(rs, 0, Anchor::Normalized);
    for (int32_t j = 0; j * n <= depth; ++j) fac.add_term(Weight{}, j * n, Zint(1));
    fac.truncate(depth);
    for (int t = loops.imag_mult(n); t > 0; --t) f = f.mul(fac);
  }
  return f;
}

namespace {

// Flipped integrable character; valid when <theta^vee, lam> < k.
GradedCharacter thick_dominated(const RootSystem& srs, const Weight& lam, long long k,
                                int32_t depth) {
  if (k == 1) {
    // The level-0 highest weight module is trivial.
    GradedCharacter f = GradedCharacter::monomial(srs, 1, Anchor::Normalized, Weight{}, 0);
    f.truncate(depth);
    return f;
  }
  Weight lam_minus = antidominant_rep(srs, lam);
  GradedCharacter L = integrable_freudenthal(srs, embed(-lam_minus, k - 1, 0), depth);
  GradedCharacter f = flip(L);
  f.set_level(k);
  return f;
}

struct ThickWindow {
  std::vector<Weight> inner;  // the working weights, sorted
  std::vector<Weight> shell;  // one reflection-reach beyond, for contact checks
};

// Dominant weights of lam + Q within per-coordinate bounds lam.c[i] + margin
// (inner) resp. + margin + shell_pad (shell ring).
ThickWindow make_window(const RootSystem& rs, const Weight& lam, long long margin,
                        long long shell_pad) {
  ThickWindow win;
  std::array<long long, kMaxRank> hi{};
  for (int i = 0; i < rs.rank; ++i) hi[i] = lam.c[i] + margin + shell_pad;
  Weight cur;
  // Odometer over the dominant box.
  int i = 0;
  for (int j = 0; j < rs.rank; ++j) cur.c[j] = 0;
  while (true) {
    if (rs.in_root_lattice(cur - lam)) {
      bool in_inner = true;
      for (int j = 0; j < rs.rank; ++j)
        if (cur.c[j] > lam.c[j] + margin) in_inner = false;
      (in_inner ? win.inner : win.shell).push_back(cur);
    }
    for (i = 0; i < rs.rank; ++i) {
      if (cur.c[i] < hi[i]) {
        ++cur.c[i];
        break;
      }
      cur.c[i] = 0;
    }
    if (i == rs.rank) break;
  }
  std::sort(win.inner.begin(), win.inner.end());
  std::sort(win.shell.begin(), win.shell.end());
  return win;
}

using SliceVec = std::vector<FinChar>;

FinChar char_slice_at(const GradedCharacter& f, int32_t e) { return f.slice(e); }

}  // namespace

GradedCharacter thick_weyl_gch(const RootSystem& rs, const Weight& lam, long long k,
                               int32_t depth) {
  if (!rs.is_dominant(lam))
    throw std::invalid_argument("thick Weyl characters are indexed by dominant weights");
  if (k < 1) throw std::domain_error("thick Weyl characters need level >= 1");
  if (depth < 0) throw std::invalid_argument("negative truncation depth");
  const RootSystem& srs = shared_root_system(rs.type, rs.rank);
  if (srs.theta_pairing(lam) < k) return thick_dominated(srs, lam, k, depth);

  static std::mutex mu;
  static std::map<FamKey, std::unique_ptr<GradedCharacter>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(fam_key(srs, lam, k));
    if (it != cache.end() && *it->second->qmax() >= depth)
      return truncated_copy(*it->second, depth);
  }

  long long theta_reach = 0;
  for (int i = 0; i < srs.rank; ++i) theta_reach = std::max(theta_reach, (long long)srs.theta.c[i]);
  long long margin = std::max<long long>(1, depth) * theta_reach;

  const int max_attempts = 5;
  for (int attempt = 0;; ++attempt, margin *= 2) {
    if (attempt == max_attempts)
      throw std::runtime_error(
          "thick descent could not certify the requested depth; last margin " +
          std::to_string(margin / 2));

    ThickWindow win = make_window(srs, lam, margin, theta_reach);
    long long climb = 0;
    for (const Weight& w : win.inner) climb = std::max(climb, srs.theta_pairing(w));
    const long long K = climb + 1;
    progress("thick descent: window of " + std::to_string(win.inner.size()) +
             " weights, levels " + std::to_string(K) + " down to " + std::to_string(k) +
             (attempt ? " (retry " + std::to_string(attempt) + ")" : ""));

    // Characters at the current level, as q-slices 0..depth per weight.
    std::map<Weight, SliceVec> cur;
    for (const Weight& w : win.inner) {
      GradedCharacter base = thick_dominated(srs, w, K, depth);
      SliceVec sv(depth + 1);
      for (int32_t d = 0; d <= depth; ++d) sv[d] = char_slice_at(base, d);
      cur.emplace(w, std::move(sv));
    }

    // Corruption valuations: corr[w] lower-bounds the q-degree at which the
    // finite solve can first differ from the infinite system at w.  Rows
    // missing just outside the window inject error at the valuation of their
    // branching entries; error already inside gains at least the valuation of
    // every branching edge it crosses, and carries unchanged from level to
    // level along the diagonal.  Weights whose bound stays above the requested
    // depth come out exact; the rest are discarded, and if the target itself
    // is touched the window grows.
    const int32_t clean = depth + 1;
    std::map<Weight, int32_t> corr;
    for (const Weight& w : win.inner) corr[w] = clean;
    auto lower = [&](const Weight& at, long long v) {
      auto it = corr.find(at);
      if (it == corr.end()) return false;
      int32_t nv = static_cast<int32_t>(std::min<long long>(v, clean));
      if (nv >= it->second) return false;
      it->second = nv;
      return true;
    };

    for (long long kp = K - 1; kp >= k; --kp) {
      // Error injected by the nearest rows missing from the window.
      for (const Weight& s : win.shell) {
        const Expansion& bs = branching_weyl(srs, s, kp);
        for (const auto& [key, poly] : bs.coeffs)
          if (!(key == s) && !poly.empty())
            lower(key, std::max<long long>(1, poly.begin()->first));
      }
      // Error propagating between window weights within this level.
      for (bool moved = true; moved;) {
        moved = false;
        for (const Weight& w : win.inner) {
          if (corr.at(w) >= clean) continue;
          const Expansion& bw = branching_weyl(srs, w, kp);
          for (const auto& [key, poly] : bw.coeffs)
            if (!(key == w) && !poly.empty() &&
                lower(key, corr.at(w) + std::max<long long>(1, poly.begin()->first)))
              moved = true;
        }
      }

      // Solve, degree by degree, the unitriangular system
      //   slice_d(cur[lamp]) = sum_mu sum_e b[mu->lamp][e] * next[mu][d-e]
      // for the level-kp characters next[.], using b from branching_weyl.
      std::map<Weight, SliceVec> next;
      for (const Weight& w : win.inner) next.emplace(w, SliceVec(depth + 1));
      for (const Weight& w : win.inner) {
        const Expansion& bw = branching_weyl(srs, w, kp);
        auto self = bw.coeffs.find(w);
        if (self == bw.coeffs.end() || self->second.count(0) == 0 ||
            !(self->second.at(0) == Zint(1)))
          throw std::logic_error("branching matrix diagonal is not 1 + O(q)");
        for (const auto& [key, poly] : bw.coeffs)
          if (!(key == w) && poly.count(0))
            throw std::logic_error("branching matrix is not unitriangular");
      }
      for (int32_t d = 0; d <= depth; ++d) {
        for (const Weight& lamp : win.inner) {
          FinChar acc = cur.at(lamp)[d];
          for (const Weight& w : win.inner) {
            const Expansion& bw = branching_weyl(srs, w, kp);
            auto itc = bw.coeffs.find(lamp);
            if (itc == bw.coeffs.end()) continue;
            for (const auto& [e, c] : itc->second) {
              if (e < 1 || e > d) continue;
              detail::fin_axpy(acc, -c, next.at(w)[d - e]);
            }
          }
          detail::fin_prune(acc);
          next.at(lamp)[d] = std::move(acc);
        }
      }
      // Head check: the q^0 slice of a thick character is the irreducible.
      for (const Weight& w : win.inner) {
        const FinChar& head = next.at(w)[0];
        const FinChar& irr = finite_irrep_char(srs, w);
        bool ok = head.size() == irr.size();
        if (ok)
          for (const auto& [ww, cc] : irr) {
            auto it = head.find(ww);
            if (it == head.end() || !(it->second == cc)) {
              ok = false;
              break;
            }
          }
        if (!ok)
          throw std::logic_error("level descent lost the irreducible head at level " +
                                 std::to_string(kp));
      }
      cur = std::move(next);
    }
    if (corr.at(lam) <= depth) {
      progress("thick descent: margin " + std::to_string(margin) +
               " only bounds the target's error beyond q^" +
               std::to_string(corr.at(lam) - 1) + "; enlarging");
      continue;
    }

    // Assemble, validate positivity, and cache the part of the window the
    // valuation bound certifies.
    std::lock_guard<std::mutex> lock(mu);
    for (const Weight& w : win.inner) {
      if (corr.at(w) <= depth) continue;
      GradedCharacter g(srs, k, Anchor::Normalized);
      for (int32_t d = 0; d <= depth; ++d)
        for (const auto& [ww, cc] : cur.at(w)[d]) {
          if (cc.sign() < 0)
            throw std::logic_error("negative coefficient in a thick character");
          g.add_term(ww, d, cc);
        }
      g.truncate(depth);
      auto& slot = cache[fam_key(srs, w, k)];
      if (!slot || *slot->qmax() < depth)
        slot = std::make_unique<GradedCharacter>(std::move(g));
    }
    return truncated_copy(*cache.at(fam_key(srs, lam, k)), depth);
  }
}

bool demext_check(const RootSystem& rs, const Weight& lam, long long k,
                  std::string* diag) {
  auto note = [&](const std::string& s) {
    if (diag) *diag += s + "\n";
  };
  if (k < 2) throw std::domain_error("the critical extension needs level >= 2");
  if (!rs.is_dominant(lam)) throw std::invalid_argument("dominant weight required");
  const RootSystem& srs = shared_root_system(rs.type, rs.rank);
  if (srs.theta_pairing(lam) != k)
    throw std::invalid_argument("weight is not on the critical hyperplane");

  // Zero-pairing nodes of lam + k Lambda_0, restricted to the connected
  // subdiagram through node 0.
  AffineWeight full = embed(lam, k, 0);
  std::vector<char> in_splus(srs.rank + 1, 0);
  for (int j = 0; j <= srs.rank; ++j)
    if (affine_pairing(srs, j, full) == 0) in_splus[j] = 1;
  if (!in_splus[0]) throw std::logic_error("node 0 pairing nonzero on the hyperplane");
  std::vector<char> in_s(srs.rank + 1, 0);
  std::vector<int> stack{0};
  in_s[0] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b <= srs.rank; ++b)
      if (!in_s[b] && in_splus[b] && affine_cartan_entry(srs, a, b) < 0) {
        in_s[b] = 1;
        stack.push_back(b);
      }
  }

  // Carry lam + (k-1) Lambda_0 to dominance using letters of S only; the
  // first step is forced through node 0.
  AffineWeight x = embed(lam, k - 1, 0);
  std::vector<int> discovery;
  for (int steps = 0;; ++steps) {
    if (steps > 1000000) throw std::logic_error("restricted dominance walk did not end");
    int neg = -1;
    for (int j = 0; j <= srs.rank; ++j)
      if (in_s[j] && affine_pairing(srs, j, x) < 0) {
        neg = j;
        break;
      }
    if (neg < 0) break;
    x = affine_reflect(srs, neg, x);
    discovery.push_back(neg);
  }
  if (discovery.empty() || discovery.front() != 0)
    throw std::logic_error("walk did not start at node 0");
  if (!affine_dominant(srs, x)) {
    note("recipe weight is not level-" + std::to_string(k - 1) + " dominant");
    return false;
  }

  std::vector<int> word(discovery.rbegin(), discovery.rend());
  GradedCharacter seed = GradedCharacter::monomial(srs, k - 1, Anchor::Raw, x.finite,
                                                   static_cast<int32_t>(x.delta));
  std::vector<int> word_short(word.begin(), word.end() - 1);
  GradedCharacter a = apply_word(word, seed);
  GradedCharacter b = apply_word(word_short, seed);
  a.axpy(Zint(-1), b);
  bool ok = a.term_count() == 1 && a.coeff(lam, 0) == Zint(1);
  if (!ok) {
    std::ostringstream os;
    os << "difference has " << a.term_count() << " terms; e^lam coefficient "
       << a.coeff(lam, 0).str();
    note(os.str());
  }
  return ok;
}

}  // namespace affchar
