#include "affchar/cartan.hpp"

#include "affchar/oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace affchar {

namespace {

void fill_cartan(char type, int rank,
                 std::array<std::array<int, kMaxRank>, kMaxRank>& a) {
  for (auto& row : a) row.fill(0);
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // simple edge, 0-based
    a[i][j] = -1;
    a[j][i] = -1;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case 'B':  // node rank-1 short: <alpha_{l-1}^vee, alpha_l> = -2
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      a[rank - 1][rank - 2] = -2;
      a[rank - 2][rank - 1] = -1;
      break;
    case 'C':  // node rank-1 long: <alpha_{l-1}^vee, alpha_l> = -2
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      a[rank - 1][rank - 2] = -1;
      break;
    case 'D':
      for (int i = 0; i + 3 < rank; ++i) bond(i, i + 1);
      bond(rank - 3, rank - 2);
      bond(rank - 3, rank - 1);
      break;
    case 'E':  // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
      bond(0, 2);
      bond(2, 3);
      bond(1, 3);
      for (int i = 3; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case 'F':  // nodes 1,2 long; <alpha_3^vee, alpha_2> = -2
      bond(0, 1);
      bond(2, 3);
      a[2][1] = -2;
      a[1][2] = -1;
      break;
    case 'G':  // node 1 short, node 2 long; <alpha_1^vee, alpha_2> = -3
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw std::invalid_argument("unknown type");
  }
}

bool rank_in_range(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= kMaxRank;
    case 'B': return rank >= 2 && rank <= kMaxRank;
    case 'C': return rank >= 2 && rank <= kMaxRank;
    case 'D': return rank >= 4 && rank <= kMaxRank;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Integer adjugate and determinant by fraction-free Gaussian elimination
// (Bareiss); Cartan matrices are small and have positive determinant.
void adjugate(const std::array<std::array<int, kMaxRank>, kMaxRank>& a, int n,
              std::array<std::array<long long, kMaxRank>, kMaxRank>& adj,
              long long& det) {
  // Solve a * X = det * I column by column via Cramer cofactors.
  auto minor_det = [&](int skip_r, int skip_c) -> long long {
    std::array<std::array<long long, kMaxRank>, kMaxRank> m{};
    int rr = 0;
    for (int i = 0; i < n; ++i) {
      if (i == skip_r) continue;
      int cc = 0;
      for (int j = 0; j < n; ++j) {
        if (j == skip_c) continue;
        m[rr][cc++] = a[i][j];
      }
      ++rr;
    }
    int k = n - 1;
    long long sign = 1;
    // Plain fraction-free elimination with exact divisions.
    long long prev = 1;
    for (int col = 0; col < k; ++col) {
      int piv = -1;
      for (int row = col; row < k; ++row)
        if (m[row][col] != 0) { piv = row; break; }
      if (piv < 0) return 0;
      if (piv != col) { std::swap(m[piv], m[col]); sign = -sign; }
      for (int row = col + 1; row < k; ++row) {
        for (int j = col + 1; j < k; ++j)
          m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / prev;
        m[row][col] = 0;
      }
      prev = m[col][col];
    }
    return k == 0 ? sign : sign * m[k - 1][k - 1];
  };
  for (auto& row : adj) row.fill(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long c = minor_det(j, i);
      adj[i][j] = ((i + j) % 2 == 0) ? c : -c;
    }
  det = 0;
  for (int j = 0; j < n; ++j) det += a[0][j] * adj[j][0];
}

}  // namespace

long long RootSystem::height_num(const Weight& w) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += adj_cartan[i][j] * w.c[j];
  return s;
}

long long RootSystem::form_num(const Weight& a, const Weight& b) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a.c[i] * gram[i][j] * b.c[j];
  return s;
}

bool RootSystem::root_coords(const Weight& v, std::array<long long, kMaxRank>& x) const {
  x.fill(0);
  for (int i = 0; i < rank; ++i) {
    long long num = 0;
    for (int j = 0; j < rank; ++j) num += adj_cartan[i][j] * v.c[j];
    if (num % det_cartan != 0) return false;
    x[i] = num / det_cartan;
  }
  return true;
}

bool RootSystem::in_root_lattice(const Weight& v) const {
  std::array<long long, kMaxRank> x;
  return root_coords(v, x);
}

bool RootSystem::in_pos_root_cone(const Weight& v) const {
  std::array<long long, kMaxRank> x;
  if (!root_coords(v, x)) return false;
  for (int i = 0; i < rank; ++i)
    if (x[i] < 0) return false;
  return true;
}

RootSystem make_root_system(char type, int rank) {
  if (!rank_in_range(type, rank))
    throw std::invalid_argument(std::string("unsupported type/rank: ") + type +
                                std::to_string(rank));
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  fill_cartan(type, rank, rs.cartan);

  // Symmetrizers d_i with d = 1 on short simple roots: solve
  // d_i * a_ij = d_j * a_ji along bonds, then rescale to min 1.
  {
    std::array<int, kMaxRank> d{};
    d.fill(0);
    d[0] = 2;  // provisional scale, reduced below
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
          if (i == j || rs.cartan[i][j] == 0) continue;
          if (d[i] != 0 && d[j] == 0) {
            // d_j = d_i * a_ij / a_ji
            d[j] = d[i] * rs.cartan[i][j] / rs.cartan[j][i];
            changed = true;
          }
        }
    }
    int mn = 1 << 20;
    for (int i = 0; i < rank; ++i)
      if (d[i] > 0) mn = std::min(mn, d[i]);
    for (int i = 0; i < rank; ++i) rs.sym[i] = d[i] / mn;
    rs.lacing = 1;
    for (int i = 0; i < rank; ++i) rs.lacing = std::max(rs.lacing, rs.sym[i]);
  }

  // Positive roots by string closure from the simple roots.
  {
    std::set<std::array<int, kMaxRank>> seen;
    std::vector<std::array<int, kMaxRank>> roots;
    for (int i = 0; i < rank; ++i) {
      std::array<int, kMaxRank> e{};
      e[i] = 1;
      seen.insert(e);
      roots.push_back(e);
    }
    for (size_t head = 0; head < roots.size(); ++head) {
      auto beta = roots[head];
      for (int i = 0; i < rank; ++i) {
        long long c = 0;
        for (int j = 0; j < rank; ++j) c += rs.cartan[i][j] * beta[j];
        int p = 0;  // length of the backward string beta - alpha_i, ...
        auto back = beta;
        while (true) {
          back[i] -= 1;
          bool nonneg = true, nonzero = false;
          for (int j = 0; j < rank; ++j) {
            if (back[j] > 0) nonzero = true;
            if (back[j] < 0) nonneg = false;
          }
          if (nonneg && nonzero && seen.count(back))
            ++p;
          else
            break;
        }
        if (p - c > 0) {
          auto fwd = beta;
          fwd[i] += 1;
          if (!seen.count(fwd)) {
            seen.insert(fwd);
            roots.push_back(fwd);
          }
        }
      }
    }
    for (const auto& c : roots) {
      RootSystem::Root r;
      r.alpha = c;
      for (int i = 0; i < rank; ++i) {
        long long acc = 0;
        for (int j = 0; j < rank; ++j) acc += rs.cartan[i][j] * c[j];
        r.wt.c[i] = static_cast<int32_t>(acc);
      }
      long long norm2 = 0;  // (beta,beta) = sum c_i c_j d_i a_ij
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          norm2 += static_cast<long long>(c[i]) * c[j] * rs.sym[i] * rs.cartan[i][j];
      r.norm_half = static_cast<int>(norm2 / 2);
      for (int i = 0; i < rank; ++i) {
        long long num = static_cast<long long>(c[i]) * rs.sym[i];
        if (num % r.norm_half != 0)
          throw std::logic_error("coroot coordinates not integral");
        r.covee[i] = static_cast<int>(num / r.norm_half);
      }
      rs.positive.push_back(r);
    }
    std::sort(rs.positive.begin(), rs.positive.end(),
              [](const RootSystem::Root& a, const RootSystem::Root& b) {
                return a.alpha < b.alpha;
              });
  }

  // theta: the unique dominant short root.
  {
    int found = 0;
    for (const auto& r : rs.positive) {
      if (r.norm_half != 1) continue;
      if (rs.is_dominant(r.wt)) {
        rs.theta = r.wt;
        rs.theta_alpha = r.alpha;
        rs.theta_covee = r.covee;
        ++found;
      }
    }
    if (found != 1) throw std::logic_error("dominant short root not unique");
    rs.short_simple_count = 0;
    for (int i = 0; i < rank; ++i)
      if (rs.sym[i] == 1) ++rs.short_simple_count;
    rs.dual_coxeter = 1;
    for (int i = 0; i < rank; ++i) rs.dual_coxeter += rs.theta_covee[i];
  }

  adjugate(rs.cartan, rank, rs.adj_cartan, rs.det_cartan);
  if (rs.det_cartan <= 0) throw std::logic_error("Cartan determinant not positive");
  // gram[i][j] = det * (pi_i, pi_j): expanding pi_j over simple roots gives
  // (pi_i, pi_j) = d_i (A^{-1})_{ij}, and adj/det = A^{-1}.
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram[i][j] = rs.adj_cartan[i][j] * rs.sym[i];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.gram[i][j] != rs.gram[j][i]) throw std::logic_error("Gram not symmetric");

  // Longest-element word from any strictly antidominant weight.
  {
    Weight mr;
    for (int i = 0; i < rank; ++i) mr.c[i] = -1;
    auto [dom, word] = to_dominant_finite(rs, mr);
    if (dom != rs.rho() || word.size() != rs.positive.size())
      throw std::logic_error("longest word construction failed");
    rs.w0_word = word;
  }
  return rs;
}

const RootSystem& shared_root_system(char type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{type, rank}];
  if (!slot) slot = std::make_unique<RootSystem>(make_root_system(type, rank));
  return *slot;
}

std::pair<Weight, std::vector<int>> to_dominant_finite(const RootSystem& rs, Weight w) {
  std::vector<int> discovery;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (w.c[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    w = rs.reflect(neg, w);
    discovery.push_back(neg);
  }
  std::reverse(discovery.begin(), discovery.end());
  return {w, discovery};
}

Weight dominant_rep(const RootSystem& rs, const Weight& w) {
  return to_dominant_finite(rs, w).first;
}

Weight antidominant_rep(const RootSystem& rs, const Weight& w) {
  return -dominant_rep(rs, -w);
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight, std::less<Weight>> seen;
  std::vector<Weight> out;
  out.push_back(dominant_rep(rs, w));
  seen.insert(out[0]);
  for (size_t head = 0; head < out.size(); ++head) {
    Weight cur = out[head];
    for (int i = 0; i < rs.rank; ++i) {
      Weight nx = rs.reflect(i, cur);
      if (seen.insert(nx).second) out.push_back(nx);
    }
  }
  return out;
}

namespace detail {

void fin_add(FinChar& f, const Weight& w, const Zint& c) {
  auto [it, fresh] = f.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  } else if (it->second.is_zero()) {
    f.erase(it);
  }
}

void fin_axpy(FinChar& f, const Zint& a, const FinChar& g) {
  for (const auto& [w, c] : g) fin_add(f, w, a * c);
}

void fin_prune(FinChar& f) {
  for (auto it = f.begin(); it != f.end();)
    it = it->second.is_zero() ? f.erase(it) : std::next(it);
}

}  // namespace detail

FinChar finite_demazure(const RootSystem& rs, int i, const FinChar& f) {
  FinChar out;
  out.reserve(f.size() * 2);
  Weight ai = rs.simple_root(i);
  for (const auto& [w, c] : f) {
    int32_t s = w.c[i];
    if (s >= 0) {
      Weight cur = w;
      for (int32_t j = 0; j <= s; ++j) {
        detail::fin_add(out, cur, c);
        cur = cur - ai;
      }
    } else if (s <= -2) {
      Weight cur = w + ai;
      for (int32_t j = 1; j <= -s - 1; ++j) {
        detail::fin_add(out, cur, -c);
        cur = cur + ai;
      }
    }
  }
  return out;
}

namespace {
bool g_verify_cartan = false;

struct IrrepKey {
  char type;
  int rank;
  Weight wt;
  bool operator<(const IrrepKey& o) const {
    if (type != o.type) return type < o.type;
    if (rank != o.rank) return rank < o.rank;
    return wt < o.wt;
  }
};
std::map<IrrepKey, FinChar> g_irrep_cache;
std::mutex g_irrep_mutex;
}  // namespace

void set_cartan_verification(bool on) { g_verify_cartan = on; }

const FinChar& finite_irrep_char(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("finite_irrep_char: weight not dominant");
  IrrepKey key{rs.type, rs.rank, lambda};
  std::lock_guard<std::mutex> lock(g_irrep_mutex);
  auto it = g_irrep_cache.find(key);
  if (it != g_irrep_cache.end()) return it->second;

  FinChar f;
  f.emplace(lambda, Zint(1));
  for (int letter : rs.w0_word) f = finite_demazure(rs, letter, f);

  if (g_verify_cartan) {
    FinChar ref = oracles::freudenthal_char(rs, lambda);
    if (ref.size() != f.size()) throw std::logic_error("irrep char != Freudenthal");
    for (const auto& [w, c] : ref) {
      auto jt = f.find(w);
      if (jt == f.end() || jt->second != c)
        throw std::logic_error("irrep char != Freudenthal");
    }
    Zint total;
    for (const auto& [w, c] : f) total += c;
    if (total != oracles::weyl_dimension(rs, lambda))
      throw std::logic_error("irrep char total != Weyl dimension");
  }
  return g_irrep_cache.emplace(key, std::move(f)).first->second;
}

std::vector<std::pair<Weight, Zint>> decompose_slice(const RootSystem& rs,
                                                     const FinChar& s) {
  // Invariance check: every coefficient must match its reflections.
  for (const auto& [w, c] : s)
    for (int i = 0; i < rs.rank; ++i) {
      auto it = s.find(rs.reflect(i, w));
      if (it == s.end() || it->second != c)
        throw std::invalid_argument("decompose_slice: input not W-invariant");
    }
  FinChar residual = s;
  detail::fin_prune(residual);
  std::vector<std::pair<Weight, Zint>> out;
  while (!residual.empty()) {
    // Highest weight = maximal under the dominance-compatible height.
    bool have = false;
    Weight top;
    long long top_h = 0;
    for (const auto& [w, c] : residual) {
      long long h = rs.height_num(w);
      if (!have || h > top_h || (h == top_h && top < w)) {
        have = true;
        top = w;
        top_h = h;
      }
    }
    if (!rs.is_dominant(top))
      throw std::invalid_argument("decompose_slice: maximal weight not dominant");
    Zint mult = residual.at(top);
    detail::fin_axpy(residual, -mult, finite_irrep_char(rs, top));
    out.emplace_back(top, std::move(mult));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace affchar
