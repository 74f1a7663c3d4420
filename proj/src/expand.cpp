#include "affchar/expand.hpp"

#include "affchar/afweight.hpp"
#include "affchar/demazure.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affchar {

void qpoly_add(QPoly& p, int32_t e, const Zint& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

QPoly qpoly_truncated(const QPoly& p, int32_t n) {
  QPoly out;
  for (const auto& [e, c] : p)
    if (e <= n) out.emplace(e, c);
  return out;
}

Zint qpoly_at_one(const QPoly& p) {
  Zint s(0);
  for (const auto& [e, c] : p) s += c;
  return s;
}

std::string qpoly_str(const QPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    Zint a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool unit = a == Zint(1);
    if (!unit || e == 0) os << a.str();
    if (e == 1)
      os << "q";
    else if (e > 1)
      os << "q^" << e;
    first = false;
  }
  return os.str();
}

namespace {

GradedCharacter basis_character(const RootSystem& srs, const BasisDesc& basis,
                                const Weight& mu, int32_t depth) {
  switch (basis.family) {
    case Family::Irrep: {
      GradedCharacter g(srs, 0, Anchor::Normalized);
      for (const auto& [w, c] : finite_irrep_char(srs, mu)) g.add_term(w, 0, c);
      return g;
    }
    case Family::Weyl:
      return weyl_gch(srs, mu, basis.level);
    case Family::Thin:
      return thin_gch(srs, mu, basis.level);
    case Family::Thick:
      return thick_weyl_gch(srs, mu, basis.level, depth);
  }
  throw std::logic_error("unreachable basis family");
}

struct PlannedDepth {
  bool exact;
  int32_t limit;  // peeling stops past this degree
};

PlannedDepth plan_depth(const GradedCharacter& f, const BasisDesc& basis,
                        std::optional<int32_t> depth) {
  if (!depth) {
    if (f.truncated())
      throw std::invalid_argument(
          "exact expansion of a truncated character; pass a depth <= " +
          std::to_string(*f.qmax()));
    if (basis.family == Family::Thick)
      throw std::invalid_argument("thick basis expansions require a depth");
    int32_t cap = (f.empty() ? 0 : f.max_exponent()) + 4096;
    return {true, cap};
  }
  if (*depth < 0) throw std::invalid_argument("negative expansion depth");
  if (f.truncated() && *f.qmax() < *depth)
    throw std::invalid_argument("requested depth " + std::to_string(*depth) +
                                " exceeds the input's exact window " +
                                std::to_string(*f.qmax()));
  return {false, *depth};
}

void check_normalized_nonneg(const GradedCharacter& f) {
  if (f.anchor() != Anchor::Normalized)
    throw std::invalid_argument("expansion expects a normalized character");
  if (!f.empty() && f.min_exponent() < 0)
    throw std::invalid_argument("expansion expects nonnegative exponents");
}

}  // namespace

Expansion expand_symmetric(const RootSystem& rs, const GradedCharacter& f,
                           BasisDesc basis, std::optional<int32_t> depth) {
  check_normalized_nonneg(f);
  if (basis.family == Family::Thin)
    throw std::invalid_argument("the thin basis is not symmetric; use expand_thin");
  if (!is_w_invariant(f))
    throw std::invalid_argument("expansion in a symmetric basis requires a W-invariant character");
  PlannedDepth pd = plan_depth(f, basis, depth);
  const RootSystem& srs = shared_root_system(rs.type, rs.rank);

  Expansion out;
  out.basis = basis;
  if (!pd.exact) out.qmax = pd.limit;

  GradedCharacter r = f;
  if (!pd.exact) r.truncate(pd.limit);
  while (!r.empty()) {
    int32_t m = r.min_exponent();
    if (m > pd.limit) {
      if (pd.exact)
        throw std::logic_error("input is not a finite combination of the basis");
      break;
    }
    auto parts = decompose_slice(srs, r.slice(m));
    for (const auto& [mu, a] : parts) {
      qpoly_add(out.coeffs[mu], m, a);
      GradedCharacter b = basis_character(srs, basis, mu, pd.limit);
      b.set_level(r.level());
      b.shift_exponent(m);
      r.axpy(-a, b);
    }
    if (!r.slice(m).empty())
      throw std::logic_error("expansion failed to clear a q-slice");
  }
  return out;
}

Expansion expand_thin(const RootSystem& rs, const GradedCharacter& f, long long k_target,
                      std::optional<int32_t> depth) {
  if (k_target < 1) throw std::domain_error("thin characters need level >= 1");
  check_normalized_nonneg(f);
  PlannedDepth pd = plan_depth(f, BasisDesc{Family::Thin, k_target}, depth);
  const RootSystem& srs = shared_root_system(rs.type, rs.rank);

  Expansion out;
  out.basis = BasisDesc{Family::Thin, k_target};
  if (!pd.exact) out.qmax = pd.limit;

  GradedCharacter r = f;
  if (!pd.exact) r.truncate(pd.limit);
  while (!r.empty()) {
    int32_t m = r.min_exponent();
    if (m > pd.limit) {
      if (pd.exact)
        throw std::logic_error("input is not a finite combination of the basis");
      break;
    }
    FinChar s = r.slice(m);
    size_t guard = 0;
    while (!s.empty()) {
      if (++guard > 100000)
        throw std::logic_error("thin expansion stalled; triangularity violated");
      // A maximal weight of the slice support; ties broken lexicographically.
      bool have = false;
      Weight best;
      for (const auto& [w, c] : s) {
        bool maximal = true;
        for (const auto& [v, cv] : s) {
          if (v == w) continue;
          if (cherednik_leq(srs, w, v)) {
            maximal = false;
            break;
          }
        }
        if (maximal && (!have || best < w)) {
          best = w;
          have = true;
        }
      }
      if (!have) throw std::logic_error("slice without a maximal weight");
      Zint a = s.at(best);
      qpoly_add(out.coeffs[best], m, a);
      GradedCharacter b = thin_gch(srs, best, k_target);
      b.set_level(r.level());
      b.shift_exponent(m);
      r.axpy(-a, b);
      s = r.slice(m);
    }
  }
  return out;
}

const Expansion& branching_weyl(const RootSystem& rs, const Weight& mu, long long k) {
  if (k < 1) throw std::domain_error("branching needs level >= 1");
  if (!rs.is_dominant(mu))
    throw std::invalid_argument("branching is indexed by dominant weights");
  using Key = std::tuple<char, int, std::array<int32_t, kMaxRank>, long long>;
  static std::mutex mtx;
  static std::map<Key, std::unique_ptr<Expansion>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[Key{rs.type, rs.rank, mu.c, k}];
  if (!slot) {
    const RootSystem& srs = shared_root_system(rs.type, rs.rank);
    slot = std::make_unique<Expansion>(
        expand_symmetric(srs, weyl_gch(srs, mu, k), BasisDesc{Family::Weyl, k + 1},
                         std::nullopt));
  }
  return *slot;
}

std::vector<OrbitMismatch> orbit_branching_verify(const RootSystem& rs, long long k,
                                                  const std::vector<Weight>& lambdas,
                                                  const std::vector<Weight>& mus) {
  std::vector<OrbitMismatch> bad;
  for (const Weight& mu : mus) {
    const Expansion& b = branching_weyl(rs, mu, k);
    for (const Weight& lam : lambdas) {
      QPoly got;
      auto it = b.coeffs.find(lam);
      if (it != b.coeffs.end()) got = it->second;
      QPoly expected;
      if (auto m = orbit_equiv(rs, lam, mu, k))
        expected.emplace(static_cast<int32_t>(*m), Zint(1));
      if (got != expected) bad.push_back({lam, mu, got, expected});
    }
  }
  return bad;
}

bool reciprocity_check(const RootSystem& rs, const Weight& lam, const Weight& mu,
                       long long k, int32_t depth, std::string* diag) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  const RootSystem& srs = shared_root_system(rs.type, rs.rank);
  GradedCharacter p = projective_gch(srs, lam, k, depth);
  Expansion left = expand_symmetric(srs, p, BasisDesc{Family::Thick, k}, depth);
  QPoly lhs;
  if (auto it = left.coeffs.find(mu); it != left.coeffs.end())
    lhs = qpoly_truncated(it->second, depth);

  Expansion right =
      expand_symmetric(srs, weyl_gch(srs, mu, k), BasisDesc{Family::Irrep, 0},
                       std::nullopt);
  QPoly rhs;
  if (auto it = right.coeffs.find(lam); it != right.coeffs.end())
    rhs = qpoly_truncated(it->second, depth);

  if (lhs == rhs) return true;
  if (diag) {
    std::ostringstream os;
    os << "projective side " << qpoly_str(lhs) << " vs Weyl side " << qpoly_str(rhs);
    *diag += os.str();
  }
  return false;
}

std::map<Weight, QPoly> kostka(const RootSystem& rs,
                               const std::vector<std::pair<long long, Weight>>& factors,
                               long long k, std::optional<int32_t> depth) {
  if (k < 1) throw std::domain_error("restriction level must be >= 1");
  const RootSystem& srs = shared_root_system(rs.type, rs.rank);
  GradedCharacter prod =
      GradedCharacter::monomial(srs, 0, Anchor::Normalized, Weight{}, 0);
  for (const auto& [l, w] : factors) {
    if (l < 1) throw std::domain_error("factor levels must be >= 1");
    if (l > k)
      throw std::invalid_argument("factor level exceeds the restriction level");
    if (!srs.is_dominant(w))
      throw std::invalid_argument("factors are indexed by dominant weights");
    prod = prod.mul(weyl_gch(srs, w, l));
  }
  return expand_symmetric(srs, prod, BasisDesc{Family::Weyl, k + 1}, depth).coeffs;
}

}  // namespace affchar
