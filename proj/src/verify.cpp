#include "affchar/verify.hpp"

#include "affchar/afweight.hpp"
#include "affchar/cartan.hpp"
#include "affchar/charring.hpp"
#include "affchar/demazure.hpp"
#include "affchar/expand.hpp"
#include "affchar/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affchar::verify {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CheckResult start(const char* name) {
  CheckResult r;
  r.name = name;
  r.passed = true;
  return r;
}

void fail(CheckResult& r, const std::string& what) {
  if (r.passed) r.details = what;  // keep the first mismatch
  r.passed = false;
}

Weight wt1(int m) {
  Weight w{};
  w.c[0] = static_cast<int32_t>(m);
  return w;
}

QPoly qp(std::initializer_list<std::pair<int32_t, long long>> il) {
  QPoly p;
  for (const auto& [e, c] : il) p.emplace(e, Zint(c));
  return p;
}

std::map<Weight, QPoly> sl2_table(std::initializer_list<std::pair<int, QPoly>> il) {
  std::map<Weight, QPoly> m;
  for (const auto& [c, p] : il) m.emplace(wt1(c), p);
  return m;
}

std::string coeffs_str(const RootSystem& rs, const std::map<Weight, QPoly>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, p] : coeffs) {
    if (!first) os << ", ";
    first = false;
    os << w.str(rs.rank) << ": " << qpoly_str(p);
  }
  return os.str();
}

// All dominant weights with coordinates in [0, box].
std::vector<Weight> dominant_box(const RootSystem& rs, int box) {
  std::vector<Weight> out;
  Weight w{};
  while (true) {
    out.push_back(w);
    int i = 0;
    while (i < rs.rank && w.c[i] == box) w.c[i++] = 0;
    if (i == rs.rank) break;
    ++w.c[i];
  }
  return out;
}

// Union of the Weyl orbits of the dominant box.
std::vector<Weight> orbit_box(const RootSystem& rs, int box) {
  std::set<Weight> seen;
  for (const Weight& d : dominant_box(rs, box))
    for (const Weight& w : weyl_orbit(rs, d)) seen.insert(w);
  return std::vector<Weight>(seen.begin(), seen.end());
}

constexpr std::array<std::pair<char, int>, 4> kSweepTypes = {
    {{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}}};

std::string place(const RootSystem& rs, long long k) {
  std::ostringstream os;
  os << rs.type << rs.rank << " k=" << k;
  return os.str();
}

bool qpoly_nonneg(const QPoly& p) {
  for (const auto& [e, c] : p)
    if (c.sign() < 0) return false;
  return true;
}

FinChar collapse_q1(const GradedCharacter& g) {
  FinChar out;
  g.for_each([&](const Mono& m, const Zint& z) { out[mono_weight(m)] += z; });
  return out;
}

FinChar fin_mul(const FinChar& a, const FinChar& b) {
  FinChar out;
  for (const auto& [wa, za] : a)
    for (const auto& [wb, zb] : b) out[wa + wb] += za * zb;
  return out;
}

}  // namespace

CheckResult check_sl2_thin_tables() {
  CheckResult r = start("sl2-thin-tables");
  auto t0 = Clock::now();
  const RootSystem& rs = shared_root_system('A', 1);
  struct Row {
    int mu, k;
    std::map<Weight, QPoly> want;
  };
  const std::vector<Row> rows = {
      {2, 1, sl2_table({{2, qp({{0, 1}})}, {0, qp({{1, 1}})}})},
      {3, 1, sl2_table({{3, qp({{0, 1}})}, {1, qp({{2, 1}})}})},
      {3, 2, sl2_table({{3, qp({{0, 1}})}, {1, qp({{1, 1}})}})},
      {4, 2, sl2_table({{4, qp({{0, 1}})}, {0, qp({{2, 1}})}})},
      {4, 3, sl2_table({{4, qp({{0, 1}})}, {2, qp({{1, 1}})}})},
      {4, 1,
       sl2_table({{4, qp({{0, 1}})}, {2, qp({{2, 1}, {3, 1}})}, {0, qp({{4, 1}})}})},
      {6, 1,
       sl2_table({{6, qp({{0, 1}})},
                  {4, qp({{3, 1}, {4, 1}, {5, 1}})},
                  {2, qp({{6, 1}, {7, 1}, {8, 1}})},
                  {0, qp({{9, 1}})}})},
  };
  for (const auto& row : rows) {
    const Expansion& got = branching_weyl(rs, wt1(row.mu), row.k);
    ++r.cases;
    if (got.coeffs != row.want) {
      std::ostringstream os;
      os << "mu=" << row.mu << " k=" << row.k << ": got {" << coeffs_str(rs, got.coeffs)
         << "}, want {" << coeffs_str(rs, row.want) << "}";
      fail(r, os.str());
    }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_sl2_thick_tables() {
  CheckResult r = start("sl2-thick-tables");
  auto t0 = Clock::now();
  const RootSystem& rs = shared_root_system('A', 1);
  struct Row {
    int mu;
    int32_t depth;
    std::map<Weight, QPoly> want;
  };
  const std::vector<Row> rows = {
      {0, 10,
       sl2_table(
           {{0, qp({{0, 1}})}, {2, qp({{1, 1}})}, {4, qp({{4, 1}})}, {6, qp({{9, 1}})}})},
      {2, 9,
       sl2_table({{2, qp({{0, 1}})},
                  {4, qp({{2, 1}, {3, 1}})},
                  {6, qp({{6, 1}, {7, 1}, {8, 1}})}})},
  };
  for (const auto& row : rows) {
    GradedCharacter f = thick_weyl_gch(rs, wt1(row.mu), 2, row.depth);
    Expansion got = expand_symmetric(rs, f, BasisDesc{Family::Thick, 1}, row.depth);
    ++r.cases;
    if (got.coeffs != row.want) {
      std::ostringstream os;
      os << "mu=" << row.mu << " depth=" << row.depth << ": got {"
         << coeffs_str(rs, got.coeffs) << "}, want {" << coeffs_str(rs, row.want) << "}";
      fail(r, os.str());
    }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_orbit_branching_sweep() {
  CheckResult r = start("orbit-branching-sweep");
  auto t0 = Clock::now();
  for (const auto& [type, rank] : kSweepTypes) {
    const RootSystem& rs = shared_root_system(type, rank);
    const std::vector<Weight> mus = dominant_box(rs, 6);
    for (long long k = 1; k <= 3; ++k) {
      std::vector<Weight> lams;
      for (const Weight& w : dominant_box(rs, static_cast<int>(k)))
        if (rs.theta_pairing(w) < k) lams.push_back(w);
      auto mis = orbit_branching_verify(rs, k, lams, mus);
      r.cases += static_cast<long long>(lams.size()) * static_cast<long long>(mus.size());
      if (!mis.empty()) {
        const auto& m = mis.front();
        std::ostringstream os;
        os << place(rs, k) << " lambda=" << m.lambda.str(rs.rank)
           << " mu=" << m.mu.str(rs.rank) << ": got " << qpoly_str(m.got) << ", orbit says "
           << qpoly_str(m.expected) << " (" << mis.size() << " mismatches)";
        fail(r, os.str());
      }
    }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_expansion_positivity() {
  CheckResult r = start("expansion-positivity");
  auto t0 = Clock::now();
  auto scan = [&](const RootSystem& rs, const std::string& what,
                  const std::map<Weight, QPoly>& coeffs) {
    ++r.cases;
    for (const auto& [w, p] : coeffs)
      if (!qpoly_nonneg(p))
        fail(r, what + ": negative coefficient at " + w.str(rs.rank) + ": " + qpoly_str(p));
  };
  for (const auto& [type, rank] : kSweepTypes) {
    const RootSystem& rs = shared_root_system(type, rank);
    // Branching polynomials over the sweep ranges.
    for (long long k = 1; k <= 3; ++k)
      for (const Weight& mu : dominant_box(rs, 6))
        scan(rs, "branch " + place(rs, k) + " mu=" + mu.str(rs.rank),
             branching_weyl(rs, mu, k).coeffs);
    // Thin characters expanded one level up.
    for (long long k = 1; k <= 2; ++k)
      for (const Weight& lam : orbit_box(rs, 2))
        scan(rs, "thin " + place(rs, k) + " lam=" + lam.str(rs.rank),
             expand_thin(rs, thin_gch(rs, lam, k), k + 1, std::nullopt).coeffs);
    // Small Kostka products at level 2.
    std::vector<std::vector<std::pair<long long, Weight>>> jobs;
    Weight f1{};
    f1.c[0] = 1;
    jobs.push_back({{1, f1}});
    jobs.push_back({{1, f1}, {1, f1}});
    if (rs.rank >= 2) {
      Weight f2{};
      f2.c[1] = 1;
      jobs.push_back({{1, f1}, {1, f2}});
      jobs.push_back({{2, f1 + f2}});
    }
    for (const auto& factors : jobs)
      scan(rs, "kostka " + place(rs, 2), kostka(rs, factors, 2, std::nullopt));
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_support_bounds() {
  CheckResult r = start("support-bounds");
  auto t0 = Clock::now();
  for (const auto& [type, rank] : kSweepTypes) {
    const RootSystem& rs = shared_root_system(type, rank);
    // Dominant sweep range plus full orbits of a smaller box.
    std::set<Weight> lams;
    for (const Weight& w : dominant_box(rs, 6)) lams.insert(w);
    for (const Weight& w : orbit_box(rs, rank == 1 ? 6 : 3)) lams.insert(w);
    for (long long k = 1; k <= 3; ++k) {
      for (const Weight& lam : lams) {
        const GradedCharacter& f = thin_gch(rs, lam, k);
        ++r.cases;
        f.for_each([&](const Mono& m, const Zint&) {
          Weight w = mono_weight(m);
          if (!sigma_contains(rs, lam, w))
            fail(r, "thin " + place(rs, k) + " lam=" + lam.str(rs.rank) + ": weight " +
                        w.str(rs.rank) + " outside the lower set");
        });
        if (k >= 2) {
          const GradedCharacter& g = thin_gch(rs, lam, k - 1);
          ++r.cases;
          f.for_each([&](const Mono& m, const Zint& z) {
            if (!(z <= g.coeff(mono_weight(m), m.e)))
              fail(r, "thin " + place(rs, k) + " lam=" + lam.str(rs.rank) +
                          ": coefficient exceeds the level-" + std::to_string(k - 1) +
                          " character at " + mono_weight(m).str(rs.rank) + " q^" +
                          std::to_string(m.e));
          });
        }
      }
    }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_reciprocity() {
  CheckResult r = start("reciprocity");
  auto t0 = Clock::now();
  std::string diag;
  const RootSystem& a1 = shared_root_system('A', 1);
  for (long long k = 1; k <= 2; ++k)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        ++r.cases;
        if (!reciprocity_check(a1, wt1(a), wt1(b), k, 6, &diag))
          fail(r, "A1 k=" + std::to_string(k) + " lam=" + std::to_string(a) +
                      " mu=" + std::to_string(b) + ": " + diag);
      }
  const RootSystem& a2 = shared_root_system('A', 2);
  for (const Weight& lam : dominant_box(a2, 1))
    for (const Weight& mu : dominant_box(a2, 1)) {
      ++r.cases;
      if (!reciprocity_check(a2, lam, mu, 1, 4, &diag))
        fail(r, "A2 k=1 lam=" + lam.str(2) + " mu=" + mu.str(2) + ": " + diag);
    }
  r.seconds = since(t0);
  return r;
}

CheckResult check_character_formula() {
  CheckResult r = start("character-formula");
  auto t0 = Clock::now();
  std::string diag;
  for (const auto& [type, rank] : kSweepTypes) {
    const RootSystem& rs = shared_root_system(type, rank);
    for (long long k = 1; k <= 2; ++k)
      for (const Weight& lam : dominant_box(rs, static_cast<int>(k))) {
        if (rs.theta_pairing(lam) > k) continue;
        AffineWeight top = embed(lam, k, 0);
        GradedCharacter chL = integrable_gch(rs, top, 6);
        ++r.cases;
        if (!oracles::weyl_kac_check(rs, top, chL, 6, &diag))
          fail(r, place(rs, k) + " lam=" + lam.str(rs.rank) + ": " + diag);
      }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_critical_quotients() {
  CheckResult r = start("critical-quotients");
  auto t0 = Clock::now();
  std::string diag;
  constexpr std::array<std::pair<char, int>, 3> types = {{{'A', 1}, {'A', 2}, {'C', 2}}};
  for (const auto& [type, rank] : types) {
    const RootSystem& rs = shared_root_system(type, rank);
    for (long long k = 2; k <= 3; ++k)
      for (const Weight& lam : dominant_box(rs, static_cast<int>(k))) {
        if (rs.theta_pairing(lam) != k) continue;
        ++r.cases;
        if (!demext_check(rs, lam, k, &diag))
          fail(r, place(rs, k) + " lam=" + lam.str(rs.rank) + ": " + diag);
      }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_kostka_stabilization() {
  CheckResult r = start("kostka-stabilization");
  auto t0 = Clock::now();
  const RootSystem& rs = shared_root_system('A', 1);
  const Weight two = wt1(2);
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<long long, Weight>> factors(n, {1, two});
    // The basis is all irreducibles once the level exceeds the total pairing
    // with theta, so the coefficient maps stop moving there.
    auto a = kostka(rs, factors, 2 * n, std::nullopt);
    auto b = kostka(rs, factors, 2 * n + 1, std::nullopt);
    ++r.cases;
    if (a != b)
      fail(r, "n=" + std::to_string(n) + ": levels " + std::to_string(2 * n) + " and " +
                  std::to_string(2 * n + 1) + " disagree");
    // q->1 totals against the plain tensor decomposition.
    FinChar prod;
    prod[Weight{}] = Zint(1);
    const FinChar factor = collapse_q1(weyl_gch(rs, two, 1));
    for (int i = 0; i < n; ++i) prod = fin_mul(prod, factor);
    auto parts = decompose_slice(rs, prod);
    std::map<Weight, Zint> brute(parts.begin(), parts.end());
    std::map<Weight, Zint> at_one;
    for (const auto& [w, p] : a) {
      Zint v = qpoly_at_one(p);
      if (!v.is_zero()) at_one[w] = v;
    }
    ++r.cases;
    if (at_one != brute) fail(r, "n=" + std::to_string(n) + ": q->1 totals disagree");
  }
  // One factor at its own level reduces to plain branching.
  auto single = kostka(rs, {{1, two}}, 1, std::nullopt);
  ++r.cases;
  if (single != branching_weyl(rs, two, 1).coeffs)
    fail(r, "single factor disagrees with branching");
  r.seconds = since(t0);
  return r;
}

namespace {

constexpr std::array<std::pair<char, int>, 6> kPropTypes = {
    {{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}}};

int uniform(std::mt19937& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

Weight random_weight(const RootSystem& rs, std::mt19937& g, int lo, int hi) {
  Weight w{};
  for (int i = 0; i < rs.rank; ++i) w.c[i] = uniform(g, lo, hi);
  return w;
}

GradedCharacter random_raw(const RootSystem& rs, std::mt19937& g) {
  GradedCharacter f(rs, uniform(g, 0, 3), Anchor::Raw);
  int terms = uniform(g, 1, 4);
  for (int t = 0; t < terms; ++t) {
    int c = uniform(g, -3, 3);
    if (c == 0) c = 1;
    f.add_term(random_weight(rs, g, -5, 5), uniform(g, 0, 6), Zint(c));
  }
  return f;
}

// 2, 3, 4, 6 by the usual Cartan-product rule; 0 marks an infinite order.
int braid_order(const RootSystem& rs, int i, int j) {
  long long p = affine_cartan_entry(rs, i, j) * affine_cartan_entry(rs, j, i);
  if (p == 0) return 2;
  if (p == 1) return 3;
  if (p == 2) return 4;
  if (p == 3) return 6;
  return 0;
}

AffineWeight fold_word(const RootSystem& rs, const std::vector<int>& word, AffineWeight x) {
  for (int i : word) x = affine_reflect(rs, i, x);
  return x;
}

// Random walk away from dominance; every step reflects at a strictly positive
// pairing, so the recovered word length grows with the walk.
AffineWeight random_below(const RootSystem& rs, AffineWeight v, std::mt19937& g, int steps) {
  for (int s = 0; s < steps; ++s) {
    std::vector<int> down;
    for (int i = 0; i <= rs.rank; ++i)
      if (affine_pairing(rs, i, v) > 0) down.push_back(i);
    if (down.empty()) break;
    v = affine_reflect(rs, down[static_cast<size_t>(uniform(g, 0, int(down.size()) - 1))], v);
  }
  return v;
}

// Rewrites the word by random applications of the braid substitution
// (i j i ...) -> (j i j ...); the rewritten word is reduced for the same
// element whenever the input is.
std::vector<int> braid_shuffled(const RootSystem& rs, std::vector<int> w, std::mt19937& g,
                                int rounds) {
  for (int round = 0; round < rounds; ++round) {
    std::vector<std::pair<size_t, int>> spots;
    for (size_t p = 0; p < w.size(); ++p) {
      if (p + 1 >= w.size()) break;
      int a = w[p], b = w[p + 1];
      if (a == b) continue;
      int m = braid_order(rs, a, b);
      if (m < 2 || p + static_cast<size_t>(m) > w.size()) continue;
      bool alt = true;
      for (int t = 0; t < m; ++t)
        if (w[p + static_cast<size_t>(t)] != (t % 2 == 0 ? a : b)) alt = false;
      if (alt) spots.emplace_back(p, m);
    }
    if (spots.empty()) break;
    auto [p, m] = spots[static_cast<size_t>(uniform(g, 0, int(spots.size()) - 1))];
    int a = w[p], b = w[p + 1];
    for (int t = 0; t < m; ++t) w[p + static_cast<size_t>(t)] = (t % 2 == 0 ? b : a);
  }
  return w;
}

}  // namespace

CheckResult check_operator_properties() {
  CheckResult r = start("operator-properties");
  auto t0 = Clock::now();
  std::mt19937 g(20260823);
  constexpr int kRounds = 512;

  // String operators are idempotent.
  for (int t = 0; t < kRounds && r.passed; ++t) {
    const auto& [type, rank] = kPropTypes[static_cast<size_t>(uniform(g, 0, 5))];
    const RootSystem& rs = shared_root_system(type, rank);
    GradedCharacter f = random_raw(rs, g);
    int i = uniform(g, 0, rs.rank);
    GradedCharacter once = demazure_op(i, f);
    ++r.cases;
    if (!(demazure_op(i, once) == once))
      fail(r, "idempotence: " + std::string(1, type) + std::to_string(rank) +
                  " i=" + std::to_string(i));
  }

  // Braid relations between distinct nodes of finite order.
  for (int t = 0; t < kRounds && r.passed; ++t) {
    const auto& [type, rank] = kPropTypes[static_cast<size_t>(uniform(g, 1, 5))];
    const RootSystem& rs = shared_root_system(type, rank);
    int i = uniform(g, 0, rs.rank), j = uniform(g, 0, rs.rank);
    if (i == j) j = (j + 1) % (rs.rank + 1);
    int m = braid_order(rs, i, j);
    if (m == 0) {
      --t;
      continue;
    }
    GradedCharacter f = random_raw(rs, g);
    GradedCharacter x = f, y = f;
    for (int s = 0; s < m; ++s) {
      x = demazure_op(s % 2 == 0 ? i : j, x);
      y = demazure_op(s % 2 == 0 ? j : i, y);
    }
    ++r.cases;
    if (!(x == y))
      fail(r, "braid: " + std::string(1, type) + std::to_string(rank) + " (" +
                  std::to_string(i) + "," + std::to_string(j) + ") m=" + std::to_string(m));
  }

  // The folded operator product depends on the element, not the word.
  for (int t = 0; t < kRounds && r.passed; ++t) {
    const auto& [type, rank] = kPropTypes[static_cast<size_t>(uniform(g, 0, 5))];
    const RootSystem& rs = shared_root_system(type, rank);
    long long k = uniform(g, 1, 3);
    AffineWeight mu = random_below(rs, embed(random_weight(rs, g, -3, 3), k, 0), g,
                                   uniform(g, 0, 8));
    auto [top, word] = to_dominant_affine(rs, mu);
    std::vector<int> other = braid_shuffled(rs, word, g, 10);
    ++r.cases;
    if (fold_word(rs, other, top) != mu) {
      fail(r, "braid shuffle changed the element");
      continue;
    }
    GradedCharacter seed =
        GradedCharacter::monomial(rs, k, Anchor::Raw, top.finite, 0);
    if (!(apply_word(word, seed) == apply_word(other, seed)))
      fail(r, "reduced-word dependence: " + std::string(1, type) + std::to_string(rank));
  }

  // Reflections are involutions, finitely and affinely.
  for (int t = 0; t < kRounds && r.passed; ++t) {
    const auto& [type, rank] = kPropTypes[static_cast<size_t>(uniform(g, 0, 5))];
    const RootSystem& rs = shared_root_system(type, rank);
    AffineWeight v{random_weight(rs, g, -9, 9), uniform(g, -3, 3), uniform(g, -5, 5)};
    int i = uniform(g, 0, rs.rank);
    ++r.cases;
    if (affine_reflect(rs, i, affine_reflect(rs, i, v)) != v) {
      fail(r, "affine reflection not involutive");
      continue;
    }
    if (i >= 1 && rs.reflect(i - 1, rs.reflect(i - 1, v.finite)) != v.finite)
      fail(r, "finite reflection not involutive");
  }

  // Subwords move orbit points down in the Cherednik order.
  for (int t = 0; t < kRounds && r.passed; ++t) {
    const auto& [type, rank] = kPropTypes[static_cast<size_t>(uniform(g, 0, 5))];
    const RootSystem& rs = shared_root_system(type, rank);
    long long k = uniform(g, 1, 3);
    AffineWeight mu = random_below(rs, embed(random_weight(rs, g, -2, 2), k, 0), g,
                                   uniform(g, 0, 8));
    auto [top, word] = to_dominant_affine(rs, mu);
    std::vector<int> sub;
    for (int letter : word)
      if (uniform(g, 0, 1)) sub.push_back(letter);
    AffineWeight below = fold_word(rs, sub, top);
    ++r.cases;
    if (!cherednik_leq(rs, below.finite, mu.finite))
      fail(r, "subword image not below: " + std::string(1, type) + std::to_string(rank) +
                  " " + below.finite.str(rs.rank) + " vs " + mu.finite.str(rs.rank));
  }

  // Both lower-set implementations agree (rank <= 2 geometry).
  for (int t = 0; t < kRounds && r.passed; ++t) {
    const auto& [type, rank] = kPropTypes[static_cast<size_t>(uniform(g, 0, 3))];
    const RootSystem& rs = shared_root_system(type, rank);
    Weight lam = random_weight(rs, g, rank == 1 ? -6 : -3, rank == 1 ? 6 : 3);
    int box = 0;
    for (const Weight& w : weyl_orbit(rs, lam))
      for (int i = 0; i < rs.rank; ++i) box = std::max(box, std::abs(w.c[i]));
    ++r.cases;
    if (oracles::sigma_set_brute(rs, lam, box) != oracles::sigma_set_hull(rs, lam, box))
      fail(r, "lower-set implementations disagree at lam=" + lam.str(rs.rank));
  }

  r.seconds = since(t0);
  return r;
}

std::vector<std::string> suite_names() {
  return {"sl2-paper", "corollary-num", "positivity", "reciprocity",
          "oracle",    "demext",        "kostka",     "properties"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  using Fn = CheckResult (*)();
  static const std::vector<std::pair<std::string, std::vector<Fn>>> table = {
      {"sl2-paper", {&check_sl2_thin_tables, &check_sl2_thick_tables}},
      {"corollary-num", {&check_orbit_branching_sweep}},
      {"positivity", {&check_expansion_positivity, &check_support_bounds}},
      {"reciprocity", {&check_reciprocity}},
      {"oracle", {&check_character_formula}},
      {"demext", {&check_critical_quotients}},
      {"kostka", {&check_kostka_stabilization}},
      {"properties", {&check_operator_properties}},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fns] : table) {
    if (suite != "all" && suite != name) continue;
    for (Fn fn : fns) out.push_back(fn());
  }
  if (out.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
  return out;
}

}  // namespace affchar::verify
