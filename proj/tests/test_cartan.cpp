#include "doctest.h"

#include "affchar/cartan.hpp"
#include "affchar/oracles.hpp"

#include <algorithm>
#include <set>

using namespace affchar;
using namespace affchar::oracles;

TEST_CASE("Cartan data for the supported types") {
  // a[i][j] = <alpha_i_vee, alpha_j>, Bourbaki numbering (last node of C is
  // long, last node of B is short, second node of G2 is long).
  const RootSystem& a2 = shared_root_system('A', 2);
  CHECK(a2.cartan[0][1] == -1);
  CHECK(a2.cartan[1][0] == -1);
  CHECK(a2.det_cartan == 3);
  CHECK(a2.sym[0] == 1);
  CHECK(a2.sym[1] == 1);

  const RootSystem& c2 = shared_root_system('C', 2);
  CHECK(c2.cartan[0][1] == -2);
  CHECK(c2.cartan[1][0] == -1);
  CHECK(c2.sym[0] == 1);
  CHECK(c2.sym[1] == 2);
  CHECK(c2.det_cartan == 2);

  const RootSystem& g2 = shared_root_system('G', 2);
  CHECK(g2.cartan[0][1] == -3);
  CHECK(g2.cartan[1][0] == -1);
  CHECK(g2.sym[1] == 3);
  CHECK(g2.det_cartan == 1);

  const RootSystem& b3 = shared_root_system('B', 3);
  CHECK(b3.cartan[2][1] == -2);
  CHECK(b3.cartan[1][2] == -1);
  CHECK(b3.sym[0] == 2);
  CHECK(b3.sym[2] == 1);
}

TEST_CASE("positive roots and the dominant short root") {
  struct Row {
    char type;
    int rank;
    size_t npos;
    Weight theta;
  };
  const Row rows[] = {
      {'A', 1, 1, Weight{2}},
      {'A', 2, 3, Weight{1, 1}},
      {'C', 2, 4, Weight{0, 1}},
      {'G', 2, 6, Weight{1, 0}},
      {'B', 3, 9, Weight{1, 0, 0}},
  };
  for (const Row& r : rows) {
    const RootSystem& rs = shared_root_system(r.type, r.rank);
    CHECK(rs.positive.size() == r.npos);
    CHECK(rs.theta == r.theta);
    CHECK(rs.is_dominant(rs.theta));
    // theta is short: squared length 2 in the normalization (short, short) = 2.
    CHECK(rs.form_num(rs.theta, rs.theta) == 2 * rs.det_cartan);
  }
  const RootSystem& c2 = shared_root_system('C', 2);
  CHECK(c2.theta_covee[0] == 1);
  CHECK(c2.theta_covee[1] == 2);
}

TEST_CASE("invariant form against defining identities") {
  for (auto [t, n] : {std::pair<char, int>{'A', 2}, {'C', 2}, {'G', 2}, {'B', 3}}) {
    const RootSystem& rs = shared_root_system(t, n);
    // (pi_i, alpha_j) = d_j delta_ij, scaled by det to stay integral.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Weight pi{};
        pi.c[i] = 1;
        long long expect = (i == j) ? rs.det_cartan * rs.sym[j] : 0;
        CHECK(rs.form_num(pi, rs.simple_root(j)) == expect);
      }
    // (w, theta) = <theta_vee, w> since theta is short.
    Weight w{};
    for (int i = 0; i < n; ++i) w.c[i] = i + 1;
    CHECK(rs.form_num(w, rs.theta) == rs.det_cartan * rs.theta_pairing(w));
  }
}

TEST_CASE("reflections, dominance, and the longest word") {
  const RootSystem& g2 = shared_root_system('G', 2);
  Weight w{2, -1};
  Weight r = g2.reflect(0, w);
  CHECK(r.c[0] == -2);          // s_i negates the i-th coordinate pairing
  CHECK(g2.reflect(0, r) == w); // involution

  for (auto [t, n] : {std::pair<char, int>{'A', 2}, {'C', 2}, {'G', 2}, {'B', 3}}) {
    const RootSystem& rs = shared_root_system(t, n);
    auto [dom, word] = to_dominant_finite(rs, -rs.rho());
    CHECK(dom == rs.rho());
    CHECK(word.size() == rs.positive.size());  // longest element
    CHECK(rs.w0_word.size() == rs.positive.size());
  }
}

TEST_CASE("orbit sizes and orbit representatives") {
  struct Row {
    char type;
    int rank;
    Weight w;
    size_t orbit;
  };
  const Row rows[] = {
      {'A', 2, Weight{1, 0}, 3}, {'A', 2, Weight{1, 1}, 6}, {'C', 2, Weight{1, 0}, 4},
      {'C', 2, Weight{0, 1}, 4}, {'G', 2, Weight{1, 0}, 6}, {'B', 3, Weight{0, 0, 1}, 8},
      {'B', 3, Weight{1, 0, 0}, 6},
  };
  for (const Row& r : rows) {
    const RootSystem& rs = shared_root_system(r.type, r.rank);
    std::vector<Weight> orb = weyl_orbit(rs, r.w);
    CHECK(orb.size() == r.orbit);
    for (const Weight& v : orb) {
      CHECK(dominant_rep(rs, v) == r.w);
      CHECK(antidominant_rep(rs, v) == antidominant_rep(rs, r.w));
    }
  }
}

TEST_CASE("irreducible characters against the recursion oracle") {
  struct Row {
    char type;
    int rank;
    Weight w;
    long long dim;
  };
  const Row rows[] = {
      {'A', 1, Weight{3}, 4},       {'A', 2, Weight{1, 1}, 8},
      {'C', 2, Weight{1, 0}, 4},    {'C', 2, Weight{0, 1}, 5},
      {'C', 2, Weight{1, 1}, 16},   {'G', 2, Weight{1, 0}, 7},
      {'G', 2, Weight{0, 1}, 14},   {'B', 3, Weight{0, 0, 1}, 8},
      {'B', 3, Weight{1, 0, 1}, 48},
  };
  for (const Row& r : rows) {
    const RootSystem& rs = shared_root_system(r.type, r.rank);
    const FinChar& ch = finite_irrep_char(rs, r.w);
    FinChar oracle = freudenthal_char(rs, r.w);
    CHECK(ch.size() == oracle.size());
    Zint total = 0;
    for (const auto& [v, m] : ch) {
      auto it = oracle.find(v);
      REQUIRE(it != oracle.end());
      CHECK(it->second == m);
      total += m;
    }
    CHECK(total == Zint(r.dim));
    CHECK(total == weyl_dimension(rs, r.w));
  }
  // The 4-dimensional C2 representation is multiplicity free.
  const RootSystem& c2 = shared_root_system('C', 2);
  for (const auto& [v, m] : finite_irrep_char(c2, Weight{1, 0})) CHECK(m == Zint(1));
  // The A2 adjoint has a double zero weight.
  const RootSystem& a2 = shared_root_system('A', 2);
  CHECK(finite_irrep_char(a2, Weight{1, 1}).at(Weight{0, 0}) == Zint(2));
}

TEST_CASE("full Demazure word reproduces the irreducible character") {
  for (auto [t, n] : {std::pair<char, int>{'A', 2}, {'C', 2}, {'G', 2}}) {
    const RootSystem& rs = shared_root_system(t, n);
    Weight lam{};
    lam.c[0] = 1;
    if (n > 1) lam.c[n - 1] = 1;
    FinChar f{{lam, Zint(1)}};
    for (int i : rs.w0_word) f = finite_demazure(rs, i, f);
    const FinChar& irr = finite_irrep_char(rs, lam);
    CHECK(f.size() == irr.size());
    for (const auto& [v, m] : irr) CHECK(f.at(v) == m);
  }
}

TEST_CASE("slice decomposition round-trips") {
  const RootSystem& c2 = shared_root_system('C', 2);
  FinChar mix;
  detail::fin_axpy(mix, Zint(2), finite_irrep_char(c2, Weight{1, 0}));
  detail::fin_axpy(mix, Zint(3), finite_irrep_char(c2, Weight{0, 1}));
  detail::fin_axpy(mix, Zint(1), finite_irrep_char(c2, Weight{1, 1}));
  auto parts = decompose_slice(c2, mix);
  std::map<Weight, Zint> got(parts.begin(), parts.end());
  CHECK(got.size() == 3);
  CHECK(got.at(Weight{1, 0}) == Zint(2));
  CHECK(got.at(Weight{0, 1}) == Zint(3));
  CHECK(got.at(Weight{1, 1}) == Zint(1));
}
