#include "doctest.h"

#include "affchar/demazure.hpp"
#include "affchar/oracles.hpp"

#include <algorithm>

using namespace affchar;
using namespace affchar::oracles;

TEST_CASE("dimension formula on standard representations") {
  const RootSystem& a1 = shared_root_system('A', 1);
  for (int n = 0; n <= 6; ++n) CHECK(weyl_dimension(a1, Weight{n}) == Zint(n + 1));
  CHECK(weyl_dimension(shared_root_system('A', 2), Weight{1, 1}) == Zint(8));
  CHECK(weyl_dimension(shared_root_system('A', 2), Weight{2, 0}) == Zint(6));
  CHECK(weyl_dimension(shared_root_system('C', 2), Weight{0, 1}) == Zint(5));
  CHECK(weyl_dimension(shared_root_system('C', 2), Weight{1, 1}) == Zint(16));
  CHECK(weyl_dimension(shared_root_system('G', 2), Weight{0, 1}) == Zint(14));
  CHECK(weyl_dimension(shared_root_system('B', 3), Weight{1, 0, 0}) == Zint(7));
  CHECK(weyl_dimension(shared_root_system('B', 3), Weight{0, 1, 0}) == Zint(21));
  CHECK(weyl_dimension(shared_root_system('B', 3), Weight{0, 0, 1}) == Zint(8));
}

TEST_CASE("multiplicity recursion agrees with the Demazure construction") {
  struct Row {
    char type;
    int rank;
    Weight w;
  };
  const Row rows[] = {
      {'A', 2, Weight{2, 1}},
      {'C', 2, Weight{1, 1}},
      {'G', 2, Weight{1, 1}},
      {'B', 3, Weight{1, 0, 1}},
  };
  for (const Row& r : rows) {
    const RootSystem& rs = shared_root_system(r.type, r.rank);
    FinChar f = freudenthal_char(rs, r.w);
    const FinChar& g = finite_irrep_char(rs, r.w);
    CHECK(f.size() == g.size());
    Zint total = 0;
    for (const auto& [w, c] : f) {
      CHECK(g.at(w) == c);
      total += c;
    }
    CHECK(total == weyl_dimension(rs, r.w));
  }
}

TEST_CASE("binary tensor decompositions of sl2 strings") {
  auto two = sl2_tensor_decompose({2, 2});
  REQUIRE(two.size() == 5);
  CHECK(two[4] == 1);
  CHECK(two[2] == 1);
  CHECK(two[0] == 1);
  CHECK(two[3] == 0);

  auto cube = sl2_tensor_decompose({1, 1, 1});
  REQUIRE(cube.size() == 4);
  CHECK(cube[3] == 1);
  CHECK(cube[1] == 2);

  auto none = sl2_tensor_decompose({});
  REQUIRE(none.size() == 1);
  CHECK(none[0] == 1);
}

TEST_CASE("lower sets by enumeration and by hull tests") {
  struct Row {
    char type;
    int rank;
    Weight w;
    int box;
  };
  const Row rows[] = {
      {'A', 1, Weight{2}, 4},      {'A', 1, Weight{-2}, 4},  {'A', 1, Weight{-4}, 5},
      {'A', 2, Weight{-1, -1}, 3}, {'C', 2, Weight{-1, 0}, 3}, {'G', 2, Weight{0, -1}, 2},
  };
  for (const Row& r : rows) {
    const RootSystem& rs = shared_root_system(r.type, r.rank);
    std::vector<Weight> a = sigma_set_brute(rs, r.w, r.box);
    std::vector<Weight> b = sigma_set_hull(rs, r.w, r.box);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(!a.empty());
  }
  const RootSystem& a1 = shared_root_system('A', 1);
  std::vector<Weight> s = sigma_set_brute(a1, Weight{-2}, 4);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<Weight>{Weight{-2}, Weight{0}, Weight{2}});
}

TEST_CASE("numerator-denominator identity certifies characters") {
  const RootSystem& a1 = shared_root_system('A', 1);
  GradedCharacter v = integrable_gch(a1, embed(Weight{0}, 1, 0), 4);
  CHECK(weyl_kac_check(a1, embed(Weight{0}, 1, 0), v, 4));

  // Corrupting one multiplicity must be caught.
  GradedCharacter bad = v;
  bad.add_term(Weight{0}, 3, Zint(1));
  std::string diag;
  CHECK(!weyl_kac_check(a1, embed(Weight{0}, 1, 0), bad, 4, &diag));
  CHECK(!diag.empty());

  const RootSystem& c2 = shared_root_system('C', 2);
  GradedCharacter w = integrable_gch(c2, embed(Weight{0, 0}, 1, 0), 2);
  CHECK(weyl_kac_check(c2, embed(Weight{0, 0}, 1, 0), w, 2));
}
