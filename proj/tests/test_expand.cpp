#include "doctest.h"

#include "affchar/demazure.hpp"
#include "affchar/expand.hpp"

#include <map>

using namespace affchar;

namespace {
const RootSystem& a1() { return shared_root_system('A', 1); }

bool coeffs_equal(const std::map<Weight, QPoly>& got,
                  const std::map<Weight, QPoly>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& [w, p] : want) {
    auto it = got.find(w);
    if (it == got.end() || it->second != p) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("q-polynomial helpers") {
  QPoly p;
  qpoly_add(p, 2, Zint(3));
  qpoly_add(p, 0, Zint(1));
  qpoly_add(p, 2, Zint(-3));
  CHECK(p.size() == 1);  // cancelled exponent is erased
  qpoly_add(p, 1, Zint(1));
  qpoly_add(p, 4, Zint(-2));
  CHECK(qpoly_str(p) == "1 + q - 2q^4");
  CHECK(qpoly_at_one(p) == Zint(0));
  QPoly t = qpoly_truncated(p, 1);
  CHECK(t.size() == 2);
  CHECK(qpoly_at_one(t) == Zint(2));
  CHECK(qpoly_str(QPoly{}) == "0");
}

TEST_CASE("local Weyl branching rows at small level") {
  const Expansion& b21 = branching_weyl(a1(), Weight{2}, 1);
  CHECK(coeffs_equal(b21.coeffs, {{Weight{2}, {{0, Zint(1)}}}, {Weight{0}, {{1, Zint(1)}}}}));

  // The level-2 module of 4pi drops straight to the trivial weight.
  const Expansion& b42 = branching_weyl(a1(), Weight{4}, 2);
  CHECK(coeffs_equal(b42.coeffs, {{Weight{4}, {{0, Zint(1)}}}, {Weight{0}, {{2, Zint(1)}}}}));

  const Expansion& b41 = branching_weyl(a1(), Weight{4}, 1);
  CHECK(coeffs_equal(b41.coeffs,
                     {{Weight{4}, {{0, Zint(1)}}},
                      {Weight{2}, {{2, Zint(1)}, {3, Zint(1)}}},
                      {Weight{0}, {{4, Zint(1)}}}}));

  // Above the theta pairing the family is level-independent: identity row.
  const Expansion& b23 = branching_weyl(a1(), Weight{2}, 3);
  CHECK(coeffs_equal(b23.coeffs, {{Weight{2}, {{0, Zint(1)}}}}));
}

TEST_CASE("thin expansion peels along the Cherednik order") {
  Expansion e = expand_thin(a1(), thin_gch(a1(), Weight{-2}, 1), 2, std::nullopt);
  CHECK(coeffs_equal(e.coeffs, {{Weight{-2}, {{0, Zint(1)}}}, {Weight{0}, {{1, Zint(1)}}}}));

  // A thin character expands as itself in its own basis.
  Expansion self = expand_thin(a1(), thin_gch(a1(), Weight{-2}, 2), 2, std::nullopt);
  CHECK(coeffs_equal(self.coeffs, {{Weight{-2}, {{0, Zint(1)}}}}));
}

TEST_CASE("symmetric expansion round-trips a known combination") {
  // f = W^(2)_{2pi} + 2 q^3 W^(2)_{4pi}, expanded back in the same basis.
  GradedCharacter f = weyl_gch(a1(), Weight{2}, 2);
  GradedCharacter g = weyl_gch(a1(), Weight{4}, 2);
  g.shift_exponent(3);
  g.scale(Zint(2));
  f.axpy(Zint(1), g);
  Expansion e = expand_symmetric(a1(), f, BasisDesc{Family::Weyl, 2}, std::nullopt);
  CHECK(coeffs_equal(e.coeffs,
                     {{Weight{2}, {{0, Zint(1)}}}, {Weight{4}, {{3, Zint(2)}}}}));

  // Irrep basis of the same data: W^(2)_{2pi} is affine-dominant, hence tail
  // free, while q^3 W^(2)_{4pi} contributes its full graded decomposition.
  Expansion ei = expand_symmetric(a1(), f, BasisDesc{Family::Irrep, 1}, std::nullopt);
  CHECK(ei.coeffs.at(Weight{2}).at(0) == Zint(1));
  CHECK(ei.coeffs.at(Weight{4}).at(3) == Zint(2));
  CHECK(ei.coeffs.at(Weight{2}).at(4) == Zint(2));
  CHECK(ei.coeffs.at(Weight{0}).at(5) == Zint(2));
}

TEST_CASE("single-factor products reduce to branching rows") {
  auto single = kostka(a1(), {{1, Weight{2}}}, 1, std::nullopt);
  CHECK(coeffs_equal(single, branching_weyl(a1(), Weight{2}, 1).coeffs));
}

TEST_CASE("stabilized two-factor multiplicities") {
  auto twice = kostka(a1(), {{1, Weight{2}}, {1, Weight{2}}}, 4, std::nullopt);
  CHECK(coeffs_equal(twice, {{Weight{4}, {{0, Zint(1)}}},
                             {Weight{2}, {{0, Zint(1)}, {1, Zint(2)}}},
                             {Weight{0}, {{0, Zint(1)}, {2, Zint(1)}}}}));
}
