#include "doctest.h"

#include "affchar/charring.hpp"
#include "affchar/demazure.hpp"

#include <stdexcept>

using namespace affchar;

namespace {
const RootSystem& a1() { return shared_root_system('A', 1); }
}  // namespace

TEST_CASE("term map accumulates and cancels") {
  TermMap tm;
  CHECK(tm.empty());
  Mono k = make_mono(Weight{2}, -1);
  tm.accumulate(k, Zint(3));
  tm.accumulate(k, Zint(-3));
  CHECK(tm.size_nonzero() == 0);
  CHECK(tm.empty());
  CHECK(tm.find(k) == nullptr);

  // Force several rehashes and verify every key survives.
  for (int e = 0; e < 200; ++e) tm.accumulate(make_mono(Weight{e % 7}, e), Zint(e + 1));
  CHECK(tm.size_nonzero() == 200);
  const Zint* p = tm.find(make_mono(Weight{3}, 150));
  REQUIRE(p != nullptr);
  CHECK(*p == Zint(151));
}

TEST_CASE("string operator on single exponentials") {
  GradedCharacter f = GradedCharacter::monomial(a1(), 0, Anchor::Raw, Weight{3}, 0);
  GradedCharacter g = demazure_op(1, f);
  CHECK(g.term_count() == 4);
  for (int32_t w : {3, 1, -1, -3}) CHECK(g.coeff(Weight{w}, 0) == Zint(1));

  // Pairing -1 kills the term; pairing -2 leaves minus the reflected interior.
  GradedCharacter h = demazure_op(1, GradedCharacter::monomial(a1(), 0, Anchor::Raw, Weight{-1}, 0));
  CHECK(h.empty());
  GradedCharacter h2 =
      demazure_op(1, GradedCharacter::monomial(a1(), 0, Anchor::Raw, Weight{-2}, 0));
  CHECK(h2.term_count() == 1);
  CHECK(h2.coeff(Weight{0}, 0) == Zint(-1));

  // pi_i pi_i = pi_i.
  GradedCharacter gg = demazure_op(1, g);
  CHECK(gg == g);
}

TEST_CASE("affine node demands raw untruncated input") {
  GradedCharacter f = GradedCharacter::monomial(a1(), 1, Anchor::Raw, Weight{0}, 0);
  GradedCharacter n = normalized_down(f, 0);
  CHECK_THROWS_AS(demazure_op(0, n), std::domain_error);
  GradedCharacter t = f;
  t.truncate(3);
  // Raw anchor cannot be truncated without losing string tails.
  CHECK_THROWS(demazure_op(0, t));
}

TEST_CASE("two-letter thin character at level 1") {
  const GradedCharacter& d = thin_gch(a1(), Weight{-2}, 1);
  CHECK(d.term_count() == 4);
  CHECK(d.coeff(Weight{-2}, 0) == Zint(1));
  CHECK(d.coeff(Weight{2}, 0) == Zint(1));
  CHECK(d.coeff(Weight{0}, 0) == Zint(1));
  CHECK(d.coeff(Weight{0}, 1) == Zint(1));
  CHECK(d.min_exponent() == 0);
  CHECK(d.max_exponent() == 1);

  // At level 2 the same weight is one reflection from dominance.
  const GradedCharacter& d2 = thin_gch(a1(), Weight{-2}, 2);
  CHECK(d2.term_count() == 3);
  for (int32_t w : {-2, 0, 2}) CHECK(d2.coeff(Weight{w}, 0) == Zint(1));
}

TEST_CASE("symmetrization and invariance") {
  GradedCharacter f = GradedCharacter::monomial(a1(), 0, Anchor::Raw, Weight{3}, 2);
  CHECK(!is_w_invariant(f));
  GradedCharacter s = symmetrize(f);
  CHECK(is_w_invariant(s));
  CHECK(s.term_count() == 4);
  CHECK(s.coeff(Weight{-3}, 2) == Zint(1));
}

TEST_CASE("ring operations respect the grading") {
  GradedCharacter a = GradedCharacter::monomial(a1(), 1, Anchor::Normalized, Weight{1}, 1);
  GradedCharacter b = GradedCharacter::monomial(a1(), 1, Anchor::Normalized, Weight{-1}, 2);
  GradedCharacter p = a.mul(b);
  CHECK(p.term_count() == 1);
  CHECK(p.coeff(Weight{0}, 3) == Zint(1));
  CHECK(p.level() == 2);

  GradedCharacter c = a;
  c.axpy(Zint(2), a);
  CHECK(c.coeff(Weight{1}, 1) == Zint(3));
  c.scale(Zint(-1));
  CHECK(c.coeff(Weight{1}, 1) == Zint(-3));
  c.shift_exponent(4);
  CHECK(c.coeff(Weight{1}, 5) == Zint(-3));
  CHECK_THROWS_AS(c.axpy(Zint(1), p), std::invalid_argument);  // level mismatch
  c.truncate(4);
  CHECK(c.coeff(Weight{1}, 5).is_zero());
  CHECK(c.qmax() == 4);
}

TEST_CASE("flip negates the finite part") {
  GradedCharacter f = GradedCharacter::monomial(a1(), 2, Anchor::Normalized, Weight{4}, 3);
  GradedCharacter g = flip(f);
  CHECK(g.coeff(Weight{-4}, 3) == Zint(1));
  CHECK(g.coeff(Weight{4}, 3).is_zero());
}

TEST_CASE("normalization anchors and slices") {
  // A raw character supported at delta in {-2, 0} seen from both ends.
  GradedCharacter f(a1(), 1, Anchor::Raw);
  f.add_term(Weight{0}, 0, Zint(1));
  f.add_term(Weight{2}, -2, Zint(5));
  GradedCharacter up = normalized_up(f, -2);
  CHECK(up.coeff(Weight{2}, 0) == Zint(5));
  CHECK(up.coeff(Weight{0}, 2) == Zint(1));
  GradedCharacter down = normalized_down(f, 0);
  CHECK(down.coeff(Weight{0}, 0) == Zint(1));
  CHECK(down.coeff(Weight{2}, 2) == Zint(5));
  FinChar s2 = down.slice(2);
  CHECK(s2.size() == 1);
  CHECK(s2.at(Weight{2}) == Zint(5));
  CHECK(truncated_copy(down, 1).term_count() == 1);

  auto sorted = down.sorted_terms();
  REQUIRE(sorted.size() == 2);
  CHECK(sorted[0].second == Zint(1));  // exponent-major order
  CHECK(sorted[1].second == Zint(5));
}

TEST_CASE("saturation matches the closed small cases") {
  // Level-1 vacuum window: single orbit weight per slice with known drops.
  GradedCharacter sat = saturate(a1(), embed(Weight{0}, 1, 0), 2);
  GradedCharacter n = normalized_down(sat, 0);
  CHECK(n.coeff(Weight{0}, 0) == Zint(1));
  CHECK(n.coeff(Weight{2}, 1) == Zint(1));
  CHECK(n.coeff(Weight{-2}, 1) == Zint(1));
  CHECK(n.coeff(Weight{0}, 1) == Zint(1));
}
