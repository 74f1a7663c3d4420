// Graded characters.
//
// A graded character is a sparse integer combination of monomials q^e * e^w
// with w a finite weight and e the q-exponent, together with a level context
// (needed by the affine-node Demazure operator), an anchor and an optional
// truncation bound.
//
// Anchor semantics:
//   Raw        exponents are delta-coordinates of the ambient affine weights;
//              this is the representation Demazure operators act on.
//   Normalized exponents are nonnegative grading degrees.  Thin-side
//              characters are normalized upward from the extremal generator
//              (exponent = raw - delta(generator)); integrable and thick-side
//              characters downward from the highest weight
//              (exponent = delta(top) - raw).  The two producers are
//              normalized_up and normalized_down.
//
// A truncation bound N means every exponent <= N is exact and larger ones are
// absent.  Multiplying truncated characters requires both normalized; the
// affine Demazure operator requires raw untruncated input, since a string
// through the truncation cut would make the window contents wrong.

#pragma once

#include "affchar/afweight.hpp"
#include "affchar/cartan.hpp"
#include "affchar/intz.hpp"
#include "affchar/weight.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace affchar {

struct Mono {
  std::array<int16_t, kMaxRank> w{};
  int32_t e = 0;

  friend bool operator==(const Mono& a, const Mono& b) { return a.w == b.w && a.e == b.e; }
  // Exponent-major order; used for deterministic output.
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.e != b.e) return a.e < b.e;
    return a.w < b.w;
  }
};

Mono make_mono(const Weight& w, int32_t e);
Weight mono_weight(const Mono& m);

// Open-addressing accumulation map Mono -> Zint.  Zero-valued slots may
// linger until the next rehash; readers skip them.
class TermMap {
public:
  TermMap() = default;

  void clear() { slots_.clear(); occupied_ = 0; }
  void reserve(size_t n);
  bool empty() const;
  size_t size_nonzero() const;

  void accumulate(const Mono& key, const Zint& delta);
  void accumulate(const Mono& key, Zint&& delta);
  const Zint* find(const Mono& key) const;

  template <class Fn>  // Fn(const Mono&, const Zint&)
  void for_each(Fn&& fn) const {
    for (const auto& s : slots_)
      if (s.used && !s.val.is_zero()) fn(s.key, s.val);
  }

private:
  struct Slot {
    Mono key;
    Zint val;
    bool used = false;
  };
  static uint64_t hash(const Mono& m);
  void grow(size_t need);

  std::vector<Slot> slots_;
  size_t occupied_ = 0;
};

enum class Anchor { Raw, Normalized };

class GradedCharacter {
public:
  GradedCharacter(const RootSystem& rs, long long level, Anchor anchor)
      : rs_(&rs), level_(level), anchor_(anchor) {}

  static GradedCharacter monomial(const RootSystem& rs, long long level, Anchor anchor,
                                  const Weight& w, int32_t e, Zint coeff = Zint(1));

  const RootSystem& rs() const { return *rs_; }
  long long level() const { return level_; }
  void set_level(long long k) { level_ = k; }
  Anchor anchor() const { return anchor_; }
  const std::optional<int32_t>& qmax() const { return qmax_; }
  bool truncated() const { return qmax_.has_value(); }

  bool empty() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size_nonzero(); }

  void add_term(const Weight& w, int32_t e, const Zint& coeff);
  Zint coeff(const Weight& w, int32_t e) const;

  // Ring operations.  Addition requires matching level context and anchor;
  // the truncation bound of a sum is the smaller bound.
  void axpy(const Zint& a, const GradedCharacter& g);
  void scale(const Zint& a);
  GradedCharacter mul(const GradedCharacter& g) const;
  void shift_exponent(int32_t d);

  // Truncate to exponents <= n (normalized anchor).
  void truncate(int32_t n);

  FinChar slice(int32_t e) const;
  int32_t min_exponent() const;  // throws on empty
  int32_t max_exponent() const;
  std::vector<std::pair<Mono, Zint>> sorted_terms() const;

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);
  friend bool operator!=(const GradedCharacter& a, const GradedCharacter& b) {
    return !(a == b);
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    terms_.for_each(fn);
  }

  TermMap& raw_terms() { return terms_; }
  const TermMap& raw_terms() const { return terms_; }

private:
  const RootSystem* rs_;
  long long level_;
  Anchor anchor_;
  std::optional<int32_t> qmax_;
  TermMap terms_;

  friend GradedCharacter demazure_op(int i, const GradedCharacter& f);
  friend GradedCharacter normalized_up(const GradedCharacter& f, int32_t base);
  friend GradedCharacter normalized_down(const GradedCharacter& f, int32_t top);
  friend GradedCharacter saturate(const RootSystem& rs, const AffineWeight& top, int32_t depth);
  friend GradedCharacter flip(const GradedCharacter& f);
  friend GradedCharacter truncated_copy(const GradedCharacter& f, int32_t n);
};

// Demazure string operator for affine node index i in 0..rank (i >= 1 names
// the finite simple root alpha_i).  For i = 0 the input must be raw and
// untruncated.
GradedCharacter demazure_op(int i, const GradedCharacter& f);

// Front-to-back fold of demazure_op over the word letters.
GradedCharacter apply_word(const std::vector<int>& word, GradedCharacter f);

// Composite along the longest finite word; the result is W-invariant.
GradedCharacter symmetrize(const GradedCharacter& f);
bool is_w_invariant(const GradedCharacter& f);

// e^w -> e^{-w}; exponents and level context unchanged (callers of the
// theta-twist adjust the level themselves).
GradedCharacter flip(const GradedCharacter& f);

GradedCharacter normalized_up(const GradedCharacter& f, int32_t base);
GradedCharacter normalized_down(const GradedCharacter& f, int32_t top);
GradedCharacter truncated_copy(const GradedCharacter& f, int32_t n);

// Truncated character of the integrable irreducible L(top): all coefficients
// at delta-depth <= depth below the highest weight, computed by sweeping the
// affine Demazure operators over a raw depth window until stable.  The result
// is raw, anchored at top.delta.
GradedCharacter saturate(const RootSystem& rs, const AffineWeight& top, int32_t depth);

}  // namespace affchar
