#include "affchar/charring.hpp"

#include <algorithm>
#include <stdexcept>

namespace affchar {

Mono make_mono(const Weight& w, int32_t e) {
  Mono m;
  for (int i = 0; i < kMaxRank; ++i) {
    if (w.c[i] < -32768 || w.c[i] > 32767)
      throw std::overflow_error("weight coordinate out of packed range");
    m.w[i] = static_cast<int16_t>(w.c[i]);
  }
  m.e = e;
  return m;
}

Weight mono_weight(const Mono& m) {
  Weight w;
  for (int i = 0; i < kMaxRank; ++i) w.c[i] = m.w[i];
  return w;
}

uint64_t TermMap::hash(const Mono& m) {
  uint64_t a = 0, b = 0;
  for (int i = 0; i < 4; ++i) a = (a << 16) | static_cast<uint16_t>(m.w[i]);
  for (int i = 4; i < 8; ++i) b = (b << 16) | static_cast<uint16_t>(m.w[i]);
  uint64_t h = a ^ (b * 0x9e3779b97f4a7c15ull) ^
               (static_cast<uint64_t>(static_cast<uint32_t>(m.e)) * 0xc2b2ae3d27d4eb4full);
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  return h;
}

void TermMap::reserve(size_t n) { grow(n * 2); }

bool TermMap::empty() const {
  for (const auto& s : slots_)
    if (s.used && !s.val.is_zero()) return false;
  return true;
}

size_t TermMap::size_nonzero() const {
  size_t n = 0;
  for (const auto& s : slots_)
    if (s.used && !s.val.is_zero()) ++n;
  return n;
}

void TermMap::grow(size_t need) {
  size_t cap = 16;
  while (cap * 2 < need * 3) cap <<= 1;  // keep load under ~2/3
  if (cap <= slots_.size()) return;
  std::vector<Slot> old;
  old.swap(slots_);
  slots_.assign(cap, Slot{});
  occupied_ = 0;
  for (auto& s : old) {
    if (!s.used || s.val.is_zero()) continue;
    size_t i = hash(s.key) & (slots_.size() - 1);
    while (slots_[i].used) i = (i + 1) & (slots_.size() - 1);
    slots_[i].key = s.key;
    slots_[i].val = std::move(s.val);
    slots_[i].used = true;
    ++occupied_;
  }
}

void TermMap::accumulate(const Mono& key, const Zint& delta) {
  accumulate(key, Zint(delta));
}

void TermMap::accumulate(const Mono& key, Zint&& delta) {
  if (delta.is_zero()) return;
  if (slots_.empty() || occupied_ * 3 >= slots_.size() * 2) grow(occupied_ * 2 + 16);
  size_t mask = slots_.size() - 1;
  size_t i = hash(key) & mask;
  while (slots_[i].used) {
    if (slots_[i].key == key) {
      slots_[i].val += delta;
      return;
    }
    i = (i + 1) & mask;
  }
  slots_[i].key = key;
  slots_[i].val = std::move(delta);
  slots_[i].used = true;
  ++occupied_;
}

const Zint* TermMap::find(const Mono& key) const {
  if (slots_.empty()) return nullptr;
  size_t mask = slots_.size() - 1;
  size_t i = hash(key) & mask;
  while (slots_[i].used) {
    if (slots_[i].key == key) return slots_[i].val.is_zero() ? nullptr : &slots_[i].val;
    i = (i + 1) & mask;
  }
  return nullptr;
}

GradedCharacter GradedCharacter::monomial(const RootSystem& rs, long long level,
                                          Anchor anchor, const Weight& w, int32_t e,
                                          Zint coeff) {
  GradedCharacter f(rs, level, anchor);
  f.terms_.accumulate(make_mono(w, e), std::move(coeff));
  return f;
}

void GradedCharacter::add_term(const Weight& w, int32_t e, const Zint& coeff) {
  terms_.accumulate(make_mono(w, e), coeff);
}

Zint GradedCharacter::coeff(const Weight& w, int32_t e) const {
  const Zint* p = terms_.find(make_mono(w, e));
  return p ? *p : Zint(0);
}

namespace {
void require_compatible(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.rs().type != b.rs().type || a.rs().rank != b.rs().rank)
    throw std::invalid_argument("characters over different root systems");
}
}  // namespace

void GradedCharacter::axpy(const Zint& a, const GradedCharacter& g) {
  require_compatible(*this, g);
  if (level_ != g.level_) throw std::invalid_argument("level context mismatch in add");
  if (anchor_ != g.anchor_) throw std::invalid_argument("anchor mismatch in add");
  if (g.qmax_ && (!qmax_ || *g.qmax_ < *qmax_)) qmax_ = g.qmax_;
  g.terms_.for_each([&](const Mono& m, const Zint& c) {
    if (!qmax_ || m.e <= *qmax_) terms_.accumulate(m, a * c);
  });
}

void GradedCharacter::scale(const Zint& a) {
  if (a.is_zero()) {
    terms_.clear();
    return;
  }
  TermMap out;
  terms_.for_each([&](const Mono& m, const Zint& c) { out.accumulate(m, a * c); });
  terms_ = std::move(out);
}

GradedCharacter GradedCharacter::mul(const GradedCharacter& g) const {
  require_compatible(*this, g);
  std::optional<int32_t> bound;
  if (qmax_ || g.qmax_) {
    if (anchor_ != Anchor::Normalized || g.anchor_ != Anchor::Normalized)
      throw std::invalid_argument("truncated product requires normalized factors");
    if (qmax_) bound = *qmax_;
    if (g.qmax_ && (!bound || *g.qmax_ < *bound)) bound = *g.qmax_;
  }
  if (anchor_ != g.anchor_) throw std::invalid_argument("anchor mismatch in product");
  GradedCharacter out(*rs_, level_ + g.level_, anchor_);
  out.qmax_ = bound;
  terms_.for_each([&](const Mono& ma, const Zint& ca) {
    g.terms_.for_each([&](const Mono& mb, const Zint& cb) {
      int32_t e = ma.e + mb.e;
      if (bound && e > *bound) return;
      Mono m;
      for (int i = 0; i < kMaxRank; ++i)
        m.w[i] = static_cast<int16_t>(ma.w[i] + mb.w[i]);
      m.e = e;
      out.terms_.accumulate(m, ca * cb);
    });
  });
  return out;
}

void GradedCharacter::shift_exponent(int32_t d) {
  if (d == 0) return;
  TermMap out;
  terms_.for_each([&](const Mono& m, const Zint& c) {
    Mono n = m;
    n.e += d;
    out.accumulate(n, c);
  });
  terms_ = std::move(out);
  if (qmax_) qmax_ = *qmax_ + d;
}

void GradedCharacter::truncate(int32_t n) {
  TermMap out;
  terms_.for_each([&](const Mono& m, const Zint& c) {
    if (m.e <= n) out.accumulate(m, c);
  });
  terms_ = std::move(out);
  qmax_ = n;
}

FinChar GradedCharacter::slice(int32_t e) const {
  FinChar out;
  terms_.for_each([&](const Mono& m, const Zint& c) {
    if (m.e == e) out.emplace(mono_weight(m), c);
  });
  return out;
}

int32_t GradedCharacter::min_exponent() const {
  bool have = false;
  int32_t best = 0;
  terms_.for_each([&](const Mono& m, const Zint&) {
    if (!have || m.e < best) best = m.e;
    have = true;
  });
  if (!have) throw std::logic_error("min_exponent of empty character");
  return best;
}

int32_t GradedCharacter::max_exponent() const {
  bool have = false;
  int32_t best = 0;
  terms_.for_each([&](const Mono& m, const Zint&) {
    if (!have || m.e > best) best = m.e;
    have = true;
  });
  if (!have) throw std::logic_error("max_exponent of empty character");
  return best;
}

std::vector<std::pair<Mono, Zint>> GradedCharacter::sorted_terms() const {
  std::vector<std::pair<Mono, Zint>> out;
  terms_.for_each([&](const Mono& m, const Zint& c) { out.emplace_back(m, c); });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.rs_->type != b.rs_->type || a.rs_->rank != b.rs_->rank) return false;
  if (a.level_ != b.level_ || a.anchor_ != b.anchor_) return false;
  size_t na = 0;
  bool ok = true;
  a.terms_.for_each([&](const Mono& m, const Zint& c) {
    ++na;
    const Zint* p = b.terms_.find(m);
    if (!p || *p != c) ok = false;
  });
  return ok && na == b.term_count();
}

namespace {

// Core of the string operator.  No truncation happens mid-string: a term can
// feed cancelling contributions far from its own exponent (the c <= -2 branch
// walks upward), so callers must keep full support and cut afterwards.
GradedCharacter string_op(int i, const GradedCharacter& f) {
  const RootSystem& rs = f.rs();
  if (i < 0 || i > rs.rank) throw std::invalid_argument("node index out of range");

  std::array<int16_t, kMaxRank> dw{};  // added when subtracting alpha_i
  int32_t de = 0;
  if (i == 0) {
    for (int k = 0; k < rs.rank; ++k) dw[k] = static_cast<int16_t>(rs.theta.c[k]);
    de = -1;
  } else {
    Weight a = rs.simple_root(i - 1);
    for (int k = 0; k < rs.rank; ++k) dw[k] = static_cast<int16_t>(-a.c[k]);
  }

  GradedCharacter out(rs, f.level(), f.anchor());
  if (f.qmax()) out.truncate(*f.qmax());
  out.raw_terms().reserve(f.term_count() * 2 + 8);

  const auto& tc = rs.theta_covee;
  f.for_each([&](const Mono& m, const Zint& c0) {
    long long c;
    if (i == 0) {
      long long s = 0;
      for (int k = 0; k < rs.rank; ++k) s += static_cast<long long>(tc[k]) * m.w[k];
      c = f.level() - s;
    } else {
      c = m.w[i - 1];
    }
    if (c >= 0) {
      Mono cur = m;
      for (long long j = 0; j <= c; ++j) {
        out.raw_terms().accumulate(cur, c0);
        for (int k = 0; k < kMaxRank; ++k) cur.w[k] = static_cast<int16_t>(cur.w[k] + dw[k]);
        cur.e += de;
      }
    } else if (c <= -2) {
      Mono cur = m;
      Zint neg = -c0;
      for (long long j = 1; j <= -c - 1; ++j) {
        for (int k = 0; k < kMaxRank; ++k) cur.w[k] = static_cast<int16_t>(cur.w[k] - dw[k]);
        cur.e -= de;
        out.raw_terms().accumulate(cur, neg);
      }
    }
  });
  return out;
}

}  // namespace

GradedCharacter demazure_op(int i, const GradedCharacter& f) {
  if (i == 0) {
    if (f.anchor() != Anchor::Raw)
      throw std::domain_error("affine Demazure operator requires raw anchor");
    if (f.qmax())
      throw std::domain_error(
          "affine Demazure operator on truncated data: strings would cross the "
          "truncation cut");
  }
  return string_op(i, f);
}

GradedCharacter apply_word(const std::vector<int>& word, GradedCharacter f) {
  for (int letter : word) f = demazure_op(letter, f);
  return f;
}

GradedCharacter symmetrize(const GradedCharacter& f) {
  GradedCharacter g = f;
  for (int letter : f.rs().w0_word) g = demazure_op(letter + 1, g);
  return g;
}

bool is_w_invariant(const GradedCharacter& f) {
  const RootSystem& rs = f.rs();
  bool ok = true;
  f.for_each([&](const Mono& m, const Zint& c) {
    if (!ok) return;
    Weight w = mono_weight(m);
    for (int i = 0; i < rs.rank && ok; ++i) {
      const Zint* p = f.raw_terms().find(make_mono(rs.reflect(i, w), m.e));
      if (!p || *p != c) ok = false;
    }
  });
  return ok;
}

GradedCharacter flip(const GradedCharacter& f) {
  GradedCharacter out(*f.rs_, f.level_, f.anchor_);
  out.qmax_ = f.qmax_;
  f.terms_.for_each([&](const Mono& m, const Zint& c) {
    Mono n = m;
    for (int k = 0; k < kMaxRank; ++k) n.w[k] = static_cast<int16_t>(-m.w[k]);
    out.terms_.accumulate(n, c);
  });
  return out;
}

GradedCharacter normalized_up(const GradedCharacter& f, int32_t base) {
  if (f.anchor_ != Anchor::Raw)
    throw std::invalid_argument("normalized_up expects raw input");
  GradedCharacter out(*f.rs_, f.level_, Anchor::Normalized);
  f.terms_.for_each([&](const Mono& m, const Zint& c) {
    Mono n = m;
    n.e = m.e - base;
    if (n.e < 0) throw std::logic_error("normalized_up: negative exponent");
    out.terms_.accumulate(n, c);
  });
  return out;
}

GradedCharacter normalized_down(const GradedCharacter& f, int32_t top) {
  if (f.anchor_ != Anchor::Raw)
    throw std::invalid_argument("normalized_down expects raw input");
  GradedCharacter out(*f.rs_, f.level_, Anchor::Normalized);
  f.terms_.for_each([&](const Mono& m, const Zint& c) {
    Mono n = m;
    n.e = top - m.e;
    if (n.e < 0) throw std::logic_error("normalized_down: negative exponent");
    out.terms_.accumulate(n, c);
  });
  return out;
}

GradedCharacter truncated_copy(const GradedCharacter& f, int32_t n) {
  GradedCharacter out = f;
  out.truncate(n);
  return out;
}

GradedCharacter saturate(const RootSystem& rs, const AffineWeight& top, int32_t depth) {
  if (top.level < 1) throw std::domain_error("saturate: level >= 1 required");
  if (!affine_dominant(rs, top))
    throw std::invalid_argument("saturate: highest weight not dominant");
  if (depth < 0) throw std::invalid_argument("saturate: negative depth");
  const int32_t wfloor = static_cast<int32_t>(top.delta) - depth;

  // Sweeps run on full support: cutting below the window corrupts it, because
  // ascending strings from discarded terms cancel coefficients inside it.  The
  // window itself only grows between sweeps, so two consecutive unchanged
  // snapshots mean it has converged; everything deeper is scrap.  The support
  // cost grows roughly quadratically with the sweep count, which stays modest
  // at the levels this entry point is used for.
  using Snapshot = std::vector<std::pair<Mono, Zint>>;
  auto window = [&](const GradedCharacter& g) {
    Snapshot v;
    g.for_each([&](const Mono& m, const Zint& c) {
      if (m.e >= wfloor) v.emplace_back(m, c);
    });
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };

  GradedCharacter f(rs, top.level, Anchor::Raw);
  f.add_term(top.finite, static_cast<int32_t>(top.delta), Zint(1));
  Snapshot prev = window(f);
  for (int pass = 0, stable = 0; stable < 2; ++pass) {
    if (pass > 200) throw std::logic_error("saturate: sweep did not stabilize");
    if (f.term_count() > 20000000)
      throw std::logic_error("saturate: support blew up before the window settled");
    for (int i = 0; i <= rs.rank; ++i) f = string_op(i, f);
    Snapshot cur = window(f);
    stable = (cur == prev) ? stable + 1 : 0;
    prev = std::move(cur);
  }

  GradedCharacter out(rs, top.level, Anchor::Raw);
  for (const auto& [m, c] : prev) out.add_term(mono_weight(m), m.e, c);
  return out;
}

}  // namespace affchar
