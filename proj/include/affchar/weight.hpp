// Finite integral weights.
//
// A weight is stored by its coordinates in the fundamental-weight basis
// ("pi-basis"): coordinate i is the pairing with the simple coroot alpha_i^vee.
// Ranks up to 8 (E_8) fit a fixed-size array; entries beyond the rank are zero,
// which keeps equality and hashing rank-agnostic.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

namespace affchar {

inline constexpr int kMaxRank = 8;

struct Weight {
  std::array<int32_t, kMaxRank> c{};

  Weight() = default;
  Weight(std::initializer_list<int32_t> xs) {
    int i = 0;
    for (int32_t x : xs) c[i++] = x;
  }

  int32_t& operator[](int i) { return c[i]; }
  int32_t operator[](int i) const { return c[i]; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Lexicographic; used only to order output deterministically.
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

  Weight operator+(const Weight& o) const {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Weight operator-() const {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) r.c[i] = -c[i];
    return r;
  }
  bool is_zero() const {
    for (int i = 0; i < kMaxRank; ++i)
      if (c[i] != 0) return false;
    return true;
  }

  std::string str(int rank) const {
    std::string s = "(";
    for (int i = 0; i < rank; ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxRank; ++i) {
      h ^= static_cast<uint32_t>(w.c[i]);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace affchar
