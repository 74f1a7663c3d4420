// Exact integer coefficients.
//
// Character coefficients are kept in a checked int64 fast path; any operation
// that would overflow escalates the value to an arbitrary-precision integer
// (boost cpp_int).  Values demote back to the fast path whenever they fit, so
// escalation is invisible except under extreme inputs.  Division is provided
// only in the exact form needed by the Freudenthal recursion and the Weyl
// dimension formula, and aborts if the dividend is not divisible.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace affchar {

class Zint {
public:
  using big_t = boost::multiprecision::cpp_int;

  Zint() = default;
  Zint(long long v) : small_(v) {}
  explicit Zint(const big_t& b) { assign_big(b); }

  Zint(const Zint& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<big_t>(*o.big_);
  }
  Zint(Zint&&) noexcept = default;
  Zint& operator=(const Zint& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<big_t>(*o.big_) : nullptr;
    }
    return *this;
  }
  Zint& operator=(Zint&&) noexcept = default;

  bool is_zero() const { return big_ ? big_->is_zero() : small_ == 0; }
  int sign() const {
    if (big_) return big_->sign();
    return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
  }

  bool fits_int64() const { return !big_; }
  long long as_int64() const {
    if (big_) throw std::overflow_error("Zint::as_int64: value out of range");
    return small_;
  }

  Zint& operator+=(const Zint& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign_big(as_big() + o.as_big());
    return *this;
  }
  Zint& operator-=(const Zint& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign_big(as_big() - o.as_big());
    return *this;
  }
  Zint& operator*=(const Zint& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign_big(as_big() * o.as_big());
    return *this;
  }

  friend Zint operator+(Zint a, const Zint& b) { return a += b; }
  friend Zint operator-(Zint a, const Zint& b) { return a -= b; }
  friend Zint operator*(Zint a, const Zint& b) { return a *= b; }
  friend Zint operator-(const Zint& a) {
    Zint r;
    r -= a;
    return r;
  }

  // Exact quotient; throws if o does not divide *this.
  Zint divexact(const Zint& o) const {
    if (o.is_zero()) throw std::domain_error("Zint::divexact: division by zero");
    big_t q, r;
    boost::multiprecision::divide_qr(as_big(), o.as_big(), q, r);
    if (!r.is_zero()) throw std::domain_error("Zint::divexact: not divisible");
    return Zint(q);
  }

  friend bool operator==(const Zint& a, const Zint& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.as_big() == b.as_big();
  }
  friend bool operator!=(const Zint& a, const Zint& b) { return !(a == b); }
  friend bool operator<(const Zint& a, const Zint& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_;
    return a.as_big() < b.as_big();
  }
  friend bool operator<=(const Zint& a, const Zint& b) { return !(b < a); }
  friend bool operator>(const Zint& a, const Zint& b) { return b < a; }
  friend bool operator>=(const Zint& a, const Zint& b) { return !(a < b); }

  std::string str() const {
    return big_ ? big_->str() : std::to_string(small_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Zint& z) {
    return os << z.str();
  }

private:
  big_t as_big() const { return big_ ? *big_ : big_t(small_); }
  void assign_big(const big_t& b) {
    // Demote when the result fits the fast path again.
    if (b >= std::numeric_limits<long long>::min() &&
        b <= std::numeric_limits<long long>::max()) {
      small_ = static_cast<long long>(b);
      big_.reset();
    } else {
      small_ = 0;
      if (big_)
        *big_ = b;
      else
        big_ = std::make_unique<big_t>(b);
    }
  }

  long long small_ = 0;
  std::unique_ptr<big_t> big_;
};

}  // namespace affchar
