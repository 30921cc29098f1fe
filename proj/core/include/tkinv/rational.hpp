// rational.hpp -- exact rational scalars and vectors in fundamental-weight coordinates.
//
// Self-contained: the distro's Boost (1.74) rational class recurses infinitely
// under C++20 operator rewriting, so we carry a small normalized fraction type
// with __int128 intermediates and overflow checks instead.

#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkinv {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(Int n) : num_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(Int n, Int d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    num_ = n;
    den_ = d;
    normalize_small();
  }

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  using i128 = __int128;

  Int num_ = 0;
  Int den_ = 1;  // invariant: den_ > 0, gcd(|num_|, den_) = 1

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rat make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rat();
    i128 g = gcd128(n, d);
    n /= g;
    d /= g;
    constexpr i128 lo = std::numeric_limits<Int>::min();
    constexpr i128 hi = std::numeric_limits<Int>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rat: 64-bit overflow");
    Rat r;
    r.num_ = static_cast<Int>(n);
    r.den_ = static_cast<Int>(d);
    return r;
  }

  void normalize_small() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
};

using RatVec = std::vector<Rat>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline bool is_integral(const Rat& r) { return r.denominator() == 1; }

inline bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (!is_integral(x)) return false;
  return true;
}

// Floor of r as an integer.
inline Int floor_int(const Rat& r) {
  Int q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --q;
  return q;
}

// r reduced into [0, m) for m > 0.  Used to bring exact phase exponents into a
// principal range before any call to exp().
inline Rat mod_reduce(const Rat& r, const Rat& m) {
  if (m <= Rat(0)) throw std::invalid_argument("mod_reduce: modulus must be positive");
  Rat out = r - Rat(floor_int(r / m)) * m;
  if (out < Rat(0)) out += m;
  if (out >= m) out -= m;
  return out;
}

inline std::string to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RatVec operator*(const Rat& s, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

inline RatVec operator/(const RatVec& v, const Rat& s) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / s;
  return out;
}

}  // namespace tkinv
