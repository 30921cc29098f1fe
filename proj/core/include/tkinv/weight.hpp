// weight.hpp -- integral weights (lattice points of Lambda) in fundamental-weight coordinates.

#pragma once

#include "tkinv/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

namespace tkinv {

// A point of the weight lattice.  Coordinates are the pairings with the simple
// coroots, so "dominant" is coordinatewise >= 0 and the Weyl vector rho is
// (1,...,1).  Interior points of the Cartan algebra that are not lattice
// points are handled as RatVec instead.
struct Weight {
  IntVec c;

  Weight() = default;
  explicit Weight(IntVec v) : c(std::move(v)) {}
  Weight(std::initializer_list<Int> v) : c(v) {}

  std::size_t rank() const { return c.size(); }
  Int operator[](std::size_t i) const { return c[i]; }

  bool dominant() const {
    for (Int x : c)
      if (x < 0) return false;
    return true;
  }

  bool zero() const {
    for (Int x : c)
      if (x != 0) return false;
    return true;
  }

  auto operator<=>(const Weight&) const = default;
};

inline Weight operator+(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

inline Weight operator-(const Weight& a) {
  Weight out = a;
  for (Int& x : out.c) x = -x;
  return out;
}

inline Weight operator*(Int s, const Weight& a) {
  Weight out = a;
  for (Int& x : out.c) x *= s;
  return out;
}

inline RatVec to_rat(const Weight& w) { return to_rat(w.c); }

inline std::optional<Weight> to_weight(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) return std::nullopt;
    out[i] = v[i].numerator();
  }
  return Weight(std::move(out));
}

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.c[i]);
  }
  return s + ")";
}

}  // namespace tkinv
