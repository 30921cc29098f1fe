// weyl.hpp -- finite Weyl group elements and their enumeration.

#pragma once

#include "tkinv/root_system.hpp"

#include <utility>
#include <vector>

namespace tkinv {

struct WeylElement {
  IntMat mat;             // action on fundamental-weight coordinates
  int sign = 1;           // (-1)^length = det
  std::vector<int> word;  // reduced word in simple reflections

  Weight apply(const Weight& x) const { return Weight(mat.apply(x.c)); }
  RatVec apply(const RatVec& x) const { return mat.apply(x); }
};

inline constexpr Int kDefaultWeylCap = 1000000;

// Breadth-first closure over the simple reflections.  Element 0 is the
// identity; ordering is deterministic.  Throws if the group order exceeds the
// cap (E_7 and E_8 do with the default; raise the cap deliberately).
std::vector<WeylElement> weyl_group(const RootSystem& rs, Int cap = kDefaultWeylCap);

// The longest element as a matrix, computed without enumerating the group.
IntMat longest_element(const RootSystem& rs);

// Reduced word of w by right-descent peeling; length parity equals det(w).
std::vector<int> reduced_word(const RootSystem& rs, const IntMat& w);

// (lambda*, lambda_bar): lambda* = -w0.lambda, and lambda_bar + rho = (lambda + rho)*.
// Requires lambda dominant integral.
std::pair<Weight, Weight> conjugates(const RootSystem& rs, const Weight& lambda);

}  // namespace tkinv
