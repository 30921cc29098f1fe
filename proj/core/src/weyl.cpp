// weyl.cpp -- enumeration of the finite Weyl group and the conjugation maps.

#include "tkinv/weyl.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tkinv {

namespace {

struct MatHash {
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

IntMat simple_reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank;
  IntMat m = IntMat::identity(n);
  // s_i(x) = x - x_i * alpha_i touches column i only.
  for (int j = 0; j < n; ++j) m.at(j, i) -= rs.simple_roots[i].c[j];
  return m;
}

}  // namespace

std::vector<WeylElement> weyl_group(const RootSystem& rs, Int cap) {
  if (rs.weyl_order > cap)
    throw std::runtime_error("weyl_group: order " + std::to_string(rs.weyl_order) +
                             " exceeds cap " + std::to_string(cap));
  const int n = rs.rank;
  std::vector<IntMat> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = simple_reflection_matrix(rs, i);

  std::vector<WeylElement> out;
  out.push_back(WeylElement{IntMat::identity(n), 1, {}});
  std::unordered_set<std::vector<Int>, MatHash> seen;
  seen.insert(out[0].mat.a);
  for (std::size_t h = 0; h < out.size(); ++h) {
    WeylElement cur = out[h];  // copy: out may reallocate
    for (int i = 0; i < n; ++i) {
      IntMat next = gens[i].mul(cur.mat);
      if (seen.insert(next.a).second) {
        WeylElement e;
        e.mat = std::move(next);
        e.sign = -cur.sign;
        e.word = cur.word;
        e.word.insert(e.word.begin(), i);  // BFS: left factor, geodesic => reduced
        out.push_back(std::move(e));
      }
    }
  }
  if (static_cast<Int>(out.size()) != rs.weyl_order)
    throw std::runtime_error("weyl_group: closure size mismatch");
  return out;
}

IntMat longest_element(const RootSystem& rs) {
  // w0 is the unique element with w0(rho) = -rho; fold -rho to the dominant
  // chamber and read the product off the reflections used.
  const int n = rs.rank;
  Weight x = -rs.rho;
  IntMat w = IntMat::identity(n);
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < n; ++i) {
      if (x.c[i] < 0) {
        x = rs.reflect_simple(i, x);
        w = simple_reflection_matrix(rs, i).mul(w);
        again = true;
      }
    }
  }
  // Now w(-rho) = rho, i.e. w = w0 (and w0 is an involution).
  return w;
}

std::vector<int> reduced_word(const RootSystem& rs, const IntMat& w) {
  const int n = rs.rank;
  IntMat cur = w;
  std::vector<int> rev;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < n && descent < 0; ++i) {
      // w s_i shorter iff w(alpha_i) is a negative root iff <w(alpha_i), rho> < 0
      Weight img(cur.apply(rs.simple_roots[i].c));
      if (rs.ip(img, rs.rho) < Rat(0)) descent = i;
    }
    if (descent < 0) break;
    cur = cur.mul(simple_reflection_matrix(rs, descent));
    rev.push_back(descent);
    if (rev.size() > rs.positive_roots.size())
      throw std::runtime_error("reduced_word: did not terminate");
  }
  if (!(cur == IntMat::identity(n)))
    throw std::runtime_error("reduced_word: matrix is not a Weyl element");
  return {rev.rbegin(), rev.rend()};
}

std::pair<Weight, Weight> conjugates(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.rank()) != rs.rank)
    throw std::invalid_argument("conjugates: rank mismatch");
  if (!lambda.dominant())
    throw std::invalid_argument("conjugates: weight not dominant");
  Weight star = rs.dominant_fold(-lambda);
  Weight shifted = rs.dominant_fold(-(lambda + rs.rho));
  Weight bar = shifted - rs.rho;
  return {star, bar};
}

}  // namespace tkinv
