// root_system.hpp -- root-system data for a simple Lie algebra, normalized so the
// long roots have squared length 2, everything expressed in fundamental-weight
// coordinates with exact rational arithmetic.

#pragma once

#include "tkinv/cartan.hpp"
#include "tkinv/rational.hpp"
#include "tkinv/weight.hpp"

#include <vector>

namespace tkinv {

// Square integer matrix acting on fundamental-weight coordinates (row-major).
struct IntMat {
  int n = 0;
  std::vector<Int> a;

  IntMat() = default;
  explicit IntMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}

  static IntMat identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  Int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  IntVec apply(const IntVec& x) const;
  RatVec apply(const RatVec& x) const;
  IntMat mul(const IntMat& rhs) const;  // this * rhs

  bool operator==(const IntMat&) const = default;
};

struct RootSystem {
  CartanLabel label;
  int rank = 0;

  IntMat cartan;                         // A_ij = <coroot_i, alpha_j>; alpha_j is column j
  std::vector<Rat> simple_norm2;         // <alpha_i, alpha_i>, long roots scaled to 2

  std::vector<Weight> simple_roots;      // fundamental-weight coordinates
  std::vector<Weight> positive_roots;    // lexicographic on simple-root coefficients
  std::vector<IntVec> positive_roots_sc; // same order, simple-root coefficients
  std::vector<Weight> all_roots;         // positives then their negatives
  std::vector<Weight> coroots;           // 2a/<a,a> per positive root, then negatives
  std::vector<Weight> simple_coroots;    // basis of the coroot lattice Gamma
  std::vector<Weight> fundamental_weights;

  Weight rho;                            // (1,...,1)
  Weight highest_root;
  Int dual_coxeter = 0;                  // 1 + <theta, rho>
  Int weyl_order = 0;
  Int det_index = 0;                     // [Lambda : Gamma]

  std::vector<RatVec> gram;              // <omega_i, omega_j>, positive definite
  IntMat gram_int;                       // gram scaled by gram_den to integers
  Int gram_den = 1;

  Rat ip(const Weight& x, const Weight& y) const;
  Rat ip(const RatVec& x, const RatVec& y) const;
  Rat ip(const Weight& x, const RatVec& y) const;
  Int ip_scaled(const IntVec& x, const IntVec& y) const;  // gram_den * <x,y>, pure integer

  Rat norm2(const Weight& x) const { return ip(x, x); }
  Rat norm2(const RatVec& x) const { return ip(x, x); }

  // Simple reflection s_i in fundamental-weight coordinates: x -> x - x_i * alpha_i.
  Weight reflect_simple(int i, const Weight& x) const;
  RatVec reflect_simple(int i, const RatVec& x) const;

  // Dominant representative of the Weyl orbit of x (greedy descent).  If sign is
  // non-null it receives the determinant of the folding element; a stabilized
  // (wall) input leaves the sign meaningful only up to the stabilizer.
  Weight dominant_fold(Weight x, int* sign = nullptr) const;
  RatVec dominant_fold(RatVec x, int* sign = nullptr) const;
};

RootSystem build_root_system(const CartanLabel& label);

// Exact bilinear form in fundamental-weight coordinates; throws on rank mismatch.
Rat inner_product(const RootSystem& rs, const RatVec& x, const RatVec& y);
Rat inner_product(const RootSystem& rs, const Weight& x, const Weight& y);

}  // namespace tkinv
