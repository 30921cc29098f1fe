// oracles.hpp -- independent test-side computations used to freeze expected
// values: Smith normal form, brute-force Weyl closure, Fourier inversion of
// characters on a torus grid, and textbook tables.  Nothing here may call into
// the code paths it is checking.

#pragma once

#include "tkinv/root_system.hpp"
#include "tkinv/weight.hpp"

#include <complex>
#include <map>
#include <vector>

namespace tkinv::oracle {

// |coker| of an integer matrix via Smith normal form (product of the nonzero
// diagonal entries).  Columns are the sublattice basis in ambient coordinates.
Int lattice_index_smith(std::vector<IntVec> columns);

// Order of the group generated by the simple reflections, by explicit closure
// on matrices; independent of RootSystem::weyl_order.
Int weyl_order_bruteforce(const RootSystem& rs);

// Weight multiplicities of the irreducible with highest weight lambda,
// recovered by sampling the Weyl character (alternating-sum formula evaluated
// in floating point) on an offset torus grid and inverting the finite Fourier
// sum.  Rank <= 2, small dimensions only.
std::map<Weight, Int> multiplicities_fourier(const RootSystem& rs, const Weight& lambda);

// Textbook data per label.
Int table_dual_coxeter(const CartanLabel& l);
Int table_weyl_order(const CartanLabel& l);
Int table_dim_algebra(const CartanLabel& l);

}  // namespace tkinv::oracle
