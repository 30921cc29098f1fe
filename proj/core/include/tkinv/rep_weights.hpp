// rep_weights.hpp -- weight multiplicities, dimensions and character evaluation
// for the finite-dimensional irreducibles, plus the Adams-operation decomposition.

#pragma once

#include "tkinv/root_system.hpp"

#include <complex>
#include <filesystem>
#include <map>
#include <optional>

namespace tkinv {

struct MultiplicityTable {
  Weight lambda;                 // highest weight
  std::map<Weight, Int> entries; // full Weyl-closed support, multiplicity > 0
  Rat norm_bound;                // max <mu+rho, mu+rho> over the support
  Int dim = 0;                   // sum of entries

  Int at(const Weight& mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? 0 : it->second;
  }
};

struct RepOptions {
  Int dim_cap = 2000000;                            // reject larger representations
  std::optional<std::filesystem::path> cache_dir;   // optional JSON table cache
};

// Weyl dimension formula, exact.
Int dimension(const RootSystem& rs, const Weight& lambda);

// Freudenthal recursion down the dominance order, then Weyl-orbit fill.
MultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                        const RepOptions& opts = {});

// Character value  sum_mu m(mu) e^{2 pi i <mu, b>}  at an exact rational point b.
std::complex<double> character_eval(const RootSystem& rs, const MultiplicityTable& table,
                                    const RatVec& b);
std::complex<double> character_eval(const RootSystem& rs, const Weight& lambda, const RatVec& b);

// Multiplicity extended by zero off the weight lattice.
Int mbar_eval(const RootSystem& rs, const MultiplicityTable& table, const RatVec& x);

// Decomposition of the p-fold exponent-scaled character into irreducible
// characters by leading-term peeling:  sum_mu c_mu chi_mu(b) = chi_lambda(p b).
std::map<Weight, Int> adams_decompose(const RootSystem& rs, const Weight& lambda, Int p,
                                      const RepOptions& opts = {});

// Cache round-trip (used by weight_multiplicities when opts.cache_dir is set).
std::string table_to_json(const CartanLabel& label, const MultiplicityTable& table);
MultiplicityTable table_from_json(const RootSystem& rs, const std::string& json_text);

}  // namespace tkinv
