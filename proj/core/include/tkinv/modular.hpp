// modular.hpp -- level-k modular data: the alcove weight set, the S and C
// matrices, twists theta_lambda with exact fractional powers, and quantum
// dimensions.  Conventions: q = e^{2 pi i / k} with no level shift, k > g*.

#pragma once

#include "tkinv/rep_weights.hpp"
#include "tkinv/root_system.hpp"
#include "tkinv/weyl.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <vector>

namespace tkinv {

struct LevelData {
  RootSystem rs;
  Int k = 0;
  std::vector<Weight> alcove;          // Lambda_+^k, lexicographic
  std::map<Weight, int> alcove_index;
  Eigen::MatrixXcd s;                  // S matrix over the alcove
  std::vector<int> conj_perm;          // C as a permutation: index -> index of lambda-bar
  double tolerance = 1e-9;

  std::vector<WeylElement> weyl;       // cached full Weyl group
  std::vector<std::complex<double>> unity;  // e^{-2 pi i j / (gram_den * k)}

  int index_of(const Weight& w) const;      // throws if not in the alcove
  bool in_alcove(const Weight& w) const { return alcove_index.count(w) != 0; }
};

// All dominant integral weights with <lambda + rho, theta> < k, lexicographic.
std::vector<Weight> level_weights(const RootSystem& rs, Int k);

LevelData build_level_data(RootSystem rs, Int k, double tolerance = 1e-9);

// S_{lambda mu} for arbitrary integral weights (not restricted to the alcove):
//   i^{|R+|} k^{-rank/2} |Lambda/Gamma|^{-1/2}
//     sum_w (-1)^w e^{-(2 pi i / k) <lambda+rho, w(mu+rho)>}
std::complex<double> s_entry(const LevelData& ld, const Weight& lambda, const Weight& mu);

// Charge conjugation: 1 iff mu = lambda-bar; alcove indices only.
int c_entry(const LevelData& ld, const Weight& lambda, const Weight& mu);

// theta_lambda^r = e^{r (pi i / k) <lambda, lambda + 2 rho>} computed from the
// exact exponent of the given representative lambda (fractional powers do not
// factor through the alcove class).
std::complex<double> theta_pow(const LevelData& ld, const Weight& lambda, const Rat& r);

// Quantum dimension by the sine product; may be zero or negative off the alcove.
double qdim(const LevelData& ld, const Weight& lambda);

struct ModularReport {
  double max_s2_minus_c = 0;
  double max_asymmetry = 0;
  double tolerance = 0;
  bool pass = false;
};

ModularReport verify_modular(const LevelData& ld);

}  // namespace tkinv
