// affine.hpp -- the affine Weyl group under the rho-shifted star action, alcove
// folding with signs, the plethysm-type coefficients m^{mu nu}_{lambda,p}(tau)
// and their sums, quantum-Racah fusion coefficients, and the finite-Weyl
// coefficients of the framed torus-knot formula.

#pragma once

#include "tkinv/modular.hpp"
#include "tkinv/rep_weights.hpp"
#include "tkinv/root_system.hpp"
#include "tkinv/weyl.hpp"

#include <vector>

namespace tkinv {

// tau = (w, gamma): acts on the Cartan algebra as x -> w(x) + gamma; under the
// star action  tau * b = w(b + rho) + k gamma - rho.  Translations are even,
// so sign == w.sign.
struct AffineWeylElement {
  WeylElement w;
  Weight gamma;
  int sign = 1;

  static AffineWeylElement identity(const RootSystem& rs) {
    return {WeylElement{IntMat::identity(rs.rank), 1, {}}, Weight(IntVec(rs.rank, 0)), 1};
  }
};

RatVec star_action(const RootSystem& rs, Int k, const AffineWeylElement& tau, const RatVec& b);
Weight star_action(const RootSystem& rs, Int k, const AffineWeylElement& tau, const Weight& b);

struct FoldResult {
  bool on_wall = false;
  int sign = 1;              // meaningful only when !on_wall
  Weight representative;     // in Lambda_+^k when !on_wall
  AffineWeylElement tau;     // star_action(tau, representative) reproduces the input
};

// Reflect x + rho through the affine walls <v, alpha> in k Z until it lies in
// the closed fundamental alcove, accumulating the sign.  on_wall is set when
// the result lands on a wall (such terms cancel out of every alternating sum).
FoldResult fold_to_alcove(const RootSystem& rs, Int k, const Weight& x);

// m^{mu nu}_{lambda,p}(tau) = sign(tau) * mbar_lambda((mu - tau * nu) / p).
Int little_m(const RootSystem& rs, Int k, const MultiplicityTable& lambda_table, Int p,
             const Weight& mu, const Weight& nu, const AffineWeylElement& tau);
Int little_m(const RootSystem& rs, Int k, const Weight& lambda, Int p, const Weight& mu,
             const Weight& nu, const AffineWeylElement& tau);

// Finite list containing every tau with little_m != 0: all (w, gamma) with
// ||w(nu+rho) + k gamma|| <= ||mu+rho|| + |p| ||lambda|| + ||rho||, plus one
// lattice spacing of slack.  radius_scale > 1 enlarges the ball (debug oracle).
std::vector<AffineWeylElement> support_taus(const RootSystem& rs, Int k,
                                            const std::vector<WeylElement>& weyl,
                                            const MultiplicityTable& lambda_table, Int p,
                                            const Weight& mu, const Weight& nu,
                                            double radius_scale = 1.0);

// M^{mu nu}_{lambda,p} = sum over the affine Weyl group of little_m.
Int big_M(const RootSystem& rs, Int k, const std::vector<WeylElement>& weyl,
          const MultiplicityTable& lambda_table, Int p, const Weight& mu, const Weight& nu);

// Quantum Racah: N^mu_{lambda nu} = sum_tau (-1)^tau m_lambda(mu - tau * nu),
// all three weights in the level-k alcove.
Int fusion_N(const LevelData& ld, const Weight& lambda, const Weight& nu, const Weight& mu);
Int fusion_N(const LevelData& ld, const MultiplicityTable& lambda_table, const Weight& nu,
             const Weight& mu);

// Finite-Weyl-group coefficients of the framed torus-knot formula:
//   cbar^mu_{lambda,p} = sum_{w in W} (-1)^w m_lambda((mu - w rho + rho)/p),
// equal to the Adams-operation coefficients of chi_lambda.
Int plethysm_cbar(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                  const MultiplicityTable& lambda_table, Int p, const Weight& mu);
Int plethysm_cbar(const RootSystem& rs, const Weight& lambda, Int p, const Weight& mu);

// All dominant mu with a potentially nonzero cbar^mu_{lambda,p}.
std::vector<Weight> plethysm_support(const RootSystem& rs, const MultiplicityTable& lambda_table,
                                     Int p);

}  // namespace tkinv
