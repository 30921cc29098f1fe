// invariants.hpp -- colored torus-knot invariants: the S^2 x S^1 values, the
// surgery passage to S^3, and the framed/unframed Rosso-Jones evaluations.

#pragma once

#include "tkinv/affine.hpp"
#include "tkinv/modular.hpp"

#include <complex>
#include <optional>
#include <string>

namespace tkinv {

struct TorusKnotSpec {
  Int p = 1;
  Int q = 0;
};

// gcd(|p|,|q|) = 1, p != 0; q = 0 forces |p| = 1.  Throws on violation.
void validate(const TorusKnotSpec& spec);

enum class InvariantPath { theorem1, theorem2, surgery, rt_direct, rosso_jones, qi };

std::string to_string(InvariantPath path);

struct InvariantValue {
  std::complex<double> value;
  InvariantPath path = InvariantPath::theorem1;
  CartanLabel label;
  Int k = 0;
  Weight lambda;
  std::optional<Weight> beta;
  TorusKnotSpec knot;
};

// Precomputed q-independent terms of the double alcove sum for a fixed color
// and winding p: every (eta1, eta2, tau) with a nonzero multiplicity factor,
// recorded as (alcove indices, the representative tau * eta2, signed value).
// The list is sorted, so downstream accumulation is reproducible.
struct KnotTerms {
  struct Term {
    int i1;
    int i2;
    Weight rep;  // tau * eta2, the actual weight the theta power is taken at
    Int m;       // (-1)^tau m_lambda((eta1 - tau*eta2)/p)
  };
  Int p = 1;
  std::vector<Term> terms;
};

KnotTerms knot_terms(const LevelData& ld, const MultiplicityTable& lambda_table, Int p);

// S^2 x S^1, one torus knot colored by lambda.
InvariantValue wlo_torus_knot(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec);
InvariantValue wlo_torus_knot(const LevelData& ld, const KnotTerms& terms, const Weight& lambda,
                              TorusKnotSpec spec);

// S^2 x S^1, torus knot colored lambda plus a vertical circle colored beta.
InvariantValue wlo_torus_knot_vertical(const LevelData& ld, const Weight& lambda,
                                       const Weight& beta, TorusKnotSpec spec);
InvariantValue wlo_torus_knot_vertical(const LevelData& ld, const KnotTerms& terms,
                                       const Weight& lambda, const Weight& beta,
                                       TorusKnotSpec spec);

// S^3 via the S-matrix surgery sum over the vertical color.
InvariantValue rt_s3_via_surgery(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec);
InvariantValue rt_s3_via_surgery(const LevelData& ld, const KnotTerms& terms,
                                 const Weight& lambda, TorusKnotSpec spec);

// S^3 directly: the surgery sum collapsed through S^2 = C.
InvariantValue rt_s3_direct(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec);
InvariantValue rt_s3_direct(const LevelData& ld, const KnotTerms& terms, const Weight& lambda,
                            TorusKnotSpec spec);

// S^3, two components: torus knot colored lambda, vertical circle colored beta.
InvariantValue rt_two_component(const LevelData& ld, const Weight& lambda, const Weight& beta,
                                TorusKnotSpec spec);

// Framed Rosso-Jones value S_00 sum_mu cbar^mu_{lambda,p} d_mu theta_mu^{q/p};
// p < 0 is routed through the orientation reversal (p,q) -> (-p,-q).
InvariantValue rosso_jones_framed(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec);

// Ambient-isotopy invariant: rosso_jones_framed * theta_lambda^{-pq} / S_{lambda 0}.
InvariantValue qi_unframed(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec);

// Normalized value of the empty link (the normalization convention throughout).
InvariantValue wlo_empty(const LevelData& ld);

}  // namespace tkinv
