// gauss.hpp -- numerical verification harness for oscillatory Gauss-type
// measures d mu = (1/Z) e^{-(i/2)<x-m, S(x-m)>} dx on small Euclidean spaces:
// epsilon-regularized improper integrals, moment closed forms, the
// factorization property for decorrelated affine families, periodic averages,
// and the delta-type reduction of coupled integrals.  This module reports
// residuals; it does not feed the invariant computations.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

namespace tkinv::gauss {

using Cplx = std::complex<double>;
using Fn = std::function<Cplx(const Eigen::VectorXd&)>;

struct OscGaussMeasure {
  int dim = 0;
  Cplx z = 1.0;            // normalization constant
  Eigen::VectorXd mean;
  Eigen::MatrixXd quad;    // symmetric S
  bool normalized = false;

  // spectral data (filled on construction)
  Eigen::MatrixXd eigvecs;
  Eigen::VectorXd eigvals;
  int kernel_dim = 0;

  bool centered(double tol = 1e-14) const { return mean.lpNorm<Eigen::Infinity>() <= tol; }
  bool degenerate() const { return kernel_dim > 0; }
};

// Measure with Z = 1 (unnormalized) or with Z chosen so the improper integral
// of 1 equals 1 (normalized, the Fresnel product over nonzero eigenvalues).
OscGaussMeasure make_measure(Eigen::VectorXd mean, Eigen::MatrixXd quad, bool normalize = true);

struct QuadOptions {
  double base_nodes = 48;    // per-dimension node count at eps = 0.2
  int max_nodes = 256;       // per-dimension cap
  double kernel_tol = 1e-10; // eigenvalue threshold for ker(S)
};

struct IntegralResult {
  Cplx value{0, 0};
  double error_estimate = 0;           // from the extrapolation tail
  bool converged = false;
  std::vector<double> epsilons;
  std::vector<Cplx> regularized;       // value at each epsilon before extrapolation
};

inline std::vector<double> default_schedule() { return {0.2, 0.1, 0.05, 0.025}; }

// lim_{eps->0} (eps/pi)^{n/2} int f(x) e^{-eps|x|^2} d mu(x), n = dim ker S,
// by tensor Gauss-Hermite quadrature per epsilon (node count ~ eps^{-1/2})
// and polynomial extrapolation of the schedule to eps = 0.
IntegralResult improper_integral_numeric(const OscGaussMeasure& mu, const Fn& f,
                                         const std::vector<double>& eps_schedule =
                                             default_schedule(),
                                         const QuadOptions& opts = {});

// First and second moments of a normalized non-degenerate measure:
//   int <v,x> = <v,m>,  int <v,x><w,x> = (1/i)<v, S^{-1} w> + <v,m><w,m>.
std::pair<Cplx, Cplx> moment_closed_form(const OscGaussMeasure& mu, const Eigen::VectorXd& v,
                                         const Eigen::VectorXd& w);

struct AffineMap {
  Eigen::VectorXd a;
  double b = 0;
  double operator()(const Eigen::VectorXd& x) const { return a.dot(x) + b; }
};

struct FactorizationReport {
  Cplx lhs{0, 0};            // quadrature of Phi((Y_k(x)))
  Cplx rhs{0, 0};            // Phi((int Y_k dmu)) in closed form
  double hypothesis_residual = 0;  // max |<a_i, S^{-1} a_j>| over pairs
  double quad_error = 0;
  bool hypothesis_ok = false;
  bool pass = false;
};

// Checks int Phi((Y_k)) dmu = Phi((int Y_k dmu)) for affine Y_k whose pairwise
// covariances vanish.  A violated hypothesis is reported, never silently passed.
FactorizationReport pexp_factorization_check(
    const OscGaussMeasure& mu, const std::vector<AffineMap>& ys,
    const std::function<Cplx(const Eigen::VectorXd&)>& phi,
    const std::vector<double>& eps_schedule = default_schedule(), const QuadOptions& opts = {},
    double hypothesis_tol = 1e-9, double pass_tol = 1e-3);

// Mean of a lattice-periodic function over one fundamental cell (columns of
// `lattice` span the lattice); uniform grid, spectrally accurate for smooth f.
Cplx periodic_average(const Fn& f, const Eigen::MatrixXd& lattice, int nodes_per_dim = 64);

struct DeltaReductionReport {
  Cplx lhs{0, 0};
  Cplx rhs{0, 0};
  double quad_error = 0;
  bool pass = false;
};

// For V = V0 + V1 + V2, d mu = (1/Z) e^{i <x2, M x1>} dx normalized, checks
//   int F(x0 + x1) e^{i<x2, v>} dmu  =  avg over V0 of F(x0 - M^{-1} v),
// with F lattice-periodic in the V0 argument (lattice in V0 coordinates).
DeltaReductionReport delta_reduction_check(
    int n0, int n1, int n2, const Eigen::MatrixXd& m_coupling,
    const std::function<Cplx(const Eigen::VectorXd&)>& f_on_v0_v1, const Eigen::VectorXd& v,
    const Eigen::MatrixXd& v0_lattice, const std::vector<double>& eps_schedule =
                                           default_schedule(),
    const QuadOptions& opts = {}, double pass_tol = 2e-3);

}  // namespace tkinv::gauss
