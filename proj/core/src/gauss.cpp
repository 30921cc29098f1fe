// gauss.cpp -- epsilon-regularized quadrature for oscillatory Gauss measures.

#include "tkinv/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace tkinv::gauss {

namespace {

// Gauss-Hermite nodes/weights for weight e^{-u^2} by Golub-Welsch.
void hermite_rule(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(i / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  nodes = es.eigenvalues();
  weights.resize(n);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    weights(i) = sqrt_pi * v0 * v0;
  }
}

// Neville extrapolation of (eps_i, v_i) to eps = 0.
void extrapolate(const std::vector<double>& eps, const std::vector<Cplx>& vals, Cplx& out,
                 double& err) {
  const int n = static_cast<int>(eps.size());
  std::vector<Cplx> t = vals;
  Cplx prev = t[0];
  for (int level = 1; level < n; ++level) {
    for (int i = 0; i < n - level; ++i) {
      double e0 = eps[i], e1 = eps[i + level];
      t[i] = (t[i + 1] * e0 - t[i] * e1) / (e0 - e1);
    }
    prev = level + 1 < n ? t[0] : prev;
  }
  out = t[0];
  // tail estimate: distance between the last two diagonal entries
  std::vector<Cplx> t2(vals.begin(), vals.end() - 1);
  std::vector<double> e2(eps.begin(), eps.end() - 1);
  for (int level = 1; level < n - 1; ++level)
    for (int i = 0; i < n - 1 - level; ++i) {
      double a = e2[i], b = e2[i + level];
      t2[i] = (t2[i + 1] * a - t2[i] * b) / (a - b);
    }
  err = n >= 2 ? std::abs(out - t2[0]) : 1.0;
}

}  // namespace

OscGaussMeasure make_measure(Eigen::VectorXd mean, Eigen::MatrixXd quad, bool normalize) {
  const int d = static_cast<int>(quad.rows());
  if (quad.cols() != d || mean.size() != d)
    throw std::invalid_argument("make_measure: dimension mismatch");
  if ((quad - quad.transpose()).lpNorm<Eigen::Infinity>() > 1e-12)
    throw std::invalid_argument("make_measure: quadratic form must be symmetric");

  OscGaussMeasure mu;
  mu.dim = d;
  mu.mean = std::move(mean);
  mu.quad = std::move(quad);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mu.quad);
  mu.eigvecs = es.eigenvectors();
  mu.eigvals = es.eigenvalues();
  const double tol = 1e-10 * std::max(1.0, mu.eigvals.cwiseAbs().maxCoeff());
  for (int i = 0; i < d; ++i)
    if (std::abs(mu.eigvals(i)) <= tol) ++mu.kernel_dim;

  if (normalize) {
    // Fresnel product over the nonzero eigenvalues; kernel directions are
    // neutralized by the (eps/pi)^{n/2} prefactor of the improper integral.
    Cplx z(1, 0);
    for (int i = 0; i < d; ++i) {
      double l = mu.eigvals(i);
      if (std::abs(l) <= tol) continue;
      double mag = std::sqrt(2.0 * M_PI / std::abs(l));
      double phase = -M_PI / 4.0 * (l > 0 ? 1.0 : -1.0);
      z *= mag * Cplx(std::cos(phase), std::sin(phase));
    }
    mu.z = z;
    mu.normalized = true;
  }
  return mu;
}

IntegralResult improper_integral_numeric(const OscGaussMeasure& mu, const Fn& f,
                                         const std::vector<double>& eps_schedule,
                                         const QuadOptions& opts) {
  if (mu.dim < 1 || mu.dim > 4)
    throw std::invalid_argument("improper_integral_numeric: dimension must be 1..4");
  if (eps_schedule.size() < 2)
    throw std::invalid_argument("improper_integral_numeric: need at least two epsilons");

  const int d = mu.dim;
  const Eigen::MatrixXd& q = mu.eigvecs;
  const Eigen::VectorXd c = q.transpose() * mu.mean;

  IntegralResult res;
  res.epsilons = eps_schedule;

  for (double eps : eps_schedule) {
    int n = static_cast<int>(std::ceil(opts.base_nodes * std::sqrt(0.2 / eps)));
    n = std::min(std::max(n, 8), opts.max_nodes);

    Eigen::VectorXd h, w;
    hermite_rule(n, h, w);
    const double se = std::sqrt(eps);

    // per-axis node positions y_j = u/sqrt(eps) - c_j and log-free weights
    std::vector<std::vector<double>> ys(d, std::vector<double>(n));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < n; ++i) ys[j][i] = h(i) / se - c(j);

    Cplx acc(0, 0);
    std::vector<int> idx(d, 0);
    Eigen::VectorXd y(d), x(d);
    for (;;) {
      double wprod = 1.0;
      double phase = 0.0;
      for (int j = 0; j < d; ++j) {
        double yj = ys[j][idx[j]];
        y(j) = yj;
        wprod *= w(idx[j]);
        phase -= 0.5 * mu.eigvals(j) * yj * yj;
      }
      x = mu.mean + q * y;
      acc += wprod * f(x) * Cplx(std::cos(phase), std::sin(phase));

      int j = 0;
      while (j < d && ++idx[j] == n) idx[j++] = 0;
      if (j == d) break;
    }

    // scale: each axis contributes 1/sqrt(eps); prefactor (eps/pi)^{kernel/2}
    double scale = std::pow(eps, -0.5 * d) *
                   std::pow(eps / M_PI, 0.5 * mu.kernel_dim);
    res.regularized.push_back(acc * scale / mu.z);
  }

  extrapolate(res.epsilons, res.regularized, res.value, res.error_estimate);
  res.converged = res.error_estimate <= 1e-2 * (1.0 + std::abs(res.value));
  return res;
}

std::pair<Cplx, Cplx> moment_closed_form(const OscGaussMeasure& mu, const Eigen::VectorXd& v,
                                         const Eigen::VectorXd& w) {
  if (!mu.normalized) throw std::invalid_argument("moment_closed_form: measure not normalized");
  if (mu.degenerate()) throw std::invalid_argument("moment_closed_form: measure degenerate");
  Cplx first(v.dot(mu.mean), 0);
  Eigen::VectorXd sinv_w = mu.quad.ldlt().solve(w);
  Cplx second = Cplx(0, -1) * v.dot(sinv_w) + Cplx(v.dot(mu.mean) * w.dot(mu.mean), 0);
  return {first, second};
}

FactorizationReport pexp_factorization_check(const OscGaussMeasure& mu,
                                             const std::vector<AffineMap>& ys,
                                             const std::function<Cplx(const Eigen::VectorXd&)>& phi,
                                             const std::vector<double>& eps_schedule,
                                             const QuadOptions& opts, double hypothesis_tol,
                                             double pass_tol) {
  FactorizationReport rep;
  // hypothesis: all pairwise covariances (1/i)<a_i, S^{-1} a_j> vanish
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      Eigen::VectorXd s = mu.quad.ldlt().solve(ys[j].a);
      rep.hypothesis_residual = std::max(rep.hypothesis_residual, std::abs(ys[i].a.dot(s)));
    }
  rep.hypothesis_ok = rep.hypothesis_residual <= hypothesis_tol;

  Eigen::VectorXd means(ys.size());
  for (std::size_t k = 0; k < ys.size(); ++k) means(k) = ys[k](mu.mean);
  rep.rhs = phi(means);

  auto integrand = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd vals(ys.size());
    for (std::size_t k = 0; k < ys.size(); ++k) vals(k) = ys[k](x);
    return phi(vals);
  };
  auto quad = improper_integral_numeric(mu, integrand, eps_schedule, opts);
  rep.lhs = quad.value;
  rep.quad_error = quad.error_estimate;
  rep.pass = rep.hypothesis_ok &&
             std::abs(rep.lhs - rep.rhs) <= pass_tol * (1.0 + std::abs(rep.rhs)) + rep.quad_error;
  return rep;
}

Cplx periodic_average(const Fn& f, const Eigen::MatrixXd& lattice, int nodes_per_dim) {
  const int d = static_cast<int>(lattice.rows());
  if (lattice.cols() != d) throw std::invalid_argument("periodic_average: basis must be square");
  Cplx acc(0, 0);
  std::vector<int> idx(d, 0);
  Eigen::VectorXd t(d);
  long count = 0;
  for (;;) {
    for (int j = 0; j < d; ++j) t(j) = (idx[j] + 0.5) / nodes_per_dim;
    acc += f(lattice * t);
    ++count;
    int j = 0;
    while (j < d && ++idx[j] == nodes_per_dim) idx[j++] = 0;
    if (j == d) break;
  }
  return acc / static_cast<double>(count);
}

DeltaReductionReport delta_reduction_check(int n0, int n1, int n2,
                                           const Eigen::MatrixXd& m_coupling,
                                           const std::function<Cplx(const Eigen::VectorXd&)>& f,
                                           const Eigen::VectorXd& v,
                                           const Eigen::MatrixXd& v0_lattice,
                                           const std::vector<double>& eps_schedule,
                                           const QuadOptions& opts, double pass_tol) {
  if (n1 != n2) throw std::invalid_argument("delta_reduction_check: M must be square (V1 ~ V2)");
  if (m_coupling.rows() != n2 || m_coupling.cols() != n1)
    throw std::invalid_argument("delta_reduction_check: coupling dimension mismatch");
  const int d = n0 + n1 + n2;
  if (d > 4) throw std::invalid_argument("delta_reduction_check: total dimension must be <= 4");

  // -(1/2)<x, S x> = <x2, M x1>  =>  S couples V1, V2 with -M
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d, d);
  s.block(n0, n0 + n1, n1, n2) = -m_coupling.transpose();
  s.block(n0 + n1, n0, n2, n1) = -m_coupling;
  auto mu = make_measure(Eigen::VectorXd::Zero(d), s, true);

  auto integrand = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd x01 = x.head(n0 + n1);
    double ph = v.dot(x.tail(n2));
    return f(x01) * Cplx(std::cos(ph), std::sin(ph));
  };

  DeltaReductionReport rep;
  auto quad = improper_integral_numeric(mu, integrand, eps_schedule, opts);
  rep.lhs = quad.value;
  rep.quad_error = quad.error_estimate;

  Eigen::VectorXd shift = m_coupling.partialPivLu().solve(v);
  auto slice = [&](const Eigen::VectorXd& x0) {
    Eigen::VectorXd arg(n0 + n1);
    arg.head(n0) = x0;
    arg.tail(n1) = -shift;
    return f(arg);
  };
  rep.rhs = periodic_average(slice, v0_lattice);

  rep.pass = std::abs(rep.lhs - rep.rhs) <= pass_tol * (1.0 + std::abs(rep.rhs)) + rep.quad_error;
  return rep;
}

}  // namespace tkinv::gauss
