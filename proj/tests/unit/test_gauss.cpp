#include "doctest.h"

#include "tkinv/gauss.hpp"

#include <cmath>
#include <random>

using namespace tkinv::gauss;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

Cplx one(const VectorXd&) { return Cplx(1, 0); }

MatrixXd diag2(double a, double b) {
  MatrixXd m = MatrixXd::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("normalization of the improper integral") {
  // nondegenerate 1d
  auto mu1 = make_measure(VectorXd::Zero(1), MatrixXd::Identity(1, 1));
  auto r1 = improper_integral_numeric(mu1, one);
  CHECK(std::abs(r1.value - Cplx(1, 0)) < 1e-4);
  CHECK(r1.converged);

  // degenerate 2d: quad = diag(1, 0); the (eps/pi)^{n/2} factor keeps it finite
  auto mu2 = make_measure(VectorXd::Zero(2), diag2(1, 0));
  CHECK(mu2.degenerate());
  CHECK(mu2.kernel_dim == 1);
  auto r2 = improper_integral_numeric(mu2, one);
  CHECK(std::abs(r2.value - Cplx(1, 0)) < 1e-3);

  // the regularized values are already eps-independent for f = 1
  for (const auto& v : r2.regularized) CHECK(std::abs(v - Cplx(1, 0)) < 1e-3);
}

TEST_CASE("second moment x^2 in one dimension") {
  // quad = (1), normalized, f = x^2: closed form 1/i = -i
  auto mu = make_measure(VectorXd::Zero(1), MatrixXd::Identity(1, 1));
  auto r = improper_integral_numeric(mu, [](const VectorXd& x) { return Cplx(x(0) * x(0), 0); });
  CHECK(std::abs(r.value - Cplx(0, -1)) < 2e-3);
}

TEST_CASE("moment closed forms") {
  auto mu = make_measure(VectorXd::Zero(2), diag2(1, 2));
  VectorXd e1 = VectorXd::Unit(2, 0), e2 = VectorXd::Unit(2, 1);

  auto [f1, s11] = moment_closed_form(mu, e1, e1);
  CHECK(f1 == Cplx(0, 0));  // centered
  auto [f2, s22] = moment_closed_form(mu, e2, e2);
  CHECK(std::abs(s22 - Cplx(0, -0.5)) < 1e-14);  // 1/(2i)
  auto [f3, s12] = moment_closed_form(mu, e1, e2);
  CHECK(std::abs(s12) < 1e-14);  // v perp S^{-1} w

  // non-centered mean enters both moments
  VectorXd m(2);
  m << 0.3, -0.7;
  auto mum = make_measure(m, diag2(1, 2));
  auto [fm, sm] = moment_closed_form(mum, e1, e2);
  CHECK(std::abs(fm - Cplx(0.3, 0)) < 1e-14);
  CHECK(std::abs(sm - Cplx(0.3 * -0.7, 0)) < 1e-14);

  auto mud = make_measure(VectorXd::Zero(2), diag2(1, 0));
  CHECK_THROWS_AS(moment_closed_form(mud, e1, e2), std::invalid_argument);
}

TEST_CASE("quadrature reproduces moment closed forms on random measures") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    int d = 1 + trial % 3;
    // random symmetric S with eigenvalues pushed away from zero
    MatrixXd a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a(i, j) = uni(rng);
    MatrixXd s = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(s);
    VectorXd ev = es.eigenvalues();
    for (int i = 0; i < d; ++i) ev(i) += ev(i) >= 0 ? 0.7 : -0.7;
    s = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
    VectorXd m(d);
    for (int i = 0; i < d; ++i) m(i) = 0.4 * uni(rng);

    auto mu = make_measure(m, s);
    VectorXd v(d), w(d);
    for (int i = 0; i < d; ++i) {
      v(i) = uni(rng);
      w(i) = uni(rng);
    }
    auto [first, second] = moment_closed_form(mu, v, w);

    auto rf = improper_integral_numeric(mu, [&](const VectorXd& x) { return Cplx(v.dot(x), 0); });
    CHECK(std::abs(rf.value - first) <= 1e-3 * (1 + std::abs(first)) + rf.error_estimate);

    auto rsec = improper_integral_numeric(
        mu, [&](const VectorXd& x) { return Cplx(v.dot(x) * w.dot(x), 0); });
    CHECK(std::abs(rsec.value - second) <= 2e-3 * (1 + std::abs(second)) + rsec.error_estimate);
  }
}

TEST_CASE("factorization for decorrelated affine families") {
  // linear Phi factorizes regardless of the hypothesis
  auto mu = make_measure(VectorXd::Zero(2), diag2(1, 2));
  std::vector<AffineMap> ys = {{VectorXd::Unit(2, 0), 0.2}, {VectorXd::Unit(2, 1), -0.1}};
  auto lin = pexp_factorization_check(
      mu, ys, [](const VectorXd& t) { return Cplx(t.sum(), 0); });
  CHECK(lin.hypothesis_ok);
  CHECK(lin.pass);

  // exp(Y1 + Y2) with an antidiagonal form: directions along e1 are
  // self-decorrelated because (S^{-1})_{11} = 0
  MatrixXd anti = MatrixXd::Zero(2, 2);
  anti(0, 1) = anti(1, 0) = 1;
  auto mua = make_measure(VectorXd::Zero(2), anti);
  std::vector<AffineMap> ya = {{VectorXd::Unit(2, 0), 0.0}, {VectorXd::Unit(2, 0), 0.3}};
  auto ra = pexp_factorization_check(
      mua, ya, [](const VectorXd& t) { return std::exp(Cplx(t(0) + t(1), 0)); },
      default_schedule(), QuadOptions{}, 1e-9, 5e-3);
  CHECK(ra.hypothesis_ok);
  CHECK(ra.pass);
  CHECK(std::abs(ra.rhs - std::exp(Cplx(0.3, 0))) < 1e-12);

  // matrix-exponential trace of a 2x2 built from the Y values
  auto rm = pexp_factorization_check(
      mua, ya,
      [](const VectorXd& t) {
        Eigen::Matrix2cd m;
        m << Cplx(0.2 * t(0), 0), Cplx(0, 0.1), Cplx(0, -0.1), Cplx(0.1 * t(1), 0);
        return (Eigen::Matrix2cd::Identity() + m + 0.5 * m * m + (1.0 / 6.0) * m * m * m +
                (1.0 / 24.0) * m * m * m * m)
            .trace();
      },
      default_schedule(), QuadOptions{}, 1e-9, 5e-3);
  CHECK(rm.hypothesis_ok);
  CHECK(rm.pass);

  // violated hypothesis is reported, not silently passed
  std::vector<AffineMap> bad = {{VectorXd::Unit(2, 0), 0.0}, {VectorXd::Unit(2, 1), 0.0}};
  auto rb = pexp_factorization_check(
      mua, bad, [](const VectorXd& t) { return std::exp(Cplx(t(0) + t(1), 0)); });
  CHECK(!rb.hypothesis_ok);
  CHECK(!rb.pass);
}

TEST_CASE("periodic average") {
  MatrixXd unit = MatrixXd::Identity(1, 1);
  CHECK(std::abs(periodic_average(one, unit) - Cplx(1, 0)) < 1e-14);

  // single Fourier mode averages to zero exactly
  auto mode = [](const VectorXd& x) {
    return Cplx(std::cos(2 * M_PI * x(0)), std::sin(2 * M_PI * x(0)));
  };
  CHECK(std::abs(periodic_average(mode, unit)) < 1e-14);

  // shift invariance on a skew 2d lattice
  MatrixXd lat(2, 2);
  lat << 1.0, 0.5, 0.0, 2.0;
  auto f = [&](const VectorXd& x) {
    // lattice-periodic trig polynomial: use the dual pairing
    Eigen::MatrixXd dual = lat.inverse().transpose();
    double a = 2 * M_PI * (dual.col(0).dot(x));
    double b = 2 * M_PI * (dual.col(1).dot(x));
    return Cplx(1.5 + std::cos(a), 0.2 * std::sin(b)) + Cplx(0.3 * std::cos(a + b), 0);
  };
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(-2, 2);
  auto base = periodic_average(f, lat);
  CHECK(std::abs(base - Cplx(1.5, 0)) < 1e-12);
  for (int t = 0; t < 5; ++t) {
    VectorXd y(2);
    y << uni(rng), uni(rng);
    auto shifted = periodic_average([&](const VectorXd& x) { return f(x + y); }, lat);
    CHECK(std::abs(shifted - base) <= 1e-9);
  }
}

TEST_CASE("delta reduction") {
  QuadOptions opts;
  opts.base_nodes = 40;
  opts.max_nodes = 120;
  std::vector<double> sched = {0.4, 0.2, 0.1};
  MatrixXd lattice = 2 * M_PI * MatrixXd::Identity(1, 1);

  // v = 0, F depending only on x0: both sides are the plain average
  MatrixXd m11 = MatrixXd::Identity(1, 1);
  auto f0 = [](const VectorXd& x01) { return Cplx(1.3 + std::cos(x01(0)), 0); };
  auto r0 = delta_reduction_check(1, 1, 1, m11, f0, VectorXd::Zero(1), lattice, sched, opts);
  CHECK(r0.pass);
  CHECK(std::abs(r0.rhs - Cplx(1.3, 0)) < 1e-12);

  // constant F comes back unchanged
  auto rc = delta_reduction_check(
      1, 1, 1, m11, [](const VectorXd&) { return Cplx(0.8, -0.4); }, VectorXd::Zero(1), lattice,
      sched, opts);
  CHECK(rc.pass);
  CHECK(std::abs(rc.rhs - Cplx(0.8, -0.4)) < 1e-12);

  // phase shift through the V1 argument: F = g(x0) e^{i x1}, M^{-1} v = pi/2
  auto fp = [](const VectorXd& x01) {
    return Cplx(2.0 + std::cos(x01(0)), 0) * Cplx(std::cos(x01(1)), std::sin(x01(1)));
  };
  VectorXd v1(1);
  v1 << M_PI / 2;
  auto rp = delta_reduction_check(1, 1, 1, m11, fp, v1, lattice, sched, opts);
  CHECK(rp.pass);
  // expected: e^{-i pi/2} * avg(2 + cos) = -2i
  CHECK(std::abs(rp.rhs - Cplx(0, -2)) < 1e-12);
  CHECK(std::abs(rp.lhs - Cplx(0, -2)) <= 2e-3 * 3 + rp.quad_error);
}
