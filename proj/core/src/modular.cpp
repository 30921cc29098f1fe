// modular.cpp -- S and C matrices, twists, quantum dimensions at level k.

#include "tkinv/modular.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace tkinv {

namespace {

void require_level(const RootSystem& rs, Int k) {
  if (k <= rs.dual_coxeter)
    throw std::invalid_argument("level must exceed dual Coxeter number " +
                                std::to_string(rs.dual_coxeter) + " (got " + std::to_string(k) +
                                ")");
}

}  // namespace

int LevelData::index_of(const Weight& w) const {
  auto it = alcove_index.find(w);
  if (it == alcove_index.end())
    throw std::invalid_argument("weight " + to_string(w) + " is not in the level-" +
                                std::to_string(k) + " alcove");
  return it->second;
}

std::vector<Weight> level_weights(const RootSystem& rs, Int k) {
  require_level(rs, k);
  // <lambda + rho, theta> < k  <=>  sum_i lambda_i <omega_i, theta> <= k - g*
  const Rat budget = Rat(k - rs.dual_coxeter);
  RatVec marks(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    marks[i] = rs.ip(rs.fundamental_weights[i], rs.highest_root);

  std::vector<Weight> out;
  IntVec cur(rs.rank, 0);
  std::function<void(int, Rat)> rec = [&](int d, Rat used) {
    if (d == rs.rank) {
      out.push_back(Weight(cur));
      return;
    }
    for (Int v = 0;; ++v) {
      Rat u = used + Rat(v) * marks[d];
      if (u > budget) break;
      cur[d] = v;
      rec(d + 1, u);
    }
    cur[d] = 0;
  };
  rec(0, Rat(0));
  std::sort(out.begin(), out.end());
  return out;
}

LevelData build_level_data(RootSystem rs, Int k, double tolerance) {
  require_level(rs, k);
  LevelData ld;
  ld.rs = std::move(rs);
  ld.k = k;
  ld.tolerance = tolerance;
  ld.alcove = level_weights(ld.rs, k);
  for (std::size_t i = 0; i < ld.alcove.size(); ++i)
    ld.alcove_index[ld.alcove[i]] = static_cast<int>(i);
  ld.weyl = weyl_group(ld.rs);

  const Int modulus = ld.rs.gram_den * k;
  ld.unity.resize(modulus);
  for (Int j = 0; j < modulus; ++j) {
    double t = -2.0 * M_PI * static_cast<double>(j) / static_cast<double>(modulus);
    ld.unity[j] = {std::cos(t), std::sin(t)};
  }

  const int n = static_cast<int>(ld.alcove.size());
  ld.s.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ld.s(i, j) = s_entry(ld, ld.alcove[i], ld.alcove[j]);

  ld.conj_perm.resize(n);
  for (int i = 0; i < n; ++i) {
    auto [star, bar] = conjugates(ld.rs, ld.alcove[i]);
    ld.conj_perm[i] = ld.index_of(bar);
  }
  return ld;
}

std::complex<double> s_entry(const LevelData& ld, const Weight& lambda, const Weight& mu) {
  const RootSystem& rs = ld.rs;
  const Int modulus = rs.gram_den * ld.k;
  IntVec lr = (lambda + rs.rho).c;
  IntVec mr = (mu + rs.rho).c;

  std::complex<double> acc(0.0, 0.0);
  for (const auto& w : ld.weyl) {
    IntVec wmr = w.mat.apply(mr);
    Int num = rs.ip_scaled(lr, wmr);  // gram_den * <lambda+rho, w(mu+rho)>
    Int j = num % modulus;
    if (j < 0) j += modulus;
    if (w.sign > 0)
      acc += ld.unity[j];
    else
      acc -= ld.unity[j];
  }

  static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  double norm = std::pow(static_cast<double>(ld.k), -0.5 * rs.rank) /
                std::sqrt(static_cast<double>(rs.det_index));
  return i_pow[rs.positive_roots.size() % 4] * norm * acc;
}

int c_entry(const LevelData& ld, const Weight& lambda, const Weight& mu) {
  int i = ld.index_of(lambda);
  int j = ld.index_of(mu);
  return ld.conj_perm[i] == j ? 1 : 0;
}

std::complex<double> theta_pow(const LevelData& ld, const Weight& lambda, const Rat& r) {
  // exponent of e^{pi i * x} with x = r <lambda, lambda + 2 rho> / k, reduced mod 2
  Weight l2r = lambda + Int{2} * ld.rs.rho;
  Rat x = r * ld.rs.ip(lambda, l2r) / Rat(ld.k);
  double t = M_PI * to_double(mod_reduce(x, Rat(2)));
  return {std::cos(t), std::sin(t)};
}

double qdim(const LevelData& ld, const Weight& lambda) {
  const RootSystem& rs = ld.rs;
  Weight lr = lambda + rs.rho;
  double out = 1.0;
  for (const auto& alpha : rs.positive_roots) {
    Rat a = mod_reduce(rs.ip(lr, alpha) / Rat(ld.k), Rat(2));
    Rat b = mod_reduce(rs.ip(rs.rho, alpha) / Rat(ld.k), Rat(2));
    out *= std::sin(M_PI * to_double(a)) / std::sin(M_PI * to_double(b));
  }
  return out;
}

ModularReport verify_modular(const LevelData& ld) {
  const int n = static_cast<int>(ld.alcove.size());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, ld.conj_perm[i]) = 1.0;

  ModularReport rep;
  rep.tolerance = ld.tolerance;
  rep.max_s2_minus_c = (ld.s * ld.s - c).cwiseAbs().maxCoeff();
  rep.max_asymmetry = (ld.s - ld.s.transpose()).cwiseAbs().maxCoeff();
  rep.pass = rep.max_s2_minus_c <= ld.tolerance && rep.max_asymmetry <= ld.tolerance;
  return rep;
}

}  // namespace tkinv
