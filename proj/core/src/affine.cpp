// affine.cpp -- star action, alcove folding, plethysm-type sums, fusion.

#include "tkinv/affine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace tkinv {

namespace {

void require_nonzero_p(Int p) {
  if (p == 0) throw std::invalid_argument("winding exponent p must be nonzero");
}

IntMat theta_reflection_matrix(const RootSystem& rs) {
  const int n = rs.rank;
  IntMat m = IntMat::identity(n);
  // s_theta(x) = x - <x, theta> theta  (theta is its own coroot)
  for (int j = 0; j < n; ++j) {
    IntVec ej(n, 0);
    ej[j] = 1;
    Rat pair = rs.ip(Weight(ej), rs.highest_root);
    if (!is_integral(pair)) throw std::runtime_error("theta pairing not integral");
    for (int i = 0; i < n; ++i) m.at(i, j) -= pair.numerator() * rs.highest_root.c[i];
  }
  return m;
}

}  // namespace

RatVec star_action(const RootSystem& rs, Int k, const AffineWeylElement& tau, const RatVec& b) {
  RatVec shifted = b + to_rat(rs.rho);
  RatVec moved = tau.w.mat.apply(shifted);
  RatVec out(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    out[i] = moved[i] + Rat(k * tau.gamma.c[i]) - Rat(rs.rho.c[i]);
  return out;
}

Weight star_action(const RootSystem& rs, Int k, const AffineWeylElement& tau, const Weight& b) {
  Weight out = tau.w.apply(b + rs.rho);
  for (int i = 0; i < rs.rank; ++i) out.c[i] += k * tau.gamma.c[i] - rs.rho.c[i];
  return out;
}

FoldResult fold_to_alcove(const RootSystem& rs, Int k, const Weight& x) {
  const int n = rs.rank;
  Weight v = x + rs.rho;
  IntMat w = IntMat::identity(n);       // current = w(x+rho) + k*gamma
  IntMat winv = IntMat::identity(n);
  Weight gamma(IntVec(n, 0));
  int sign = 1;

  const IntMat stheta = theta_reflection_matrix(rs);
  std::vector<IntMat> srefl(n);
  for (int i = 0; i < n; ++i) {
    srefl[i] = IntMat::identity(n);
    for (int j = 0; j < n; ++j) srefl[i].at(j, i) -= rs.simple_roots[i].c[j];
  }

  for (;;) {
    bool moved = false;
    for (int i = 0; i < n; ++i) {
      if (v.c[i] < 0) {
        v = rs.reflect_simple(i, v);
        gamma = Weight(srefl[i].apply(gamma.c));
        w = srefl[i].mul(w);
        winv = winv.mul(srefl[i]);
        sign = -sign;
        moved = true;
      }
    }
    if (moved) continue;
    Rat ht = rs.ip(v, rs.highest_root);
    if (ht > Rat(k)) {
      // affine reflection through <u, theta> = k: u -> u - (<u,theta> - k) theta
      Int pair = ht.numerator();  // integral for lattice v
      Weight nv = v;
      for (int i = 0; i < n; ++i) nv.c[i] -= (pair - k) * rs.highest_root.c[i];
      v = nv;
      gamma = Weight(stheta.apply(gamma.c)) + rs.highest_root;
      w = stheta.mul(w);
      winv = winv.mul(stheta);
      sign = -sign;
      continue;
    }
    break;
  }

  FoldResult out;
  out.sign = sign;
  bool wall = rs.ip(v, rs.highest_root) == Rat(k);
  for (int i = 0; i < n; ++i) wall = wall || v.c[i] == 0;
  out.on_wall = wall;
  out.representative = v - rs.rho;

  // v = w(x+rho) + k gamma, so x + rho = winv(v) - k winv(gamma):
  // tau = (winv, -winv(gamma)) satisfies star_action(tau, rep) = x.
  Weight tau_gamma = -Weight(winv.apply(gamma.c));
  WeylElement we;
  we.word = reduced_word(rs, winv);
  we.mat = std::move(winv);
  we.sign = sign;
  out.tau = AffineWeylElement{std::move(we), std::move(tau_gamma), sign};
  return out;
}

Int little_m(const RootSystem& rs, Int k, const MultiplicityTable& lambda_table, Int p,
             const Weight& mu, const Weight& nu, const AffineWeylElement& tau) {
  require_nonzero_p(p);
  Weight moved = star_action(rs, k, tau, nu);
  RatVec arg = to_rat(mu - moved) / Rat(p);
  Int m = mbar_eval(rs, lambda_table, arg);
  return tau.sign > 0 ? m : -m;
}

Int little_m(const RootSystem& rs, Int k, const Weight& lambda, Int p, const Weight& mu,
             const Weight& nu, const AffineWeylElement& tau) {
  return little_m(rs, k, weight_multiplicities(rs, lambda), p, mu, nu, tau);
}

std::vector<AffineWeylElement> support_taus(const RootSystem& rs, Int k,
                                            const std::vector<WeylElement>& weyl,
                                            const MultiplicityTable& lambda_table, Int p,
                                            const Weight& mu, const Weight& nu,
                                            double radius_scale) {
  require_nonzero_p(p);
  const int n = rs.rank;

  auto norm = [&](const Weight& w) { return std::sqrt(to_double(rs.ip(w, w))); };
  double spacing = 0;
  for (const auto& cr : rs.simple_coroots) spacing = std::max(spacing, norm(cr));
  const double radius =
      (norm(mu + rs.rho) + std::abs(static_cast<double>(p)) * norm(lambda_table.lambda) +
       norm(rs.rho) + spacing) *
          radius_scale +
      1e-9;

  // coroot-basis data: gram Q and its inverse for the bounding box
  Eigen::MatrixXd q(n, n), basis(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      q(i, j) = to_double(rs.ip(rs.simple_coroots[i], rs.simple_coroots[j]));
      basis(i, j) = static_cast<double>(rs.simple_coroots[j].c[i]);
    }
  Eigen::MatrixXd qinv = q.inverse();
  Eigen::MatrixXd basis_inv = basis.inverse();

  std::vector<AffineWeylElement> out;
  const double r = radius / static_cast<double>(k);
  for (std::size_t wi = 0; wi < weyl.size(); ++wi) {
    const auto& w = weyl[wi];
    Weight wnr = w.apply(nu + rs.rho);
    // need || k gamma + w(nu+rho) || <= radius, i.e. gamma in a ball of radius
    // r around c = -w(nu+rho)/k
    Eigen::VectorXd c(n);
    for (int i = 0; i < n; ++i) c(i) = -static_cast<double>(wnr.c[i]) / static_cast<double>(k);
    Eigen::VectorXd t0 = basis_inv * c;

    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      double hw = r * std::sqrt(std::max(qinv(i, i), 0.0)) + 1e-9;
      lo[i] = static_cast<Int>(std::floor(t0(i) - hw));
      hi[i] = static_cast<Int>(std::ceil(t0(i) + hw));
    }

    IntVec t(n, 0);
    std::function<void(int)> rec = [&](int d) {
      if (d == n) {
        Weight gamma(IntVec(n, 0));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) gamma.c[j] += t[i] * rs.simple_coroots[i].c[j];
        Weight shifted = (k * gamma) + wnr;
        if (to_double(rs.ip(shifted, shifted)) <= radius * radius)
          out.push_back(AffineWeylElement{w, gamma, w.sign});
        return;
      }
      for (Int v = lo[d]; v <= hi[d]; ++v) {
        t[d] = v;
        rec(d + 1);
      }
    };
    rec(0);
  }

  std::sort(out.begin(), out.end(), [](const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.w.mat.a < b.w.mat.a;
  });
  return out;
}

Int big_M(const RootSystem& rs, Int k, const std::vector<WeylElement>& weyl,
          const MultiplicityTable& lambda_table, Int p, const Weight& mu, const Weight& nu) {
  Int acc = 0;
  for (const auto& tau : support_taus(rs, k, weyl, lambda_table, p, mu, nu))
    acc += little_m(rs, k, lambda_table, p, mu, nu, tau);
  return acc;
}

Int fusion_N(const LevelData& ld, const MultiplicityTable& lambda_table, const Weight& nu,
             const Weight& mu) {
  ld.index_of(lambda_table.lambda);
  ld.index_of(nu);
  ld.index_of(mu);
  return big_M(ld.rs, ld.k, ld.weyl, lambda_table, 1, mu, nu);
}

Int fusion_N(const LevelData& ld, const Weight& lambda, const Weight& nu, const Weight& mu) {
  return fusion_N(ld, weight_multiplicities(ld.rs, lambda), nu, mu);
}

Int plethysm_cbar(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                  const MultiplicityTable& lambda_table, Int p, const Weight& mu) {
  if (p < 1) throw std::invalid_argument("plethysm_cbar: p must be a positive integer");
  Int acc = 0;
  for (const auto& w : weyl) {
    Weight shift = mu - w.apply(rs.rho) + rs.rho;
    RatVec arg = to_rat(shift) / Rat(p);
    Int m = mbar_eval(rs, lambda_table, arg);
    acc += w.sign > 0 ? m : -m;
  }
  return acc;
}

Int plethysm_cbar(const RootSystem& rs, const Weight& lambda, Int p, const Weight& mu) {
  return plethysm_cbar(rs, weyl_group(rs), weight_multiplicities(rs, lambda), p, mu);
}

std::vector<Weight> plethysm_support(const RootSystem& rs, const MultiplicityTable& lambda_table,
                                     Int p) {
  // mu = p*beta + w(rho) - rho over support betas; collect the dominant ones
  std::set<Weight> out;
  auto weyl = weyl_group(rs);
  for (const auto& w : weyl) {
    Weight shift = w.apply(rs.rho) - rs.rho;
    for (const auto& [beta, m] : lambda_table.entries) {
      Weight mu = (p * beta) + shift;
      if (mu.dominant()) out.insert(mu);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace tkinv
