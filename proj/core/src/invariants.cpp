// invariants.cpp -- evaluation of the torus-knot formulas along all paths.

#include "tkinv/invariants.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tkinv {

namespace {

using Cplx = std::complex<double>;

Weight zero_weight(const RootSystem& rs) { return Weight(IntVec(rs.rank, 0)); }

Cplx s00(const LevelData& ld) { return ld.s(0, 0); }  // alcove[0] == 0 (lex order)

InvariantValue tag(const LevelData& ld, Cplx value, InvariantPath path, const Weight& lambda,
                   std::optional<Weight> beta, TorusKnotSpec spec) {
  InvariantValue out;
  out.value = value;
  out.path = path;
  out.label = ld.rs.label;
  out.k = ld.k;
  out.lambda = lambda;
  out.beta = std::move(beta);
  out.knot = spec;
  return out;
}

}  // namespace

void validate(const TorusKnotSpec& spec) {
  if (spec.p == 0) throw std::invalid_argument("torus knot: p must be nonzero");
  Int g = std::gcd(std::abs(spec.p), std::abs(spec.q));
  if (g != 1)
    throw std::invalid_argument("torus knot: winding numbers " + std::to_string(spec.p) + "," +
                                std::to_string(spec.q) + " are not coprime");
}

std::string to_string(InvariantPath path) {
  switch (path) {
    case InvariantPath::theorem1: return "theorem1";
    case InvariantPath::theorem2: return "theorem2";
    case InvariantPath::surgery: return "surgery";
    case InvariantPath::rt_direct: return "rt_direct";
    case InvariantPath::rosso_jones: return "rosso_jones";
    case InvariantPath::qi: return "qi";
  }
  return "?";
}

KnotTerms knot_terms(const LevelData& ld, const MultiplicityTable& lambda_table, Int p) {
  if (p == 0) throw std::invalid_argument("knot_terms: p must be nonzero");
  KnotTerms out;
  out.p = p;
  const int n = static_cast<int>(ld.alcove.size());
  for (int i1 = 0; i1 < n; ++i1) {
    const Weight& eta1 = ld.alcove[i1];
    for (int i2 = 0; i2 < n; ++i2) {
      const Weight& eta2 = ld.alcove[i2];
      for (const auto& tau : support_taus(ld.rs, ld.k, ld.weyl, lambda_table, p, eta1, eta2)) {
        Weight rep = star_action(ld.rs, ld.k, tau, eta2);
        RatVec arg = to_rat(eta1 - rep) / Rat(p);
        Int m = mbar_eval(ld.rs, lambda_table, arg);
        if (m == 0) continue;
        out.terms.push_back({i1, i2, rep, tau.sign > 0 ? m : -m});
      }
    }
  }
  return out;
}

InvariantValue wlo_torus_knot(const LevelData& ld, const KnotTerms& terms, const Weight& lambda,
                              TorusKnotSpec spec) {
  validate(spec);
  ld.index_of(lambda);
  const Rat qp(spec.q, spec.p);
  std::vector<double> d(ld.alcove.size());
  std::vector<Cplx> th1(ld.alcove.size());
  for (std::size_t i = 0; i < ld.alcove.size(); ++i) {
    d[i] = qdim(ld, ld.alcove[i]);
    th1[i] = theta_pow(ld, ld.alcove[i], qp);
  }
  Cplx acc(0);
  for (const auto& t : terms.terms)
    acc += static_cast<double>(t.m) * d[t.i1] * d[t.i2] * th1[t.i1] *
           theta_pow(ld, t.rep, -qp);
  Cplx s0 = s00(ld);
  return tag(ld, s0 * s0 * acc, InvariantPath::theorem1, lambda, std::nullopt, spec);
}

InvariantValue wlo_torus_knot(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec) {
  validate(spec);
  auto table = weight_multiplicities(ld.rs, lambda);
  return wlo_torus_knot(ld, knot_terms(ld, table, spec.p), lambda, spec);
}

InvariantValue wlo_torus_knot_vertical(const LevelData& ld, const KnotTerms& terms,
                                       const Weight& lambda, const Weight& beta,
                                       TorusKnotSpec spec) {
  validate(spec);
  ld.index_of(lambda);
  const int bi = ld.index_of(beta);
  const Rat qp(spec.q, spec.p);
  std::vector<double> d(ld.alcove.size());
  std::vector<Cplx> th1(ld.alcove.size());
  for (std::size_t i = 0; i < ld.alcove.size(); ++i) {
    d[i] = qdim(ld, ld.alcove[i]);
    th1[i] = theta_pow(ld, ld.alcove[i], qp);
  }
  Cplx acc(0);
  for (const auto& t : terms.terms)
    acc += static_cast<double>(t.m) * d[t.i1] * ld.s(bi, t.i2) * th1[t.i1] *
           theta_pow(ld, t.rep, -qp);
  return tag(ld, s00(ld) * acc, InvariantPath::theorem2, lambda, beta, spec);
}

InvariantValue wlo_torus_knot_vertical(const LevelData& ld, const Weight& lambda,
                                       const Weight& beta, TorusKnotSpec spec) {
  validate(spec);
  auto table = weight_multiplicities(ld.rs, lambda);
  return wlo_torus_knot_vertical(ld, knot_terms(ld, table, spec.p), lambda, beta, spec);
}

InvariantValue rt_s3_via_surgery(const LevelData& ld, const KnotTerms& terms,
                                 const Weight& lambda, TorusKnotSpec spec) {
  validate(spec);
  Cplx acc(0);
  for (std::size_t a = 0; a < ld.alcove.size(); ++a) {
    Cplx s_a0 = ld.s(static_cast<int>(a), 0);
    acc += s_a0 * wlo_torus_knot_vertical(ld, terms, lambda, ld.alcove[a], spec).value;
  }
  return tag(ld, acc, InvariantPath::surgery, lambda, std::nullopt, spec);
}

InvariantValue rt_s3_via_surgery(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec) {
  validate(spec);
  auto table = weight_multiplicities(ld.rs, lambda);
  return rt_s3_via_surgery(ld, knot_terms(ld, table, spec.p), lambda, spec);
}

namespace {

// shared by rt_s3_direct and rt_two_component: the nu = fixed slice
Cplx rt_slice(const LevelData& ld, const KnotTerms& terms, int i2, const Rat& qp) {
  std::vector<double> d(ld.alcove.size());
  std::vector<Cplx> th1(ld.alcove.size());
  for (std::size_t i = 0; i < ld.alcove.size(); ++i) {
    d[i] = qdim(ld, ld.alcove[i]);
    th1[i] = theta_pow(ld, ld.alcove[i], qp);
  }
  Cplx acc(0);
  for (const auto& t : terms.terms) {
    if (t.i2 != i2) continue;
    acc += static_cast<double>(t.m) * d[t.i1] * th1[t.i1] * theta_pow(ld, t.rep, -qp);
  }
  return s00(ld) * acc;
}

}  // namespace

InvariantValue rt_s3_direct(const LevelData& ld, const KnotTerms& terms, const Weight& lambda,
                            TorusKnotSpec spec) {
  validate(spec);
  ld.index_of(lambda);
  const int zero_i = ld.index_of(zero_weight(ld.rs));
  Cplx v = rt_slice(ld, terms, zero_i, Rat(spec.q, spec.p));
  return tag(ld, v, InvariantPath::rt_direct, lambda, std::nullopt, spec);
}

InvariantValue rt_s3_direct(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec) {
  validate(spec);
  auto table = weight_multiplicities(ld.rs, lambda);
  return rt_s3_direct(ld, knot_terms(ld, table, spec.p), lambda, spec);
}

InvariantValue rt_two_component(const LevelData& ld, const Weight& lambda, const Weight& beta,
                                TorusKnotSpec spec) {
  validate(spec);
  ld.index_of(lambda);
  auto [beta_star, beta_bar] = conjugates(ld.rs, beta);
  const int bi = ld.index_of(beta_bar);
  auto table = weight_multiplicities(ld.rs, lambda);
  auto terms = knot_terms(ld, table, spec.p);
  Cplx v = rt_slice(ld, terms, bi, Rat(spec.q, spec.p));
  return tag(ld, v, InvariantPath::rt_direct, lambda, beta, spec);
}

InvariantValue rosso_jones_framed(const LevelData& ld, const Weight& lambda,
                                  TorusKnotSpec spec) {
  validate(spec);
  ld.index_of(lambda);
  TorusKnotSpec eff = spec;
  if (eff.p < 0) {  // orientation reversal: same knot, plethysm needs p >= 1
    eff.p = -eff.p;
    eff.q = -eff.q;
  }
  auto table = weight_multiplicities(ld.rs, lambda);
  const Rat qp(eff.q, eff.p);
  Cplx acc(0);
  for (const auto& mu : plethysm_support(ld.rs, table, eff.p)) {
    Int c = plethysm_cbar(ld.rs, ld.weyl, table, eff.p, mu);
    if (c == 0) continue;
    acc += static_cast<double>(c) * qdim(ld, mu) * theta_pow(ld, mu, qp);
  }
  return tag(ld, s00(ld) * acc, InvariantPath::rosso_jones, lambda, std::nullopt, spec);
}

InvariantValue qi_unframed(const LevelData& ld, const Weight& lambda, TorusKnotSpec spec) {
  validate(spec);
  auto framed = rosso_jones_framed(ld, lambda, spec);
  Cplx twist = theta_pow(ld, lambda, Rat(-spec.p * spec.q));
  Cplx s_l0 = ld.s(ld.index_of(lambda), 0);
  if (std::abs(s_l0) < 1e-300)
    throw std::runtime_error("qi_unframed: vanishing unknot normalization");
  return tag(ld, framed.value * twist / s_l0, InvariantPath::qi, lambda, std::nullopt, spec);
}

InvariantValue wlo_empty(const LevelData& ld) {
  InvariantValue out;
  out.value = Cplx(1.0, 0.0);
  out.path = InvariantPath::theorem1;
  out.label = ld.rs.label;
  out.k = ld.k;
  out.lambda = zero_weight(ld.rs);
  out.knot = TorusKnotSpec{1, 0};
  return out;
}

}  // namespace tkinv
