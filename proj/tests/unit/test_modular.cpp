#include "doctest.h"

#include "tkinv/modular.hpp"

#include <cmath>

using namespace tkinv;

namespace {

LevelData make(const char* label, Int k) {
  return build_level_data(build_root_system(parse_label(label)), k);
}

}  // namespace

TEST_CASE("level weight enumeration") {
  auto a1 = build_root_system({Series::A, 1});
  CHECK_THROWS_WITH_AS(level_weights(a1, 2), doctest::Contains("dual Coxeter number 2"),
                       std::invalid_argument);

  // minimal legal level k = g* + 1 = 3
  auto w3 = level_weights(a1, 3);
  REQUIRE(w3.size() == 2);
  CHECK(w3[0] == Weight{0});
  CHECK(w3[1] == Weight{1});

  // strict inequality <lambda+rho, theta> < k
  auto a2 = build_root_system({Series::A, 2});
  CHECK(level_weights(a2, 4).size() == 3);
  CHECK(level_weights(a2, 5).size() == 6);
  for (const auto& w : level_weights(a2, 5)) {
    CHECK(w.dominant());
    CHECK(a2.ip(w + a2.rho, a2.highest_root) < Rat(5));
  }
}

TEST_CASE("A1 s-matrix closed form") {
  for (Int k : {3, 5, 8}) {
    auto ld = make("A1", k);
    for (Int m = 0; m + 1 < k; ++m)
      for (Int n = 0; n + 1 < k; ++n) {
        double expect = std::sqrt(2.0 / k) *
                        std::sin(M_PI * static_cast<double>((m + 1) * (n + 1)) / k);
        auto got = s_entry(ld, Weight{m}, Weight{n});
        CHECK(std::abs(got.real() - expect) < 1e-12);
        CHECK(std::abs(got.imag()) < 1e-12);
      }
  }
}

TEST_CASE("s vanishes on alcove walls") {
  auto ld = make("A1", 4);
  // lambda + rho on the wall <v, theta> = k: lambda = 3 omega
  for (Int n = 0; n < 3; ++n) CHECK(std::abs(s_entry(ld, Weight{3}, Weight{n})) < 1e-12);

  // A2 at k = 5: lambda = (2,1) has <lambda+rho, theta> = 5
  auto ld2 = make("A2", 5);
  Weight lam{2, 1};
  CHECK(ld2.rs.ip(lam + ld2.rs.rho, ld2.rs.highest_root) == Rat(5));
  for (const auto& mu : ld2.alcove) CHECK(std::abs(s_entry(ld2, lam, mu)) < 1e-12);
}

TEST_CASE("c matrix") {
  auto ld = make("A1", 5);
  CHECK(c_entry(ld, Weight{0}, Weight{0}) == 1);
  for (std::size_t i = 0; i < ld.alcove.size(); ++i)
    for (std::size_t j = 0; j < ld.alcove.size(); ++j)
      CHECK(c_entry(ld, ld.alcove[i], ld.alcove[j]) == (i == j ? 1 : 0));  // A1: w0 = -1

  // A2: conjugation swaps the two coordinates
  auto ld2 = make("A2", 4);
  for (const auto& lam : ld2.alcove) {
    Weight swapped{lam.c[1], lam.c[0]};
    CHECK(c_entry(ld2, lam, swapped) == 1);
  }
  CHECK_THROWS_AS(c_entry(ld2, Weight{9, 9}, Weight{0, 0}), std::invalid_argument);
}

TEST_CASE("theta powers") {
  auto ld = make("A1", 6);
  for (auto r : {Rat(1), Rat(-2), Rat(3, 2), Rat(0)})
    CHECK(std::abs(theta_pow(ld, Weight{0}, r) - std::complex<double>(1, 0)) < 1e-15);

  // A1: theta_{n omega} = e^{pi i n(n+2) / (2k)}
  for (Int n = 0; n <= 8; ++n) {
    double t = M_PI * static_cast<double>(n * (n + 2)) / (2.0 * 6.0);
    auto expect = std::complex<double>(std::cos(t), std::sin(t));
    CHECK(std::abs(theta_pow(ld, Weight{n}, Rat(1)) - expect) < 1e-12);
  }

  // inverse powers cancel exactly up to rounding
  for (const auto& lam : ld.alcove) {
    auto prod = theta_pow(ld, lam, Rat(5, 3)) * theta_pow(ld, lam, Rat(-5, 3));
    CHECK(std::abs(prod - std::complex<double>(1, 0)) < 1e-15);
  }
}

TEST_CASE("quantum dimensions") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    for (Int dk = 1; dk <= 3; ++dk) {
      auto rs = build_root_system(parse_label(label));
      auto ld = build_level_data(rs, rs.dual_coxeter + dk);
      CHECK(qdim(ld, Weight(IntVec(rs.rank, 0))) == doctest::Approx(1.0));

      // ratio form d = S_{l0} / S_{00} matches the sine product
      Weight zero(IntVec(rs.rank, 0));
      auto s00 = s_entry(ld, zero, zero);
      double sum_sq = 0;
      for (const auto& lam : ld.alcove) {
        double prod = qdim(ld, lam);
        auto ratio = s_entry(ld, lam, zero) / s00;
        CHECK(std::abs(ratio.real() - prod) < 1e-10);
        CHECK(std::abs(ratio.imag()) < 1e-10);
        sum_sq += prod * prod;
      }
      // sum of d^2 = 1/S00^2
      CHECK(sum_sq == doctest::Approx(1.0 / std::norm(s00)).epsilon(1e-9));
    }
  }
}

TEST_CASE("modular relations S^2 = C and symmetry") {
  for (const char* label : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(parse_label(label));
    for (Int dk : {1, 2, 5}) {
      auto ld = build_level_data(rs, rs.dual_coxeter + dk);
      auto rep = verify_modular(ld);
      CAPTURE(label);
      CHECK(rep.max_s2_minus_c <= 1e-10);
      CHECK(rep.max_asymmetry <= 1e-10);
      CHECK(rep.pass);
    }
  }
  // the exceptional case at the level used by the verify subcommand example
  auto g2 = make("G2", 6);
  auto rep = verify_modular(g2);
  CHECK(rep.max_s2_minus_c <= 1e-9);
  CHECK(rep.max_asymmetry <= 1e-9);

  // (S^2)_{00} = C_{00} = 1 block identity
  auto a1 = make("A1", 5);
  std::complex<double> acc(0);
  for (const auto& lam : a1.alcove)
    acc += s_entry(a1, Weight{0}, lam) * s_entry(a1, lam, Weight{0});
  CHECK(std::abs(acc - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("character / s-matrix bridge") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto rs = build_root_system(parse_label(label));
    Int k = rs.dual_coxeter + 3;
    auto ld = build_level_data(rs, k);
    Weight zero(IntVec(rs.rank, 0));
    for (const auto& lam : ld.alcove) {
      auto table = weight_multiplicities(rs, lam);
      for (const auto& eta : ld.alcove) {
        RatVec b = to_rat(eta + rs.rho) / Rat(k);
        auto chi = character_eval(rs, table, b);
        auto ratio = s_entry(ld, lam, eta) / s_entry(ld, zero, eta);
        CHECK(std::abs(chi - ratio) <= 1e-9);
      }
    }
  }
}
