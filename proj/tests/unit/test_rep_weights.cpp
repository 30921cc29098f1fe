#include "doctest.h"
#include "oracles.hpp"

#include "tkinv/rep_weights.hpp"
#include "tkinv/weyl.hpp"

#include <cmath>
#include <random>

using namespace tkinv;

TEST_CASE("trivial and fundamental tables") {
  auto a1 = build_root_system({Series::A, 1});

  auto t0 = weight_multiplicities(a1, Weight{0});
  CHECK(t0.entries.size() == 1);
  CHECK(t0.at(Weight{0}) == 1);
  CHECK(t0.dim == 1);

  auto tf = weight_multiplicities(a1, Weight{1});
  CHECK(tf.dim == 2);
  CHECK(tf.at(Weight{1}) == 1);
  CHECK(tf.at(Weight{-1}) == 1);
  CHECK(tf.at(Weight{0}) == 0);

  CHECK_THROWS_AS(weight_multiplicities(a1, Weight{-1}), std::invalid_argument);
}

TEST_CASE("A2 adjoint against the fourier oracle") {
  auto a2 = build_root_system({Series::A, 2});
  Weight theta = a2.highest_root;
  auto t = weight_multiplicities(a2, theta);
  CHECK(t.dim == 8);
  CHECK(t.at(Weight{0, 0}) == 2);
  int root_weights = 0;
  for (const auto& r : a2.all_roots) {
    CHECK(t.at(r) == 1);
    ++root_weights;
  }
  CHECK(root_weights == 6);

  auto oracle_t = oracle::multiplicities_fourier(a2, theta);
  CHECK(oracle_t.size() == t.entries.size());
  for (const auto& [mu, m] : oracle_t) CHECK(t.at(mu) == m);
}

TEST_CASE("freudenthal vs fourier oracle, rank <= 2, dim <= 200") {
  std::vector<std::pair<CartanLabel, std::vector<Weight>>> cases = {
      {{Series::A, 1}, {Weight{4}, Weight{7}}},
      {{Series::A, 2}, {Weight{1, 1}, Weight{2, 1}, Weight{3, 0}}},
      {{Series::B, 2}, {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 0}}},
      {{Series::G, 2}, {Weight{1, 0}, Weight{0, 1}}},
  };
  for (const auto& [label, lams] : cases) {
    auto rs = build_root_system(label);
    for (const auto& lam : lams) {
      REQUIRE(dimension(rs, lam) <= 200);
      auto t = weight_multiplicities(rs, lam);
      auto o = oracle::multiplicities_fourier(rs, lam);
      const std::string ctx = to_string(label) + " " + to_string(lam);
      CAPTURE(ctx);
      CHECK(o.size() == t.entries.size());
      for (const auto& [mu, m] : o) CHECK(t.at(mu) == m);
    }
  }
}

TEST_CASE("dimension formula") {
  auto a1 = build_root_system({Series::A, 1});
  CHECK(dimension(a1, Weight{0}) == 1);
  for (Int n = 1; n <= 9; ++n) CHECK(dimension(a1, Weight{n}) == n + 1);

  auto g2 = build_root_system({Series::G, 2});
  for (const auto& lam : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}}) {
    auto t = weight_multiplicities(g2, lam);
    CHECK(t.dim == dimension(g2, lam));
  }

  auto a2 = build_root_system({Series::A, 2});
  CHECK(dimension(a2, Weight{1, 0}) == 3);
  CHECK(dimension(a2, a2.highest_root) == 8);
}

TEST_CASE("multiplicities are weyl invariant") {
  for (auto label : {CartanLabel{Series::A, 2}, CartanLabel{Series::B, 2}}) {
    auto rs = build_root_system(label);
    auto wg = weyl_group(rs);
    for (const auto& lam : {Weight{2, 1}, Weight{1, 1}}) {
      auto t = weight_multiplicities(rs, lam);
      for (const auto& [mu, m] : t.entries)
        for (const auto& w : wg) CHECK(t.at(w.apply(mu)) == m);
    }
  }
}

TEST_CASE("character evaluation") {
  auto a1 = build_root_system({Series::A, 1});
  auto tf = weight_multiplicities(a1, Weight{1});

  // b = 0 gives the dimension
  CHECK(character_eval(a1, tf, RatVec{Rat(0)}).real() == doctest::Approx(2.0));

  // b = t*alpha: chi = e^{2 pi i t} + e^{-2 pi i t} = 2 cos(2 pi t)
  for (auto t : {Rat(1, 3), Rat(1, 5), Rat(2, 7)}) {
    RatVec b = {t * Rat(2)};  // alpha = 2 omega
    auto v = character_eval(a1, tf, b);
    CHECK(v.real() == doctest::Approx(2.0 * std::cos(2.0 * M_PI * to_double(t))).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
  }

  // periodicity under shifts x with <mu, x> integral for all weights mu:
  // coroot-lattice translates have exactly that pairing property
  auto a2 = build_root_system({Series::A, 2});
  auto t2 = weight_multiplicities(a2, Weight{1, 1});
  RatVec b = {Rat(1, 7), Rat(2, 5)};
  for (const auto& gamma : a2.simple_coroots) {
    RatVec shifted = b + to_rat(gamma);
    auto v1 = character_eval(a2, t2, b);
    auto v2 = character_eval(a2, t2, shifted);
    CHECK(std::abs(v1 - v2) < 1e-12);
  }
}

TEST_CASE("mbar vanishes off the lattice") {
  auto a1 = build_root_system({Series::A, 1});
  auto tf = weight_multiplicities(a1, Weight{1});
  CHECK(mbar_eval(a1, tf, RatVec{Rat(1)}) == 1);
  CHECK(mbar_eval(a1, tf, RatVec{Rat(1, 2)}) == 0);
  CHECK(mbar_eval(a1, tf, RatVec{Rat(100)}) == 0);  // outside the support ball
}

TEST_CASE("adams decomposition") {
  auto a1 = build_root_system({Series::A, 1});

  // p = 1 is the identity operation
  auto d1 = adams_decompose(a1, Weight{3}, 1);
  REQUIRE(d1.size() == 1);
  CHECK(d1.at(Weight{3}) == 1);

  // A1 fundamental, p = 2: chi(2b) = chi_{2w} - chi_0
  auto d2 = adams_decompose(a1, Weight{1}, 2);
  REQUIRE(d2.size() == 2);
  CHECK(d2.at(Weight{2}) == 1);
  CHECK(d2.at(Weight{0}) == -1);

  CHECK_THROWS_AS(adams_decompose(a1, Weight{1}, 0), std::invalid_argument);

  // dimension identity sum_mu c_mu dim(mu) = dim(lambda), and the character
  // identity at random rational points
  std::mt19937 rng(2024);
  std::uniform_int_distribution<Int> numer(-20, 20);
  for (auto label : {CartanLabel{Series::A, 1}, CartanLabel{Series::A, 2},
                     CartanLabel{Series::B, 2}, CartanLabel{Series::G, 2}}) {
    auto rs = build_root_system(label);
    std::vector<Weight> lams;
    if (rs.rank == 1)
      lams = {Weight{2}, Weight{5}};
    else
      lams = {Weight{1, 0}, Weight{1, 1}};
    for (const auto& lam : lams) {
      for (Int p : {2, 3}) {
        auto dec = adams_decompose(rs, lam, p);
        Int dsum = 0;
        for (const auto& [mu, c] : dec) dsum += c * dimension(rs, mu);
        CHECK(dsum == dimension(rs, lam));

        auto tl = weight_multiplicities(rs, lam);
        for (int trial = 0; trial < 20; ++trial) {
          RatVec b(rs.rank);
          for (auto& x : b) x = Rat(numer(rng), 23);
          auto lhs = character_eval(rs, tl, Rat(p) * b);
          std::complex<double> rhs(0);
          for (const auto& [mu, c] : dec)
            rhs += static_cast<double>(c) * character_eval(rs, mu, b);
          CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
        }
      }
    }
  }
}
