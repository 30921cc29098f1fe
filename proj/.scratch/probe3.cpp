#include "oracles.hpp"
#include "tkinv/root_system.hpp"
#include <cstdio>
#include <chrono>
using namespace tkinv;
using Clock = std::chrono::steady_clock;
static double ms(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}
int main() {
  std::vector<CartanLabel> labs = {{Series::A,1},{Series::A,2},{Series::A,3},{Series::B,2},
    {Series::B,3},{Series::C,3},{Series::D,4},{Series::G,2},{Series::F,4}};
  for (auto& l : labs) {
    auto t0 = Clock::now();
    auto rs = build_root_system(l);
    auto t1 = Clock::now();
    Int x = oracle::table_dual_coxeter(l) + oracle::table_weyl_order(l) + oracle::table_dim_algebra(l);
    Weight sum(IntVec(rs.rank, 0));
    for (const auto& r : rs.positive_roots) sum = sum + r;
    auto t2 = Clock::now();
    volatile bool ok = true;
    for (const auto& a : rs.coroots)
      for (const auto& b : rs.coroots) ok = ok && is_integral(rs.ip(a, b));
    auto t3 = Clock::now();
    std::vector<IntVec> cols;
    for (const auto& c : rs.simple_coroots) cols.push_back(c.c);
    Int snf = oracle::lattice_index_smith(cols);
    auto t4 = Clock::now();
    std::printf("%s: build=%.1f sums=%.1f coroots=%.1f snf=%.1f (x=%lld snf=%lld)\n",
                to_string(l).c_str(), ms(t0,t1), ms(t1,t2), ms(t2,t3), ms(t3,t4),
                (long long)x, (long long)snf);
    std::fflush(stdout);
  }
  return 0;
}
