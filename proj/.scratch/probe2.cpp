#include "oracles.hpp"
#include "tkinv/root_system.hpp"
#include <cstdio>
using namespace tkinv;
int main() {
  for (const char* s : {"A1","A2","A3","B2","B3","C3","D4","G2","F4"}) {
    auto rs = build_root_system(parse_label(s));
    std::printf("%s: building... ", s); std::fflush(stdout);
    std::vector<IntVec> cols;
    for (auto& c : rs.simple_coroots) cols.push_back(c.c);
    std::printf("snf=%lld det=%lld\n", (long long)oracle::lattice_index_smith(cols), (long long)rs.det_index);
    std::fflush(stdout);
  }
  return 0;
}
