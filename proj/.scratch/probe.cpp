#include "tkinv/root_system.hpp"
#include "tkinv/weyl.hpp"
#include <cstdio>
using namespace tkinv;
int main() {
  for (const char* s : {"A1","A2","A3","B2","B3","C3","D4","G2","F4","E6","E7"}) {
    auto rs = build_root_system(parse_label(s));
    std::printf("%s: R+=%zu g=%lld |W|=%lld idx=%lld den=%lld\n", s,
                rs.positive_roots.size(), (long long)rs.dual_coxeter,
                (long long)rs.weyl_order, (long long)rs.det_index, (long long)rs.gram_den);
    std::fflush(stdout);
  }
  return 0;
}
