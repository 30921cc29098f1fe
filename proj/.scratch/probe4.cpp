#include "tkinv/modular.hpp"
#include <cstdio>
using namespace tkinv;
int main() {
  auto rs = build_root_system(parse_label("A2"));
  auto ld = build_level_data(rs, 6);
  Weight zero{0,0};
  for (const auto& lam : {Weight{1,0}, Weight{1,1}, Weight{2,0}}) {
    auto table = weight_multiplicities(rs, lam);
    for (const auto& eta : {Weight{0,0}, Weight{1,0}, Weight{0,1}, Weight{1,1}}) {
      RatVec b = to_rat(eta + rs.rho) / Rat(6);
      auto chi = character_eval(rs, table, b);
      auto ratio = s_entry(ld, lam, eta) / s_entry(ld, zero, eta);
      std::printf("lam=%s eta=%s chi=(%.6f,%.6f) ratio=(%.6f,%.6f) |chi-conj(ratio)|=%.2e\n",
        to_string(lam).c_str(), to_string(eta).c_str(),
        chi.real(), chi.imag(), ratio.real(), ratio.imag(), std::abs(chi - std::conj(ratio)));
    }
  }
  return 0;
}
