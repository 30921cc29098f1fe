#include <boost/rational.hpp>
#include <cstdio>
using Rat = boost::rational<long long>;
int main() {
  long long g = 4;
  Rat r(4);
  bool b1 = (r == g);   // member template
  std::printf("b1=%d\n", (int)b1);
  bool b2 = (g == r);   // reversed / converted
  std::printf("b2=%d\n", (int)b2);
  return 0;
}
