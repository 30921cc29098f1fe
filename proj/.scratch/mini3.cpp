#include <boost/rational.hpp>
#include <cstdio>
using Rat = boost::rational<long long>;
int main() {
  long long g = 4;
  bool a = (g == Rat(1) + Rat(3));
  std::printf("a=%d\n", (int)a);
  return 0;
}
