#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include <boost/rational.hpp>
using Rat = boost::rational<long long>;
TEST_CASE("mini") {
  long long g = 4;
  CHECK(g == Rat(1) + Rat(3));
  CHECK(g == Rat(8, 2));
}
