#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include <boost/rational.hpp>
using Rat = boost::rational<long long>;
TEST_CASE("forms") {
  long long g = 4;
  CHECK((g == Rat(1) + Rat(3)));      // parenthesized -> plain bool
  CHECK(Rat(g) == Rat(8, 2));         // rational == rational
  Rat a(1, 2), b(1, 2);
  CHECK(a == b);
  CHECK(a == Rat(1, 2));
}
