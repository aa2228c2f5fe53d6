#include "doctest.h"

#include "dsdict/triples.hpp"
#include "fixtures.hpp"

using namespace dsdict;

TEST_CASE("sp4 normal theta triple") {
  const auto& e = sp4();
  Weight lam{Rational(3), Rational(-1)};
  auto ch = positive_system(e.roots, lam);
  Matrix f = f_pi(e, ch);
  CHECK(e.lie.is_regular_nilpotent(f));
  auto t = complete_triple_theta(e, f);
  auto r = ks_theta_to_real(e.lie, t);
  auto back = ks_real_to_theta(e.lie, r);
  CHECK(back.E == t.E);
  CHECK(back.F == t.F);
  CHECK(back.H == t.H);
}
