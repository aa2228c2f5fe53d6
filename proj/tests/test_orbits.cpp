#include "doctest.h"

#include <random>

#include "dsdict/orbits.hpp"
#include "fixtures.hpp"

using namespace dsdict;

TEST_CASE("label codes round trip") {
  for (auto side : {Side::real_orbit, Side::k_orbit, Side::whittaker})
    for (int tag : {1, -1}) {
      OrbitLabel l{side, tag};
      CHECK(parse_label_code(label_code(l)) == l);
    }
  CHECK_THROWS_AS(parse_label_code("xx:+"), ParseError);
  CHECK_THROWS_AS(parse_label_code("wf"), ParseError);
}

TEST_CASE("sl2 real orbit tags") {
  const auto& e = sl2();
  auto er = star(e, real_basis, {{"ER", gs("1")}});
  CHECK(real_orbit_label(e, er).tag == 1);
  CHECK(real_orbit_label(e, -er).tag == -1);
  CHECK(real_orbit_label(e, GaussScalar(Rational(5, 3)) * er).tag == 1);
  auto fr = star(e, real_basis, {{"FR", gs("1")}});
  CHECK(real_orbit_label(e, fr).tag == 1);
  CHECK(label_display(e, real_orbit_label(e, -er)) == "G(R)·-ER*");
  CHECK_THROWS_AS(real_orbit_label(e, star(e, real_basis, {{"HR", gs("1")}})), DomainError);
}

TEST_CASE("sl2 K orbit tags") {
  const auto& e = sl2();
  auto et = star(e, theta_basis, {{"Etheta", gs("1")}});
  auto ft = star(e, theta_basis, {{"Ftheta", gs("1")}});
  CHECK(k_orbit_label(e, et).tag == -1);
  CHECK(k_orbit_label(e, ft).tag == 1);
  CHECK(label_display(e, k_orbit_label(e, et)) == "K·Eθ*");
  // Scaling by K = complexified torus does not change the orbit.
  CHECK(k_orbit_label(e, GaussScalar(Rational(0), Rational(3)) * et).tag == -1);
}

TEST_CASE("sp4 K tags agree between normal form and rank invariant") {
  const auto& e = sp4();
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const auto& ch : all_chambers(e.roots)) {
    if (!is_large(e.roots, ch)) continue;
    Matrix f = f_pi(e, ch);
    int tag = k_orbit_tag(e, f);
    auto key = k_rank_invariant(e, f);
    auto [it, inserted] = seen.emplace(key, tag);
    CHECK(it->second == tag);
    // Conjugating by a torus element leaves the normal form; the tag must not move.
    Matrix t = torus_element(e, 0, GaussScalar(2));
    Matrix g = t * f * inverse(t).value();
    CHECK(k_orbit_tag(e, g) == tag);
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("elliptic invariant separates sl2 discrete series") {
  const auto& e = sl2();
  for (long k = 1; k <= 5; ++k) {
    Matrix p = e.lie.psi_inverse(e.covector_of({Rational(k)}));
    Matrix q = e.lie.psi_inverse(e.covector_of({Rational(-k)}));
    CHECK_FALSE(elliptic_invariant(e, p) == elliptic_invariant(e, q));
    CHECK(elliptic_invariant(e, p).parts.size() == 1);
  }
}

TEST_CASE("sl2 Kostant section of -ER*") {
  const auto& e = sl2();
  auto xi = star(e, real_basis, {{"ER", gs("-1")}});
  auto s = kostant_section(e, xi);
  CHECK(section_contains(s, star(e, theta_basis, {{"Htheta", gs("2")}})));
  CHECK_FALSE(section_contains(s, star(e, theta_basis, {{"Etheta", gs("2")}})));
  // Independent description: -FR/4 + t ER in g.
  Matrix fr4 = e.element("FR") * gs("-1/4");
  for (auto t : {"0", "3", "-1/7"}) {
    CHECK(section_contains(s, e.lie.psi(fr4 + e.element("ER") * gs(t))));
  }
  for (long k = -20; k <= 20; ++k) {
    if (k == 0) continue;
    auto meet = section_meets_orbit(e, s, make_parameter(e.roots, {Rational(k)}));
    CHECK(meet.meets == (k > 0));
    CHECK(section_contains(s, meet.witness));
    // Fiber point is -FR/4 - 4 s ER with s = k^2/64.
    Matrix expect = fr4 + e.element("ER") * GaussScalar(Rational(-k * k, 16));
    CHECK(meet.point == expect);
  }
}

TEST_CASE("sl2 scaling route") {
  const auto& e = sl2();
  for (long k : {1, 2, 3, -1, -4}) {
    Matrix lim = asymptotic_cone_scaling(e, make_parameter(e.roots, {Rational(k)}));
    CHECK(lim == e.element("ER") * GaussScalar(Rational(-k, 8)));
  }
  CHECK_THROWS_AS(asymptotic_cone_scaling(sp4(), make_parameter(sp4().roots, {Rational(3), Rational(-1)})),
                  DomainError);
}

TEST_CASE("exp and torus elements") {
  const auto& e = sp4();
  for (const auto& n : e.real_unipotents) {
    Matrix g = exp_nilpotent(n);
    Matrix back = exp_nilpotent(-n);
    CHECK(g * back == Matrix::identity(g.rows()));
  }
  Matrix t = torus_element(e, 1, GaussScalar(3));
  CHECK(t * torus_element(e, 1, GaussScalar(Rational(1, 3))) == Matrix::identity(t.rows()));
}

TEST_CASE("oracle finds planted conjugates") {
  const auto& e = sl2();
  ConjugacyOracle real(e, GroupSide::real_group, 7);
  Matrix er = e.element("ER");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto [word, g] = real.sample(rng);
    Matrix y = g * er * inverse(g).value();
    auto res = real.find(er, y);
    REQUIRE(res.conjugate);
    CHECK(*res.conjugator * er == y * *res.conjugator);
  }
  ConjugacyOracle k(e, GroupSide::k_group, 3);
  Matrix et = e.element("Etheta");
  CHECK(k.find(et, et * GaussScalar(4)).conjugate);
  CHECK_FALSE(k.find(et, e.element("Ftheta")).conjugate);
}
