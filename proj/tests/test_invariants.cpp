#include "doctest.h"

#include <set>

#include "dsdict/invariants.hpp"
#include "fixtures.hpp"

using namespace dsdict;

namespace {

// Generic parameters of one packet: W-translates of the base weight that land in large chambers.
std::vector<HCParameter> packet(const CatalogEntry& e, const Weight& base) {
  std::vector<HCParameter> out;
  for (const auto& w : weyl_group(e.roots)) {
    Weight l = act(w, base);
    if (is_large(e.roots, positive_system(e.roots, l))) out.push_back(make_parameter(e.roots, l));
  }
  return out;
}

}  // namespace

TEST_CASE("sl2 F_pi, AV, WF, Wh") {
  const auto& e = sl2();
  for (long k = -20; k <= 20; ++k) {
    if (k == 0) continue;
    auto lam = make_parameter(e.roots, {Rational(k)});
    CHECK(f_pi(e, lam) == e.element(k > 0 ? "Ftheta" : "Etheta"));
    CHECK(label_display(e, av_of(e, lam)) == (k > 0 ? "K·Eθ*" : "K·Fθ*"));
    auto routes = wf_routes(e, lam, true);
    int expect = k > 0 ? -1 : 1;
    CHECK(routes.explicit_route == expect);
    CHECK(routes.ks_route == expect);
    CHECK(routes.scaling_route == expect);
    CHECK(routes.cone_route == expect);
    CHECK(label_display(e, wf_of(e, lam)) == (k > 0 ? "G(R)·-ER*" : "G(R)·ER*"));
    auto wh = whittaker_of(e, lam);
    CHECK(label_display(e, wh.orbit) == (k > 0 ? "w[-ER*]" : "w[ER*]"));
    CHECK(wh.representative == star(e, real_basis, {{"ER", GaussScalar(k > 0 ? -1 : 1)}}));
  }
}

TEST_CASE("sl2 Whittaker pair of -ER*") {
  const auto& e = sl2();
  auto pair = whittaker_pair(e, star(e, real_basis, {{"ER", gs("-1")}}));
  REQUIRE(pair.borel.size() == 2);
  // The Borel is span(HR, FR); check by rank.
  Matrix m(3, 4);
  std::vector<Matrix> all = pair.borel;
  all.push_back(e.element("HR"));
  all.push_back(e.element("FR"));
  for (std::size_t k = 0; k < 4; ++k) {
    auto c = e.lie.coords(all[k]);
    for (std::size_t r = 0; r < 3; ++r) m(r, k) = c[r];
  }
  CHECK(rank(m) == 2);
  REQUIRE(pair.simple_vectors.size() == 1);
  // The simple vector is c ER; the character is -1 on ER itself.
  auto er = e.lie.coords(e.element("ER"));
  auto v = e.lie.coords(pair.simple_vectors[0]);
  std::size_t k = 0;
  while (er[k].is_zero()) ++k;
  GaussScalar c = v[k] / er[k];
  CHECK(pair.simple_vectors[0] == e.element("ER") * c);
  CHECK(pair.values[0] / c == gs("-1"));
  auto plus = whittaker_pair(e, star(e, real_basis, {{"ER", gs("1")}}));
  auto vp = e.lie.coords(plus.simple_vectors[0]);
  CHECK(plus.values[0] / (vp[k] / er[k]) == gs("1"));
}

TEST_CASE("sp4 invariants over the packet") {
  const auto& e = sp4();
  auto classes = large_classes(e);
  CHECK(classes.size() == 2);
  auto lams = packet(e, e.packet_base);
  REQUIRE(!lams.empty());
  std::set<int> wf_tags;
  std::set<int> av_tags;
  for (const auto& lam : lams) {
    auto ch = positive_system(e.roots, lam.lambda);
    auto cls = class_of(classes, ch);
    REQUIRE(cls);
    Matrix f = f_pi(e, lam);
    CHECK(e.lie.is_regular_nilpotent(f));
    CHECK(e.lie.apply(Involution::theta, f) == -f);
    auto routes = wf_routes(e, lam, true);
    CHECK(routes.explicit_route == routes.ks_route);
    CHECK(routes.cone_route == routes.explicit_route);
    auto wf = wf_of(e, lam);
    wf_tags.insert(wf.tag);
    av_tags.insert(av_of(e, lam).tag);
    CHECK(reconstruct_chamber(e, wf, lam) == *cls);
    auto pair = whittaker_pair(e, whittaker_of(e, lam).representative);
    CHECK(pair.values.size() == 2);
    CHECK(pair.borel.size() == 6);
  }
  CHECK(wf_tags.size() == 2);
  CHECK(av_tags.size() == 2);
}

TEST_CASE("invariants are constant on W_K classes and separate them") {
  for (const auto* ep : {&sl2(), &sp4()}) {
    const auto& e = *ep;
    auto lams = packet(e, e.packet_base);
    auto classes = large_classes(e);
    for (const auto& a : lams)
      for (const auto& b : lams) {
        bool same = class_of(classes, positive_system(e.roots, a.lambda)) ==
                    class_of(classes, positive_system(e.roots, b.lambda));
        CHECK((wf_of(e, a) == wf_of(e, b)) == same);
        CHECK((av_of(e, a) == av_of(e, b)) == same);
        CHECK((whittaker_of(e, a).orbit == whittaker_of(e, b).orbit) == same);
      }
  }
}

TEST_CASE("sl2 reconstruction reads WF backwards") {
  const auto& e = sl2();
  auto classes = large_classes(e);
  auto lam = make_parameter(e.roots, {Rational(3)});
  auto cls = reconstruct_chamber(e, {Side::real_orbit, -1}, lam);
  CHECK(classes[cls].representative == positive_system(e.roots, {Rational(1)}));
  CHECK_THROWS_AS(reconstruct_chamber(e, {Side::k_orbit, -1}, lam), DomainError);
}

TEST_CASE("non-large chambers are rejected") {
  const auto& e = sp4();
  for (const auto& ch : all_chambers(e.roots)) {
    if (is_large(e.roots, ch)) continue;
    CHECK_THROWS_AS(f_pi(e, ch), DomainError);
  }
}
