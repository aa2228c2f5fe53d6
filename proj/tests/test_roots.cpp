#include "doctest.h"

#include <set>

#include "dsdict/invariants.hpp"
#include "fixtures.hpp"

using namespace dsdict;

namespace {

std::set<std::vector<long>> weights_of(const RootDatum& rd, const std::vector<std::size_t>& idx) {
  std::set<std::vector<long>> out;
  for (auto i : idx) out.insert(rd.root(i).weight);
  return out;
}

WeylChamber chamber_at(const RootDatum& rd, Weight w) { return positive_system(rd, make_parameter(rd, std::move(w)).lambda); }

}  // namespace

TEST_CASE("weyl group orders") {
  CHECK(weyl_group(sl2().roots).size() == 2);
  CHECK(weyl_group(sp4().roots).size() == 8);
  CHECK(wk_subgroup(sl2().roots, sl2().wk_extra).size() == 1);
  CHECK(wk_subgroup(sp4().roots, sp4().wk_extra).size() == 2);
}

TEST_CASE("positive systems of sl2") {
  const auto& rd = sl2().roots;
  for (long k : {1, 3, 20}) {
    CHECK(weights_of(rd, positive_roots(chamber_at(rd, {Rational(k)}))) == std::set<std::vector<long>>{{2}});
    CHECK(weights_of(rd, positive_roots(chamber_at(rd, {Rational(-k)}))) == std::set<std::vector<long>>{{-2}});
  }
  CHECK_THROWS(make_parameter(rd, {Rational(0)}));
  CHECK(is_large(rd, chamber_at(rd, {Rational(3)})));
  CHECK(large_classes(sl2()).size() == 2);
}

TEST_CASE("positive systems of sp4") {
  const auto& rd = sp4().roots;
  WeylChamber ch = chamber_at(rd, {Rational(3), Rational(-1)});
  CHECK(is_positive_system(rd, ch));
  CHECK(weights_of(rd, simple_roots(rd, ch)) == std::set<std::vector<long>>{{1, 1}, {0, -2}});
  CHECK(positive_roots(ch).size() == 4);
  CHECK(is_large(rd, ch));
  CHECK_FALSE(is_large(rd, chamber_at(rd, {Rational(3), Rational(1)})));
  CHECK_FALSE(is_regular(rd, {Rational(1), Rational(1)}));
  CHECK(all_chambers(rd).size() == 8);
  CHECK(large_classes(sp4()).size() == 2);
}

TEST_CASE("rho and interior points") {
  for (const auto* ep : {&sl2(), &sp4()}) {
    const auto& rd = ep->roots;
    for (const auto& ch : all_chambers(rd)) {
      CHECK(positive_system(rd, interior_point(rd, ch)) == ch);
      Weight r = rho(rd, ch);
      for (auto s : simple_roots(rd, ch)) CHECK(rd.pairing(r, s) == Rational(1));
    }
  }
}

TEST_CASE("W_K preserves chamber classes and W acts simply transitively") {
  for (const auto* ep : {&sl2(), &sp4()}) {
    const auto& rd = ep->roots;
    auto w = weyl_group(rd);
    auto wk = wk_subgroup(rd, ep->wk_extra);
    auto classes = large_classes(*ep);
    std::set<WeylChamber> images;
    WeylChamber base = all_chambers(rd).front();
    for (const auto& g : w) images.insert(act(g, base));
    CHECK(images.size() == w.size());
    for (const auto& c : classes)
      for (const auto& m : c.members)
        for (const auto& g : wk) CHECK(class_of(classes, act(g, m)) == class_of(classes, m));
    // Compact reflections lie in W_K, noncompact ones do not.
    for (std::size_t i = 0; i < rd.size(); ++i) {
      bool in = std::find(wk.begin(), wk.end(), reflection(rd, i)) != wk.end();
      if (rd.root(i).compact) CHECK(in);
    }
  }
}
