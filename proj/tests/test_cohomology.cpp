#include "doctest.h"

#include <random>
#include <set>

#include "dsdict/cohomology.hpp"
#include "dsdict/error.hpp"
#include "fixtures.hpp"

using namespace dsdict;

namespace {

std::vector<std::vector<long>> all_elements(const std::vector<long>& orders) {
  std::vector<std::vector<long>> out{{}};
  for (long n : orders) {
    std::vector<std::vector<long>> next;
    for (const auto& e : out)
      for (long x = 0; x < n; ++x) {
        auto f = e;
        f.push_back(x);
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<long> apply(const FiniteAbelianInvolution& a, const std::vector<long>& x) {
  std::vector<long> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    long v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += a.tau[i][j] * x[j];
    y[i] = ((v % a.orders[i]) + a.orders[i]) % a.orders[i];
  }
  return y;
}

// Counts cocycles and coboundaries by enumeration.
std::size_t brute_h1(const FiniteAbelianInvolution& a) {
  auto elems = all_elements(a.orders);
  std::size_t cocycles = 0;
  std::set<std::vector<long>> coboundaries;
  for (const auto& x : elems) {
    auto t = apply(a, x);
    bool cocycle = true;
    std::vector<long> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((x[i] + t[i]) % a.orders[i] != 0) cocycle = false;
      d[i] = ((x[i] - t[i]) % a.orders[i] + a.orders[i]) % a.orders[i];
    }
    cocycles += cocycle;
    coboundaries.insert(d);
  }
  return cocycles / coboundaries.size();
}

}  // namespace

TEST_CASE("smith normal form") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto f = smith_normal_form(m);
  CHECK(f.rank == 3);
  CHECK(f.S[0][0] == 2);
  CHECK(f.S[1][1] == 6);
  CHECK(f.S[2][2] == 12);
  // U M V = S and U Uinv = 1.
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      mpz_class v = 0, w = 0;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) v += f.U[r][a] * m[a][b] * f.V[b][c];
      for (std::size_t a = 0; a < 3; ++a) w += f.U[r][a] * f.Uinv[a][c];
      CHECK(v == f.S[r][c]);
      CHECK(w == (r == c ? 1 : 0));
    }
}

TEST_CASE("h1 small cases") {
  CHECK(h1({{2}, {{1}}}).order() == 2);
  for (long n : {1, 3, 5, 7, 9}) CHECK(h1({{n}, {{1}}}).order() == 1);
  auto g = h1({{4}, {{-1}}});
  CHECK(g.order() == 2);
  CHECK(g.invariants == std::vector<long>{2});
  CHECK(h1({{4}, {{1}}}).order() == 2);
  CHECK_THROWS_AS(h1({{4}, {{2}}}), ValidationError);
  CHECK_THROWS_AS(h1({{2, 3}, {{1, 1}, {0, 1}}}), ValidationError);
}

TEST_CASE("h1 agrees with enumeration") {
  std::vector<FiniteAbelianInvolution> cases = {
      {{2, 2}, {{0, 1}, {1, 0}}}, {{4, 4}, {{0, 1}, {1, 0}}}, {{2, 4}, {{1, 0}, {0, -1}}},
      {{6}, {{-1}}},              {{6}, {{1}}},               {{8}, {{3}}},
      {{2, 2, 2}, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}},         {{3, 3}, {{0, 1}, {1, 0}}},
      {{12}, {{5}}},              {{4, 2}, {{1, 2}, {0, 1}}},
  };
  for (const auto& a : cases) {
    auto g = h1(a);
    CHECK(g.order() == brute_h1(a));
    long prod = 1;
    for (long s : g.invariants) prod *= s;
    CHECK(static_cast<std::size_t>(prod) == g.order());
    // Listed representatives are cocycles.
    for (const auto& e : g.elements) {
      auto t = apply(a, e);
      for (std::size_t i = 0; i < e.size(); ++i) CHECK((e[i] + t[i]) % a.orders[i] == 0);
    }
  }
}

TEST_CASE("h1 is multiplicative over tau-stable factors") {
  FiniteAbelianInvolution a{{2}, {{1}}}, b{{4}, {{-1}}}, ab{{2, 4}, {{1, 0}, {0, -1}}};
  CHECK(h1(ab).order() == h1(a).order() * h1(b).order());
}

TEST_CASE("Q orders") {
  CHECK(q_order(sl2()) == 2);
  CHECK(q_order(sp4()) == 2);
}

TEST_CASE("sl2 Q action") {
  const auto& e = sl2();
  const Matrix& q = e.q_representatives.at(0);
  for (auto side : {Side::real_orbit, Side::k_orbit, Side::whittaker})
    for (int tag : {1, -1}) {
      OrbitLabel l{side, tag};
      auto moved = q_action(e, q, l);
      CHECK(moved.tag == -tag);
      CHECK(q_action(e, q, moved) == l);
    }
  auto classes = large_classes(e);
  for (long k = -20; k <= 20; ++k) {
    if (k == 0) continue;
    auto lam = make_parameter(e.roots, {Rational(k)});
    Weight moved = q_action(e, q, lam.lambda);
    CHECK(moved == Weight{Rational(-k)});
    auto qlam = make_parameter(e.roots, moved);
    CHECK(q_action(e, q, positive_system(e.roots, lam.lambda)) == positive_system(e.roots, moved));
    CHECK(wf_of(e, qlam) == q_action(e, q, wf_of(e, lam)));
    CHECK(av_of(e, qlam) == q_action(e, q, av_of(e, lam)));
    CHECK(whittaker_of(e, qlam).orbit == q_action(e, q, whittaker_of(e, lam).orbit));
  }
}

TEST_CASE("sp4 Q action is equivariant") {
  const auto& e = sp4();
  const Matrix& q = e.q_representatives.at(0);
  for (const auto& lam : packet_parameters(e)) {
    Weight moved = q_action(e, q, lam.lambda);
    CHECK(q_action(e, q, positive_system(e.roots, lam.lambda)) == positive_system(e.roots, moved));
    auto qlam = make_parameter(e.roots, moved);
    CHECK(wf_of(e, qlam) == q_action(e, q, wf_of(e, lam)));
    CHECK(av_of(e, qlam) == q_action(e, q, av_of(e, lam)));
  }
}

TEST_CASE("torsor counts") {
  for (const auto* ep : {&sl2(), &sp4()}) {
    auto r = verify_torsor_counts(*ep);
    CHECK(r.pass);
    CHECK(r.chambers == 2);
    CHECK(r.wf == 2);
    CHECK(r.av == 2);
    CHECK(r.wh == 2);
    CHECK(r.q == 2);
    CHECK(r.q_simply_transitive);
  }
}
