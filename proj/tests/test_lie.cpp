#include "doctest.h"

#include <fstream>

#include "dsdict/error.hpp"
#include "fixtures.hpp"

using namespace dsdict;
using nlohmann::json;

namespace {

json raw_catalog() {
  std::ifstream in(default_catalog_path());
  return json::parse(in);
}

std::string rejection(const json& catalog) {
  try {
    load_catalog_json(catalog);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("catalog loads") {
  CHECK(catalog().size() == 2);
  CHECK(sl2().lie.dim() == 3);
  CHECK(sp4().lie.dim() == 10);
}

TEST_CASE("brackets and involutions on sl2") {
  const auto& e = sl2();
  const auto& lie = e.lie;
  CHECK(lie.bracket(e.element("HR"), e.element("ER")) == e.element("ER") * GaussScalar(2));
  CHECK(lie.bracket(e.element("Etheta"), e.element("Ftheta")) == e.element("Htheta"));
  for (const auto& x : lie.basis()) {
    CHECK(lie.bracket(x, x).is_zero());
    CHECK(x.trace().is_zero());
  }
  CHECK(lie.apply(Involution::theta, e.element("ER")) == e.element("FR"));
  CHECK(lie.apply(Involution::sigma, e.element("Etheta")) == e.element("Ftheta"));
  CHECK(lie.apply(Involution::sigma, e.element("Htheta")) == -e.element("Htheta"));
  // The compact form: fixed by sigma theta.
  const GaussScalar i = GaussScalar::i();
  for (const Matrix& u : {e.element("Etheta") - e.element("Ftheta"), e.element("Htheta") * i, e.element("HR") * i}) {
    CHECK(lie.apply(Involution::sigma_theta, u) == u);
  }
  // sigma is conjugate-linear, theta linear.
  Matrix x = e.element("ER") * gs("2+3i");
  CHECK(lie.apply(Involution::sigma, x) == lie.apply(Involution::sigma, e.element("ER")) * gs("2-3i"));
  CHECK(lie.apply(Involution::theta, x) == lie.apply(Involution::theta, e.element("ER")) * gs("2+3i"));
}

TEST_CASE("involutions are commuting automorphisms") {
  for (const auto* ep : {&sl2(), &sp4()}) {
    const auto& lie = ep->lie;
    for (const auto& x : lie.basis())
      for (const auto& y : lie.basis())
        for (auto inv : {Involution::sigma, Involution::theta}) {
          CHECK(lie.apply(inv, lie.bracket(x, y)) == lie.bracket(lie.apply(inv, x), lie.apply(inv, y)));
        }
    for (const auto& x : lie.basis()) {
      CHECK(lie.apply(Involution::theta, lie.apply(Involution::theta, x)) == x);
      CHECK(lie.apply(Involution::sigma, lie.apply(Involution::sigma, x)) == x);
      CHECK(lie.apply(Involution::sigma, lie.apply(Involution::theta, x)) ==
            lie.apply(Involution::theta, lie.apply(Involution::sigma, x)));
    }
  }
}

TEST_CASE("Killing form against trace forms") {
  // Killing form of sl(n) is 2n Tr, of sp(2n) is (2n + 2) Tr.
  CHECK(sl2().lie.killing_gram() == sl2().lie.trace_gram(GaussScalar(4)));
  CHECK(sp4().lie.killing_gram() == sp4().lie.trace_gram(GaussScalar(6)));
  for (const auto* ep : {&sl2(), &sp4()}) {
    const auto& lie = ep->lie;
    const auto& b = lie.basis();
    for (std::size_t a = 0; a < b.size(); ++a)
      for (std::size_t c = 0; c < b.size(); c += 3) {
        CHECK(lie.killing_form(b[a], b[c]) == lie.killing_form(b[c], b[a]));
        const auto& z = b[(a + c) % b.size()];
        CHECK(lie.killing_form(b[a], lie.bracket(b[c], z)) == lie.killing_form(lie.bracket(b[a], b[c]), z));
      }
  }
  const auto& e = sl2();
  const Matrix& t = e.element("t1");
  CHECK(e.lie.trace_form(GaussScalar(3), t * gs("2"), t * gs("i")) == GaussScalar(-2) * gs("3") * gs("2") * gs("i"));
}

TEST_CASE("psi is invertible and matches the dual basis formulas") {
  for (const auto* ep : {&sl2(), &sp4()}) {
    for (const auto& x : ep->lie.basis()) CHECK(ep->lie.psi_inverse(ep->lie.psi(x)) == x);
  }
  const auto& e = sl2();
  for (long c : {1, 3}) {
    Matrix g = e.lie.trace_gram(GaussScalar(c));
    CHECK(e.lie.psi_with(g, e.element("HR")).coords ==
          star(e, real_basis, {{"HR", GaussScalar(2 * c)}}).coords);
    CHECK(e.lie.psi_with(g, e.element("Etheta")).coords ==
          star(e, theta_basis, {{"Ftheta", GaussScalar(c)}}).coords);
  }
}

TEST_CASE("regular nilpotents") {
  const auto& e = sl2();
  CHECK(e.lie.is_regular_nilpotent(e.element("ER")));
  CHECK_FALSE(e.lie.is_regular_nilpotent(Matrix::square(2)));
  CHECK_FALSE(e.lie.is_regular_nilpotent(e.element("Etheta") + e.element("Ftheta")));
  CHECK(e.lie.is_regular_nilpotent(sp4().real_representative) == false);
  CHECK(sp4().lie.is_regular_nilpotent(sp4().real_representative));
  CHECK_FALSE(sp4().lie.is_regular_nilpotent(sp4().element("X[1,-1]")));
}

TEST_CASE("corrupted catalogs are rejected") {
  SUBCASE("theta not an involution") {
    json c = raw_catalog();
    c["entries"][0]["theta"][2][2] = "-2";
    CHECK(rejection(c).find("theta^2 = 1") != std::string::npos);
  }
  SUBCASE("grading not multiplicative") {
    json c = raw_catalog();
    for (auto& r : c["entries"][1]["roots"]) {
      auto w = r["weight"].get<std::vector<long>>();
      if (w == std::vector<long>{2, 0} || w == std::vector<long>{-2, 0}) r["grade"] = "compact";
    }
    CHECK(rejection(c).find("not multiplicative") != std::string::npos);
  }
  SUBCASE("bracket relation broken") {
    json c = raw_catalog();
    c["entries"][0]["roots"][0]["coroot"][0] = "2";
    CHECK_FALSE(rejection(c).empty());
  }
  SUBCASE("sigma disagrees with conjugation") {
    json c = raw_catalog();
    c["entries"][0]["matrix_sigma"] = "transpose";
    CHECK(rejection(c).find("matrix_sigma") != std::string::npos);
  }
  SUBCASE("malformed scalar") {
    json c = raw_catalog();
    c["entries"][0]["basis"][0]["matrix"][0][0] = "1/0";
    CHECK_THROWS(load_catalog_json(c));
  }
}
