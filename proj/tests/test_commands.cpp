#include "doctest.h"

#include "dsdict/commands.hpp"
#include "dsdict/error.hpp"
#include "fixtures.hpp"

using namespace dsdict;

TEST_CASE("parse_weight") {
  CHECK(parse_weight("3,-1") == Weight{Rational(3), Rational(-1)});
  CHECK(parse_weight(" 3/2 , 1/2") == Weight{parse_rational("3/2"), parse_rational("1/2")});
  CHECK_THROWS_AS(parse_weight("3,,1"), ParseError);
  CHECK_THROWS_AS(parse_weight("x"), ParseError);
}

TEST_CASE("parse_covector_spec") {
  const auto& e = sl2();
  CHECK(parse_covector_spec(e, "-ER*") == star(e, real_basis, {{"ER", GaussScalar(-1)}}));
  CHECK(parse_covector_spec(e, "2Htheta*") == star(e, theta_basis, {{"Htheta", GaussScalar(2)}}));
  CHECK(parse_covector_spec(e, "-ER* + (1/2)HR*") ==
        star(e, real_basis, {{"ER", GaussScalar(-1)}, {"HR", gs("1/2")}}));
  CHECK(real_orbit_label(e, parse_covector_spec(e, "wf:+")).tag == 1);
  CHECK_THROWS_AS(parse_covector_spec(e, "ER* + Htheta*"), ParseError);
  CHECK_THROWS_AS(parse_covector_spec(e, "ER"), ParseError);
  CHECK_THROWS(parse_covector_spec(e, "QQ*"));
}

TEST_CASE("dict on sl2") {
  auto r = cmd_dict(sl2(), {Rational(3)});
  CHECK(r.ok);
  CHECK(r.output["av_label"]["code"] == "av:-");
  CHECK(r.output["wf_label"]["code"] == "wf:-");
  CHECK(r.output["whittaker_label"]["code"] == "wh:-");
  auto m = cmd_dict(sl2(), {Rational(-3)});
  CHECK(m.ok);
  CHECK(m.output["wf_label"]["code"] == "wf:+");
  CHECK(m.output["reconstructed_class"] != r.output["reconstructed_class"]);
}

TEST_CASE("dict on sp4 rejects non-generic parameters without failing") {
  auto r = cmd_dict(sp4(), {Rational(3), Rational(1)});
  CHECK(r.ok);
  CHECK(r.output["is_generic"] == false);
  CHECK(r.output["chamber_class"].is_null());
  CHECK_FALSE(r.output.contains("wf_label"));
  CHECK(cmd_dict(sp4(), {Rational(3), Rational(-1)}).ok);
}

TEST_CASE("cone and qact") {
  auto c = cmd_cone(sl2(), "-ER*", {Rational(5)}, 1, 200);
  CHECK(c.ok);
  CHECK(c.output["meets"] == true);
  auto d = cmd_cone(sl2(), "-ER*", {Rational(-5)}, 1, 200);
  CHECK(d.ok);
  CHECK(d.output["meets"] == false);
  auto q = cmd_qact(sl2(), "wf:+");
  CHECK(q.ok);
  CHECK(q.output["image"]["code"] == "wf:-");
}

TEST_CASE("catalog-validate and torsor") {
  CHECK(cmd_catalog_validate(default_catalog_path()).ok);
  auto bad = cmd_catalog_validate("/nonexistent/catalog.json");
  CHECK_FALSE(bad.ok);
  CHECK(bad.output["valid"] == false);
  CHECK(cmd_torsor(sl2()).ok);
  CHECK(cmd_torsor(sp4()).ok);
}
