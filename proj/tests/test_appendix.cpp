#include "doctest.h"

#include "dsdict/appendix.hpp"
#include "fixtures.hpp"

using namespace dsdict;

TEST_CASE("golden identities all pass") {
  auto results = run_golden(sl2());
  CHECK(results.size() >= 40);
  for (const auto& r : results) {
    INFO(r.id << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("tampering with ER breaks exactly the identities that mention it") {
  CatalogEntry e = sl2();
  tamper_named(e, "ER");
  for (const auto& r : run_golden(e)) {
    bool mentions = false;
    for (const auto& rec : e.golden)
      if (rec.at("id") == r.id) mentions = rec.dump().find("\"ER\"") != std::string::npos;
    INFO(r.id << ": " << r.detail);
    if (!mentions) CHECK(r.pass);
    if (r.kind == "bracket" || r.kind == "sigma" || r.kind == "combination") {
      if (mentions) CHECK_FALSE(r.pass);
    }
  }
}
