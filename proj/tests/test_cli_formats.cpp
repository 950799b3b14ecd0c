#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "cayley/immanant.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

TEST_CASE("polynomial json schema") {
  const auto doc = nlohmann::json::parse(to_json(permanent(GroupSpec::parse("c2xc2"))));
  CHECK(doc.size() == 2);
  CHECK(doc["group"] == "c2xc2");
  REQUIRE(doc["terms"].is_array());
  for (const auto& t : doc["terms"]) {
    CHECK(t["exp"].size() == 4);
    CHECK(t["coeff"].is_string());
  }
  // Terms are emitted in lexicographic exponent order.
  std::vector<std::vector<int>> exps;
  for (const auto& t : doc["terms"]) exps.push_back(t["exp"].get<std::vector<int>>());
  CHECK(std::is_sorted(exps.begin(), exps.end()));
}

TEST_CASE("group grammar round trips") {
  for (const char* name : {"c2", "c10", "c2xc4", "c3xc3", "c2xc2xc2", "c6xc2"}) {
    CHECK(GroupSpec::parse(name).to_string() == name);
  }
  for (const char* bad : {"", "x", "c", "c1", "cx2", "c2x", "c2xx3", "c2*c3", " c2", "c2 ", "c-3", "c03x"})
    CHECK_THROWS_AS(GroupSpec::parse(bad), std::invalid_argument);
}

TEST_CASE("verify reports") {
  VerifyOptions opts;
  opts.groups = {GroupSpec::parse("c7"), GroupSpec::parse("c6"), GroupSpec::parse("c3xc3")};
  Verifier v1(opts);
  Verifier v2(opts);
  const auto a = v1.run("all");
  const auto b = v2.run("all");
  CHECK(a.size() == verify_suites().size() * 3);
  CHECK(reports_to_json(a, false) == reports_to_json(b, false));

  const auto doc = nlohmann::json::parse(reports_to_json(a, true));
  for (const auto& r : doc) {
    CHECK(r.contains("theorem"));
    CHECK(r.contains("group"));
    CHECK(r.contains("parameters"));
    CHECK(r.contains("wall_ms"));
    CHECK(r["status"] != "fail");
  }
  for (const auto& r : a) {
    if (r.theorem == "thm15" && r.group == "c6") CHECK(r.status == VerifyStatus::skipped);
    if (r.theorem == "thm15" && r.group == "c7") CHECK(r.status == VerifyStatus::pass);
    if (r.theorem == "prop42" && r.group == "c6") CHECK(r.status == VerifyStatus::pass);
    if (r.status == VerifyStatus::skipped) CHECK_FALSE(r.witness.empty());
  }
  CHECK_FALSE(nlohmann::json::parse(reports_to_json(a, false))[0].contains("wall_ms"));
  CHECK_THROWS_AS(Verifier(opts).run("nope"), std::invalid_argument);
}
