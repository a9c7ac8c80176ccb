#include <doctest.h>

#include "sbp/report.hpp"

using namespace sbp;
using nlohmann::json;

TEST_CASE("axiom report schema") {
  auto connected = json::parse(toJson(verifyAxioms(Structure(goldTable(3, 1)))).dump());
  CHECK(connected == json{{"v", 64}, {"k", 8}, {"semibiplane", true}, {"components", 1}, {"failure", nullptr}});

  auto bad = json::parse(toJson(verifyAxioms(Structure(identityTable(Group({6}))))).dump());
  CHECK(bad["semibiplane"] == false);
  CHECK(bad["failure"]["kind"] == "points");
  CHECK(bad["failure"]["ids"].size() == 2);
  CHECK(bad["failure"]["count"].is_number_integer());
}

TEST_CASE("split report schema") {
  Structure s(goldTable(2, 1));
  auto doc = json::parse(toJson(classifySplit(s, components(s))).dump());
  CHECK(doc == json{{"kind", "case-i"}, {"B", {0, 1}}, {"A", {0, 1, 2, 3}}, {"g", nullptr}, {"h", 2}});
  Structure k2(identityTable(Group({2})));
  auto ii = json::parse(toJson(classifySplit(k2, components(k2))).dump());
  CHECK(ii == json{{"kind", "case-ii"}, {"B", {0}}, {"A", {0}}, {"g", 1}, {"h", 1}});
  Structure gold3(goldTable(3, 1));
  CHECK(toJson(classifySplit(gold3, components(gold3)))["kind"] == "connected");
}

TEST_CASE("search result schema") {
  Group z2({2});
  auto result = exhaustiveSearch(z2, z2);
  auto doc = toJson(result, z2, true, false);
  CHECK(doc.dump() ==
        R"({"group":"Z2","normalized":true,"visited":2,"count":2,"found":["0,0","0,1"],"elapsed_ms":0})");
  Group v4({2, 2});
  CHECK(toJson(exhaustiveSearch(v4, v4), v4, true)["group"] == "Z2xZ2");
}

TEST_CASE("verdict schema") {
  auto f = identityTable(Group({6}));
  auto doc = toJson(isSemiPlanar(f), f);
  CHECK(doc["semiplanar"] == false);
  CHECK(doc["witness"].dump() == R"({"a":1,"y":1,"count":6})");
  auto g = goldTable(2, 1);
  CHECK(toJson(isSemiPlanar(g), g)["witness"].is_null());
}
