#include <gtest/gtest.h>

#include "jetres/io.hpp"

namespace {

using namespace jetres;
using io::json;

TEST(PolynomialJson, RoundTrip) {
  auto f = poly::parse("z^3+y^3z+x^2y^2-123456789012345678901234567890x");
  json j = io::to_json(f);
  EXPECT_EQ(j["vars"], json::parse(R"(["x","y","z"])"));
  EXPECT_EQ(io::polynomial_from_json(j), f);
  EXPECT_EQ(io::polynomial_from_json(io::parse_json(j.dump())), f);
}

TEST(PolynomialJson, JetVariables) {
  auto F = poly::parse("x_0^2y_1^2+z_3");
  EXPECT_EQ(io::polynomial_from_json(io::to_json(F)), F);
}

TEST(PolynomialJson, TextAndIntegers) {
  EXPECT_EQ(io::polynomial_from_json(json("z^3+x")), poly::parse("z^3+x"));
  auto j = json::parse(R"({"vars":["x","y","z"],"terms":[{"c":2,"e":[1,0,0]}]})");
  EXPECT_EQ(io::polynomial_from_json(j), poly::parse("2x"));
}

TEST(PolynomialJson, Errors) {
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"({"terms":[]})")), io::FormatError);
  EXPECT_THROW(io::polynomial_from_json(json::parse(
                   R"({"vars":["x","y"],"terms":[{"c":"1","e":[1,0,0]}]})")),
               io::FormatError);
  EXPECT_THROW(io::polynomial_from_json(json::parse(
                   R"({"vars":["x"],"terms":[{"c":"1","e":[-1]}]})")),
               io::FormatError);
  EXPECT_THROW(io::polynomial_from_json(json::parse(
                   R"({"vars":["x"],"terms":[{"c":"one","e":[1]}]})")),
               io::FormatError);
  EXPECT_THROW(io::polynomial_from_json(json::parse(
                   R"({"vars":["w"],"terms":[{"c":"1","e":[1]}]})")),
               io::FormatError);
}

TEST(FanJson, RoundTrip) {
  auto f = fan::Fan::from_cones({{lattice::e1, lattice::e2, {1, 1, 1}},
                                 {lattice::e2, lattice::e3, {1, 1, 1}},
                                 {lattice::e3, lattice::e1, {1, 1, 1}}});
  auto back = io::fan_from_json(io::to_json(f));
  EXPECT_EQ(back.rays, f.rays);
  EXPECT_EQ(back.cones, f.cones);
}

TEST(FanJson, Errors) {
  EXPECT_THROW(io::fan_from_json(json::parse(R"({"rays":[[1,0,0]],"cones":[[0,1,2]]})")),
               io::FormatError);
  EXPECT_THROW(io::fan_from_json(json::parse(R"({"rays":[[1,0]],"cones":[]})")), io::FormatError);
  EXPECT_THROW(io::fan_from_json(json::parse(R"({"rays":[]})")), io::FormatError);
}

TEST(ParseJson, ReportsOffset) {
  try {
    io::parse_json("{\"a\": 1,, }");
    FAIL() << "expected a format error";
  } catch (const io::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 9"), std::string::npos) << e.what();
  }
}

TEST(JetGraphJson, Schema) {
  auto g = jets::explore(poly::parse("z^3+y^3z+x^2y^2"), jets::Center::parse("yz"), 8);
  json j = io::to_json(g);
  EXPECT_EQ(j["schema_version"], io::schema_version);
  EXPECT_EQ(j["center"], "yz");
  ASSERT_FALSE(j["nodes"].empty());
  const json& root = j["nodes"][0];
  EXPECT_EQ(root["Z"], json::parse(R"([["y",0],["z",0]])"));
  EXPECT_EQ(root["weight"], json::parse("[0,1,1]"));
  bool has_equation = false;
  for (const auto& n : j["nodes"])
    if (!n["E"].empty()) {
      has_equation = true;
      EXPECT_EQ(io::polynomial_from_json(n["E"][0]).size(), 2u);
    }
  EXPECT_TRUE(has_equation);
}

TEST(Dump, TrailingNewline) {
  auto s = io::dump(json{{"a", 1}});
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s.back(), '\n');
}

}  // namespace
