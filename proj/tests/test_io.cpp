#include <gtest/gtest.h>

#include "chromasum/fourier.hpp"
#include "chromasum/io.hpp"
#include "support.hpp"

namespace chromasum {
namespace {

using nlohmann::json;

TEST(ElementJson, RoundTripsEveryElement) {
  for (auto [p, r] : testing::small_fields()) {
    auto f = field_make(p, r);
    for (const auto& a : field_elements(f)) {
      json j = element_to_json(a);
      ASSERT_EQ(j["coeffs"].size(), f->r);
      EXPECT_EQ(element_from_json(j, f), a);
      EXPECT_EQ(element_from_json(json::parse(j.dump()), f), a);
    }
  }
}

TEST(ElementJson, IntegersMapThroughPrimeField) {
  auto f = field_make(3, 2);
  EXPECT_EQ(element_from_json(json(7), f), FieldElement::from_int(f, 1));
  EXPECT_EQ(element_from_json(json(-1), f), FieldElement::from_int(f, 2));
  EXPECT_EQ(element_from_json(json::parse(R"({"coeffs":[1]})"), f), FieldElement::one(f));
  EXPECT_EQ(element_to_json(FieldElement::one(f)).dump(), R"({"coeffs":[1,0]})");
}

TEST(ElementJson, MalformedInputIsAParseError) {
  auto f = field_make(3, 2);
  for (const char* text : {R"("two")", R"({"c":[1]})", R"({"coeffs":[1,2,0]})", R"({"coeffs":["x"]})", "[1,2]"}) {
    try {
      element_from_json(json::parse(text), f);
      ADD_FAILURE() << text;
    } catch (const MathError& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << text;
    }
  }
}

TEST(FieldJson, Fields) {
  json j = field_to_json(*field_make(3, 3));
  EXPECT_EQ(j["q"], 27);
  EXPECT_EQ(j["modulus"], json::parse("[1,0,2,1]"));
}

TEST(PolynumberJson, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < testing::kIterations; ++t) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) coeffs.push_back(testing::random_rational(rng));
    RationalPolynumber pi(Rational{}, coeffs);
    EXPECT_EQ(polynumber_from_json(json::parse(polynumber_to_json(pi).dump())), pi);
  }
  EXPECT_EQ(polynumber_to_json(circular_polynumber(1, 1).body).dump(), R"(["1/4","0","-1/4"])");
  EXPECT_EQ(polynumber_from_json(json::parse(R"([1,"-1/2"])")).coeff(1), Rational(-1, 2));
  EXPECT_THROW(polynumber_from_json(json::parse("{}")), MathError);
  EXPECT_THROW(polynumber_from_json(json::parse("[true]")), MathError);
}

TEST(Polynumber2Json, RoundTripRandomGrids) {
  std::mt19937_64 rng(12);
  for (auto [p, r] : testing::small_fields()) {
    auto f = field_make(p, r);
    for (int t = 0; t < 20; ++t) {
      auto pi = random_polynumber(f, rng() % 4, rng);
      json j = polynumber2_to_json(pi);
      EXPECT_EQ(j["rows"], pi.rows());
      EXPECT_EQ(polynumber2_from_json(json::parse(j.dump()), f), pi);
      EXPECT_EQ(polynumber2_from_json(j["grid"], f), pi);
    }
  }
}

TEST(Polynumber2Json, BareIntegerGrid) {
  auto f = field_make(13, 1);
  auto pi = polynumber2_from_json(json::parse("[[1,0,0],[0,0,2]]"), f);
  EXPECT_EQ(pi.at(0, 0), FieldElement::one(f));
  EXPECT_EQ(pi.at(1, 2), FieldElement::from_int(f, 2));
  EXPECT_EQ(pi.rows(), 2u);
  EXPECT_THROW(polynumber2_from_json(json::parse("[1,2]"), f), MathError);
  EXPECT_THROW(polynumber2_from_json(json::parse(R"({"rows":1})"), f), MathError);
  EXPECT_TRUE(polynumber2_from_json(json::parse("[]"), f).is_zero());
}

TEST(CircleJson, CanonicalOrderListing) {
  auto f = field_make(5, 1);
  json j = circle_to_json(circle_enumerate(Color::green, f));
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0].dump(), R"({"x":{"coeffs":[1]},"y":{"coeffs":[1]}})");
  EXPECT_EQ(j[3]["x"]["coeffs"][0], 4);
}

}  // namespace
}  // namespace chromasum
