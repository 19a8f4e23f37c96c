#include <gtest/gtest.h>

#include "scaling/error.hpp"
#include "scaling/io.hpp"

using namespace scaling;

namespace {

std::string messageOf(const std::function<void()>& body) {
  try {
    body();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, DetectKind) {
  EXPECT_EQ(io::detectKind(R"({"p": 3, "vertices": []})"), io::DocumentKind::Polygon);
  EXPECT_EQ(io::detectKind(R"({"p": 3, "support": []})"), io::DocumentKind::Divisor);
  EXPECT_EQ(io::detectKind(R"({"p": 3, "anchor": "0", "kinks": [], "slopes": ["0"]})"),
            io::DocumentKind::CircleFunction);
  EXPECT_EQ(io::detectKind(R"({"domain": ["0", "inf"], "anchor": "0", "kinks": [], "slopes": ["0"]})"),
            io::DocumentKind::Function);
  EXPECT_EQ(io::detectKind(R"({"levels": []})"), io::DocumentKind::Report);
  EXPECT_EQ(io::detectKind(R"({"domain": ["0", "inf"], "anchor": "-inf", "p": 3})"), io::DocumentKind::Function);
  EXPECT_EQ(io::detectKind(R"({"x": 1})"), io::DocumentKind::Unknown);
  EXPECT_THROW(io::detectKind("{\n  \"p\": 3,\n"), ParseError);
  EXPECT_THROW(io::detectKind("[1, 2]"), ParseError);
}

TEST(Io, PolygonRoundTrip) {
  NewtonPolygon a = io::parsePolygon(R"({"p": 3, "vertices": [["0", "0"], ["1/3", "-1/2"], ["1", "-7/2"]]})");
  EXPECT_EQ(io::parsePolygon(io::toJson(a)), a);
  NewtonPolygon zero = io::parsePolygon(R"({"p": 3, "vertices": []})");
  EXPECT_TRUE(zero.isZero());
}

TEST(Io, CircleRoundTrip) {
  CircleFunction f = io::parseCircleFunction(
      R"({"p": 3, "domain": ["1", "3"], "anchor": "0", "kinks": ["2"], "slopes": ["1/3^1", "-1/3^1"]})");
  EXPECT_EQ(io::parseCircleFunction(io::toJson(f)), f);
  CircleFunction shifted = io::parseCircleFunction(
      R"({"p": 3, "domain": ["2", "6"], "anchor": "1/3", "kinks": ["3"], "slopes": ["-1/3", "1/9"]})");
  EXPECT_EQ(shifted, f);
}

TEST(Io, DivisorRoundTrip) {
  Divisor d = io::parseDivisor(R"({"p": 3, "support": [{"point": "1", "coeff": "4/3"}, {"point": "6", "coeff": "-2/9"}]})");
  EXPECT_EQ(degree(d), 0);
  EXPECT_EQ(io::parseDivisor(io::toJson(d)), d);
}

TEST(Io, ReportRoundTripAndCsv) {
  Divisor d(2);
  d.add(1, HpScalar(2, Integer(1)));
  FiltrationReport r = dimR(d, 3);
  FiltrationReport back = io::parseReport(io::toJson(r));
  ASSERT_EQ(back.levels.size(), 4u);
  EXPECT_EQ(back.levels[2].dim, 3);
  EXPECT_EQ(back.limitEstimate, Rational(7, 8));
  EXPECT_EQ(io::toCsv(r), "n,dim,normalized\n0,1,1\n1,1,1/2\n2,3,3/4\n3,7,7/8\n");
}

TEST(Io, ErrorsNameTheLine) {
  std::string bad = messageOf([] { io::parsePolygon("{\n  \"p\": 3,\n  \"vertices\": [[\"0\", \"1/x\"]]\n}"); });
  EXPECT_NE(bad.find("line 3"), std::string::npos) << bad;

  std::string syntax = messageOf([] { io::parsePolygon("{\n  \"p\": 3,\n  \"vertices\": [[\"0\", \"1\"],\n}"); });
  EXPECT_NE(syntax.find("line 4, column"), std::string::npos) << syntax;

  std::string closure = messageOf([] {
    io::parseCircleFunction("{\n\"p\": 3,\n\"anchor\": \"0\",\n\"kinks\": [\"2\"],\n\"slopes\": [\"1/3\", \"1/3\"]\n}");
  });
  EXPECT_NE(closure.find("line"), std::string::npos) << closure;

  EXPECT_THROW(io::parseDivisor(R"({"p": 4, "support": []})"), ParseError);
  EXPECT_THROW(io::parseDivisor(R"({"p": 3, "support": [{"point": "-1", "coeff": "1"}]})"), ParseError);
  EXPECT_THROW(io::parseDivisor(R"({"p": 3, "support": [{"point": "1", "coeff": "1/2"}]})"), ParseError);
  EXPECT_THROW(io::parseDivisor("[]"), ParseError);
}
