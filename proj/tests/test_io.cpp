#include "signrank/io.hpp"
#include "signrank/serialize.hpp"

#include <gtest/gtest.h>

using namespace signrank;

TEST(ParsePattern, CommentsAndWhitespace) {
  const auto p = parse_pattern("# example\n+ + 0\n\n  # note\n-0+\r\n");
  EXPECT_EQ(p, SignPattern::from_strings({"++0", "-0+"}));
  EXPECT_EQ(format_pattern(p), "++0\n-0+\n");
  EXPECT_EQ(parse_pattern(format_pattern(p)), p);
}

TEST(ParsePattern, Diagnostics) {
  try {
    parse_pattern("++\n+x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
  try {
    parse_pattern("++\n# c\n+++\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseMatrix, Fractions) {
  const auto m = parse_matrix("1 -3/7\n  0   4/2\n");
  EXPECT_EQ(m, (RationalMatrix{{1, Rational(-3, 7)}, {0, 2}}));
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_EQ(format_matrix(m), "1 -3/7\n0 2\n");
}

TEST(ParseMatrix, Diagnostics) {
  try {
    parse_matrix("1 2\n3 1/0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_matrix("1 2\n3\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 a\n"), ParseError);
}

TEST(Json, PatternRendering) {
  EXPECT_EQ(to_json(SignPattern::from_strings({"++0", "-0+"})).dump(), R"(["++0","-0+"])");
}

TEST(Json, DeterministicReports) {
  const auto l = RationalSubspace(RationalMatrix{{1, 0}, {0, 1}, {1, -1}});
  const auto a = to_json(sign_vectors(l)).dump();
  const auto b = to_json(sign_vectors(l)).dump();
  EXPECT_EQ(a, b);
  const auto j = Json::parse(a);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["count"], j["signs"].size());
  // Witnesses are vectors of L with the keyed sign.
  for (const auto& [key, value] : j["witnesses"].items()) {
    RationalVector v;
    for (const auto& x : value) v.push_back(Rational(x.get<std::int64_t>()));
    EXPECT_EQ(sign_of(v).to_string(), key);
  }

  const auto p = SignPattern::from_strings({"+++", "0++"});
  EXPECT_EQ(to_json(min_rank(p)).dump(), to_json(min_rank(p)).dump());
  EXPECT_EQ(to_json(min_rank(p))["exact"], true);
}
