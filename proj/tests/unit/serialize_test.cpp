#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stablenorm/serialize.hpp"

namespace stablenorm {
namespace {

TEST(FormJson, RoundTrip) {
  const SemiArithmeticForm f({ExtNat(0), ExtNat::infinity()}, 2,
                             {ResidueTail::arithmetic(3, 2), ResidueTail::infinity()});
  const auto text = form_to_json(f);
  EXPECT_NE(text.find("\"inf\""), std::string::npos);
  EXPECT_EQ(form_from_json(text), f);
  EXPECT_THROW(form_from_json("{\"period\": 0}"), ParseError);
  EXPECT_THROW(form_from_json("not json"), ParseError);
}

TEST(SemilinearJson, RoundTrip) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_semilinear(3, 5, 3, rng);
    EXPECT_EQ(semilinear_from_json(semilinear_to_json(s)), s);
  }
}

TEST(ReportJson, ParsesBack) {
  NormQuery q{parse_presentation("coxeter:1"), {}};
  q.words.push_back(parse_word(q.presentation, "s"));
  const auto report = cross_check(q);
  const auto text = report_to_json(report);
  const auto summary = parse_report(text);
  EXPECT_EQ(summary.schema, kReportSchema);
  EXPECT_EQ(summary.verdict, "certified");
  EXPECT_EQ(summary.tau, "0");
  EXPECT_EQ(summary.symbolic_status, "complete");
  EXPECT_EQ(summary.values, report.empirical->values);
  EXPECT_THROW(parse_report("{\"schema\": 99}"), ParseError);
}

TEST(Csv, HeaderAndRows) {
  const std::vector<ExtNat> values{ExtNat(0), ExtNat(2), ExtNat::infinity()};
  EXPECT_EQ(values_to_csv(values), "k,norm\n0,0\n1,2\n2,inf\n");
}

TEST(Tau, Strings) {
  EXPECT_EQ(tau_to_string(Rational(4, 3)), "4/3");
  EXPECT_EQ(tau_to_string(Rational(2)), "2");
  EXPECT_EQ(tau_to_string(std::nullopt), "undetermined");
}

}  // namespace
}  // namespace stablenorm
