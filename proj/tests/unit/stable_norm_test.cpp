#include <gtest/gtest.h>

#include "stablenorm/stable_norm.hpp"

namespace stablenorm {
namespace {

NormQuery query(const std::string& group, std::initializer_list<std::string_view> words) {
  NormQuery q{parse_presentation(group), {}};
  for (auto w : words) {
    q.words.push_back(parse_word(q.presentation, w));
  }
  return q;
}

std::vector<ExtNat> naturals(std::initializer_list<std::uint64_t> xs) {
  return {xs.begin(), xs.end()};
}

TEST(Empirical, Commutator) {
  const auto q = query("free:2", {"a b a^-1 b^-1"});
  EXPECT_EQ(empirical_sequence(q, 6), naturals({0, 2, 4, 4, 6, 6, 8}));
  const auto report = empirical_tau(q);
  ASSERT_TRUE(report.empirical && report.empirical->fitted);
  EXPECT_EQ(report.tau, Rational(1));
  EXPECT_EQ(report.verdict, Verdict::kHeuristic);
  EXPECT_EQ(report.empirical->step_bound, 4U);
}

TEST(Empirical, StandardNorm) {
  const auto q = query("free:2", {"a a b b b"});
  const auto values = empirical_sequence(q, 10);
  for (std::uint64_t k = 0; k <= 10; ++k) {
    EXPECT_EQ(values[k], ExtNat(5 * k));
  }
}

TEST(Empirical, ConjugateFamily) {
  const auto q = query("free:2", {"a a a b a^-1 a^-1 a^-1", "b^-1"});
  const auto report = empirical_tau(q);
  for (std::uint64_t k = 0; k <= 40; ++k) {
    EXPECT_EQ(report.empirical->values[k], ExtNat(2 * std::min<std::uint64_t>(3, k)));
  }
  EXPECT_EQ(report.tau, Rational(0));
}

TEST(Empirical, ThreadCountDoesNotMatter) {
  const auto q = query("coxeter:3", {"s1 s2", "s3 s1 s2"});
  EXPECT_EQ(empirical_sequence(q, 15, 1), empirical_sequence(q, 15, 4));
}

TEST(Symbolic, CoxeterInvolution) {
  const auto report = symbolic_tau(query("coxeter:1", {"s"}));
  ASSERT_TRUE(report.symbolic && report.symbolic->complete());
  EXPECT_EQ(report.symbolic->status, "complete");
  for (std::size_t k = 0; k < 20; ++k) {
    EXPECT_EQ(report.symbolic->envelope->eval(k), ExtNat(k % 2));
  }
  EXPECT_EQ(report.tau, Rational(0));
  EXPECT_FALSE(report.symbolic->sizes.empty());
}

TEST(Symbolic, BudgetExhaustionNamesTheStage) {
  Budgets tiny;
  tiny.product_items = 10;
  const auto report = symbolic_tau(query("free:2", {"a b a^-1 b^-1"}), tiny);
  ASSERT_TRUE(report.symbolic);
  EXPECT_EQ(report.symbolic->status, "budget_exceeded");
  EXPECT_EQ(report.symbolic->stage, "product_grammar");
  EXPECT_FALSE(report.symbolic->complete());
  EXPECT_EQ(exit_code_for(report), 4);
}

TEST(CrossCheck, Certified) {
  struct Case {
    std::string group;
    std::vector<std::string_view> words;
    Rational tau;
  };
  const std::vector<Case> cases{{"coxeter:1", {"s"}, Rational(0)},
                                {"free:1", {"a a"}, Rational(2)},
                                {"free:1", {"a", "a^-1"}, Rational(0)},
                                {"free:2", {"a b"}, Rational(2)}};
  for (const auto& c : cases) {
    NormQuery q{parse_presentation(c.group), {}};
    for (auto w : c.words) {
      q.words.push_back(parse_word(q.presentation, w));
    }
    const auto report = cross_check(q);
    EXPECT_EQ(report.verdict, Verdict::kCertified) << c.group;
    EXPECT_EQ(report.tau, c.tau) << c.group;
    EXPECT_TRUE(report.compared_up_to.has_value());
    EXPECT_EQ(exit_code_for(report), 0);
  }
}

TEST(CrossCheck, FullCoordinatesAgree) {
  Budgets full;
  full.coordinates = ParikhCoordinates::kFull;
  const auto report = cross_check(query("free:1", {"a a"}), {}, full);
  EXPECT_EQ(report.verdict, Verdict::kCertified);
  EXPECT_EQ(report.tau, Rational(2));
}

TEST(Judge, CorruptedEnvelopeIsMismatch) {
  auto report = cross_check(query("coxeter:1", {"s"}));
  ASSERT_EQ(report.verdict, Verdict::kCertified);
  auto& env = *report.symbolic->envelope;
  auto tails = env.tails();
  tails[0].intercept += 1;
  env = SemiArithmeticForm(env.preperiod(), env.period(), tails);
  const auto judged = judge(report, std::nullopt);
  EXPECT_EQ(judged.verdict, Verdict::kMismatch);
  EXPECT_FALSE(judged.tau.has_value());
  EXPECT_EQ(exit_code_for(judged), 3);
}

TEST(Judge, WithoutSymbolicIsHeuristic) {
  auto report = empirical_tau(query("free:2", {"a b a^-1 b^-1"}));
  const auto judged = judge(report, std::nullopt);
  EXPECT_EQ(judged.verdict, Verdict::kHeuristic);
  EXPECT_EQ(judged.tau, Rational(1));
}

TEST(Custom, UsesTheGrammar) {
  const auto p = Presentation::custom(wp_grammar(Presentation::free_group(1)));
  NormQuery q{p, {parse_word(p, "a a")}};
  const auto values = empirical_sequence(q, 8);
  for (std::uint64_t k = 0; k <= 8; ++k) {
    EXPECT_EQ(values[k], ExtNat(2 * k));
  }
}

}  // namespace
}  // namespace stablenorm
