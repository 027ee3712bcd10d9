#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "stablenorm/sequence.hpp"

namespace stablenorm {
namespace {

constexpr ExtNat kInf = ExtNat::infinity();

SemiArithmeticForm commutator_form() {
  return SemiArithmeticForm({ExtNat(0)}, 2,
                            {ResidueTail::arithmetic(2, 2), ResidueTail::arithmetic(2, 2)});
}

std::vector<ExtNat> naturals(std::initializer_list<std::uint64_t> xs) {
  return {xs.begin(), xs.end()};
}

TEST(ExtNat, InfinityAbsorbsAndIsMaximal) {
  EXPECT_EQ(ExtNat(3) + kInf, kInf);
  EXPECT_EQ(kInf + ExtNat(0), kInf);
  EXPECT_LT(ExtNat(1'000'000), kInf);
  EXPECT_EQ(min(kInf, ExtNat(4)), ExtNat(4));
  EXPECT_THROW(kInf.value(), std::domain_error);
  EXPECT_EQ(ExtNat::parse("inf"), kInf);
  EXPECT_EQ(ExtNat::parse("17"), ExtNat(17));
  EXPECT_EQ(kInf.to_string(), "inf");
}

TEST(Rational, ReducedForm) {
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational(4, 3).to_string(), "4/3");
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(commutator_form(), 3), ExtNat(4));
  EXPECT_EQ(eval(SemiArithmeticForm::constant_infinity(), 12), kInf);
  EXPECT_EQ(eval(SemiArithmeticForm::arithmetic(0, 5), 7), ExtNat(35));
}

TEST(Form, RejectsInvalidInput) {
  EXPECT_THROW(SemiArithmeticForm({}, 0, {}), std::invalid_argument);
  EXPECT_THROW(SemiArithmeticForm({}, 2, {ResidueTail::arithmetic(0, 1)}), std::invalid_argument);
  EXPECT_THROW(SemiArithmeticForm({}, 1, {ResidueTail{true, 0, 3}}), std::invalid_argument);
  EXPECT_THROW(SemiArithmeticForm({}, 1, {ResidueTail::arithmetic(-1, 0)}), std::invalid_argument);
}

TEST(MinForms, MinWithConstant) {
  const auto identity = SemiArithmeticForm::arithmetic(0, 1);
  const auto five = SemiArithmeticForm::arithmetic(5, 0);
  const auto m = min_forms(identity, five);
  for (std::size_t k = 0; k < 40; ++k) {
    EXPECT_EQ(m.eval(k), ExtNat(std::min<std::uint64_t>(k, 5)));
  }
  EXPECT_EQ(m.common_difference().value(), 0U);
}

TEST(MinForms, NonUniformInterleaving) {
  // k on even k, infinity on odd k; and 2k on odd k, infinity on even k
  const SemiArithmeticForm even({}, 2, {ResidueTail::arithmetic(0, 2), ResidueTail::infinity()});
  const SemiArithmeticForm odd({}, 2, {ResidueTail::infinity(), ResidueTail::arithmetic(2, 4)});
  const auto m = min_forms(even, odd);
  for (std::size_t k = 0; k < 40; ++k) {
    EXPECT_EQ(m.eval(k), ExtNat(k % 2 == 0 ? k : 2 * k));
  }
  EXPECT_EQ(m.period(), 2U);
  EXPECT_FALSE(m.uniform());
  EXPECT_THROW(limit_tau(m), std::domain_error);
}

SemiArithmeticForm random_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> period(1, 4);
  std::uniform_int_distribution<std::size_t> pre(0, 4);
  std::uniform_int_distribution<std::uint64_t> small(0, 9);
  std::uniform_int_distribution<int> coin(0, 4);
  std::vector<ExtNat> preperiod;
  for (std::size_t i = pre(rng); i > 0; --i) {
    preperiod.push_back(coin(rng) == 0 ? kInf : ExtNat(small(rng)));
  }
  const std::size_t m = period(rng);
  std::vector<ResidueTail> tails;
  for (std::size_t n = 0; n < m; ++n) {
    tails.push_back(coin(rng) == 0 ? ResidueTail::infinity()
                                   : ResidueTail::arithmetic(static_cast<std::int64_t>(small(rng)),
                                                             small(rng) % 4));
  }
  return SemiArithmeticForm(std::move(preperiod), m, std::move(tails));
}

TEST(MinForms, PointwiseOnFuzzedForms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_form(rng);
    const auto g = random_form(rng);
    const auto m = min_forms(f, g);
    const std::size_t horizon = 10 * std::lcm(f.period(), g.period()) + 10;
    for (std::size_t k = 0; k <= horizon; ++k) {
      ASSERT_EQ(m.eval(k), min(f.eval(k), g.eval(k))) << "trial " << trial << " k " << k;
    }
    const auto self = min_forms(f, f);
    for (std::size_t k = 0; k <= horizon; ++k) {
      ASSERT_EQ(self.eval(k), f.eval(k));
    }
  }
}

TEST(Canonicalize, KeepsValuesAndShrinks) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_form(rng);
    const auto c = canonicalize(f);
    EXPECT_LE(c.period(), f.period());
    for (std::size_t k = 0; k < 80; ++k) {
      ASSERT_EQ(c.eval(k), f.eval(k));
    }
  }
  const SemiArithmeticForm padded({ExtNat(0), ExtNat(1)}, 2,
                                  {ResidueTail::arithmetic(0, 2), ResidueTail::arithmetic(1, 2)});
  const auto c = canonicalize(padded);
  EXPECT_EQ(c.period(), 1U);
  EXPECT_EQ(c.preperiod_length(), 0U);
}

TEST(ShiftForm, ShiftsAndRaises) {
  const auto f = SemiArithmeticForm::arithmetic(0, 2);
  const auto s = shift_form(f, 3, 5);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(s.eval(k), kInf);
  }
  for (std::size_t k = 3; k < 30; ++k) {
    EXPECT_EQ(s.eval(k), ExtNat(2 * (k - 3) + 5));
  }
}

TEST(Fit, CommutatorSequence) {
  std::vector<ExtNat> values{ExtNat(0)};
  for (std::uint64_t k = 1; k <= 40; ++k) {
    values.emplace_back(2 * (k / 2) + 2);
  }
  const auto fit = fit_semi_arithmetic(values);
  ASSERT_TRUE(fit);
  EXPECT_EQ(fit->form.preperiod_length(), 1U);
  EXPECT_EQ(fit->form.period(), 2U);
  EXPECT_EQ(fit->form.common_difference().value(), 2U);
  EXPECT_TRUE(fit->form.uniform());
  EXPECT_EQ(limit_tau(fit->form), Rational(1));
  EXPECT_GE(fit->confirming_steps, 3U);
  EXPECT_EQ(fit->window, values.size());
}

TEST(Fit, StandardNormSequence) {
  std::vector<ExtNat> values;
  for (std::uint64_t k = 0; k <= 40; ++k) {
    values.emplace_back(5 * k);
  }
  const auto fit = fit_semi_arithmetic(values);
  ASSERT_TRUE(fit);
  EXPECT_EQ(fit->form.period(), 1U);
  EXPECT_EQ(limit_tau(fit->form), Rational(5));
}

TEST(Fit, ConjugateFamilySequence) {
  std::vector<ExtNat> values;
  for (std::uint64_t k = 0; k <= 40; ++k) {
    values.emplace_back(2 * std::min<std::uint64_t>(3, k));
  }
  const auto fit = fit_semi_arithmetic(values);
  ASSERT_TRUE(fit);
  EXPECT_EQ(fit->form.preperiod_length(), 3U);
  EXPECT_EQ(fit->form.period(), 1U);
  EXPECT_EQ(fit->form.common_difference().value(), 0U);
  EXPECT_EQ(limit_tau(fit->form), Rational(0));
}

TEST(Fit, NoFitIsExplicit) {
  std::vector<ExtNat> values;
  for (std::uint64_t k = 0; k <= 40; ++k) {
    values.emplace_back(k * k);
  }
  EXPECT_FALSE(fit_semi_arithmetic(values).has_value());
  EXPECT_THROW(fit_semi_arithmetic(std::span(values).first(10)), std::invalid_argument);
}

TEST(Fit, ReproducesGeneratedData) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_form(rng);
    const auto values = f.prefix(60);
    const auto fit = fit_semi_arithmetic(values);
    ASSERT_TRUE(fit) << "trial " << trial;
    for (std::size_t k = 0; k < values.size(); ++k) {
      ASSERT_EQ(fit->form.eval(k), values[k]);
    }
    EXPECT_LE(fit->form.period(), f.period());
    // shifting the window shifts the fit
    const auto shifted = fit_semi_arithmetic(std::span(values).subspan(3));
    ASSERT_TRUE(shifted);
    for (std::size_t k = 0; k + 3 < values.size(); ++k) {
      ASSERT_EQ(shifted->form.eval(k), values[k + 3]);
    }
  }
}

TEST(StepBound, Examples) {
  std::vector<ExtNat> commutator{ExtNat(0)};
  for (std::uint64_t k = 1; k <= 20; ++k) {
    commutator.emplace_back(2 * (k / 2) + 2);
  }
  EXPECT_TRUE(check_step_bound(commutator, 4));
  EXPECT_FALSE(check_step_bound(naturals({0, 10}), 4));
  const std::vector<ExtNat> infinite(5, kInf);
  EXPECT_TRUE(check_step_bound(infinite, 0));
}

TEST(StepBound, SymbolicImpliesUniform) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_form(rng);
    if (f.eventually_finite() && step_bounded(f, 9)) {
      bool all_finite_tails = true;
      for (const auto& t : f.tails()) {
        all_finite_tails = all_finite_tails && !t.infinite;
      }
      if (all_finite_tails) {
        EXPECT_TRUE(f.uniform()) << "trial " << trial;
      }
    }
    const auto values = f.prefix(120);
    if (step_bounded(f, 9)) {
      EXPECT_TRUE(check_step_bound(values, 9));
    }
  }
}

TEST(LimitTau, Examples) {
  EXPECT_EQ(limit_tau(commutator_form()), Rational(1));
  EXPECT_EQ(limit_tau(SemiArithmeticForm::arithmetic(6, 0)), Rational(0));
  const SemiArithmeticForm third({}, 3,
                                 {ResidueTail::arithmetic(0, 4), ResidueTail::arithmetic(1, 4),
                                  ResidueTail::arithmetic(3, 4)});
  EXPECT_EQ(limit_tau(third), Rational(4, 3));
  EXPECT_THROW(limit_tau(SemiArithmeticForm::constant_infinity()), std::domain_error);
}

}  // namespace
}  // namespace stablenorm
