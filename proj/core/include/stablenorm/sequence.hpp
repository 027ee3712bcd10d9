#pragma once

// Exact calculus of semi-arithmetic sequences over N u {inf}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "stablenorm/ext_nat.hpp"

namespace stablenorm {

/// Eventual behaviour of one residue class n modulo the period m:
/// a_{mk+n} = intercept + difference * k for every mk+n past the preperiod.
/// An infinite class is constantly infinity and carries difference 0.
struct ResidueTail {
  bool infinite = false;
  std::int64_t intercept = 0;
  std::uint64_t difference = 0;

  static ResidueTail infinity() { return ResidueTail{true, 0, 0}; }
  static ResidueTail arithmetic(std::int64_t intercept, std::uint64_t difference) {
    return ResidueTail{false, intercept, difference};
  }

  friend bool operator==(const ResidueTail&, const ResidueTail&) = default;
};

/// Closed form of a semi-arithmetic sequence: explicit values a_0..a_{T-1}
/// followed by one arithmetic tail per residue class modulo the period.
class SemiArithmeticForm {
 public:
  /// Throws std::invalid_argument if period == 0, tails.size() != period, an
  /// infinite tail has nonzero difference, or a finite tail would evaluate
  /// to a negative value past the preperiod.
  SemiArithmeticForm(std::vector<ExtNat> preperiod, std::size_t period,
                     std::vector<ResidueTail> tails);

  static SemiArithmeticForm constant_infinity();
  static SemiArithmeticForm arithmetic(std::uint64_t intercept, std::uint64_t difference);

  const std::vector<ExtNat>& preperiod() const { return preperiod_; }
  std::size_t preperiod_length() const { return preperiod_.size(); }
  std::size_t period() const { return period_; }
  const std::vector<ResidueTail>& tails() const { return tails_; }

  ExtNat eval(std::size_t k) const;
  std::vector<ExtNat> prefix(std::size_t count) const;

  /// True iff every finite residue class shares one difference.
  bool uniform() const;
  /// True iff at least one residue class is finite.
  bool eventually_finite() const;
  /// The shared difference of a uniform, eventually finite form.
  std::optional<std::uint64_t> common_difference() const;

  friend bool operator==(const SemiArithmeticForm&, const SemiArithmeticForm&) = default;

 private:
  std::vector<ExtNat> preperiod_;
  std::size_t period_ = 1;
  std::vector<ResidueTail> tails_;
};

ExtNat eval(const SemiArithmeticForm& form, std::size_t k);

/// Builds the form with preperiod length T and period m whose values are
/// taken from `values`; each tail is read off the first two indices of its
/// class at or past T. Returns nullopt when those samples cannot start a
/// valid tail (negative difference or infinity followed by a finite value).
std::optional<SemiArithmeticForm> form_from_samples(
    std::size_t preperiod_length, std::size_t period,
    const std::function<ExtNat(std::size_t)>& values);

/// The equivalent form with the lexicographically smallest (period,
/// preperiod length).
SemiArithmeticForm canonicalize(const SemiArithmeticForm& form);

/// Pointwise minimum; the period of the result divides lcm of the periods.
SemiArithmeticForm min_forms(const SemiArithmeticForm& f, const SemiArithmeticForm& g);

/// The sequence shifted right by `offset` places (filled with infinity) and
/// increased by `increment`: b_k = inf for k < offset, a_{k-offset} + increment after.
SemiArithmeticForm shift_form(const SemiArithmeticForm& form, std::size_t offset,
                              std::uint64_t increment);

struct FittedForm {
  SemiArithmeticForm form;
  /// Smallest number of confirming steps observed over all residue classes.
  std::size_t confirming_steps = 0;
  /// Number of observed values the fit was made on.
  std::size_t window = 0;
};

/// Smallest (period, preperiod) lexicographically such that every residue
/// class past the preperiod is arithmetic (nonnegative difference, or all
/// infinite) over the observed window with at least `min_tail_reps`
/// confirming steps. nullopt is the explicit "no fit" outcome.
/// Throws std::invalid_argument when values.size() < max_period * (min_tail_reps + 2).
std::optional<FittedForm> fit_semi_arithmetic(std::span<const ExtNat> values,
                                              std::size_t max_period = 8,
                                              std::size_t min_tail_reps = 3);

/// True iff a_{k+1} <= a_k + D for every consecutive observed pair.
bool check_step_bound(std::span<const ExtNat> values, std::uint64_t step);

/// Symbolic version of check_step_bound over the whole infinite sequence.
bool step_bounded(const SemiArithmeticForm& form, std::uint64_t step);

/// d/m for a uniform, eventually finite form. Throws std::domain_error otherwise.
Rational limit_tau(const SemiArithmeticForm& form);

}  // namespace stablenorm
