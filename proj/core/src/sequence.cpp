#include "stablenorm/sequence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stablenorm {

namespace {

std::int64_t as_signed(ExtNat v) { return static_cast<std::int64_t>(v.value()); }

}  // namespace

SemiArithmeticForm::SemiArithmeticForm(std::vector<ExtNat> preperiod, std::size_t period,
                                       std::vector<ResidueTail> tails)
    : preperiod_(std::move(preperiod)), period_(period), tails_(std::move(tails)) {
  if (period_ == 0) {
    throw std::invalid_argument("SemiArithmeticForm: period must be positive");
  }
  if (tails_.size() != period_) {
    throw std::invalid_argument("SemiArithmeticForm: need one tail per residue class");
  }
  const std::size_t start = preperiod_.size();
  for (std::size_t n = 0; n < period_; ++n) {
    const ResidueTail& tail = tails_[n];
    if (tail.infinite) {
      if (tail.difference != 0 || tail.intercept != 0) {
        throw std::invalid_argument("SemiArithmeticForm: infinite class must be canonical");
      }
      continue;
    }
    // first index >= start in class n
    std::size_t first = start + ((n + period_ - start % period_) % period_);
    const auto k = static_cast<std::int64_t>(first / period_);
    if (tail.intercept + static_cast<std::int64_t>(tail.difference) * k < 0) {
      throw std::invalid_argument("SemiArithmeticForm: tail evaluates below zero");
    }
  }
}

SemiArithmeticForm SemiArithmeticForm::constant_infinity() {
  return SemiArithmeticForm({}, 1, {ResidueTail::infinity()});
}

SemiArithmeticForm SemiArithmeticForm::arithmetic(std::uint64_t intercept,
                                                  std::uint64_t difference) {
  return SemiArithmeticForm(
      {}, 1, {ResidueTail::arithmetic(static_cast<std::int64_t>(intercept), difference)});
}

ExtNat SemiArithmeticForm::eval(std::size_t k) const {
  if (k < preperiod_.size()) {
    return preperiod_[k];
  }
  const ResidueTail& tail = tails_[k % period_];
  if (tail.infinite) {
    return ExtNat::infinity();
  }
  const auto steps = static_cast<std::int64_t>(k / period_);
  return ExtNat(static_cast<std::uint64_t>(
      tail.intercept + static_cast<std::int64_t>(tail.difference) * steps));
}

std::vector<ExtNat> SemiArithmeticForm::prefix(std::size_t count) const {
  std::vector<ExtNat> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(eval(k));
  }
  return out;
}

bool SemiArithmeticForm::uniform() const {
  std::optional<std::uint64_t> seen;
  for (const auto& tail : tails_) {
    if (tail.infinite) {
      continue;
    }
    if (seen && *seen != tail.difference) {
      return false;
    }
    seen = tail.difference;
  }
  return true;
}

bool SemiArithmeticForm::eventually_finite() const {
  return std::any_of(tails_.begin(), tails_.end(),
                     [](const ResidueTail& t) { return !t.infinite; });
}

std::optional<std::uint64_t> SemiArithmeticForm::common_difference() const {
  if (!uniform() || !eventually_finite()) {
    return std::nullopt;
  }
  for (const auto& tail : tails_) {
    if (!tail.infinite) {
      return tail.difference;
    }
  }
  return std::nullopt;
}

ExtNat eval(const SemiArithmeticForm& form, std::size_t k) { return form.eval(k); }

std::optional<SemiArithmeticForm> form_from_samples(
    std::size_t preperiod_length, std::size_t period,
    const std::function<ExtNat(std::size_t)>& values) {
  if (period == 0) {
    return std::nullopt;
  }
  std::vector<ExtNat> preperiod;
  preperiod.reserve(preperiod_length);
  for (std::size_t k = 0; k < preperiod_length; ++k) {
    preperiod.push_back(values(k));
  }
  std::vector<ResidueTail> tails(period);
  for (std::size_t n = 0; n < period; ++n) {
    const std::size_t first =
        preperiod_length + ((n + period - preperiod_length % period) % period);
    const ExtNat v0 = values(first);
    const ExtNat v1 = values(first + period);
    if (v0.is_infinite()) {
      if (v1.is_finite()) {
        return std::nullopt;
      }
      tails[n] = ResidueTail::infinity();
      continue;
    }
    if (v1.is_infinite() || v1 < v0) {
      return std::nullopt;
    }
    const std::uint64_t difference = v1.value() - v0.value();
    const auto steps = static_cast<std::int64_t>(first / period);
    tails[n] = ResidueTail::arithmetic(
        as_signed(v0) - static_cast<std::int64_t>(difference) * steps, difference);
  }
  return SemiArithmeticForm(std::move(preperiod), period, std::move(tails));
}

SemiArithmeticForm canonicalize(const SemiArithmeticForm& form) {
  const std::size_t m = form.period();
  const std::size_t t = form.preperiod_length();
  const std::size_t horizon = t + 2 * m;
  auto values = [&form](std::size_t k) { return form.eval(k); };
  for (std::size_t candidate_period = 1; candidate_period <= m; ++candidate_period) {
    if (m % candidate_period != 0) {
      continue;
    }
    for (std::size_t candidate_t = 0; candidate_t <= t; ++candidate_t) {
      auto candidate = form_from_samples(candidate_t, candidate_period, values);
      if (!candidate) {
        continue;
      }
      bool same = true;
      for (std::size_t k = 0; k < horizon && same; ++k) {
        same = candidate->eval(k) == form.eval(k);
      }
      if (same) {
        return *candidate;
      }
    }
  }
  return form;
}

SemiArithmeticForm min_forms(const SemiArithmeticForm& f, const SemiArithmeticForm& g) {
  const std::size_t period = std::lcm(f.period(), g.period());
  const std::size_t base = std::max(f.preperiod_length(), g.preperiod_length());
  std::size_t stable_from = base;
  for (std::size_t n = 0; n < period; ++n) {
    const std::size_t first = base + ((n + period - base % period) % period);
    const ExtNat f0 = f.eval(first);
    const ExtNat g0 = g.eval(first);
    if (f0.is_infinite() || g0.is_infinite()) {
      continue;
    }
    const auto f_slope = as_signed(f.eval(first + period)) - as_signed(f0);
    const auto g_slope = as_signed(g.eval(first + period)) - as_signed(g0);
    if (f_slope == g_slope) {
      continue;
    }
    // the branch with the smaller slope wins once it has caught up
    auto lead_gap = as_signed(f0) - as_signed(g0);
    auto slope_gap = g_slope - f_slope;
    if (f_slope > g_slope) {
      lead_gap = -lead_gap;
      slope_gap = -slope_gap;
    }
    if (lead_gap <= 0) {
      continue;
    }
    const auto steps = (lead_gap + slope_gap - 1) / slope_gap;
    stable_from = std::max(stable_from, first + static_cast<std::size_t>(steps) * period);
  }
  auto pointwise = [&](std::size_t k) { return min(f.eval(k), g.eval(k)); };
  auto merged = form_from_samples(stable_from, period, pointwise);
  if (!merged) {
    throw std::logic_error("min_forms: pointwise minimum did not stabilise");
  }
  return canonicalize(*merged);
}

SemiArithmeticForm shift_form(const SemiArithmeticForm& form, std::size_t offset,
                              std::uint64_t increment) {
  auto shifted = [&](std::size_t k) {
    return k < offset ? ExtNat::infinity() : form.eval(k - offset) + ExtNat(increment);
  };
  auto result = form_from_samples(form.preperiod_length() + offset, form.period(), shifted);
  if (!result) {
    throw std::logic_error("shift_form: shifted tails are not arithmetic");
  }
  return *result;
}

std::optional<FittedForm> fit_semi_arithmetic(std::span<const ExtNat> values,
                                              std::size_t max_period,
                                              std::size_t min_tail_reps) {
  if (max_period == 0) {
    throw std::invalid_argument("fit_semi_arithmetic: max_period must be positive");
  }
  if (values.size() < max_period * (min_tail_reps + 2)) {
    throw std::invalid_argument("fit_semi_arithmetic: window shorter than max_period * (min_tail_reps + 2)");
  }
  const std::size_t len = values.size();

  // Confirming steps of class n past t under period m, or nullopt if that
  // class is not arithmetic there.
  auto class_steps = [&](std::size_t m, std::size_t t,
                         std::size_t n) -> std::optional<std::size_t> {
    const std::size_t first = t + ((n + m - t % m) % m);
    if (first >= len) {
      return std::nullopt;
    }
    std::size_t steps = 0;
    std::optional<std::uint64_t> difference;
    for (std::size_t j = first; j + m < len; j += m) {
      const ExtNat a = values[j];
      const ExtNat b = values[j + m];
      if (a.is_infinite() != b.is_infinite()) {
        return std::nullopt;
      }
      if (a.is_finite()) {
        if (b < a) {
          return std::nullopt;
        }
        const std::uint64_t d = b.value() - a.value();
        if (difference && *difference != d) {
          return std::nullopt;
        }
        difference = d;
      }
      ++steps;
    }
    return steps;
  };

  for (std::size_t m = 1; m <= max_period; ++m) {
    for (std::size_t t = 0; t + m * (min_tail_reps + 1) <= len; ++t) {
      std::size_t fewest = std::numeric_limits<std::size_t>::max();
      bool ok = true;
      for (std::size_t n = 0; n < m && ok; ++n) {
        auto steps = class_steps(m, t, n);
        ok = steps.has_value() && *steps >= min_tail_reps;
        if (ok) {
          fewest = std::min(fewest, *steps);
        }
      }
      if (!ok) {
        continue;
      }
      auto form = form_from_samples(t, m, [&](std::size_t k) { return values[k]; });
      if (!form) {
        continue;
      }
      return FittedForm{*form, fewest, len};
    }
  }
  return std::nullopt;
}

bool check_step_bound(std::span<const ExtNat> values, std::uint64_t step) {
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    if (values[k + 1] > values[k] + ExtNat(step)) {
      return false;
    }
  }
  return true;
}

bool step_bounded(const SemiArithmeticForm& form, std::uint64_t step) {
  const std::size_t m = form.period();
  const std::size_t horizon = form.preperiod_length() + 2 * m + 1;
  for (std::size_t k = 0; k + 1 < horizon; ++k) {
    if (form.eval(k + 1) > form.eval(k) + ExtNat(step)) {
      return false;
    }
  }
  // Past the preperiod, a_{k+1} - a_k along each class is arithmetic; it
  // stays bounded iff that difference does not grow.
  const auto& tails = form.tails();
  for (std::size_t n = 0; n < m; ++n) {
    const ResidueTail& here = tails[n];
    const ResidueTail& next = tails[(n + 1) % m];
    if (here.infinite || next.infinite) {
      continue;
    }
    if (next.difference > here.difference) {
      return false;
    }
  }
  return true;
}

Rational limit_tau(const SemiArithmeticForm& form) {
  if (!form.eventually_finite()) {
    throw std::domain_error("limit_tau: sequence is eventually infinite");
  }
  const auto d = form.common_difference();
  if (!d) {
    throw std::domain_error("limit_tau: sequence is not uniformly semi-arithmetic");
  }
  return Rational(static_cast<std::int64_t>(*d), static_cast<std::int64_t>(form.period()));
}

}  // namespace stablenorm
