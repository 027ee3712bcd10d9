#include "stablenorm/envelope.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace stablenorm {

MonoidEnvelope envelope_monoid(std::span<const Point2> generators) {
  std::vector<Point2> gens;
  for (const auto& p : generators) {
    if (p.first > 0) {
      gens.push_back(p);
    }
  }
  if (gens.empty()) {
    return {SemiArithmeticForm({ExtNat(0)}, 1, {ResidueTail::infinity()}), std::nullopt};
  }
  // smallest slope y/x, then smallest x
  Point2 best = gens.front();
  for (const auto& p : gens) {
    const auto lhs = p.second * best.first;
    const auto rhs = best.second * p.first;
    if (lhs < rhs || (lhs == rhs && p.first < best.first)) {
      best = p;
    }
  }
  const std::size_t x1 = best.first;
  const std::uint64_t y1 = best.second;
  std::size_t width = 0;
  for (const auto& p : gens) {
    width = std::max<std::size_t>(width, p.first);
  }

  std::vector<ExtNat> a{ExtNat(0)};
  auto extend_to = [&](std::size_t k) {
    while (a.size() <= k) {
      const std::size_t n = a.size();
      ExtNat value = ExtNat::infinity();
      for (const auto& [x, y] : gens) {
        if (x <= n && a[n - x].is_finite()) {
          value = min(value, a[n - x] + ExtNat(y));
        }
      }
      a.push_back(value);
    }
  };
  auto shifts = [&](std::size_t k) {
    extend_to(k + x1);
    return a[k + x1].is_infinite() ? a[k].is_infinite()
                                   : a[k].is_finite() && a[k + x1] == a[k] + ExtNat(y1);
  };

  std::size_t run = 0;
  std::size_t k = 0;
  for (; run < width; ++k) {
    run = shifts(k) ? run + 1 : 0;
  }
  const std::size_t onset = k - width;
  auto form = form_from_samples(onset, x1, [&](std::size_t i) {
    extend_to(i);
    return a[i];
  });
  if (!form) {
    throw std::logic_error("envelope_monoid: certified tail failed to form");
  }
  return {std::move(*form), EnvelopeCertificate{onset, width, x1, y1}};
}

SemiArithmeticForm envelope_semilinear(const SemilinearSet& s) {
  if (s.dimension() != 2) {
    throw std::invalid_argument("envelope_semilinear: needs a subset of N^2");
  }
  std::optional<SemiArithmeticForm> out;
  for (const auto& l : s.components()) {
    std::vector<Point2> gens;
    for (const auto& g : l.generators) {
      gens.emplace_back(static_cast<std::uint64_t>(g[0]), static_cast<std::uint64_t>(g[1]));
    }
    SemiArithmeticForm env = shift_form(envelope_monoid(gens).form,
                                        static_cast<std::size_t>(l.offset[0]),
                                        static_cast<std::uint64_t>(l.offset[1]));
    out = out ? min_forms(*out, env) : std::move(env);
  }
  return canonicalize(out ? *out : SemiArithmeticForm::constant_infinity());
}

}  // namespace stablenorm
