#pragma once

// Lower envelopes of semilinear subsets of N^2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "stablenorm/semilinear.hpp"
#include "stablenorm/sequence.hpp"

namespace stablenorm {

using Point2 = std::pair<std::uint64_t, std::uint64_t>;

/// a_{k+period} = a_k + difference holds for `window` consecutive k starting
/// at `onset`, and therefore for every k >= onset.
struct EnvelopeCertificate {
  std::size_t onset = 0;
  std::size_t window = 0;
  std::size_t period = 0;
  std::uint64_t difference = 0;
};

struct MonoidEnvelope {
  SemiArithmeticForm form;
  /// Absent when no generator has a positive first coordinate.
  std::optional<EnvelopeCertificate> certificate;
};

/// Env of the submonoid generated by `generators`.
MonoidEnvelope envelope_monoid(std::span<const Point2> generators);

/// Env of a semilinear set with coordinates (k, value). Throws
/// std::invalid_argument unless the dimension is 2.
SemiArithmeticForm envelope_semilinear(const SemilinearSet& s);

}  // namespace stablenorm
