#pragma once

// Brute-force reference implementations and random inputs for the tests.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "stablenorm/cfg.hpp"
#include "stablenorm/envelope.hpp"
#include "stablenorm/ext_nat.hpp"
#include "stablenorm/semilinear.hpp"
#include "stablenorm/word.hpp"

namespace stablenorm::testing {

/// a_k = min_i (a_{k - x_i} + y_i), a_0 = 0, for k = 0..kmax.
std::vector<ExtNat> envelope_dp(std::span<const Point2> generators, std::size_t kmax);

/// Env of a semilinear subset of N^2 by the same recurrence per component.
std::vector<ExtNat> envelope_dp(const SemilinearSet& s, std::size_t kmax);

/// Every member of s with all coordinates <= bound.
std::set<VectorN> points_within(const SemilinearSet& s, std::int64_t bound);

/// Every vector of dimension d with coordinate sum <= total.
std::vector<VectorN> vectors_up_to_sum(std::size_t d, std::int64_t total);

/// Parikh vectors of the words of L(g) of length <= max_length.
std::set<VectorN> parikh_by_enumeration(const Cfg& g, std::size_t max_length);

/// Number of vectors with coordinate sum <= max_length on which s and the
/// enumeration disagree.
std::size_t parikh_discrepancies(const Cfg& g, const SemilinearSet& s, std::size_t max_length);

/// Nonzero solutions of A x = 0 with every x_i <= bound.
std::vector<VectorN> diophantine_solutions(const IntMatrix& a, std::size_t columns,
                                           std::int64_t bound);

/// Uniformly random word of the given length over the presentation's letters.
Word random_word(const Presentation& p, std::size_t length, std::mt19937_64& rng);

/// Random freely reduced word of the given length in a free group.
Word random_reduced_word(const Presentation& p, std::size_t length, std::mt19937_64& rng);

/// 1..max_components components, offsets and up to 3 nonzero generators
/// with coordinates <= max_coordinate.
SemilinearSet random_semilinear(std::size_t dimension, std::int64_t max_coordinate,
                                std::size_t max_components, std::mt19937_64& rng);

std::vector<Point2> random_points(std::size_t max_count, std::uint64_t max_coordinate,
                                  std::mt19937_64& rng);

}  // namespace stablenorm::testing
