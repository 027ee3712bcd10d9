#pragma once

// Linear Diophantine solving and semilinear subsets of N^X.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stablenorm {

/// A point of N^X. Stored signed so intermediate differences stay exact;
/// every VectorN held by a semilinear set is nonnegative.
using VectorN = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// offset + <generators>; an empty generator list is the singleton {offset}.
struct LinearSet {
  VectorN offset;
  std::vector<VectorN> generators;

  friend auto operator<=>(const LinearSet&, const LinearSet&) = default;
};

class SemilinearSet {
 public:
  /// Throws std::invalid_argument if a component has the wrong dimension or
  /// a negative coordinate.
  explicit SemilinearSet(std::vector<std::string> coordinates,
                         std::vector<LinearSet> components = {});

  static SemilinearSet empty_set(std::vector<std::string> coordinates);
  static SemilinearSet singleton(std::vector<std::string> coordinates, VectorN point);
  /// N^X itself: offset 0 and the unit vectors.
  static SemilinearSet full(std::vector<std::string> coordinates);

  const std::vector<std::string>& coordinates() const { return coordinates_; }
  std::size_t dimension() const { return coordinates_.size(); }
  const std::vector<LinearSet>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }

  /// Number of components plus the total number of generators.
  std::size_t size() const;

  friend bool operator==(const SemilinearSet&, const SemilinearSet&) = default;

 private:
  std::vector<std::string> coordinates_;
  std::vector<LinearSet> components_;
};

/// Integer matrix with one row per target coordinate and one column per
/// source coordinate.
class MonoidLinearMap {
 public:
  MonoidLinearMap(std::vector<std::string> target, std::size_t source_dimension,
                  IntMatrix rows);

  const std::vector<std::string>& target() const { return target_; }
  std::size_t source_dimension() const { return source_dimension_; }
  const IntMatrix& rows() const { return rows_; }

  VectorN apply(std::span<const std::int64_t> v) const;

 private:
  std::vector<std::string> target_;
  std::size_t source_dimension_;
  IntMatrix rows_;
};

SemilinearSet sl_union(const SemilinearSet& s, const SemilinearSet& t);

/// Applies the map to every offset and generator. Throws
/// std::domain_error naming the component when a coordinate comes out negative.
SemilinearSet sl_image(const SemilinearSet& s, const MonoidLinearMap& map);

/// Cartesian product; the coordinates of s come first.
SemilinearSet sl_product(const SemilinearSet& s, const SemilinearSet& t);

/// {k * (1, ..., 1) : k in N}.
SemilinearSet sl_diagonal(std::vector<std::string> coordinates);

/// Minkowski sum {u + v : u in s, v in t}.
SemilinearSet sl_sum(const SemilinearSet& s, const SemilinearSet& t);

/// The submonoid generated by s.
SemilinearSet sl_star(const SemilinearSet& s);

/// Drops redundant generators and components that another component
/// contains. The denoted set is unchanged.
SemilinearSet simplify(const SemilinearSet& s);

struct DiophantineLimits {
  std::size_t max_nodes = 2'000'000;
};

/// Componentwise-minimal nonzero solutions of A x = 0 over N (Contejean-Devie
/// completion). `columns` is the number of unknowns. Throws BudgetExceeded
/// when the search visits more than limits.max_nodes candidates.
std::vector<VectorN> hilbert_basis(const IntMatrix& a, std::size_t columns,
                                   DiophantineLimits limits = {});

struct DiophantineSolution {
  /// Minimal solutions of A x = b.
  std::vector<VectorN> minimal;
  /// Hilbert basis of A x = 0.
  std::vector<VectorN> homogeneous;
};

/// Every solution of A x = b over N is one element of `minimal` plus an
/// N-combination of `homogeneous`.
DiophantineSolution solve_diophantine(const IntMatrix& a, std::size_t columns,
                                      std::span<const std::int64_t> b,
                                      DiophantineLimits limits = {});

/// Throws std::invalid_argument when the coordinate lists differ.
SemilinearSet sl_intersect(const SemilinearSet& s, const SemilinearSet& t,
                           DiophantineLimits limits = {});

bool linear_membership(const LinearSet& l, std::span<const std::int64_t> v);
bool sl_membership(const SemilinearSet& s, std::span<const std::int64_t> v);

/// Least N such that every multiple of gcd(xs) that is at least N is an
/// N-combination of xs. Throws std::invalid_argument if every x is zero.
std::uint64_t frobenius_start(std::span<const std::uint64_t> xs);

}  // namespace stablenorm
