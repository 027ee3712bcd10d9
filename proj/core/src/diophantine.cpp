#include <algorithm>
#include <set>
#include <stdexcept>

#include "stablenorm/cfg.hpp"
#include "stablenorm/semilinear.hpp"

namespace stablenorm {

namespace {

bool dominates(const VectorN& big, const VectorN& small) {
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (big[i] < small[i]) {
      return false;
    }
  }
  return true;
}

std::vector<std::int64_t> column(const IntMatrix& a, std::size_t j) {
  std::vector<std::int64_t> out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    out[r] = a[r][j];
  }
  return out;
}

// Contejean-Devie completion over the columns of `a`. Coordinate `capped`
// (if < columns) may not exceed 1. Solutions are sorted into those with the
// capped coordinate at 0 and at 1.
void complete(const IntMatrix& a, std::size_t columns, std::size_t capped,
              DiophantineLimits limits, std::vector<VectorN>& at_zero,
              std::vector<VectorN>& at_one) {
  for (const auto& row : a) {
    if (row.size() != columns) {
      throw std::invalid_argument("Diophantine system: ragged matrix");
    }
  }
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t j = 0; j < columns; ++j) {
    cols.push_back(column(a, j));
  }
  auto dot = [](const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      s += u[i] * v[i];
    }
    return s;
  };

  std::vector<VectorN> found;
  auto dominated = [&](const VectorN& x) {
    return std::any_of(found.begin(), found.end(),
                       [&](const VectorN& s) { return dominates(x, s); });
  };

  // frontier entries carry A x alongside x
  std::set<std::pair<VectorN, std::vector<std::int64_t>>> frontier;
  for (std::size_t j = 0; j < columns; ++j) {
    VectorN e(columns, 0);
    e[j] = 1;
    frontier.emplace(std::move(e), cols[j]);
  }
  std::size_t visited = 0;
  while (!frontier.empty()) {
    std::set<std::pair<VectorN, std::vector<std::int64_t>>> next;
    for (const auto& [x, ax] : frontier) {
      if (std::all_of(ax.begin(), ax.end(), [](std::int64_t v) { return v == 0; })) {
        if (!dominated(x)) {
          found.push_back(x);
        }
        continue;
      }
      for (std::size_t j = 0; j < columns; ++j) {
        if (j == capped && x[j] >= 1) {
          continue;
        }
        if (dot(ax, cols[j]) >= 0) {
          continue;
        }
        VectorN y = x;
        ++y[j];
        if (dominated(y)) {
          continue;
        }
        std::vector<std::int64_t> ay = ax;
        for (std::size_t r = 0; r < ay.size(); ++r) {
          ay[r] += cols[j][r];
        }
        if (next.emplace(std::move(y), std::move(ay)).second && ++visited > limits.max_nodes) {
          throw BudgetExceeded("diophantine", "more than " + std::to_string(limits.max_nodes) +
                                                  " candidates");
        }
      }
    }
    // solutions found at this level may dominate candidates of the next one
    for (auto it = next.begin(); it != next.end();) {
      it = dominated(it->first) ? next.erase(it) : std::next(it);
    }
    frontier = std::move(next);
  }
  for (auto& x : found) {
    if (capped < columns && x[capped] == 1) {
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(capped));
      at_one.push_back(std::move(x));
    } else {
      if (capped < columns) {
        x.erase(x.begin() + static_cast<std::ptrdiff_t>(capped));
      }
      at_zero.push_back(std::move(x));
    }
  }
  std::sort(at_zero.begin(), at_zero.end());
  std::sort(at_one.begin(), at_one.end());
}

}  // namespace

std::vector<VectorN> hilbert_basis(const IntMatrix& a, std::size_t columns,
                                   DiophantineLimits limits) {
  std::vector<VectorN> basis;
  std::vector<VectorN> unused;
  complete(a, columns, columns, limits, basis, unused);
  return basis;
}

DiophantineSolution solve_diophantine(const IntMatrix& a, std::size_t columns,
                                      std::span<const std::int64_t> b,
                                      DiophantineLimits limits) {
  if (b.size() != a.size()) {
    throw std::invalid_argument("solve_diophantine: right side has the wrong length");
  }
  IntMatrix extended = a;
  for (std::size_t r = 0; r < extended.size(); ++r) {
    if (extended[r].size() != columns) {
      throw std::invalid_argument("Diophantine system: ragged matrix");
    }
    extended[r].push_back(-b[r]);
  }
  DiophantineSolution out;
  complete(extended, columns + 1, columns, limits, out.homogeneous, out.minimal);
  return out;
}

}  // namespace stablenorm
