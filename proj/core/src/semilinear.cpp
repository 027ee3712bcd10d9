#include "stablenorm/semilinear.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stablenorm {

namespace {

bool is_zero(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

VectorN add(const VectorN& u, const VectorN& v) {
  VectorN out = u;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += v[i];
  }
  return out;
}

// Whether t is an N-combination of gens (all nonnegative).
class MonoidSearch {
 public:
  explicit MonoidSearch(const std::vector<VectorN>& gens, std::span<const std::int64_t> target)
      : target_(target.begin(), target.end()) {
    for (const auto& g : gens) {
      if (is_zero(g)) {
        continue;
      }
      bool fits = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        fits = fits && g[i] <= target_[i];
      }
      if (fits) {
        gens_.push_back(&g);
      }
    }
  }

  bool run() { return search(target_, 0); }

 private:
  bool search(const VectorN& t, std::size_t i) {
    if (is_zero(t)) {
      return true;
    }
    if (i == gens_.size()) {
      return false;
    }
    auto key = std::make_pair(t, i);
    if (failed_.contains(key)) {
      return false;
    }
    const VectorN& g = *gens_[i];
    std::int64_t most = INT64_MAX;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] > 0) {
        most = std::min(most, t[j] / g[j]);
      }
    }
    for (std::int64_t c = most; c >= 0; --c) {
      VectorN rest = t;
      for (std::size_t j = 0; j < g.size(); ++j) {
        rest[j] -= c * g[j];
      }
      if (search(rest, i + 1)) {
        return true;
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  VectorN target_;
  std::vector<const VectorN*> gens_;
  std::set<std::pair<VectorN, std::size_t>> failed_;
};

bool in_monoid(const std::vector<VectorN>& gens, std::span<const std::int64_t> t) {
  if (std::any_of(t.begin(), t.end(), [](std::int64_t x) { return x < 0; })) {
    return false;
  }
  return MonoidSearch(gens, t).run();
}

bool contains(const LinearSet& big, const LinearSet& small) {
  if (!linear_membership(big, small.offset)) {
    return false;
  }
  return std::all_of(small.generators.begin(), small.generators.end(),
                     [&](const VectorN& p) { return in_monoid(big.generators, p); });
}

LinearSet tidy(LinearSet l) {
  auto& gens = l.generators;
  std::erase_if(gens, [](const VectorN& g) { return is_zero(g); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // drop generators that the others already produce, largest first
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<VectorN> others = gens;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    if (in_monoid(others, gens[i])) {
      gens = std::move(others);
    }
  }
  return l;
}

// v + <P> together with (v + q) + <P, q> is v + <P, q>.
bool try_merge(const LinearSet& low, const LinearSet& high, LinearSet& merged) {
  if (high.generators.size() != low.generators.size() + 1) {
    return false;
  }
  std::vector<VectorN> extra;
  std::set_difference(high.generators.begin(), high.generators.end(), low.generators.begin(),
                      low.generators.end(), std::back_inserter(extra));
  if (extra.size() != 1 || add(low.offset, extra[0]) != high.offset) {
    return false;
  }
  merged = LinearSet{low.offset, high.generators};
  return true;
}

void check_component(const LinearSet& l, std::size_t dimension) {
  auto check = [&](const VectorN& v) {
    if (v.size() != dimension) {
      throw std::invalid_argument("semilinear set: vector of the wrong dimension");
    }
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x < 0; })) {
      throw std::invalid_argument("semilinear set: negative coordinate");
    }
  };
  check(l.offset);
  for (const auto& g : l.generators) {
    check(g);
  }
}

void require_same_coordinates(const SemilinearSet& s, const SemilinearSet& t, const char* op) {
  if (s.coordinates() != t.coordinates()) {
    throw std::invalid_argument(std::string(op) + ": coordinate lists differ");
  }
}

}  // namespace

SemilinearSet::SemilinearSet(std::vector<std::string> coordinates,
                             std::vector<LinearSet> components)
    : coordinates_(std::move(coordinates)), components_(std::move(components)) {
  for (const auto& l : components_) {
    check_component(l, coordinates_.size());
  }
}

SemilinearSet SemilinearSet::empty_set(std::vector<std::string> coordinates) {
  return SemilinearSet(std::move(coordinates));
}

SemilinearSet SemilinearSet::singleton(std::vector<std::string> coordinates, VectorN point) {
  return SemilinearSet(std::move(coordinates), {LinearSet{std::move(point), {}}});
}

SemilinearSet SemilinearSet::full(std::vector<std::string> coordinates) {
  const std::size_t d = coordinates.size();
  LinearSet l{VectorN(d, 0), {}};
  for (std::size_t i = 0; i < d; ++i) {
    VectorN e(d, 0);
    e[i] = 1;
    l.generators.push_back(std::move(e));
  }
  return SemilinearSet(std::move(coordinates), {std::move(l)});
}

std::size_t SemilinearSet::size() const {
  std::size_t n = components_.size();
  for (const auto& l : components_) {
    n += l.generators.size();
  }
  return n;
}

MonoidLinearMap::MonoidLinearMap(std::vector<std::string> target, std::size_t source_dimension,
                                 IntMatrix rows)
    : target_(std::move(target)), source_dimension_(source_dimension), rows_(std::move(rows)) {
  if (rows_.size() != target_.size()) {
    throw std::invalid_argument("MonoidLinearMap: one row per target coordinate required");
  }
  for (const auto& row : rows_) {
    if (row.size() != source_dimension_) {
      throw std::invalid_argument("MonoidLinearMap: row length differs from the source dimension");
    }
  }
}

VectorN MonoidLinearMap::apply(std::span<const std::int64_t> v) const {
  if (v.size() != source_dimension_) {
    throw std::invalid_argument("MonoidLinearMap: vector of the wrong dimension");
  }
  VectorN out(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      out[r] += rows_[r][c] * v[c];
    }
  }
  return out;
}

SemilinearSet sl_union(const SemilinearSet& s, const SemilinearSet& t) {
  require_same_coordinates(s, t, "sl_union");
  std::vector<LinearSet> components = s.components();
  components.insert(components.end(), t.components().begin(), t.components().end());
  return SemilinearSet(s.coordinates(), std::move(components));
}

SemilinearSet sl_image(const SemilinearSet& s, const MonoidLinearMap& map) {
  if (map.source_dimension() != s.dimension()) {
    throw std::invalid_argument("sl_image: map source dimension differs from the set's");
  }
  std::vector<LinearSet> components;
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    const LinearSet& l = s.components()[i];
    auto image = [&](const VectorN& v) {
      VectorN out = map.apply(v);
      if (std::any_of(out.begin(), out.end(), [](std::int64_t x) { return x < 0; })) {
        throw std::domain_error("sl_image: component " + std::to_string(i) +
                                " maps to a negative coordinate");
      }
      return out;
    };
    LinearSet out{image(l.offset), {}};
    for (const auto& g : l.generators) {
      VectorN img = image(g);
      if (!is_zero(img)) {
        out.generators.push_back(std::move(img));
      }
    }
    components.push_back(std::move(out));
  }
  return SemilinearSet(map.target(), std::move(components));
}

SemilinearSet sl_product(const SemilinearSet& s, const SemilinearSet& t) {
  std::vector<std::string> coordinates = s.coordinates();
  coordinates.insert(coordinates.end(), t.coordinates().begin(), t.coordinates().end());
  const std::size_t ds = s.dimension();
  const std::size_t dt = t.dimension();
  std::vector<LinearSet> components;
  for (const auto& l : s.components()) {
    for (const auto& m : t.components()) {
      LinearSet out;
      out.offset = l.offset;
      out.offset.insert(out.offset.end(), m.offset.begin(), m.offset.end());
      for (const auto& g : l.generators) {
        VectorN v = g;
        v.resize(ds + dt, 0);
        out.generators.push_back(std::move(v));
      }
      for (const auto& g : m.generators) {
        VectorN v(ds, 0);
        v.insert(v.end(), g.begin(), g.end());
        out.generators.push_back(std::move(v));
      }
      components.push_back(std::move(out));
    }
  }
  return SemilinearSet(std::move(coordinates), std::move(components));
}

SemilinearSet sl_diagonal(std::vector<std::string> coordinates) {
  const std::size_t d = coordinates.size();
  LinearSet l{VectorN(d, 0), {}};
  if (d > 0) {
    l.generators.emplace_back(d, 1);
  }
  return SemilinearSet(std::move(coordinates), {std::move(l)});
}

SemilinearSet sl_sum(const SemilinearSet& s, const SemilinearSet& t) {
  require_same_coordinates(s, t, "sl_sum");
  std::vector<LinearSet> components;
  for (const auto& l : s.components()) {
    for (const auto& m : t.components()) {
      LinearSet out{add(l.offset, m.offset), l.generators};
      out.generators.insert(out.generators.end(), m.generators.begin(), m.generators.end());
      components.push_back(std::move(out));
    }
  }
  return simplify(SemilinearSet(s.coordinates(), std::move(components)));
}

SemilinearSet sl_star(const SemilinearSet& s) {
  const std::size_t d = s.dimension();
  SemilinearSet out = SemilinearSet::singleton(s.coordinates(), VectorN(d, 0));
  for (const auto& l : s.components()) {
    std::vector<LinearSet> star;
    if (is_zero(l.offset)) {
      star.push_back(l);
    } else {
      // {0} u (v + <P, v>)
      star.push_back(LinearSet{VectorN(d, 0), {}});
      LinearSet pumped = l;
      pumped.generators.push_back(l.offset);
      star.push_back(std::move(pumped));
    }
    out = sl_sum(out, SemilinearSet(s.coordinates(), std::move(star)));
  }
  return out;
}

SemilinearSet simplify(const SemilinearSet& s) {
  std::vector<LinearSet> components;
  for (const auto& l : s.components()) {
    components.push_back(tidy(l));
  }
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < components.size() && !changed; ++i) {
      for (std::size_t j = 0; j < components.size() && !changed; ++j) {
        LinearSet merged;
        if (i != j && try_merge(components[i], components[j], merged)) {
          components[i] = tidy(std::move(merged));
          components.erase(components.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }

  // components with more generators are the likelier containers
  std::stable_sort(components.begin(), components.end(),
                   [](const LinearSet& a, const LinearSet& b) {
                     return a.generators.size() > b.generators.size();
                   });
  std::vector<char> dropped(components.size(), 0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (i != j && !dropped[j] && contains(components[j], components[i])) {
        dropped[i] = 1;
        break;
      }
    }
  }
  std::vector<LinearSet> kept;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!dropped[i]) {
      kept.push_back(std::move(components[i]));
    }
  }
  std::sort(kept.begin(), kept.end());
  return SemilinearSet(s.coordinates(), std::move(kept));
}

SemilinearSet sl_intersect(const SemilinearSet& s, const SemilinearSet& t,
                           DiophantineLimits limits) {
  require_same_coordinates(s, t, "sl_intersect");
  const std::size_t d = s.dimension();
  std::vector<LinearSet> components;
  for (const auto& l : s.components()) {
    for (const auto& m : t.components()) {
      // P lambda - Q mu = w - v
      const std::size_t np = l.generators.size();
      const std::size_t nq = m.generators.size();
      IntMatrix a(d, std::vector<std::int64_t>(np + nq, 0));
      VectorN b(d, 0);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < np; ++j) {
          a[r][j] = l.generators[j][r];
        }
        for (std::size_t j = 0; j < nq; ++j) {
          a[r][np + j] = -m.generators[j][r];
        }
        b[r] = m.offset[r] - l.offset[r];
      }
      const DiophantineSolution sol = solve_diophantine(a, np + nq, b, limits);
      if (sol.minimal.empty()) {
        continue;
      }
      auto point = [&](const VectorN& lambda) {
        VectorN out(d, 0);
        for (std::size_t j = 0; j < np; ++j) {
          for (std::size_t r = 0; r < d; ++r) {
            out[r] += lambda[j] * l.generators[j][r];
          }
        }
        return out;
      };
      std::vector<VectorN> gens;
      for (const auto& h : sol.homogeneous) {
        gens.push_back(point(h));
      }
      for (const auto& x : sol.minimal) {
        components.push_back(LinearSet{add(l.offset, point(x)), gens});
      }
    }
  }
  return simplify(SemilinearSet(s.coordinates(), std::move(components)));
}

bool linear_membership(const LinearSet& l, std::span<const std::int64_t> v) {
  if (v.size() != l.offset.size()) {
    throw std::invalid_argument("membership: vector of the wrong dimension");
  }
  VectorN t(v.begin(), v.end());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] -= l.offset[i];
  }
  return in_monoid(l.generators, t);
}

bool sl_membership(const SemilinearSet& s, std::span<const std::int64_t> v) {
  return std::any_of(s.components().begin(), s.components().end(),
                     [&](const LinearSet& l) { return linear_membership(l, v); });
}

std::uint64_t frobenius_start(std::span<const std::uint64_t> xs) {
  std::uint64_t g = 0;
  for (auto x : xs) {
    g = std::gcd(g, x);
  }
  if (g == 0) {
    throw std::invalid_argument("frobenius_start: needs a nonzero element");
  }
  std::vector<std::uint64_t> reduced;
  for (auto x : xs) {
    if (x != 0) {
      reduced.push_back(x / g);
    }
  }
  const std::uint64_t lo = *std::min_element(reduced.begin(), reduced.end());
  const std::uint64_t hi = *std::max_element(reduced.begin(), reduced.end());
  // every gap of a coprime set lies below lo * hi
  const std::uint64_t limit = lo * hi + 1;
  std::vector<char> representable(limit + 1, 0);
  representable[0] = 1;
  std::uint64_t last_gap = 0;
  bool any_gap = false;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    for (auto x : reduced) {
      if (x <= n && representable[n - x]) {
        representable[n] = 1;
        break;
      }
    }
    if (!representable[n]) {
      last_gap = n;
      any_gap = true;
    }
  }
  return any_gap ? (last_gap + 1) * g : 0;
}

}  // namespace stablenorm
