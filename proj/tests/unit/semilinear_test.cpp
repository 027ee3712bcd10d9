#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stablenorm/semilinear.hpp"

namespace stablenorm {
namespace {

const std::vector<std::string> kXY{"x", "y"};

SemilinearSet linear(std::vector<std::string> coords, VectorN offset,
                     std::vector<VectorN> generators) {
  return SemilinearSet(std::move(coords), {LinearSet{std::move(offset), std::move(generators)}});
}

void expect_same_points(const SemilinearSet& s, const SemilinearSet& t, std::int64_t bound) {
  EXPECT_EQ(testing::points_within(s, bound), testing::points_within(t, bound));
}

TEST(SemilinearSet, Validation) {
  EXPECT_THROW(linear(kXY, {1}, {}), std::invalid_argument);
  EXPECT_THROW(linear(kXY, {1, -1}, {}), std::invalid_argument);
  EXPECT_THROW(linear(kXY, {1, 1}, {{0, -2}}), std::invalid_argument);
  EXPECT_TRUE(SemilinearSet::empty_set(kXY).is_empty());
  EXPECT_TRUE(sl_membership(SemilinearSet::full(kXY), VectorN{3, 9}));
}

TEST(Membership, Examples) {
  const auto s = linear(kXY, {1, 0}, {{2, 1}});
  EXPECT_TRUE(sl_membership(s, VectorN{5, 2}));
  EXPECT_FALSE(sl_membership(s, VectorN{4, 2}));
  EXPECT_FALSE(sl_membership(SemilinearSet::empty_set(kXY), VectorN{0, 0}));
  EXPECT_TRUE(linear_membership(LinearSet{{0, 0}, {{3, 0}, {5, 0}}}, VectorN{8, 0}));
  EXPECT_FALSE(linear_membership(LinearSet{{0, 0}, {{3, 0}, {5, 0}}}, VectorN{7, 0}));
}

TEST(Membership, AgreesWithEnumeration) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = testing::random_semilinear(2, 5, 3, rng);
    const auto inside = testing::points_within(s, 20);
    for (std::int64_t x = 0; x <= 20; ++x) {
      for (std::int64_t y = 0; y <= 20; ++y) {
        ASSERT_EQ(sl_membership(s, VectorN{x, y}), inside.contains(VectorN{x, y}));
      }
    }
  }
}

TEST(Operations, DiagonalImageProduct) {
  const auto d = sl_diagonal(kXY);
  ASSERT_EQ(d.components().size(), 1U);
  EXPECT_EQ(d.components()[0].generators, (std::vector<VectorN>{{1, 1}}));

  const MonoidLinearMap sum({"s"}, 2, {{1, 1}});
  const auto image = sl_image(d, sum);
  expect_same_points(image, linear({"s"}, {0}, {{2}}), 40);
  const MonoidLinearMap difference({"s"}, 2, {{1, -2}});
  EXPECT_THROW(sl_image(d, difference), std::domain_error);

  const auto product = sl_product(linear({"x"}, {0}, {{1}}), linear({"y"}, {0}, {{2}}));
  EXPECT_EQ(product.coordinates(), kXY);
  for (std::int64_t x = 0; x <= 20; ++x) {
    for (std::int64_t y = 0; y <= 20; ++y) {
      EXPECT_EQ(sl_membership(product, VectorN{x, y}), y % 2 == 0);
    }
  }
}

TEST(Operations, SumStarUnion) {
  const auto a = linear({"x"}, {3}, {});
  const auto b = linear({"x"}, {5}, {});
  const auto u = sl_union(a, b);
  expect_same_points(sl_star(u), linear({"x"}, {0}, {{3}, {5}}), 60);
  expect_same_points(sl_sum(a, b), linear({"x"}, {8}, {}), 60);
  const auto star_empty = sl_star(SemilinearSet::empty_set({"x"}));
  EXPECT_EQ(testing::points_within(star_empty, 10), (std::set<VectorN>{{0}}));
}

TEST(Operations, SimplifyKeepsTheSet) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = testing::random_semilinear(2, 4, 4, rng);
    const auto t = simplify(s);
    EXPECT_LE(t.size(), s.size());
    expect_same_points(s, t, 25);
  }
}

TEST(HilbertBasis, Examples) {
  EXPECT_EQ(hilbert_basis({{1, -1}}, 2), (std::vector<VectorN>{{1, 1}}));
  EXPECT_EQ(hilbert_basis({{3, -5}}, 2), (std::vector<VectorN>{{5, 3}}));
  EXPECT_TRUE(hilbert_basis({{1, 1}}, 2).empty());
  EXPECT_THROW(hilbert_basis({{7, -11, 13, -17}}, 4, DiophantineLimits{10}), BudgetExceeded);
}

// minimal among the nonzero solutions of the brute-force list
std::set<VectorN> minimal_solutions(const std::vector<VectorN>& all) {
  std::set<VectorN> out;
  for (const auto& x : all) {
    bool minimal = true;
    for (const auto& y : all) {
      if (y == x) {
        continue;
      }
      bool le = true;
      for (std::size_t i = 0; i < x.size(); ++i) {
        le = le && y[i] <= x[i];
      }
      minimal = minimal && !le;
    }
    if (minimal) {
      out.insert(x);
    }
  }
  return out;
}

TEST(HilbertBasis, AgreesWithBruteForce) {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t columns = 2 + trial % 3;
    IntMatrix a(1 + trial % 2, std::vector<std::int64_t>(columns));
    for (auto& row : a) {
      for (auto& x : row) {
        x = coeff(rng);
      }
    }
    const auto basis = hilbert_basis(a, columns);
    const auto expected = minimal_solutions(testing::diophantine_solutions(a, columns, 8));
    const std::set<VectorN> got(basis.begin(), basis.end());
    for (const auto& x : expected) {
      EXPECT_TRUE(got.contains(x));
    }
    for (const auto& x : got) {
      if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v <= 8; })) {
        EXPECT_TRUE(expected.contains(x));
      }
    }
  }
}

TEST(SolveDiophantine, Inhomogeneous) {
  // x - y = 2
  const auto s = solve_diophantine({{1, -1}}, 2, VectorN{2});
  EXPECT_EQ(s.minimal, (std::vector<VectorN>{{2, 0}}));
  EXPECT_EQ(s.homogeneous, (std::vector<VectorN>{{1, 1}}));
  // 2x = 1
  EXPECT_TRUE(solve_diophantine({{2}}, 1, VectorN{1}).minimal.empty());
}

TEST(Intersect, Examples) {
  const auto diagonal = sl_diagonal(kXY);
  const auto even_x = linear(kXY, {0, 0}, {{2, 0}, {0, 1}});
  const auto both = sl_intersect(diagonal, even_x);
  for (std::int64_t x = 0; x <= 40; ++x) {
    for (std::int64_t y = 0; y <= 40; ++y) {
      EXPECT_EQ(sl_membership(both, VectorN{x, y}), x == y && x % 2 == 0);
    }
  }
  EXPECT_TRUE(sl_intersect(SemilinearSet::singleton(kXY, {1, 2}),
                           SemilinearSet::singleton(kXY, {2, 1}))
                  .is_empty());
  EXPECT_THROW(sl_intersect(diagonal, sl_diagonal({"x", "z"})), std::invalid_argument);
}

TEST(Intersect, AgreesWithBruteForce) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const auto s = testing::random_semilinear(d, 4, 2, rng);
    const auto t = testing::random_semilinear(d, 4, 2, rng);
    const auto both = sl_intersect(s, t);
    const auto ps = testing::points_within(s, 16);
    const auto pt = testing::points_within(t, 16);
    std::set<VectorN> expected;
    for (const auto& v : ps) {
      if (pt.contains(v)) {
        expected.insert(v);
      }
    }
    EXPECT_EQ(testing::points_within(both, 16), expected) << "trial " << trial;
  }
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius_start(std::vector<std::uint64_t>{3, 5}), 8U);
  EXPECT_EQ(frobenius_start(std::vector<std::uint64_t>{1}), 0U);
  // 0 is the empty combination, so every even number is reached
  EXPECT_EQ(frobenius_start(std::vector<std::uint64_t>{2, 4}), 0U);
  EXPECT_EQ(frobenius_start(std::vector<std::uint64_t>{6, 10, 15}), 30U);
  EXPECT_THROW(frobenius_start(std::vector<std::uint64_t>{0, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace stablenorm
