#include <doctest.h>

#include <algorithm>
#include <random>

#include "modo/errors.hpp"
#include "modo/objective.hpp"
#include "support.hpp"

using namespace modo;
using modo::test::points;

namespace {

// Quadratic all-pairs reference for nd_filter.
std::vector<ObjectiveVector> reference_nd(const std::vector<ObjectiveVector>& s) {
  std::vector<ObjectiveVector> out;
  for (const auto& y : s) {
    const bool dominated = std::any_of(s.begin(), s.end(), [&](const ObjectiveVector& z) { return dominates(z, y); });
    if (!dominated) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ObjectiveVector> random_set(std::mt19937_64& rng, std::size_t count, std::size_t k, int hi) {
  std::uniform_int_distribution<int> d(0, hi);
  std::vector<ObjectiveVector> s;
  for (std::size_t i = 0; i < count; ++i) {
    ObjectiveVector y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = d(rng);
    s.push_back(y);
  }
  return s;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("dominance examples") {
    CHECK(dominates(ObjectiveVector{10, 21, 8}, ObjectiveVector{6, 16, 4}));
    CHECK_FALSE(dominates(ObjectiveVector{8, 13, 17}, ObjectiveVector{6, 7, 19}));
    CHECK_FALSE(dominates(ObjectiveVector{6, 7, 19}, ObjectiveVector{8, 13, 17}));
    CHECK_FALSE(dominates(ObjectiveVector{3, 3}, ObjectiveVector{3, 3}));
    CHECK_THROWS_AS(dominates(ObjectiveVector{1, 2}, ObjectiveVector{1, 2, 3}), DimensionError);
  }

  TEST_CASE("dominance is a strict partial order") {
    std::mt19937_64 rng(11);
    const auto s = random_set(rng, 60, 3, 3);
    for (const auto& a : s) {
      CHECK_FALSE(dominates(a, a));
      for (const auto& b : s) {
        if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
        for (const auto& c : s) {
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
      }
    }
  }

  TEST_CASE("checked arithmetic") {
    ObjectiveVector a{1, -2, 3};
    CHECK(a + ObjectiveVector{1, 1, 1} == ObjectiveVector{2, -1, 4});
    CHECK(-a == ObjectiveVector{-1, 2, -3});
    CHECK(a - a == ObjectiveVector::zero(3));
    CHECK_THROWS_AS((ObjectiveVector{INT64_MAX, 0} + ObjectiveVector{1, 0}), OverflowError);
    CHECK_THROWS_AS((-ObjectiveVector{INT64_MIN, 0}), OverflowError);
    CHECK_THROWS_AS((ObjectiveVector{INT64_MIN, 0} - ObjectiveVector{1, 0}), OverflowError);
    CHECK_THROWS_AS((a + ObjectiveVector{1, 1}), DimensionError);
    CHECK_THROWS_AS(ObjectiveVector(kMaxObjectives + 1), DimensionError);
    CHECK(to_string(a) == "1 -2 3");
  }

  TEST_CASE("nd_filter basics") {
    CHECK(nd_filter({}).empty());
    CHECK(nd_filter(points({{3, 3}, {3, 3}})) == points({{3, 3}}));
    CHECK(nd_filter(points({{1, 1}, {2, 2}, {0, 5}})) == points({{2, 2}, {0, 5}}));
    CHECK_THROWS_AS(nd_filter({ObjectiveVector{1, 2}, ObjectiveVector{1, 2, 3}}), DimensionError);
  }

  TEST_CASE("nd_filter matches the all-pairs reference") {
    std::mt19937_64 rng(5);
    auto s = random_set(rng, 200, 3, 50);
    CHECK(nd_filter(s) == reference_nd(s));
    for (std::size_t k = 2; k <= 7; ++k) {
      for (int hi : {3, 20, 1000}) {
        s = random_set(rng, k == 2 ? 10000 : 2000, k, hi);
        const auto nd = nd_filter(s);
        CHECK(nd == reference_nd(s));
        CHECK(nd_filter(nd) == nd);
        for (const auto& a : nd) {
          for (const auto& b : nd) CHECK_FALSE(dominates(a, b));
        }
      }
    }
  }

  TEST_CASE("negate_all") {
    CHECK(negate_all(points({{1, -2}, {0, 3}})) == points({{-1, 2}, {0, -3}}));
  }
}
