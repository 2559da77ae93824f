#include "cgt/polytope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace cgt;
using std::numbers::pi;

TEST_CASE("offset_b closed forms") {
  CHECK(offset_b(pi / 4) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(offset_b(5 * pi / 12) == doctest::Approx((2.0 + std::sqrt(3.0)) / 2.0).epsilon(1e-14));
  CHECK(offset_b(pi / 6) == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-14));
  CHECK_THROWS_AS(offset_b(0.0), std::domain_error);
}

TEST_CASE("extreme point listing matches the closed form, in canonical order") {
  const StrategyPolytope poly(2, pi / 4);
  const auto points = extreme_points(poly);
  REQUIRE(points.size() == 4);
  CHECK(points[0](0) == Complex{1.0, 0.0});
  CHECK(points[1](1) == Complex{1.0, 0.0});
  // b = tan(pi/4)/2 evaluates to 0.5 up to one ulp.
  CHECK(std::abs(points[2](0) - Complex{0.5, 0.5}) < 1e-15);
  CHECK(std::abs(points[2](1) - Complex{0.5, -0.5}) < 1e-15);
  CHECK(std::abs(points[3](0) - Complex{0.5, -0.5}) < 1e-15);
  CHECK(std::abs(points[3](1) - Complex{0.5, 0.5}) < 1e-15);

  CHECK(std::abs(extreme_point(poly, ExtremePointIndex::pair(2, 1))(0) -
                 Complex{0.5, -0.5}) < 1e-15);

  for (int m = 1; m <= 8; ++m)
    CHECK(extreme_point_indices(m).size() == static_cast<size_t>(m) * m);
  CHECK(extreme_points(StrategyPolytope(3, pi / 4)).size() == 9);
}

TEST_CASE("canonical rank round-trips and matches the oracle listing") {
  for (int m : {2, 3, 5}) {
    const auto indices = extreme_point_indices(m);
    const StrategyPolytope poly(m, pi / 3);
    const auto reference = oracle::extreme_points(m, pi / 3);
    for (int r = 0; r < m * m; ++r) {
      CHECK(canonical_rank(indices[static_cast<size_t>(r)], m) == r);
      CHECK(index_from_rank(r, m) == indices[static_cast<size_t>(r)]);
      const CVector mine = extreme_point(poly, indices[static_cast<size_t>(r)]);
      CHECK((mine - reference[static_cast<size_t>(r)]).lpNorm<Eigen::Infinity>() ==
            0.0);
    }
  }
}

TEST_CASE("membership") {
  const StrategyPolytope p2(2, pi / 4);
  CVector e1(2);
  e1 << Complex{1, 0}, Complex{0, 0};
  CHECK(contains(p2, e1));

  const StrategyPolytope wide(2, 5 * pi / 12);
  CVector w(2);
  w << Complex{0.8, 0.6}, Complex{0.2, -0.6};
  CHECK(contains(wide, w));

  CVector bad(2);
  bad << Complex{0.5, 0.5}, Complex{0.5, 0.5};
  CHECK_FALSE(contains(p2, bad));  // coordinate sum is 1 + i

  // Every listed extreme point is a member with zero slack.
  Tolerances no_slack;
  no_slack.feas = 0.0;
  for (int m : {1, 2, 3, 4, 8}) {
    for (double a0 : {pi / 6, pi / 4, pi / 3}) {
      const StrategyPolytope poly(m, a0);
      for (const auto& d : extreme_points(poly)) CHECK(contains(poly, d, no_slack));
    }
  }
}

TEST_CASE("decompose reproduces extreme points exactly") {
  const StrategyPolytope poly(2, pi / 4);
  const auto w1 = decompose(poly, extreme_point(poly, ExtremePointIndex::trivial(1)));
  REQUIRE(w1.w.size() == 1);
  CHECK(w1.w.at(ExtremePointIndex::trivial(1)) == 1.0);

  const auto w2 = decompose(poly, extreme_point(poly, ExtremePointIndex::pair(1, 2)));
  REQUIRE(w2.w.size() == 1);
  CHECK(w2.w.at(ExtremePointIndex::pair(1, 2)) == 1.0);
}

TEST_CASE("decompose splits the worked 2-vector") {
  const StrategyPolytope poly(2, pi / 4);
  CVector z(2);
  z << Complex{0.4, 0.2}, Complex{0.6, -0.2};
  const auto weights = decompose(poly, z);
  REQUIRE(weights.w.size() == 3);
  CHECK(weights.w.at(ExtremePointIndex::pair(1, 2)) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(weights.w.at(ExtremePointIndex::trivial(1)) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(weights.w.at(ExtremePointIndex::trivial(2)) == doctest::Approx(0.4).epsilon(1e-14));
  // Oracle: re-multiply the weights by the extreme points.
  CHECK((combine(poly, weights) - z).lpNorm<Eigen::Infinity>() <= 1e-15);
}

TEST_CASE("decompose rejects non-members") {
  const StrategyPolytope poly(2, pi / 4);
  CVector outside(2);
  outside << Complex{0.5, 0.5}, Complex{0.5, 0.5};
  CHECK_THROWS_AS(decompose(poly, outside), std::invalid_argument);
}

TEST_CASE("random members round-trip through decompose") {
  std::mt19937 rng(2024);
  for (int m : {2, 3, 5}) {
    for (double a0 : {pi / 6, pi / 4, pi / 3}) {
      const StrategyPolytope poly(m, a0);
      const auto points = oracle::extreme_points(m, a0);
      for (int trial = 0; trial < 300; ++trial) {
        const CVector z = oracle::random_member(points, rng);
        REQUIRE(contains(poly, z));
        const auto weights = decompose(poly, z);

        double total = 0.0;
        int positives = 0, negatives = 0;
        for (const auto& [idx, weight] : weights.w) {
          CHECK(weight >= 0.0);
          total += weight;
        }
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK((combine(poly, weights) - z).lpNorm<Eigen::Infinity>() <= 1e-10);

        for (Eigen::Index i = 0; i < z.size(); ++i) {
          if (z(i).imag() > 0.0) ++positives;
          if (z(i).imag() < 0.0) ++negatives;
        }
        if (positives + negatives > 0)
          CHECK(weights.pair_term_count() <= positives + negatives - 1);
      }
    }
  }
}
