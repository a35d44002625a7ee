#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "paretopart/core.hpp"
#include "paretopart/generator.hpp"
#include "paretopart/oracle.hpp"
#include "test_helpers.hpp"

using namespace paretopart;
using paretopart::testing::worked_example;

TEST_CASE("brute force reproduces the worked example front") {
  const ParetoFrontDiscrete front =
      oracle::brute_force_pareto(worked_example());
  REQUIRE(front.size() == 3);
  CHECK(front.entries()[0] == FrontEntry{{6, 2}, {2, 2, 0, 0}});
  CHECK(front.entries()[1] == FrontEntry{{3, 4}, {2, 1, 0, 1}});
  CHECK(front.entries()[2] == FrontEntry{{2, 5}, {2, 0, 2, 0}});
}

TEST_CASE("brute force edge cases") {
  // No subset sums to n = 5 with even-only domains.
  const DiscreteInstance infeasible(
      5, {DiscreteProfile({{2, 1, 1}, {4, 2, 2}}),
          DiscreteProfile({{2, 1, 1}, {4, 2, 2}})});
  CHECK(oracle::brute_force_pareto(infeasible).empty());

  // Three feasible vectors, one dominating point.
  const DiscreteInstance tiny(
      2, {DiscreteProfile({{1, 1, 1}, {2, 2, 2}}),
          DiscreteProfile({{1, 1, 1}, {2, 2, 2}})});
  const ParetoFrontDiscrete front = oracle::brute_force_pareto(tiny);
  REQUIRE(front.size() == 1);
  CHECK(front.entries()[0] == FrontEntry{{1, 2}, {1, 1}});
}

TEST_CASE("brute force enumeration guard") {
  std::vector<DiscreteProfile> profiles;
  std::vector<ProfilePoint> points;
  for (int x = 1; x <= 30; ++x) {
    points.push_back({x, 1.0 * x, 1.0 * x});
  }
  for (int i = 0; i < 6; ++i) profiles.emplace_back(points);
  const DiscreteInstance big(30, std::move(profiles));  // 31^6 > 1e7
  CHECK_THROWS_AS(oracle::brute_force_pareto(big), TooLargeError);
}

TEST_CASE("brute force is permutation invariant") {
  GenConfig config{3, 4, 10, 21, ProfileShape::Adversarial};
  const DiscreteInstance inst = generate_instance(config);
  const ParetoFrontDiscrete front = oracle::brute_force_pareto(inst);

  const std::vector<std::size_t> perm = {2, 0, 1};
  std::vector<DiscreteProfile> reordered;
  for (std::size_t i : perm) reordered.push_back(inst.profile(i));
  const DiscreteInstance shuffled(inst.n(), std::move(reordered));
  const ParetoFrontDiscrete other = oracle::brute_force_pareto(shuffled);

  REQUIRE(front.size() == other.size());
  for (std::size_t i = 0; i < front.size(); ++i) {
    CHECK(front.entries()[i].obj.t == other.entries()[i].obj.t);
    CHECK(front.entries()[i].obj.e ==
          doctest::Approx(other.entries()[i].obj.e).epsilon(1e-12));
    // Vectors agree once mapped through the permutation.
    for (std::size_t j = 0; j < perm.size(); ++j) {
      CHECK(other.entries()[i].x[j] == front.entries()[i].x[perm[j]]);
    }
  }
}

TEST_CASE("brute force is deterministic") {
  GenConfig config{4, 3, 8, 3, ProfileShape::Noisy};
  const DiscreteInstance inst = generate_instance(config);
  CHECK(oracle::brute_force_pareto(inst) == oracle::brute_force_pareto(inst));
}

TEST_CASE("grid oracle") {
  SUBCASE("k = 1 collapses to a single point") {
    const ContinuousInstance inst(4.0, {power_handle(1.0, 2.0, 4.0)},
                                  {LinearCost{3.0}});
    const auto points = oracle::continuous_grid_oracle(inst, 100);
    REQUIRE(points.size() == 1);
    CHECK(points[0].t == doctest::Approx(16.0));
    CHECK(points[0].e == doctest::Approx(12.0));
  }

  SUBCASE("guard rejects k > 3") {
    const double n = 4.0;
    const ContinuousInstance inst(
        n,
        {linear_handle(1, n), linear_handle(1, n), linear_handle(1, n),
         linear_handle(1, n)},
        {LinearCost{4}, LinearCost{3}, LinearCost{2}, LinearCost{1}});
    CHECK_THROWS_AS(oracle::continuous_grid_oracle(inst, 10), TooLargeError);
  }

  SUBCASE("linear instance stays within the grid resolution of the front") {
    const ContinuousInstance inst(
        10.0, {linear_handle(1.0, 10.0), linear_handle(1.0, 10.0)},
        {LinearCost{2.0}, LinearCost{1.0}});
    const int steps = 200;
    const ContinuousFront front = build_front(inst);
    const double slack = 2.0 * 10.0 / steps * 2.0;
    for (const ObjectivePoint& p : oracle::continuous_grid_oracle(inst, steps)) {
      if (p.t < front.t_min() || p.t > front.t_max()) continue;
      CHECK(std::abs(p.e - front.value(p.t)) <= slack);
    }
  }

  SUBCASE("symmetric instance degenerates like the front") {
    const ContinuousInstance inst(
        6.0, {linear_handle(2.0, 6.0), linear_handle(2.0, 6.0)},
        {LinearCost{1.0}, LinearCost{1.0}});
    const auto points = oracle::continuous_grid_oracle(inst, 60);
    // Equal b makes e constant; only the min-t point survives filtering.
    REQUIRE(points.size() == 1);
    CHECK(points[0].t == doctest::Approx(6.0));
    CHECK(points[0].e == doctest::Approx(6.0));
  }
}
