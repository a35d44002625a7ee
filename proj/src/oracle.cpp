#include "paretopart/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "paretopart/core.hpp"

namespace paretopart {
namespace oracle {

namespace {

constexpr double kEnumerationGuard = 1e7;

void enumerate(const DiscreteInstance& instance, std::size_t lvl,
               std::int64_t remaining, DecisionVector& x,
               std::vector<FrontEntry>& out) {
  const std::size_t k = instance.k();
  if (lvl == k) {
    if (remaining == 0) {
      out.push_back(FrontEntry{evaluate(instance, x), x});
    }
    return;
  }
  x[lvl] = 0;
  enumerate(instance, lvl + 1, remaining, x, out);
  for (const ProfilePoint& p : instance.profile(lvl).points()) {
    if (p.x > remaining) continue;
    x[lvl] = p.x;
    enumerate(instance, lvl + 1, remaining - p.x, x, out);
  }
  x[lvl] = 0;
}

}  // namespace

ParetoFrontDiscrete brute_force_pareto(const DiscreteInstance& instance) {
  double combinations = 1.0;
  for (const DiscreteProfile& p : instance.profiles()) {
    combinations *= static_cast<double>(p.size() + 1);
    if (combinations > kEnumerationGuard) {
      throw TooLargeError("full enumeration would exceed the 1e7 guard");
    }
  }
  std::vector<FrontEntry> feasible;
  DecisionVector x(instance.k(), 0);
  enumerate(instance, 0, instance.n(), x, feasible);
  return pareto_filter(std::move(feasible));
}

std::vector<ObjectivePoint> continuous_grid_oracle(
    const ContinuousInstance& instance, int steps) {
  if (instance.k() > 3) {
    throw TooLargeError("grid oracle is limited to k <= 3");
  }
  if (steps < 1) {
    throw ValidationError("grid oracle needs steps >= 1");
  }

  const double h = instance.n() / static_cast<double>(steps);
  std::vector<ObjectivePoint> points;
  auto emit = [&](const std::vector<double>& x) {
    double t = 0.0;
    double e = 0.0;
    for (std::size_t i = 0; i < instance.k(); ++i) {
      t = std::max(t, instance.f(i).eval(std::min(x[i], instance.f(i).x_max)));
      e += instance.b(i) * x[i];
    }
    points.push_back(ObjectivePoint{t, e});
  };

  switch (instance.k()) {
    case 1:
      emit({instance.n()});
      break;
    case 2:
      for (int i = 0; i <= steps; ++i) {
        const double x0 = std::min(instance.n(), i * h);
        emit({x0, instance.n() - x0});
      }
      break;
    default:
      for (int i = 0; i <= steps; ++i) {
        const double x0 = std::min(instance.n(), i * h);
        for (int j = 0; i + j <= steps; ++j) {
          const double x1 = std::min(instance.n() - x0, j * h);
          emit({x0, x1, instance.n() - x0 - x1});
        }
      }
      break;
  }
  return pareto_filter_points(std::move(points));
}

}  // namespace oracle
}  // namespace paretopart
