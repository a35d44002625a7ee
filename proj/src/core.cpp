#include "paretopart/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "paretopart/types.hpp"

namespace paretopart {

namespace {

void require(bool condition, const char* invariant) {
  if (!condition) {
    throw ValidationError(invariant);
  }
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

DiscreteProfile::DiscreteProfile(std::vector<ProfilePoint> points)
    : points_(std::move(points)) {
  require(!points_.empty(), "profile must contain at least one point (m >= 1)");
  std::sort(points_.begin(), points_.end(),
            [](const ProfilePoint& a, const ProfilePoint& b) { return a.x < b.x; });
  for (std::size_t i = 0; i < points_.size(); ++i) {
    require(points_[i].x > 0, "profile x values must be positive");
    require(finite_nonneg(points_[i].f) && finite_nonneg(points_[i].g),
            "profile f and g values must be finite and non-negative");
    if (i > 0) {
      require(points_[i].x != points_[i - 1].x,
              "profile x values must be distinct");
    }
  }
  by_g_.resize(points_.size());
  std::iota(by_g_.begin(), by_g_.end(), 0u);
  std::sort(by_g_.begin(), by_g_.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (points_[a].g != points_[b].g) return points_[a].g < points_[b].g;
    return points_[a].x < points_[b].x;
  });
}

const ProfilePoint* DiscreteProfile::find(std::int64_t x) const {
  auto it = std::lower_bound(
      points_.begin(), points_.end(), x,
      [](const ProfilePoint& p, std::int64_t v) { return p.x < v; });
  if (it == points_.end() || it->x != x) return nullptr;
  return &*it;
}

double DiscreteProfile::f_at(std::int64_t x) const {
  if (x == 0) return 0.0;
  const ProfilePoint* p = find(x);
  if (p == nullptr) {
    throw UnknownPointError("x = " + std::to_string(x) +
                            " is not in the profile domain");
  }
  return p->f;
}

double DiscreteProfile::g_at(std::int64_t x) const {
  if (x == 0) return 0.0;
  const ProfilePoint* p = find(x);
  if (p == nullptr) {
    throw UnknownPointError("x = " + std::to_string(x) +
                            " is not in the profile domain");
  }
  return p->g;
}

DiscreteInstance::DiscreteInstance(std::int64_t n,
                                   std::vector<DiscreteProfile> profiles)
    : n_(n), profiles_(std::move(profiles)) {
  require(n_ >= 0, "total size n must be non-negative");
  require(!profiles_.empty(), "instance must contain at least one profile (k >= 1)");
}

std::size_t DiscreteInstance::max_m() const {
  std::size_t m = 0;
  for (const DiscreteProfile& p : profiles_) m = std::max(m, p.size());
  return m;
}

ParetoFrontDiscrete::ParetoFrontDiscrete(std::vector<FrontEntry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    require(entries_[i - 1].obj.e < entries_[i].obj.e,
            "front e values must be strictly increasing");
    require(entries_[i - 1].obj.t > entries_[i].obj.t,
            "front t values must be strictly decreasing");
  }
}

int nonzero_count(const DecisionVector& x) {
  return static_cast<int>(
      std::count_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; }));
}

ObjectivePoint evaluate(const DiscreteInstance& instance,
                        const DecisionVector& x, std::size_t from_level) {
  if (x.size() != instance.k()) {
    throw ValidationError("decision vector length must equal k");
  }
  // Accumulate from the last level upward, matching the solver's bottom-up
  // merge, so both paths produce bit-identical sums.
  ObjectivePoint result{0.0, 0.0};
  for (std::size_t j = instance.k(); j-- > from_level;) {
    const DiscreteProfile& p = instance.profile(j);
    result.t = std::max(result.t, p.f_at(x[j]));
    result.e += p.g_at(x[j]);
  }
  return result;
}

bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) {
  return a.t <= b.t && a.e <= b.e && (a.t < b.t || a.e < b.e);
}

ParetoFrontDiscrete pareto_filter(std::vector<FrontEntry> candidates) {
  if (candidates.empty()) return {};
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const FrontEntry& fa = candidates[a];
    const FrontEntry& fb = candidates[b];
    if (fa.obj.e != fb.obj.e) return fa.obj.e < fb.obj.e;
    if (fa.obj.t != fb.obj.t) return fa.obj.t < fb.obj.t;
    int ka = nonzero_count(fa.x);
    int kb = nonzero_count(fb.x);
    if (ka != kb) return ka < kb;
    return a < b;  // first encountered wins remaining ties
  });

  std::vector<FrontEntry> kept;
  double min_t = std::numeric_limits<double>::infinity();
  const ObjectivePoint* last = nullptr;
  for (std::size_t idx : order) {
    const FrontEntry& entry = candidates[idx];
    if (last != nullptr && entry.obj == *last) continue;  // (t, e) duplicate
    if (entry.obj.t < min_t) {
      kept.push_back(entry);
      min_t = entry.obj.t;
      last = &kept.back().obj;
    }
  }
  return ParetoFrontDiscrete(std::move(kept));
}

std::vector<ObjectivePoint> pareto_filter_points(
    std::vector<ObjectivePoint> points) {
  std::sort(points.begin(), points.end(),
            [](const ObjectivePoint& a, const ObjectivePoint& b) {
              if (a.e != b.e) return a.e < b.e;
              return a.t < b.t;
            });
  std::vector<ObjectivePoint> kept;
  double min_t = std::numeric_limits<double>::infinity();
  for (const ObjectivePoint& p : points) {
    if (p.t < min_t) {
      kept.push_back(p);
      min_t = p.t;
    }
  }
  return kept;
}

}  // namespace paretopart
