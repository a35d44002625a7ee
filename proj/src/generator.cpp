#include "paretopart/generator.hpp"

#include <algorithm>
#include <set>

namespace paretopart {

namespace {

// Small hand-rolled generator (splitmix seeding + xorshift step) so that a
// given seed produces identical instance bytes on every platform.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) {
    state = seed + 0x9E3779B97F4A7C15ull;
    next();
    next();
  }

  std::uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
  }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Floyd's sampling: m distinct values from 1..n, O(m) memory.
std::vector<std::int64_t> sample_sizes(Rng& rng, std::size_t m,
                                       std::int64_t n) {
  std::set<std::int64_t> chosen;
  for (std::int64_t j = n - static_cast<std::int64_t>(m) + 1; j <= n; ++j) {
    const std::int64_t r = 1 + static_cast<std::int64_t>(
                                   rng.below(static_cast<std::uint64_t>(j)));
    if (!chosen.insert(r).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<double> sorted_values(Rng& rng, std::size_t m) {
  std::vector<double> values(m);
  for (double& v : values) v = rng.uniform(0.0, 100.0);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

ProfileShape profile_shape_from_string(const std::string& name) {
  if (name == "monotone") return ProfileShape::Monotone;
  if (name == "noisy") return ProfileShape::Noisy;
  if (name == "adversarial") return ProfileShape::Adversarial;
  throw ValidationError("unknown profile shape \"" + name + "\"");
}

std::string to_string(ProfileShape shape) {
  switch (shape) {
    case ProfileShape::Monotone:
      return "monotone";
    case ProfileShape::Noisy:
      return "noisy";
    case ProfileShape::Adversarial:
      return "adversarial";
  }
  return "noisy";
}

bool profile_is_monotone(const DiscreteProfile& profile) {
  const auto& points = profile.points();
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].f < points[i - 1].f || points[i].g < points[i - 1].g) {
      return false;
    }
  }
  return true;
}

DiscreteInstance generate_instance(const GenConfig& config) {
  if (config.k < 1 || config.m < 1 || config.n < 1) {
    throw ValidationError("generator needs k, m, n >= 1");
  }
  if (static_cast<std::int64_t>(config.m) > config.n) {
    throw ValidationError("m distinct x values need m <= n");
  }

  Rng rng(config.seed);
  std::vector<DiscreteProfile> profiles;
  profiles.reserve(config.k);
  for (std::size_t i = 0; i < config.k; ++i) {
    const std::vector<std::int64_t> sizes = sample_sizes(rng, config.m, config.n);
    std::vector<ProfilePoint> points(config.m);
    for (std::size_t j = 0; j < config.m; ++j) points[j].x = sizes[j];

    switch (config.shape) {
      case ProfileShape::Monotone: {
        const std::vector<double> f = sorted_values(rng, config.m);
        const std::vector<double> g = sorted_values(rng, config.m);
        for (std::size_t j = 0; j < config.m; ++j) {
          points[j].f = f[j];
          points[j].g = g[j];
        }
        break;
      }
      case ProfileShape::Noisy: {
        const std::vector<double> f = sorted_values(rng, config.m);
        const std::vector<double> g = sorted_values(rng, config.m);
        for (std::size_t j = 0; j < config.m; ++j) {
          points[j].f = std::max(0.0, f[j] * rng.uniform(0.85, 1.15));
          points[j].g = std::max(0.0, g[j] * rng.uniform(0.85, 1.15));
        }
        break;
      }
      case ProfileShape::Adversarial: {
        for (std::size_t j = 0; j < config.m; ++j) {
          points[j].f = rng.uniform(0.0, 100.0);
          points[j].g = rng.uniform(0.0, 100.0);
        }
        if (i == 0 && config.m >= 2) {
          // Guarantee a descending step in the first profile.
          if (points[0].f <= points[1].f) {
            points[0].f = points[1].f + 1.0;
          }
        }
        break;
      }
    }
    profiles.emplace_back(std::move(points));
  }
  return DiscreteInstance(config.n, std::move(profiles));
}

}  // namespace paretopart
