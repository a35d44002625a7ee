#ifndef PARETOPART_GENERATOR_HPP
#define PARETOPART_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "paretopart/types.hpp"

namespace paretopart {

enum class ProfileShape { Monotone, Noisy, Adversarial };

ProfileShape profile_shape_from_string(const std::string& name);
std::string to_string(ProfileShape shape);

struct GenConfig {
  std::size_t k = 1;
  std::size_t m = 1;
  std::int64_t n = 1;
  std::uint64_t seed = 0;
  ProfileShape shape = ProfileShape::Noisy;
};

/**
 * Deterministic synthetic instance: per profile, m distinct x values
 * sampled from 1..n and f, g values in [0, 100] shaped per config.
 * Monotone profiles are increasing in x, Noisy ones mostly so, and
 * Adversarial ones are unordered with profile 0 guaranteed non-monotone
 * when m >= 2. Identical config yields identical bytes on every platform.
 */
DiscreteInstance generate_instance(const GenConfig& config);

/// True iff both value columns are non-decreasing in x.
bool profile_is_monotone(const DiscreteProfile& profile);

}  // namespace paretopart

#endif  // PARETOPART_GENERATOR_HPP
