#ifndef PARETOPART_TEST_HELPERS_HPP
#define PARETOPART_TEST_HELPERS_HPP

#include <string>

#include "paretopart/types.hpp"

namespace paretopart::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(PARETOPART_FIXTURE_DIR) + "/" + name;
}

/// The k=4, n=4, m=4 regression instance used throughout the suites.
inline DiscreteInstance worked_example() {
  std::vector<DiscreteProfile> profiles;
  profiles.emplace_back(std::vector<ProfilePoint>{
      {1, 5, 3}, {2, 2, 1}, {3, 6, 5}, {4, 5, 6}});
  profiles.emplace_back(std::vector<ProfilePoint>{
      {1, 3, 2}, {2, 6, 1}, {3, 2, 6}, {4, 4, 9}});
  profiles.emplace_back(std::vector<ProfilePoint>{
      {1, 1, 5}, {2, 2, 4}, {3, 3, 8}, {4, 9, 9}});
  profiles.emplace_back(std::vector<ProfilePoint>{
      {1, 1, 1}, {2, 3, 7}, {3, 2, 6}, {4, 6, 8}});
  return DiscreteInstance(4, std::move(profiles));
}

}  // namespace paretopart::testing

#endif  // PARETOPART_TEST_HELPERS_HPP
