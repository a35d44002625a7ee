#ifndef PARETOPART_ORACLE_HPP
#define PARETOPART_ORACLE_HPP

#include "paretopart/continuous.hpp"
#include "paretopart/types.hpp"

namespace paretopart {
namespace oracle {

/**
 * Reference front by full enumeration of every vector in the product of
 * {0} union D_i with sum n. No pruning beyond arithmetic necessity; its
 * value is independence from the solver's logic.
 *
 * Throws TooLargeError when the product of (m_i + 1) exceeds 10^7.
 */
ParetoFrontDiscrete brute_force_pareto(const DiscreteInstance& instance);

/**
 * Non-dominated objective points over a simplex grid of partitions at
 * resolution n/steps. Guarded to k <= 3.
 */
std::vector<ObjectivePoint> continuous_grid_oracle(
    const ContinuousInstance& instance, int steps);

}  // namespace oracle
}  // namespace paretopart

#endif  // PARETOPART_ORACLE_HPP
