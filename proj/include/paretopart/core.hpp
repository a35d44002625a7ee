#ifndef PARETOPART_CORE_HPP
#define PARETOPART_CORE_HPP

#include <cstddef>
#include <vector>

#include "paretopart/types.hpp"

namespace paretopart {

/**
 * Evaluates the objective pair of the suffix of X starting at from_level:
 * (max_{j>=from_level} f_j(x_j), sum_{j>=from_level} g_j(x_j)), with the
 * convention f(0) = g(0) = 0. An empty suffix evaluates to (0, 0).
 *
 * Throws UnknownPointError if some nonzero x_j is not in profile j's domain.
 */
ObjectivePoint evaluate(const DiscreteInstance& instance,
                        const DecisionVector& x,
                        std::size_t from_level = 0);

/// True iff a is at least as good as b in both objectives and strictly
/// better in one.
bool dominates(const ObjectivePoint& a, const ObjectivePoint& b);

/**
 * Reduces candidates to their maximal non-dominated subset, sorted by
 * increasing e. Among candidates with identical (t, e) the one with the
 * fewest nonzero parts is kept; remaining ties keep the first encountered.
 */
ParetoFrontDiscrete pareto_filter(std::vector<FrontEntry> candidates);

/// Non-dominated subset of bare objective points, sorted by increasing e.
std::vector<ObjectivePoint> pareto_filter_points(
    std::vector<ObjectivePoint> points);

}  // namespace paretopart

#endif  // PARETOPART_CORE_HPP
