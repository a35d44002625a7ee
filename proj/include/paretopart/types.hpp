#ifndef PARETOPART_TYPES_HPP
#define PARETOPART_TYPES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace paretopart {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonzero decision value does not appear in the profile's domain.
class UnknownPointError : public Error {
 public:
  using Error::Error;
};

/// A query value lies outside the representable range of a function handle
/// or front.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// The continuous domain bounds cannot absorb the requested total size.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// No combination of discrete domain points sums to the requested total.
class NoFeasiblePartitionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard was exceeded (oracle inputs must stay desk-scale).
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// A memo key chain did not resolve to a stored tuple. Indicates a solver
/// bug; surfaced instead of silently producing a wrong vector.
class BrokenChainError : public Error {
 public:
  using Error::Error;
};

/// An instance violates a documented invariant. The message names it.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// ---------------------------------------------------------------------------
// Discrete problem data
// ---------------------------------------------------------------------------

/// One tabulated point of a discrete profile: both objective values at
/// workload x.
struct ProfilePoint {
  std::int64_t x = 0;
  double f = 0.0;
  double g = 0.0;

  friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

/**
 * One processor's pair of discrete objective functions, given as m points
 * (x, f(x), g(x)) with distinct positive x. No shape assumption: values may
 * be non-monotone. The convention f(0) = g(0) = 0 applies to the implicit
 * zero assignment and is not stored.
 *
 * Immutable after construction. Keeps two orderings over the same points:
 * by x (for lookup) and by g value (the solver's child-enumeration order).
 */
class DiscreteProfile {
 public:
  explicit DiscreteProfile(std::vector<ProfilePoint> points);

  std::size_t size() const { return points_.size(); }

  /// Points sorted by increasing x.
  const std::vector<ProfilePoint>& points() const { return points_; }

  /// Indices into points() sorted by (g, x) increasing.
  std::span<const std::uint32_t> by_g() const { return by_g_; }

  bool contains(std::int64_t x) const { return find(x) != nullptr; }
  const ProfilePoint* find(std::int64_t x) const;

  /// f(x) with f(0) = 0. Throws UnknownPointError for other absent x.
  double f_at(std::int64_t x) const;
  /// g(x) with g(0) = 0. Throws UnknownPointError for other absent x.
  double g_at(std::int64_t x) const;

  std::int64_t max_x() const { return points_.back().x; }

  friend bool operator==(const DiscreteProfile& a, const DiscreteProfile& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<ProfilePoint> points_;   // sorted by x
  std::vector<std::uint32_t> by_g_;    // permutation of points_, sorted by (g, x)
};

/**
 * A discrete bi-objective partitioning instance: distribute the integer
 * total n over k profiles, each part drawn from that profile's domain or
 * zero, minimizing (max f_i(x_i), sum g_i(x_i)).
 */
class DiscreteInstance {
 public:
  DiscreteInstance(std::int64_t n, std::vector<DiscreteProfile> profiles);

  std::int64_t n() const { return n_; }
  std::size_t k() const { return profiles_.size(); }
  const DiscreteProfile& profile(std::size_t i) const { return profiles_.at(i); }
  const std::vector<DiscreteProfile>& profiles() const { return profiles_; }

  /// Largest profile cardinality.
  std::size_t max_m() const;

  friend bool operator==(const DiscreteInstance& a, const DiscreteInstance& b) {
    return a.n_ == b.n_ && a.profiles_ == b.profiles_;
  }

 private:
  std::int64_t n_ = 0;
  std::vector<DiscreteProfile> profiles_;
};

/// Integer decision vector for the discrete problem. Sums to n only at
/// solution emission; intermediate vectors are unconstrained.
using DecisionVector = std::vector<std::int64_t>;

/// A point in the objective space: t is the max objective, e the sum
/// objective.
struct ObjectivePoint {
  double t = 0.0;
  double e = 0.0;

  friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
};

struct FrontEntry {
  ObjectivePoint obj;
  DecisionVector x;

  friend bool operator==(const FrontEntry&, const FrontEntry&) = default;
};

/**
 * An ordered discrete Pareto front: e strictly increasing, t strictly
 * decreasing (entries are mutually non-dominated). Construction validates
 * the ordering.
 */
class ParetoFrontDiscrete {
 public:
  ParetoFrontDiscrete() = default;
  explicit ParetoFrontDiscrete(std::vector<FrontEntry> entries);

  const std::vector<FrontEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const ParetoFrontDiscrete& a,
                         const ParetoFrontDiscrete& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<FrontEntry> entries_;
};

/// Number of nonzero parts in a decision vector (the equal-(t,e) tie-break).
int nonzero_count(const DecisionVector& x);

}  // namespace paretopart

#endif  // PARETOPART_TYPES_HPP
