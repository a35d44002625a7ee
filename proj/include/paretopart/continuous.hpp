#ifndef PARETOPART_CONTINUOUS_HPP
#define PARETOPART_CONTINUOUS_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "paretopart/types.hpp"

namespace paretopart {

/**
 * A strictly increasing evaluable function on [0, x_max] with an optional
 * closed-form inverse. When no inverse is supplied, inversion falls back to
 * bisection.
 */
struct FunctionHandle {
  std::function<double(double)> eval;
  std::function<double(double)> inverse;  // may be empty
  double x_max = 0.0;
};

FunctionHandle linear_handle(double a, double x_max);
/// a * x^p with p > 0.
FunctionHandle power_handle(double a, double p, double x_max);
/// exp(c * x) - 1 with c > 0.
FunctionHandle exp_handle(double c, double x_max);
/// Handle without a closed-form inverse; inversion uses bisection.
FunctionHandle custom_handle(std::function<double(double)> eval, double x_max);

/// Linear sum-objective cost g(x) = b * x with b > 0.
struct LinearCost {
  double b = 0.0;
};

struct Tolerances {
  double tol_t = 1e-10;     // relative, min-max bisection
  double tol_inv = 1e-10;   // relative, function inversion
  double tol_x = 1e-8;      // times n, partition feasibility slack
  double tol_front = 1e-6;  // relative, front consistency
};

/**
 * A continuous instance: distribute the real total n over k functions,
 * minimizing (max f_i(x_i), sum b_i * x_i). Internally the handles are
 * ordered by decreasing b (stable among equal coefficients); the stored
 * permutation restores caller order on output.
 */
class ContinuousInstance {
 public:
  ContinuousInstance(double n, std::vector<FunctionHandle> f,
                     std::vector<LinearCost> g);

  double n() const { return n_; }
  std::size_t k() const { return f_.size(); }

  // Solver-order accessors (b non-increasing).
  const FunctionHandle& f(std::size_t i) const { return f_.at(i); }
  double b(std::size_t i) const { return b_.at(i); }
  std::span<const FunctionHandle> handles() const { return f_; }

  /// Caller index of solver position i.
  std::size_t caller_index(std::size_t i) const { return perm_.at(i); }

 private:
  double n_ = 0.0;
  std::vector<FunctionHandle> f_;  // sorted by b descending
  std::vector<double> b_;
  std::vector<std::size_t> perm_;  // solver index -> caller index
};

struct FrontSegment {
  std::size_t s = 0;  // segment index, valid on [t_lo, t_hi]
  double t_lo = 0.0;
  double t_hi = 0.0;
  double e_lo = 0.0;
  double e_hi = 0.0;
};

/**
 * The analytic Pareto front of a continuous instance: k breakpoints
 * (t_i, e_i) with t strictly increasing and e non-increasing, joined by
 * k-1 segments on which e = b_s * n - sum_{j>s} (b_s - b_j) * f_j^{-1}(t).
 */
class ContinuousFront {
 public:
  const std::vector<ObjectivePoint>& breakpoints() const { return points_; }
  const std::vector<FrontSegment>& segments() const { return segments_; }
  double t_min() const { return points_.front().t; }
  double t_max() const { return points_.back().t; }

  /// Evaluates the front at t in [t_min, t_max]. Throws OutOfRangeError.
  double value(double t) const;

 private:
  friend ContinuousFront build_front(const ContinuousInstance&, const Tolerances&);

  std::vector<ObjectivePoint> points_;
  std::vector<FrontSegment> segments_;
  std::vector<FunctionHandle> f_;  // solver order, for segment evaluation
  std::vector<double> b_;
  double n_ = 0.0;
  Tolerances tol_;
};

/**
 * Inverts a strictly increasing handle: returns x with
 * |f(x) - t| <= tol_inv * max(1, t). Uses the closed-form inverse when
 * present, bisection on [0, x_max] otherwise.
 *
 * Throws OutOfRangeError if t is outside [f(0), f(x_max)].
 */
double inverse_eval(const FunctionHandle& f, double t, double tol_inv = 1e-10);

/**
 * Minimum over feasible suffix assignments of max_j f_j(x_j) subject to
 * sum x_j = n, x_j in [0, x_max_j]. For strictly increasing functions this
 * is the smallest t whose inverse images absorb n, found by bisection.
 *
 * Throws InfeasibleError if sum_j x_max_j < n.
 */
double min_max_continuous(std::span<const FunctionHandle> f_suffix, double n,
                          double tol_t = 1e-10);

/// Builds the analytic Pareto front (k breakpoints, k-1 segments).
ContinuousFront build_front(const ContinuousInstance& instance,
                      const Tolerances& tol = {});

struct ContinuousSolution {
  double t = 0.0;
  double e = 0.0;
  std::vector<double> x;  // caller order
};

/**
 * Finds the Pareto-optimal decision vector at max-objective level t:
 * initializes x_i = f_i^{-1}(t) and drains the surplus from the costliest
 * coefficients downward. Returns nullopt when t is below t_min or above
 * t_max (no vector attains max = t with sum = n).
 */
std::optional<ContinuousSolution> partition(const ContinuousInstance& instance,
                                            double t,
                                            const Tolerances& tol = {});

/// Front evaluation as a free operation; equivalent to front.value(t).
double front_value(const ContinuousFront& front, double t);

}  // namespace paretopart

#endif  // PARETOPART_CONTINUOUS_HPP
