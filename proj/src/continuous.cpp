#include "paretopart/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace paretopart {

namespace {

void require(bool condition, const char* invariant) {
  if (!condition) {
    throw ValidationError(invariant);
  }
}

/// Bisection inverse on [0, x_max] for a strictly increasing f. The bracket
/// keeps f(lo) <= t <= f(hi); stops once f(mid) is within tol of t.
double bisect_inverse(const FunctionHandle& f, double t, double tol) {
  double lo = 0.0;
  double hi = f.x_max;
  const double atol = tol * std::max(1.0, std::abs(t));
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double v = f.eval(mid);
    if (std::abs(v - t) <= atol) return mid;
    if (v < t) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

/// Inverse clamped to the handle's domain: 0 below f(0), x_max above
/// f(x_max). Total on all of R, monotone non-decreasing.
double inverse_clamped(const FunctionHandle& f, double t, double tol) {
  if (t <= f.eval(0.0)) return 0.0;
  if (t >= f.eval(f.x_max)) return f.x_max;
  if (f.inverse) {
    return std::clamp(f.inverse(t), 0.0, f.x_max);
  }
  return bisect_inverse(f, t, tol);
}

double absorbed_at(std::span<const FunctionHandle> handles, double t,
                   double tol) {
  double sum = 0.0;
  for (const FunctionHandle& f : handles) sum += inverse_clamped(f, t, tol);
  return sum;
}

}  // namespace

FunctionHandle linear_handle(double a, double x_max) {
  require(a > 0.0, "linear f coefficient a must be positive");
  return FunctionHandle{[a](double x) { return a * x; },
                        [a](double t) { return t / a; }, x_max};
}

FunctionHandle power_handle(double a, double p, double x_max) {
  require(a > 0.0 && p > 0.0, "power handle needs a > 0 and p > 0");
  return FunctionHandle{[a, p](double x) { return a * std::pow(x, p); },
                        [a, p](double t) { return std::pow(t / a, 1.0 / p); },
                        x_max};
}

FunctionHandle exp_handle(double c, double x_max) {
  require(c > 0.0, "exponential handle needs c > 0");
  return FunctionHandle{[c](double x) { return std::expm1(c * x); },
                        [c](double t) { return std::log1p(t) / c; }, x_max};
}

FunctionHandle custom_handle(std::function<double(double)> eval,
                             double x_max) {
  return FunctionHandle{std::move(eval), nullptr, x_max};
}

ContinuousInstance::ContinuousInstance(double n, std::vector<FunctionHandle> f,
                                       std::vector<LinearCost> g)
    : n_(n) {
  require(n_ > 0.0 && std::isfinite(n_), "total size n must be positive");
  require(!f.empty(), "instance must contain at least one function (k >= 1)");
  require(f.size() == g.size(), "F and G must have the same dimension k");
  for (const LinearCost& cost : g) {
    require(cost.b > 0.0 && std::isfinite(cost.b),
            "linear cost coefficients b must be positive");
  }
  for (const FunctionHandle& h : f) {
    require(static_cast<bool>(h.eval), "function handle must be evaluable");
    require(h.x_max >= n_, "function domain bound x_max must cover n");
  }

  perm_.resize(f.size());
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  std::stable_sort(perm_.begin(), perm_.end(),
                   [&](std::size_t a, std::size_t c) { return g[a].b > g[c].b; });
  f_.reserve(f.size());
  b_.reserve(f.size());
  for (std::size_t i : perm_) {
    f_.push_back(std::move(f[i]));
    b_.push_back(g[i].b);
  }
}

double inverse_eval(const FunctionHandle& f, double t, double tol_inv) {
  const double f0 = f.eval(0.0);
  const double fmax = f.eval(f.x_max);
  const double slack = tol_inv * std::max(1.0, std::abs(t));
  if (t < f0 - slack || t > fmax + slack) {
    throw OutOfRangeError("t is outside [f(0), f(x_max)]");
  }
  return inverse_clamped(f, t, tol_inv);
}

double min_max_continuous(std::span<const FunctionHandle> f_suffix, double n,
                          double tol_t) {
  require(!f_suffix.empty(), "min-max needs at least one function");
  double capacity = 0.0;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const FunctionHandle& f : f_suffix) {
    capacity += f.x_max;
    lo = std::max(lo, f.eval(0.0));
    hi = std::max(hi, f.eval(std::min(n, f.x_max)));
  }
  if (capacity < n) {
    throw InfeasibleError("domain bounds cannot absorb n");
  }

  const double inner_tol = tol_t * 1e-3;
  if (absorbed_at(f_suffix, lo, inner_tol) >= n) {
    // Every x_i = 0 term already pins the max; the optimum sits at the
    // largest f(0).
    return lo;
  }
  const double atol = tol_t * std::max(1.0, std::abs(hi));
  for (int iter = 0; iter < 200 && hi - lo > atol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (absorbed_at(f_suffix, mid, inner_tol) >= n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ContinuousFront build_front(const ContinuousInstance& instance,
                            const Tolerances& tol) {
  const std::size_t k = instance.k();
  ContinuousFront front;
  front.f_.assign(instance.handles().begin(), instance.handles().end());
  front.b_.resize(k);
  for (std::size_t i = 0; i < k; ++i) front.b_[i] = instance.b(i);
  front.n_ = instance.n();
  front.tol_ = tol;

  std::vector<double> t(k);
  for (std::size_t i = 0; i < k; ++i) {
    t[i] = min_max_continuous(instance.handles().subspan(i), instance.n(),
                              tol.tol_t);
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    require(t[i] < t[i + 1],
            "front breakpoints must be strictly increasing in t");
  }

  front.points_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    double e = instance.b(i) * instance.n();
    for (std::size_t j = i + 1; j < k; ++j) {
      e -= (instance.b(i) - instance.b(j)) *
           inverse_clamped(instance.f(j), t[i], tol.tol_inv);
    }
    front.points_[i] = ObjectivePoint{t[i], e};
  }

  front.segments_.reserve(k > 0 ? k - 1 : 0);
  for (std::size_t s = 0; s + 1 < k; ++s) {
    front.segments_.push_back(FrontSegment{s, t[s], t[s + 1],
                                           front.points_[s].e,
                                           front.points_[s + 1].e});
  }
  return front;
}

double ContinuousFront::value(double t) const {
  const double slack = tol_.tol_front * std::max(1.0, std::abs(t));
  if (t < t_min() - slack || t > t_max() + slack) {
    throw OutOfRangeError("t is outside the front range [t_min, t_max]");
  }
  t = std::clamp(t, t_min(), t_max());
  if (segments_.empty()) {
    return points_.front().e;  // k = 1: a single point
  }
  // Last segment whose lower endpoint does not exceed t.
  auto it = std::upper_bound(
      points_.begin(), points_.end(), t,
      [](double v, const ObjectivePoint& p) { return v < p.t; });
  std::size_t s = static_cast<std::size_t>(
      std::max<std::ptrdiff_t>(0, it - points_.begin() - 1));
  s = std::min(s, segments_.size() - 1);

  double e = b_[s] * n_;
  for (std::size_t j = s + 1; j < f_.size(); ++j) {
    e -= (b_[s] - b_[j]) * inverse_clamped(f_[j], t, tol_.tol_inv);
  }
  return e;
}

double front_value(const ContinuousFront& front, double t) {
  return front.value(t);
}

std::optional<ContinuousSolution> partition(const ContinuousInstance& instance,
                                            double t, const Tolerances& tol) {
  const std::size_t k = instance.k();
  const double n = instance.n();
  const double slack = tol.tol_x * std::max(1.0, n);

  std::vector<double> x(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    x[i] = inverse_clamped(instance.f(i), t, tol.tol_inv);
    total += x[i];
  }

  double n_plus = total - n;
  if (n_plus < -slack) {
    return std::nullopt;  // t below t_min: n cannot be reached at this level
  }
  n_plus = std::max(n_plus, 0.0);
  for (std::size_t i = 0; n_plus > 0.0 && i + 1 < k; ++i) {
    if (x[i] >= n_plus) {
      x[i] -= n_plus;
      n_plus = 0.0;
    } else {
      n_plus -= x[i];
      x[i] = 0.0;
    }
  }
  if (n_plus > slack) {
    return std::nullopt;  // t above t_max: draining x_0..x_{k-2} was not enough
  }

  // Domain-clamped components can absorb n without any f reaching t; such a
  // t lies above the front and has no vector with max = t.
  double t_actual = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    t_actual = std::max(t_actual, instance.f(i).eval(x[i]));
  }
  if (std::abs(t_actual - t) > 1e2 * tol.tol_inv * std::max(1.0, std::abs(t))) {
    return std::nullopt;
  }

  ContinuousSolution solution;
  solution.t = t;
  solution.e = 0.0;
  solution.x.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    solution.e += instance.b(i) * x[i];
    solution.x[instance.caller_index(i)] = x[i];
  }
  return solution;
}

}  // namespace paretopart
