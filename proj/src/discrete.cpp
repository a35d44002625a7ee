#include "paretopart/discrete.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "paretopart/core.hpp"

namespace paretopart {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

// ---------------------------------------------------------------------------
// MemoCell
// ---------------------------------------------------------------------------

const ParetoTuple* MemoCell::find_by_e(double key) const {
  auto it = std::lower_bound(
      tuples_.begin(), tuples_.end(), key,
      [](const ParetoTuple& tup, double e) { return tup.e < e; });
  if (it == tuples_.end() || it->e != key) return nullptr;
  return &*it;
}

bool MemoCell::insert(const ParetoTuple& candidate) {
  auto mutating = [this]() {
    if (finalized_) {
      throw std::logic_error("finalized memo cell must not change");
    }
  };

  auto lb = std::lower_bound(
      tuples_.begin(), tuples_.end(), candidate.e,
      [](const ParetoTuple& tup, double e) { return tup.e < e; });

  // Equal e: keep the smaller t; on an exact (t, e) tie keep the smaller
  // kcount.
  if (lb != tuples_.end() && lb->e == candidate.e) {
    if (candidate.t < lb->t) {
      mutating();
      *lb = candidate;
      auto first = std::next(lb);
      auto last = first;
      while (last != tuples_.end() && last->t >= candidate.t) ++last;
      tuples_.erase(first, last);
      return true;
    }
    if (candidate.t == lb->t && candidate.kcount < lb->kcount) {
      mutating();
      *lb = candidate;
      return true;
    }
    return false;
  }

  // The predecessor has smaller e; it dominates the candidate unless its t
  // is strictly larger.
  if (lb != tuples_.begin() && std::prev(lb)->t <= candidate.t) {
    return false;
  }

  mutating();
  auto pos = tuples_.insert(lb, candidate);
  auto first = std::next(pos);
  auto last = first;
  while (last != tuples_.end() && last->t >= candidate.t) ++last;
  tuples_.erase(first, last);
  return true;
}

// ---------------------------------------------------------------------------
// MemoTable
// ---------------------------------------------------------------------------

MemoTable::MemoTable(std::size_t k, std::int64_t n)
    : rows_(k >= 2 ? k - 1 : 0), cols_(n + 1) {
  cells_.resize(rows_ * static_cast<std::size_t>(cols_));
}

MemoCell& MemoTable::cell(std::size_t lvl, std::int64_t w) {
  assert(lvl < rows_ && w >= 0 && w < cols_);
  return cells_[lvl * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(w)];
}

const MemoCell& MemoTable::cell(std::size_t lvl, std::int64_t w) const {
  assert(lvl < rows_ && w >= 0 && w < cols_);
  return cells_[lvl * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(w)];
}

// ---------------------------------------------------------------------------
// Min-max solver
// ---------------------------------------------------------------------------

MinMaxResult min_max_discrete(const DiscreteInstance& instance) {
  const std::size_t k = instance.k();
  const std::int64_t n = instance.n();
  const std::size_t cols = static_cast<std::size_t>(n) + 1;

  // Pass 1: the min-max value. maxval[i][w] is the least achievable
  // max f over levels i..k-1 distributing exactly w.
  std::vector<std::vector<double>> maxval(k + 1,
                                          std::vector<double>(cols, kInf));
  maxval[k][0] = 0.0;
  for (std::size_t i = k; i-- > 0;) {
    const DiscreteProfile& prof = instance.profile(i);
    for (std::size_t w = 0; w < cols; ++w) {
      double best = maxval[i + 1][w];  // x = 0, f(0) = 0
      for (const ProfilePoint& p : prof.points()) {
        if (p.x > static_cast<std::int64_t>(w)) continue;
        const double child = maxval[i + 1][w - static_cast<std::size_t>(p.x)];
        if (child == kInf) continue;
        best = std::min(best, std::max(p.f, child));
      }
      maxval[i][w] = best;
    }
  }
  const double t_min = maxval[0][static_cast<std::size_t>(n)];
  if (t_min == kInf) {
    throw NoFeasiblePartitionError("no combination of domain points sums to n");
  }

  // Pass 2: among assignments with max f <= t_min, minimize the g sum.
  // The pass-1 optimum guarantees feasibility under the cap.
  std::vector<std::vector<double>> sumval(k + 1,
                                          std::vector<double>(cols, kInf));
  std::vector<std::vector<std::int64_t>> choice(
      k, std::vector<std::int64_t>(cols, -1));
  sumval[k][0] = 0.0;
  for (std::size_t i = k; i-- > 0;) {
    const DiscreteProfile& prof = instance.profile(i);
    for (std::size_t w = 0; w < cols; ++w) {
      if (sumval[i + 1][w] < kInf) {
        sumval[i][w] = sumval[i + 1][w];
        choice[i][w] = 0;
      }
      for (const ProfilePoint& p : prof.points()) {
        if (p.x > static_cast<std::int64_t>(w) || p.f > t_min) continue;
        const double child = sumval[i + 1][w - static_cast<std::size_t>(p.x)];
        if (child == kInf) continue;
        if (p.g + child < sumval[i][w]) {
          sumval[i][w] = p.g + child;
          choice[i][w] = p.x;
        }
      }
    }
  }

  MinMaxResult result;
  result.t_min = t_min;
  result.x.assign(k, 0);
  std::int64_t remaining = n;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t x = choice[i][static_cast<std::size_t>(remaining)];
    assert(x >= 0);
    result.x[i] = x;
    remaining -= x;
  }
  assert(remaining == 0);
  return result;
}

// ---------------------------------------------------------------------------
// Bounding criteria and memo operations
// ---------------------------------------------------------------------------

Thresholds size_threshold_calc(const DiscreteInstance& instance,
                               double epsilon) {
  const std::size_t k = instance.k();
  Thresholds thresholds;
  thresholds.epsilon = epsilon;
  thresholds.sigma.assign(k, 0);
  std::int64_t suffix = 0;
  for (std::size_t i = k; i-- > 0;) {
    std::int64_t best = 0;  // empty maximum contributes nothing
    for (const ProfilePoint& p : instance.profile(i).points()) {
      if (p.g <= epsilon) best = std::max(best, p.x);
    }
    suffix += best;
    thresholds.sigma[i] = suffix;
  }
  return thresholds;
}

MemoStatus read_pareto_mem(std::int64_t w, std::size_t lvl, double epsilon,
                           const MemoTable& memo) {
  const MemoCell& cell = memo.cell(lvl, w);
  if (cell.unvisited()) return MemoStatus::Dummy;
  if (cell.no_solution() || cell.tuples().front().e > epsilon) {
    return MemoStatus::NotSolution;
  }
  return MemoStatus::Solution;
}

void make_pareto_final(MemoCell& cell) { cell.finalize(); }

void merge_partial_paretoes(std::int64_t w, std::size_t lvl,
                            std::span<const std::int64_t> parts,
                            MemoTable& memo,
                            const DiscreteInstance& instance) {
  const std::size_t k = instance.k();
  assert(k >= 2 && lvl + 2 <= k);
  MemoCell& pset = (lvl == 0) ? memo.cell(0, 0) : memo.cell(lvl, w);
  const DiscreteProfile& prof = instance.profile(lvl);
  const bool last_merge_level = (lvl + 2 == k);

  for (const std::int64_t x : parts) {
    const double fx = prof.f_at(x);
    const double gx = prof.g_at(x);
    const int kbase = x > 0 ? 1 : 0;

    ParetoTuple leaf_tuple;
    std::span<const ParetoTuple> sub;
    if (last_merge_level) {
      // The child level is the last profile; its "set" is the single
      // point taking the whole remainder.
      const std::int64_t rest = w - x;
      const DiscreteProfile& last = instance.profile(k - 1);
      leaf_tuple = ParetoTuple{last.f_at(rest), last.g_at(rest), rest,
                               rest > 0 ? 1 : 0, std::nullopt};
      sub = {&leaf_tuple, 1};
    } else {
      const MemoCell& child = memo.cell(lvl + 1, w - x);
      assert(child.finalized() && !child.tuples().empty());
      sub = child.tuples();
    }

    for (const ParetoTuple& tup : sub) {
      ParetoTuple candidate;
      candidate.t = std::max(tup.t, fx);
      candidate.e = tup.e + gx;
      candidate.part = x;
      candidate.kcount = kbase + tup.kcount;
      if (!last_merge_level) candidate.key = tup.e;
      pset.insert(candidate);
      // Once the child's t falls to fx, every later child tuple yields the
      // same t with larger e.
      if (tup.t <= fx) break;
    }
  }
}

std::vector<FrontEntry> build_pareto_sols(const MemoTable& memo,
                                          const DiscreteInstance& instance) {
  const std::size_t k = instance.k();
  const std::int64_t n = instance.n();
  std::vector<FrontEntry> out;
  if (memo.rows() == 0) return out;

  for (const ParetoTuple& root : memo.cell(0, 0).tuples()) {
    DecisionVector x(k, 0);
    x[0] = root.part;
    std::int64_t consumed = root.part;
    std::optional<double> key = root.key;
    for (std::size_t i = 1; i + 1 < k; ++i) {
      if (!key.has_value()) {
        throw BrokenChainError("key chain ended before the last memo level");
      }
      const ParetoTuple* sub = memo.cell(i, n - consumed).find_by_e(*key);
      if (sub == nullptr) {
        throw BrokenChainError("key matches no tuple in the child cell");
      }
      x[i] = sub->part;
      consumed += sub->part;
      key = sub->key;
    }
    if (k >= 2) x[k - 1] = n - consumed;
    out.push_back(FrontEntry{ObjectivePoint{root.t, root.e}, std::move(x)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

std::uint64_t SolveStats::total_expansions() const {
  std::uint64_t total = 0;
  for (std::uint64_t v : expansions) total += v;
  return total;
}

std::uint64_t SolveStats::total_kernel_calls() const {
  std::uint64_t total = 0;
  for (std::uint64_t v : kernel_calls) total += v;
  return total;
}

void DiscreteSolver::build_child_lists() {
  const std::size_t k = instance_->k();
  children_.assign(k, {});
  for (std::size_t lvl = 0; lvl < k; ++lvl) {
    const DiscreteProfile& prof = instance_->profile(lvl);
    std::vector<Child>& list = children_[lvl];
    list.reserve(prof.size() + 1);
    list.push_back(Child{0, 0.0, 0.0});
    switch (options_.child_order) {
      case ChildOrder::GValue:
        for (std::uint32_t idx : prof.by_g()) {
          const ProfilePoint& p = prof.points()[idx];
          list.push_back(Child{p.x, p.f, p.g});
        }
        break;
      case ChildOrder::XValue:
        for (const ProfilePoint& p : prof.points()) {
          list.push_back(Child{p.x, p.f, p.g});
        }
        break;
      case ChildOrder::Shuffled: {
        for (const ProfilePoint& p : prof.points()) {
          list.push_back(Child{p.x, p.f, p.g});
        }
        // Hand-rolled Fisher-Yates over the whole list (zero included) so
        // the sequence is identical on every platform.
        std::uint64_t state =
            options_.shuffle_seed * 0x9E3779B97F4A7C15ull + lvl + 1;
        auto next = [&state]() {
          state ^= state >> 12;
          state ^= state << 25;
          state ^= state >> 27;
          return state * 0x2545F4914F6CDD1Dull;
        };
        for (std::size_t i = list.size(); i > 1; --i) {
          std::swap(list[i - 1], list[next() % i]);
        }
        break;
      }
    }
  }
}

bool DiscreteSolver::prepare(const DiscreteInstance& instance) {
  instance_ = &instance;
  const std::size_t k = instance.k();
  stats_ = SolveStats{};
  stats_.kernel_calls.assign(k, 0);
  stats_.expansions.assign(k, 0);
  stats_.memo_hits.assign(k, 0);
  stats_.cut_hits.assign(k, 0);
  min_max_.reset();
  x_cur_.assign(k, 0);
  memo_ = MemoTable(k, instance.n());

  double epsilon = 0.0;
  try {
    min_max_ = min_max_discrete(instance);
    epsilon = options_.epsilon_override.value_or(
        evaluate(instance, min_max_->x).e);
  } catch (const NoFeasiblePartitionError&) {
    if (!options_.epsilon_override.has_value()) {
      thresholds_ = Thresholds{};
      thresholds_.sigma.assign(k, 0);
      return false;
    }
    epsilon = *options_.epsilon_override;
  }
  thresholds_ = size_threshold_calc(instance, epsilon);
  build_child_lists();
  return true;
}

bool DiscreteSolver::run_kernel(std::size_t lvl, std::int64_t w) {
  stats_.kernel_calls[lvl]++;
  const std::size_t k = instance_->k();
  const double epsilon = thresholds_.epsilon;

  if (options_.use_cut && cut(w, thresholds_.sigma[lvl])) {
    stats_.cut_hits[lvl]++;
    if (options_.record_cuts) stats_.cut_nodes.emplace_back(lvl, w);
    return false;
  }

  if (lvl == k - 1) {
    // Leaf: the remainder must be a domain point (or zero) within epsilon.
    if (w == 0) {
      x_cur_[lvl] = 0;
      return true;
    }
    const ProfilePoint* p = instance_->profile(lvl).find(w);
    if (p != nullptr && p->g <= epsilon) {
      x_cur_[lvl] = w;
      return true;
    }
    return false;
  }

  if (options_.use_memo && w != 0 && lvl >= 1) {
    switch (read_pareto_mem(w, lvl, epsilon, memo_)) {
      case MemoStatus::Solution:
        stats_.memo_hits[lvl]++;
        return true;
      case MemoStatus::NotSolution:
        stats_.memo_hits[lvl]++;
        return false;
      case MemoStatus::Dummy:
        break;
    }
  }

  stats_.expansions[lvl]++;
  bool is_sol = false;
  std::vector<std::int64_t> parts;
  const bool g_sorted = options_.child_order == ChildOrder::GValue;
  for (const Child& child : children_[lvl]) {
    if (child.g > epsilon) {
      if (g_sorted) break;  // children are in non-decreasing g order
      continue;
    }
    if (child.x > w) continue;
    x_cur_[lvl] = child.x;
    if (run_kernel(lvl + 1, w - child.x)) {
      is_sol = true;
      parts.push_back(child.x);
    }
  }

  merge_partial_paretoes(w, lvl, parts, memo_, *instance_);
  make_pareto_final(lvl == 0 ? memo_.cell(0, 0) : memo_.cell(lvl, w));
  return is_sol;
}

ParetoFrontDiscrete DiscreteSolver::collect() const {
  return ParetoFrontDiscrete(build_pareto_sols(memo_, *instance_));
}

ParetoFrontDiscrete DiscreteSolver::solve(const DiscreteInstance& instance) {
  const std::size_t k = instance.k();
  if (instance.n() == 0) {
    // Degenerate input: the empty assignment is the whole front.
    prepare(instance);
    return ParetoFrontDiscrete(
        {FrontEntry{ObjectivePoint{0.0, 0.0}, DecisionVector(k, 0)}});
  }
  if (!prepare(instance)) {
    return {};
  }
  if (k == 1) {
    // Single profile: the only candidate assigns everything to it.
    const ProfilePoint* p = instance.profile(0).find(instance.n());
    if (p != nullptr && p->g <= thresholds_.epsilon) {
      return ParetoFrontDiscrete({FrontEntry{ObjectivePoint{p->f, p->g},
                                             DecisionVector{instance.n()}}});
    }
    return {};
  }
  run_kernel(0, instance.n());
  return collect();
}

ParetoFrontDiscrete solve_discrete(const DiscreteInstance& instance) {
  return DiscreteSolver().solve(instance);
}

}  // namespace paretopart
