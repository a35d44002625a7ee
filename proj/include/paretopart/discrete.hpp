#ifndef PARETOPART_DISCRETE_HPP
#define PARETOPART_DISCRETE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "paretopart/types.hpp"

namespace paretopart {

// ---------------------------------------------------------------------------
// Memo table
// ---------------------------------------------------------------------------

/**
 * One memoized partial solution for a (level, remaining-size) node:
 * t and e are the suffix objective values, part the size assigned at this
 * level, kcount the number of nonzero parts, and key the e value of the
 * child tuple one level down (absent at the last merged level).
 */
struct ParetoTuple {
  double t = 0.0;
  double e = 0.0;
  std::int64_t part = 0;
  int kcount = 0;
  std::optional<double> key;

  friend bool operator==(const ParetoTuple&, const ParetoTuple&) = default;
};

/**
 * One memo cell: the partial Pareto set of a (level, remaining-size) node,
 * kept sorted by increasing e with strictly decreasing t. An empty
 * non-finalized cell is unvisited; an empty finalized cell is the
 * no-solution sentinel.
 */
class MemoCell {
 public:
  const std::vector<ParetoTuple>& tuples() const { return tuples_; }
  bool finalized() const { return finalized_; }
  bool no_solution() const { return finalized_ && tuples_.empty(); }
  bool unvisited() const { return !finalized_ && tuples_.empty(); }

  /**
   * Inserts a candidate, maintaining the cell invariants: rejects dominated
   * candidates, purges newly dominated tuples, replaces an equal-e tuple
   * with smaller t, and breaks exact (t, e) ties by smaller kcount.
   * Returns true iff the cell content changed.
   */
  bool insert(const ParetoTuple& candidate);

  void finalize() { finalized_ = true; }

  /// Tuple whose e equals key exactly, or nullptr.
  const ParetoTuple* find_by_e(double key) const;

 private:
  std::vector<ParetoTuple> tuples_;
  bool finalized_ = false;
};

/**
 * The (level, remaining size) memo matrix: rows 0..k-2, columns 0..n.
 * Rows 1..k-2 memoize partial fronts; row 0 holds only the root cell at
 * column 0.
 */
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(std::size_t k, std::int64_t n);

  MemoCell& cell(std::size_t lvl, std::int64_t w);
  const MemoCell& cell(std::size_t lvl, std::int64_t w) const;

  std::size_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

 private:
  std::size_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<MemoCell> cells_;
};

// ---------------------------------------------------------------------------
// Bounding criteria
// ---------------------------------------------------------------------------

/// Sum threshold and per-level size thresholds.
struct Thresholds {
  double epsilon = 0.0;
  std::vector<std::int64_t> sigma;
};

struct MinMaxResult {
  DecisionVector x;
  double t_min = 0.0;
};

/**
 * Solves the discrete min-max problem: X minimizing max f_i(x_i) subject to
 * sum x_i = n, x_i in D_i or 0; among minimizers returns one minimizing
 * sum g_i(x_i). Two DP passes over a (level, remaining-size) table, O(k*n*m).
 *
 * Throws NoFeasiblePartitionError when no combination sums to n.
 */
MinMaxResult min_max_discrete(const DiscreteInstance& instance);

/**
 * Size thresholds per level: sigma_i = sigma_{i+1} + max{x in D_i :
 * g_i(x) <= epsilon}, with 0 for an empty maximum. sigma_i bounds the
 * remaining size solvable from level i without any g contribution
 * exceeding epsilon.
 */
Thresholds size_threshold_calc(const DiscreteInstance& instance,
                               double epsilon);

/// True iff remaining size w exceeds the level's size threshold.
inline bool cut(std::int64_t w, std::int64_t sigma_lvl) {
  return w > sigma_lvl;
}

enum class MemoStatus { Dummy, Solution, NotSolution };

/**
 * Memo lookup for (lvl, w): Dummy if unvisited, NotSolution if the cell is
 * the no-solution sentinel or its best e exceeds epsilon, Solution
 * otherwise.
 */
MemoStatus read_pareto_mem(std::int64_t w, std::size_t lvl, double epsilon,
                           const MemoTable& memo);

/// Marks the cell finalized; an empty cell becomes the no-solution sentinel.
void make_pareto_final(MemoCell& cell);

/**
 * Builds the partial Pareto set of node (lvl, w) from the child sets of the
 * sizes in parts (each of which led to a child solution). For lvl < k-2 the
 * child set is the memo cell (lvl+1, w-x); at lvl = k-2 it is synthesized
 * from the last profile on size w-x. Root results (lvl = 0) are stored in
 * cell (0, 0).
 */
void merge_partial_paretoes(std::int64_t w, std::size_t lvl,
                            std::span<const std::int64_t> parts,
                            MemoTable& memo, const DiscreteInstance& instance);

/**
 * Reconstructs one full decision vector per root tuple by following key
 * chains down the memo table. Throws BrokenChainError if a key resolves to
 * no tuple.
 */
std::vector<FrontEntry> build_pareto_sols(const MemoTable& memo,
                                          const DiscreteInstance& instance);

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

/// Child-enumeration order within a level. Correctness is order
/// independent; GValue is the default and allows the epsilon scan to stop
/// early.
enum class ChildOrder { GValue, XValue, Shuffled };

struct SolveOptions {
  bool use_memo = true;
  bool use_cut = true;
  /// Replaces the sum threshold derived from the min-max solution. With an
  /// override the kernel runs even when no feasible partition exists.
  std::optional<double> epsilon_override;
  ChildOrder child_order = ChildOrder::GValue;
  std::uint64_t shuffle_seed = 0;
  /// Record every (lvl, w) rejected by cut.
  bool record_cuts = false;
};

struct SolveStats {
  std::vector<std::uint64_t> kernel_calls;  // per level
  std::vector<std::uint64_t> expansions;    // calls that enumerated children
  std::vector<std::uint64_t> memo_hits;     // Solution or NotSolution reads
  std::vector<std::uint64_t> cut_hits;
  std::vector<std::pair<std::size_t, std::int64_t>> cut_nodes;

  std::uint64_t total_expansions() const;
  std::uint64_t total_kernel_calls() const;
};

/**
 * Branch-and-bound solver for the discrete problem. A solver instance owns
 * its memo table and statistics for the duration of one solve; distinct
 * solvers may run concurrently on distinct instances.
 *
 * The usual entry point is solve(). prepare()/run_kernel()/collect() expose
 * the same steps individually for tests and instrumentation; the instance
 * passed to prepare() must outlive those calls.
 */
class DiscreteSolver {
 public:
  DiscreteSolver() = default;
  explicit DiscreteSolver(SolveOptions options) : options_(options) {}

  ParetoFrontDiscrete solve(const DiscreteInstance& instance);

  /**
   * Computes the min-max solution, thresholds and a fresh memo table.
   * Returns false when no feasible partition exists and no epsilon override
   * is set (the front is empty and the kernel need not run).
   */
  bool prepare(const DiscreteInstance& instance);

  /// Recursive kernel over (lvl, remaining w). True iff the subtree holds a
  /// solution whose per-level g contributions stay within epsilon.
  bool run_kernel(std::size_t lvl, std::int64_t w);

  /// Assembles the front from the root memo cell.
  ParetoFrontDiscrete collect() const;

  const SolveOptions& options() const { return options_; }
  const MemoTable& memo() const { return memo_; }
  const SolveStats& stats() const { return stats_; }
  const Thresholds& thresholds() const { return thresholds_; }
  double epsilon() const { return thresholds_.epsilon; }
  const std::optional<MinMaxResult>& min_max() const { return min_max_; }

 private:
  struct Child {
    std::int64_t x;
    double f;
    double g;
  };

  void build_child_lists();

  SolveOptions options_;
  const DiscreteInstance* instance_ = nullptr;
  MemoTable memo_;
  SolveStats stats_;
  Thresholds thresholds_;
  std::optional<MinMaxResult> min_max_;
  DecisionVector x_cur_;
  std::vector<std::vector<Child>> children_;  // per level, enumeration order
};

/// One-shot solve with default options.
ParetoFrontDiscrete solve_discrete(const DiscreteInstance& instance);

}  // namespace paretopart

#endif  // PARETOPART_DISCRETE_HPP
