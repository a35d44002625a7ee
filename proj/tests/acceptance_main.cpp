// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "paretopart/continuous.hpp"
#include "paretopart/core.hpp"
#include "paretopart/discrete.hpp"
#include "paretopart/generator.hpp"
#include "paretopart/io.hpp"
#include "paretopart/oracle.hpp"

using namespace paretopart;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string fixture(const std::string& name) {
  return std::string(PARETOPART_FIXTURE_DIR) + "/" + name;
}

ParetoFrontDiscrete expected_worked_example_front() {
  return ParetoFrontDiscrete({
      FrontEntry{{6, 2}, {2, 2, 0, 0}},
      FrontEntry{{3, 4}, {2, 1, 0, 1}},
      FrontEntry{{2, 5}, {2, 0, 2, 0}},
  });
}

/// Seeded corpus spanning k in 1..5, m in 1..6, n in 1..30 with all three
/// profile shapes; every tenth instance is rebuilt on even-only domains with
/// an odd total, which admits no partition at all.
std::vector<DiscreteInstance> build_corpus(std::size_t count) {
  std::vector<DiscreteInstance> corpus;
  corpus.reserve(count);
  for (std::uint64_t seed = 0; corpus.size() < count; ++seed) {
    GenConfig config;
    config.seed = seed;
    config.k = 1 + seed % 5;
    config.m = 1 + (seed / 5) % 6;
    config.n = 1 + static_cast<std::int64_t>((seed * 2654435761ull) % 30);
    if (static_cast<std::int64_t>(config.m) > config.n) {
      config.m = static_cast<std::size_t>(config.n);
    }
    config.shape = static_cast<ProfileShape>(seed % 3);
    DiscreteInstance inst = generate_instance(config);
    if (seed % 10 == 7) {
      // Even-only domains, odd total: infeasible by parity.
      std::vector<DiscreteProfile> even;
      for (const DiscreteProfile& p : inst.profiles()) {
        std::vector<ProfilePoint> pts = p.points();
        for (ProfilePoint& point : pts) point.x *= 2;
        even.emplace_back(std::move(pts));
      }
      inst = DiscreteInstance(2 * inst.n() + 1, std::move(even));
    }
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

// --------------------------------------------------------------------------
// 1. Worked-example regression
// --------------------------------------------------------------------------
void criterion1(Criterion& c) {
  const auto start = Clock::now();
  const ParsedInstance parsed = parse_instance(fixture("worked_example.json"));
  DiscreteSolver solver;
  const ParetoFrontDiscrete front = solver.solve(*parsed.discrete);
  const double elapsed = ms_since(start);

  c.expect(front == expected_worked_example_front(),
           "front differs from the quoted three members");
  c.expect(solver.min_max().has_value() &&
               solver.min_max()->x == DecisionVector{2, 0, 2, 0},
           "min-max vector is not {2,0,2,0}");
  c.expect(solver.epsilon() == 5.0, "sum threshold is not 5");
  c.expect(solver.thresholds().sigma == std::vector<std::int64_t>{8, 5, 3, 1},
           "size thresholds are not {8,5,3,1}");
  c.expect(elapsed < 100.0, "solve took >= 0.1 s");
}

// --------------------------------------------------------------------------
// 2. Memo-cell regression
// --------------------------------------------------------------------------
void criterion2(Criterion& c) {
  const ParsedInstance parsed = parse_instance(fixture("worked_example.json"));
  DiscreteSolver solver;
  solver.solve(*parsed.discrete);
  const MemoTable& memo = solver.memo();

  const std::vector<ParetoTuple> cell22 = {{2, 4, 2, 1, std::nullopt},
                                           {1, 6, 1, 2, std::nullopt}};
  const std::vector<ParetoTuple> cell23 = {{2, 5, 2, 2, std::nullopt}};
  const std::vector<ParetoTuple> cell14 = {{6, 5, 2, 2, 4.0},
                                           {3, 7, 1, 3, 5.0}};
  c.expect(memo.cell(2, 2).tuples() == cell22,
           "cell (2,2) != {<2,4,2,1>,<1,6,1,2>}");
  c.expect(memo.cell(2, 3).tuples() == cell23, "cell (2,3) != {<2,5,2,2>}");
  c.expect(memo.cell(1, 4).tuples() == cell14,
           "cell (1,4) != {<6,5,2,2,key=4>,<3,7,1,3,key=5>}");
}

// --------------------------------------------------------------------------
// 3. Oracle equivalence across the randomized corpus
// --------------------------------------------------------------------------
void criterion3(Criterion& c, const std::vector<DiscreteInstance>& corpus) {
  const auto start = Clock::now();
  std::size_t empty_fronts = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ParetoFrontDiscrete reference = oracle::brute_force_pareto(corpus[i]);
    const ParetoFrontDiscrete solved = solve_discrete(corpus[i]);
    if (reference.empty()) ++empty_fronts;
    if (solved != reference) {
      c.expect(false, "mismatch on corpus instance " + std::to_string(i));
      return;
    }
  }
  c.expect(empty_fronts >= 25, "corpus lacks infeasible cases");
  const double elapsed = ms_since(start);
  c.expect(elapsed < 60000.0, "corpus run took >= 60 s");
  c.detail << corpus.size() << " instances, " << empty_fronts
           << " infeasible, " << static_cast<int>(elapsed) << " ms";
}

// --------------------------------------------------------------------------
// 4. Front-size bound
// --------------------------------------------------------------------------
void criterion4(Criterion& c, const std::vector<DiscreteInstance>& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ParetoFrontDiscrete front = solve_discrete(corpus[i]);
    if (front.size() > corpus[i].k() * corpus[i].max_m()) {
      c.expect(false, "front exceeds k*m on instance " + std::to_string(i));
      return;
    }
  }

  // Randomized search for an instance whose front fills half the bound.
  const std::size_t k = 2;
  const std::size_t m = 4;
  const std::size_t target = (k * m + 1) / 2;
  bool found = false;
  for (std::uint64_t seed = 0; seed < 1000 && !found; ++seed) {
    GenConfig config{k, m, 6, seed, ProfileShape::Adversarial};
    const DiscreteInstance inst = generate_instance(config);
    const ParetoFrontDiscrete front = oracle::brute_force_pareto(inst);
    if (front.size() >= target) {
      found = true;
      c.expect(solve_discrete(inst) == front, "solver differs on the witness");
      c.detail << "witness seed " << seed << " with |front| = " << front.size()
               << " >= " << target;
    }
  }
  c.expect(found, "no instance with |front| >= k*m/2 found in 1000 seeds");
}

// --------------------------------------------------------------------------
// 5. Memoization and pruning soundness
// --------------------------------------------------------------------------
void criterion5(Criterion& c, const std::vector<DiscreteInstance>& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    SolveOptions both_off;
    both_off.use_memo = false;
    both_off.use_cut = false;
    SolveOptions memo_off = both_off;
    memo_off.use_cut = true;
    SolveOptions cut_off = both_off;
    cut_off.use_memo = true;

    DiscreteSolver with_both;
    DiscreteSolver without_memo(memo_off);
    DiscreteSolver without_cut(cut_off);
    DiscreteSolver without_both(both_off);

    const ParetoFrontDiscrete base = with_both.solve(corpus[i]);
    const bool same = without_memo.solve(corpus[i]) == base &&
                      without_cut.solve(corpus[i]) == base &&
                      without_both.solve(corpus[i]) == base;
    if (!same) {
      c.expect(false, "toggled fronts differ on instance " + std::to_string(i));
      return;
    }
    if (with_both.stats().total_expansions() >
        without_both.stats().total_expansions()) {
      c.expect(false, "pruned run expanded more nodes on instance " +
                          std::to_string(i));
      return;
    }
  }

  // Saturated-domain recursion counts: with memoization alone, per-level
  // expansions follow L*m+1 and leaf calls (m*(k-2)+1)*(m+1), independent
  // of n once n exceeds the largest reachable size.
  const std::size_t k = 4;
  const std::int64_t m = 3;
  std::vector<DiscreteProfile> profiles;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<ProfilePoint> pts;
    for (std::int64_t x = 1; x <= m; ++x) {
      pts.push_back({x, 1.0 + static_cast<double>(7 * i + x),
                     1.0 + static_cast<double>(5 * i + 2 * x)});
    }
    profiles.emplace_back(std::move(pts));
  }

  std::vector<std::vector<std::uint64_t>> expansions;
  for (const std::int64_t n : {40, 80}) {
    const DiscreteInstance saturated(n, std::vector<DiscreteProfile>(profiles));
    SolveOptions opts;
    opts.use_cut = false;
    opts.epsilon_override = std::numeric_limits<double>::infinity();
    DiscreteSolver solver(opts);
    const ParetoFrontDiscrete front = solver.solve(saturated);
    c.expect(front.empty(), "saturated instance should have no partition");

    const SolveStats& stats = solver.stats();
    for (std::size_t lvl = 0; lvl + 1 < k; ++lvl) {
      c.expect(stats.expansions[lvl] ==
                   static_cast<std::uint64_t>(lvl) * m + 1,
               "level " + std::to_string(lvl) + " expansions != L*m+1");
    }
    c.expect(stats.kernel_calls[k - 1] ==
                 static_cast<std::uint64_t>((m * (k - 2) + 1) * (m + 1)),
             "leaf calls != C#(k-2)*(m+1)");
    c.expect(stats.memo_hits[1] == 0, "level 1 memo hits != 0");
    c.expect(stats.memo_hits[2] == static_cast<std::uint64_t>(m * m),
             "level 2 memo hits != m^2");
    expansions.push_back(stats.expansions);
  }
  c.expect(expansions[0] == expansions[1],
           "expansions grew with n beyond saturation");
}

// --------------------------------------------------------------------------
// 6. Continuous analytic check
// --------------------------------------------------------------------------
void criterion6(Criterion& c) {
  const ParsedInstance parsed = parse_instance(fixture("linear_k2.json"));
  const ContinuousInstance fixture_inst = parsed.linear->make_instance();
  const ContinuousFront front = build_front(fixture_inst);

  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-6; };
  c.expect(front.breakpoints().size() == 2 &&
               near(front.breakpoints()[0].t, 5.0) &&
               near(front.breakpoints()[0].e, 15.0) &&
               near(front.breakpoints()[1].t, 10.0) &&
               near(front.breakpoints()[1].e, 10.0),
           "fixture breakpoints differ from (5,15),(10,10)");
  bool samples_ok = true;
  for (double t = 5.0; t <= 10.0; t += 0.05) {
    samples_ok = samples_ok && std::abs(front.value(t) - (20.0 - t)) <= 1e-6;
  }
  c.expect(samples_ok, "fixture front is not e = 20 - t");

  const auto at7 = partition(fixture_inst, 7.0);
  c.expect(at7.has_value() && near(at7->x[0], 3.0) && near(at7->x[1], 7.0) &&
               near(at7->e, 13.0),
           "partition(7) != ({3,7}, e=13)");

  // Random all-linear instances against the closed-form piecewise front.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    const double n = 4.0 + 16.0 * unit(rng);
    std::vector<double> a(k);
    std::vector<double> b(k);
    std::vector<FunctionHandle> f;
    std::vector<LinearCost> g;
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = 0.25 + 4.0 * unit(rng);
      b[i] = 0.25 + 4.0 * unit(rng);
      f.push_back(linear_handle(a[i], n));
      g.push_back(LinearCost{b[i]});
    }
    const ContinuousInstance inst(n, f, g);
    const ContinuousFront lf = build_front(inst);

    // Closed form, computed independently: sort by b descending, then
    // t_i = n / sum_{j>=i} 1/a_j and e = b_s*n - t * sum_{j>s}(b_s-b_j)/a_j.
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return b[l] > b[r]; });
    std::vector<double> sa(k);
    std::vector<double> sb(k);
    for (std::size_t i = 0; i < k; ++i) {
      sa[i] = a[order[i]];
      sb[i] = b[order[i]];
    }
    std::vector<double> bp(k);
    for (std::size_t i = 0; i < k; ++i) {
      double inv = 0.0;
      for (std::size_t j = i; j < k; ++j) inv += 1.0 / sa[j];
      bp[i] = n / inv;
    }

    bool ok = true;
    for (int s = 0; s <= 50; ++s) {
      const double t = bp.front() + (bp.back() - bp.front()) * s / 50.0;
      std::size_t seg = 0;
      while (seg + 2 < k && t >= bp[seg + 1]) ++seg;
      double expected = sb[seg] * n;
      for (std::size_t j = seg + 1; j < k; ++j) {
        expected -= (sb[seg] - sb[j]) * t / sa[j];
      }
      const double actual = lf.value(t);
      ok = ok && std::abs(actual - expected) <=
                     1e-6 * std::max(1.0, std::abs(expected));
    }
    if (!ok) {
      c.expect(false, "linear closed form mismatch on trial " +
                          std::to_string(trial));
      return;
    }
  }
}

// --------------------------------------------------------------------------
// 7. Continuous oracle check (nonlinear handles, k <= 3)
// --------------------------------------------------------------------------
void criterion7(Criterion& c) {
  const auto start = Clock::now();
  const int steps = 200;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    const double n = 4.0 + 12.0 * unit(rng);
    std::vector<FunctionHandle> f;
    std::vector<LinearCost> g;
    double max_b = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (rng() % 2 == 0) {
        f.push_back(power_handle(0.3 + 2.0 * unit(rng),
                                 1.5 + 1.5 * unit(rng), n));
      } else {
        f.push_back(exp_handle(0.08 + 0.25 * unit(rng), n));
      }
      const double b = 0.25 + 4.0 * unit(rng);
      max_b = std::max(max_b, b);
      g.push_back(LinearCost{b});
    }
    const ContinuousInstance inst(n, std::move(f), std::move(g));
    const ContinuousFront front = build_front(inst);
    const double slack = 2.0 * n / steps * max_b;

    const std::vector<ObjectivePoint> grid =
        oracle::continuous_grid_oracle(inst, steps);
    for (int s = 0; s <= 40; ++s) {
      const double t =
          front.t_min() + (front.t_max() - front.t_min()) * s / 40.0;
      const double e = front.value(t);
      for (const ObjectivePoint& p : grid) {
        if (p.t <= t && p.e < e - slack) {
          c.expect(false, "grid point dominates a front sample beyond slack");
          return;
        }
      }
    }
  }
  const double elapsed = ms_since(start);
  c.expect(elapsed < 30000.0, "oracle check took >= 30 s");
  c.detail << static_cast<int>(elapsed) << " ms";
}

// --------------------------------------------------------------------------
// 8. Partition feasibility property
// --------------------------------------------------------------------------
void criterion8(Criterion& c) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int samples = 0;

  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    const double n = 2.0 + 18.0 * unit(rng);
    std::vector<FunctionHandle> f;
    std::vector<LinearCost> g;
    for (std::size_t i = 0; i < k; ++i) {
      switch (rng() % 3) {
        case 0:
          f.push_back(linear_handle(0.25 + 4.0 * unit(rng), n));
          break;
        case 1:
          f.push_back(power_handle(0.3 + 2.0 * unit(rng),
                                   1.2 + 1.8 * unit(rng), n));
          break;
        default:
          f.push_back(exp_handle(0.08 + 0.25 * unit(rng), n));
          break;
      }
      g.push_back(LinearCost{0.25 + 4.0 * unit(rng)});
    }
    const ContinuousInstance inst(n, std::move(f), std::move(g));
    const ContinuousFront front = build_front(inst);

    std::vector<const FunctionHandle*> caller_f(inst.k());
    for (std::size_t i = 0; i < inst.k(); ++i) {
      caller_f[inst.caller_index(i)] = &inst.f(i);
    }

    for (int s = 0; s < 20; ++s) {
      const double t =
          front.t_min() + (front.t_max() - front.t_min()) * s / 19.0;
      const auto sol = partition(inst, t);
      if (!sol.has_value()) {
        c.expect(false, "in-range t rejected");
        return;
      }
      double total = 0.0;
      double tmax = 0.0;
      for (std::size_t i = 0; i < inst.k(); ++i) {
        total += sol->x[i];
        tmax = std::max(tmax, caller_f[i]->eval(sol->x[i]));
      }
      if (std::abs(total - n) > 1e-8 * n ||
          std::abs(tmax - t) > 1e-8 * std::max(1.0, t)) {
        c.expect(false, "feasibility bound violated");
        return;
      }
      ++samples;
    }

    const double margin = 1e-3 * std::max(1.0, front.t_max() - front.t_min());
    if (partition(inst, front.t_min() - margin).has_value() ||
        partition(inst, front.t_max() + margin).has_value()) {
      c.expect(false, "out-of-range t produced a vector");
      return;
    }
  }
  c.expect(samples >= 1000, "fewer than 1000 samples exercised");
  c.detail << samples << " samples";
}

}  // namespace

int main() {
  int failures = 0;
  const std::vector<DiscreteInstance> corpus = build_corpus(510);

  const std::vector<
      std::pair<std::string, std::function<void(Criterion&)>>>
      criteria = {
          {"worked-example regression",
           [](Criterion& c) { criterion1(c); }},
          {"memo-cell regression", [](Criterion& c) { criterion2(c); }},
          {"oracle equivalence (510 randomized instances)",
           [&](Criterion& c) { criterion3(c, corpus); }},
          {"front-size bound |front| <= k*m",
           [&](Criterion& c) { criterion4(c, corpus); }},
          {"memoization/pruning soundness and recursion counts",
           [&](Criterion& c) { criterion5(c, corpus); }},
          {"continuous analytic check (fixture + 20 linear instances)",
           [](Criterion& c) { criterion6(c); }},
          {"continuous grid-oracle check (nonlinear, k <= 3)",
           [](Criterion& c) { criterion7(c); }},
          {"partition feasibility (1000 sampled levels)",
           [](Criterion& c) { criterion8(c); }},
      };

  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& err) {
      c.expect(false, std::string("exception: ") + err.what());
    }
    const double elapsed = ms_since(start);
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].first;
    const std::string detail = c.detail.str();
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << " [" << static_cast<int>(elapsed) << " ms]\n";
    if (!c.ok) ++failures;
  }
  return failures;
}
