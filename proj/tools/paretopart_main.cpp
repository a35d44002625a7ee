#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "paretopart/continuous.hpp"
#include "paretopart/core.hpp"
#include "paretopart/discrete.hpp"
#include "paretopart/generator.hpp"
#include "paretopart/io.hpp"
#include "paretopart/oracle.hpp"

namespace {

using namespace paretopart;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitMismatch = 3;

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + out_path);
  }
  out << text;
}

/// Instrumentation output, controlled by PARETO_PARTITION_LOG (off|info|trace).
void log_solver_stats(const DiscreteSolver& solver) {
  const char* env = std::getenv("PARETO_PARTITION_LOG");
  const std::string level = env == nullptr ? "off" : env;
  if (level == "off" || level.empty()) return;
  const SolveStats& stats = solver.stats();
  std::cerr << "kernel_calls=" << stats.total_kernel_calls()
            << " expansions=" << stats.total_expansions();
  std::uint64_t memo = 0;
  std::uint64_t cuts = 0;
  for (std::uint64_t v : stats.memo_hits) memo += v;
  for (std::uint64_t v : stats.cut_hits) cuts += v;
  std::cerr << " memo_hits=" << memo << " cut_hits=" << cuts << "\n";
  if (level == "trace") {
    for (std::size_t lvl = 0; lvl < stats.kernel_calls.size(); ++lvl) {
      std::cerr << "level " << lvl << ": calls=" << stats.kernel_calls[lvl]
                << " expansions=" << stats.expansions[lvl]
                << " memo_hits=" << stats.memo_hits[lvl]
                << " cut_hits=" << stats.cut_hits[lvl] << "\n";
    }
  }
}

struct CommonFlags {
  std::string out;
  std::string format = "csv";
  double tol_t = 1e-10;
  double tol_front = 1e-6;

  Tolerances tolerances() const {
    Tolerances tol;
    tol.tol_t = tol_t;
    tol.tol_front = tol_front;
    return tol;
  }
};

int run_solve(const std::string& path, const CommonFlags& flags) {
  const ParsedInstance parsed = parse_instance(path);
  if (parsed.mode == InstanceMode::Discrete) {
    DiscreteSolver solver;
    const ParetoFrontDiscrete front = solver.solve(*parsed.discrete);
    log_solver_stats(solver);
    if (front.empty()) {
      write_output(flags.out, "");
      std::cerr << "no feasible partition; front is empty\n";
      return kExitEmpty;
    }
    write_output(flags.out, flags.format == "json" ? front_to_json(front)
                                                   : front_to_csv(front));
    return kExitOk;
  }
  const ContinuousInstance instance = parsed.linear->make_instance();
  const ContinuousFront front = build_front(instance, flags.tolerances());
  write_output(flags.out, flags.format == "json" ? front_to_json(front)
                                                 : front_to_csv(front));
  return kExitOk;
}

int run_partition(const std::string& path, double t, const CommonFlags& flags) {
  const ParsedInstance parsed = parse_instance(path);
  if (parsed.mode != InstanceMode::ContinuousLinear) {
    throw Error("partition requires a continuous-linear instance");
  }
  const ContinuousInstance instance = parsed.linear->make_instance();
  const std::optional<ContinuousSolution> solution =
      partition(instance, t, flags.tolerances());
  if (!solution.has_value()) {
    std::cerr << "no decision vector attains max = " << t
              << " with the requested total\n";
    return kExitEmpty;
  }
  write_output(flags.out, flags.format == "json" ? solution_to_json(*solution)
                                                 : solution_to_csv(*solution));
  return kExitOk;
}

struct CheckArgs {
  std::string path;
  bool gen = false;
  std::size_t k = 3;
  std::size_t m = 4;
  std::int64_t n = 15;
  int count = 1;
  std::uint64_t seed = 0;
  std::string shape = "noisy";
  bool mutate = false;
  std::string dump_dir = ".";
};

int run_check(const CheckArgs& args) {
  std::vector<DiscreteInstance> instances;
  if (args.gen) {
    for (int i = 0; i < args.count; ++i) {
      GenConfig config;
      config.k = args.k;
      config.m = args.m;
      config.n = args.n;
      config.seed = args.seed + static_cast<std::uint64_t>(i);
      config.shape = profile_shape_from_string(args.shape);
      instances.push_back(generate_instance(config));
    }
  } else {
    const ParsedInstance parsed = parse_instance(args.path);
    if (parsed.mode != InstanceMode::Discrete) {
      throw Error("check requires a discrete instance");
    }
    instances.push_back(*parsed.discrete);
  }

  for (std::size_t i = 0; i < instances.size(); ++i) {
    DiscreteSolver solver;
    ParetoFrontDiscrete solved = solver.solve(instances[i]);
    const ParetoFrontDiscrete reference = oracle::brute_force_pareto(instances[i]);
    if (args.mutate && !solved.empty()) {
      // Deliberate perturbation so the harness's sensitivity can be tested.
      std::vector<FrontEntry> entries = solved.entries();
      entries.pop_back();
      solved = ParetoFrontDiscrete(std::move(entries));
    }
    const bool ok = solved == reference;
    std::cout << "instance " << i << ": " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      ParsedInstance dump;
      dump.mode = InstanceMode::Discrete;
      dump.discrete = instances[i];
      const std::string dump_path =
          args.dump_dir + "/mismatch_" + std::to_string(i) + ".json";
      write_output(dump_path, emit_instance(dump));
      std::cerr << "front mismatch; offending instance written to "
                << dump_path << "\n";
      return kExitMismatch;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Pareto fronts for bi-objective partitioning (min-max, min-sum)"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string instance_path;
  double t_value = 0.0;

  CLI::App* solve = app.add_subcommand(
      "solve", "Compute the Pareto front of an instance file");
  solve->add_option("path", instance_path, "instance file (JSON)")->required();
  solve->add_option("--out", flags.out, "output path (default stdout)");
  solve->add_option("--format", flags.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  solve->add_option("--tol-t", flags.tol_t, "min-max bisection tolerance");
  solve->add_option("--tol-front", flags.tol_front, "front tolerance");

  CLI::App* part = app.add_subcommand(
      "partition", "Decision vector at a given max-objective level t "
                   "(continuous instances)");
  part->add_option("path", instance_path, "instance file (JSON)")->required();
  part->add_option("--t", t_value, "max-objective level")->required();
  part->add_option("--out", flags.out, "output path (default stdout)");
  part->add_option("--format", flags.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  part->add_option("--tol-t", flags.tol_t, "min-max bisection tolerance");
  part->add_option("--tol-front", flags.tol_front, "front tolerance");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Diff the solver against the exhaustive reference");
  check->add_option("path", check_args.path, "discrete instance file");
  check->add_flag("--gen", check_args.gen, "check generated instances instead");
  check->add_option("--k", check_args.k, "profiles per generated instance");
  check->add_option("--m", check_args.m, "points per profile");
  check->add_option("--n", check_args.n, "total size");
  check->add_option("--count", check_args.count, "number of instances");
  check->add_option("--seed", check_args.seed, "base seed");
  check->add_option("--shape", check_args.shape, "monotone, noisy or adversarial");
  check->add_option("--dump-dir", check_args.dump_dir,
                    "directory for mismatch dumps");
  check->add_flag("--mutate", check_args.mutate,
                  "perturb the solver output (harness self-test)");

  GenConfig gen_config;
  std::string gen_shape = "noisy";
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  gen->add_option("--k", gen_config.k, "number of profiles")->required();
  gen->add_option("--m", gen_config.m, "points per profile")->required();
  gen->add_option("--n", gen_config.n, "total size")->required();
  gen->add_option("--seed", gen_config.seed, "seed");
  gen->add_option("--shape", gen_shape, "monotone, noisy or adversarial")
      ->check(CLI::IsMember({"monotone", "noisy", "adversarial"}));
  gen->add_option("--out", flags.out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(instance_path, flags);
    if (part->parsed()) return run_partition(instance_path, t_value, flags);
    if (check->parsed()) {
      if (!check_args.gen && check_args.path.empty()) {
        std::cerr << "check needs an instance path or --gen\n";
        return kExitError;
      }
      return run_check(check_args);
    }
    if (gen->parsed()) {
      gen_config.shape = profile_shape_from_string(gen_shape);
      ParsedInstance out;
      out.mode = InstanceMode::Discrete;
      out.discrete = generate_instance(gen_config);
      write_output(flags.out, emit_instance(out));
      return kExitOk;
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
