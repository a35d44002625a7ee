#ifndef PARETOPART_IO_HPP
#define PARETOPART_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "paretopart/continuous.hpp"
#include "paretopart/types.hpp"

namespace paretopart {

/// Coefficient form of a continuous-linear instance: f_i(x) = a_i * x,
/// g_i(x) = b_i * x. Kept as coefficients so files round-trip exactly.
struct LinearSpec {
  double n = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  friend bool operator==(const LinearSpec&, const LinearSpec&) = default;

  /// Handles with x_max = n, ready for the continuous solver.
  ContinuousInstance make_instance() const;
};

enum class InstanceMode { Discrete, ContinuousLinear };

/// A parsed instance file: exactly one of the two payloads is set.
struct ParsedInstance {
  InstanceMode mode = InstanceMode::Discrete;
  std::optional<DiscreteInstance> discrete;
  std::optional<LinearSpec> linear;

  friend bool operator==(const ParsedInstance&, const ParsedInstance&) = default;
};

/**
 * Parses a JSON instance file. Discrete profile rows are triples
 * [x, f, g] or strings "x,f,g". Throws ParseError on malformed input and
 * ValidationError naming the violated invariant.
 */
ParsedInstance parse_instance(const std::filesystem::path& path);
ParsedInstance parse_instance_text(const std::string& text);

/// Canonical JSON serialization; parse_instance_text(emit_instance(p)) == p.
std::string emit_instance(const ParsedInstance& instance);

/// CSV rows t,e,x_0..x_{k-1}, sorted by increasing e, with a header row.
std::string front_to_csv(const ParetoFrontDiscrete& front);
/// CSV segment table s,t_lo,t_hi,e_lo,e_hi with a header row.
std::string front_to_csv(const ContinuousFront& front);

std::string front_to_json(const ParetoFrontDiscrete& front);
std::string front_to_json(const ContinuousFront& front);

std::string solution_to_csv(const ContinuousSolution& solution);
std::string solution_to_json(const ContinuousSolution& solution);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace paretopart

#endif  // PARETOPART_IO_HPP
