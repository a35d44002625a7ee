#include "paretopart/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace paretopart {

namespace {

using nlohmann::json;

ProfilePoint parse_point_row(const json& row, std::size_t profile_idx,
                             std::size_t row_idx) {
  const std::string where = "profile " + std::to_string(profile_idx) +
                            ", row " + std::to_string(row_idx);
  ProfilePoint point;
  if (row.is_array()) {
    if (row.size() != 3) {
      throw ParseError("point row must be [x, f, g] at " + where, 0);
    }
    if (!row[0].is_number_integer() || !row[1].is_number() ||
        !row[2].is_number()) {
      throw ParseError(
          "point row needs an integer x and numeric f, g at " + where, 0);
    }
    point.x = row[0].get<std::int64_t>();
    point.f = row[1].get<double>();
    point.g = row[2].get<double>();
    return point;
  }
  if (row.is_string()) {
    // CSV form "x,f,g".
    std::istringstream in(row.get<std::string>());
    char comma1 = 0;
    char comma2 = 0;
    if (!(in >> point.x >> comma1 >> point.f >> comma2 >> point.g) ||
        comma1 != ',' || comma2 != ',') {
      throw ParseError("point row must read as \"x,f,g\" at " + where, 0);
    }
    return point;
  }
  throw ParseError("point row must be an array or a string at " + where, 0);
}

ParsedInstance parse_json(const json& doc) {
  if (!doc.is_object()) {
    throw ParseError("instance file must be a JSON object", 0);
  }
  for (const char* field : {"mode", "n", "k", "profiles"}) {
    if (!doc.contains(field)) {
      throw ParseError(std::string("missing field \"") + field + "\"", 0);
    }
  }
  const std::string mode = doc["mode"].get<std::string>();
  const json& profiles = doc["profiles"];
  if (!profiles.is_array() || profiles.empty()) {
    throw ParseError("\"profiles\" must be a non-empty array", 0);
  }
  const auto k = doc["k"].get<std::int64_t>();
  if (k != static_cast<std::int64_t>(profiles.size())) {
    throw ValidationError("header k must match the number of profiles");
  }

  ParsedInstance out;
  if (mode == "discrete") {
    if (!doc["n"].is_number_integer()) {
      throw ValidationError("discrete n must be a positive integer");
    }
    const auto n = doc["n"].get<std::int64_t>();
    if (n < 1) {
      throw ValidationError("discrete n must be a positive integer");
    }
    std::vector<DiscreteProfile> parsed;
    parsed.reserve(profiles.size());
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const json& block = profiles[i];
      if (!block.is_object() || !block.contains("points")) {
        throw ParseError(
            "profile " + std::to_string(i) + " must contain \"points\"", 0);
      }
      std::vector<ProfilePoint> points;
      const json& rows = block["points"];
      if (!rows.is_array()) {
        throw ParseError("profile " + std::to_string(i) +
                             " points must be an array",
                         0);
      }
      points.reserve(rows.size());
      for (std::size_t j = 0; j < rows.size(); ++j) {
        points.push_back(parse_point_row(rows[j], i, j));
      }
      parsed.emplace_back(std::move(points));  // validates the profile
    }
    out.mode = InstanceMode::Discrete;
    out.discrete.emplace(n, std::move(parsed));
    return out;
  }
  if (mode == "continuous-linear") {
    LinearSpec spec;
    spec.n = doc["n"].get<double>();
    if (!(spec.n > 0.0)) {
      throw ValidationError("continuous n must be positive");
    }
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const json& block = profiles[i];
      if (!block.is_object() || !block.contains("a") || !block.contains("b")) {
        throw ParseError("profile " + std::to_string(i) +
                             " must contain \"a\" and \"b\"",
                         0);
      }
      const double a = block["a"].get<double>();
      const double b = block["b"].get<double>();
      if (!(a > 0.0) || !(b > 0.0)) {
        throw ValidationError("linear coefficients a and b must be positive");
      }
      spec.a.push_back(a);
      spec.b.push_back(b);
    }
    out.mode = InstanceMode::ContinuousLinear;
    out.linear = std::move(spec);
    return out;
  }
  throw ParseError("mode must be \"discrete\" or \"continuous-linear\"", 0);
}

}  // namespace

ContinuousInstance LinearSpec::make_instance() const {
  std::vector<FunctionHandle> f;
  std::vector<LinearCost> g;
  f.reserve(a.size());
  g.reserve(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    f.push_back(linear_handle(a[i], n));
    g.push_back(LinearCost{b[i]});
  }
  return ContinuousInstance(n, std::move(f), std::move(g));
}

ParsedInstance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(err.what(), 0);
  }
  try {
    return parse_json(doc);
  } catch (const json::exception& err) {
    throw ParseError(err.what(), 0);
  }
}

ParsedInstance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string(), 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string emit_instance(const ParsedInstance& instance) {
  json doc;
  if (instance.mode == InstanceMode::Discrete) {
    const DiscreteInstance& inst = *instance.discrete;
    doc["mode"] = "discrete";
    doc["n"] = inst.n();
    doc["k"] = inst.k();
    json profiles = json::array();
    for (const DiscreteProfile& p : inst.profiles()) {
      json rows = json::array();
      for (const ProfilePoint& point : p.points()) {
        rows.push_back(json::array({point.x, point.f, point.g}));
      }
      profiles.push_back(json{{"points", std::move(rows)}});
    }
    doc["profiles"] = std::move(profiles);
  } else {
    const LinearSpec& spec = *instance.linear;
    doc["mode"] = "continuous-linear";
    doc["n"] = spec.n;
    doc["k"] = spec.a.size();
    json profiles = json::array();
    for (std::size_t i = 0; i < spec.a.size(); ++i) {
      profiles.push_back(json{{"a", spec.a[i]}, {"b", spec.b[i]}});
    }
    doc["profiles"] = std::move(profiles);
  }
  return doc.dump(2) + "\n";
}

std::string front_to_csv(const ParetoFrontDiscrete& front) {
  std::ostringstream out;
  out << "t,e";
  const std::size_t k =
      front.empty() ? 0 : front.entries().front().x.size();
  for (std::size_t i = 0; i < k; ++i) out << ",x_" << i;
  out << "\n";
  for (const FrontEntry& entry : front.entries()) {
    out << format_double(entry.obj.t) << "," << format_double(entry.obj.e);
    for (std::int64_t v : entry.x) out << "," << v;
    out << "\n";
  }
  return out.str();
}

std::string front_to_csv(const ContinuousFront& front) {
  std::ostringstream out;
  out << "s,t_lo,t_hi,e_lo,e_hi\n";
  for (const FrontSegment& seg : front.segments()) {
    out << seg.s << "," << format_double(seg.t_lo) << ","
        << format_double(seg.t_hi) << "," << format_double(seg.e_lo) << ","
        << format_double(seg.e_hi) << "\n";
  }
  return out.str();
}

std::string front_to_json(const ParetoFrontDiscrete& front) {
  json rows = json::array();
  for (const FrontEntry& entry : front.entries()) {
    rows.push_back(json{{"t", entry.obj.t}, {"e", entry.obj.e},
                        {"x", entry.x}});
  }
  return json{{"mode", "discrete"}, {"front", std::move(rows)}}.dump(2) + "\n";
}

std::string front_to_json(const ContinuousFront& front) {
  json breakpoints = json::array();
  for (const ObjectivePoint& p : front.breakpoints()) {
    breakpoints.push_back(json::array({p.t, p.e}));
  }
  json segments = json::array();
  for (const FrontSegment& seg : front.segments()) {
    segments.push_back(json{{"s", seg.s},
                            {"t_lo", seg.t_lo},
                            {"t_hi", seg.t_hi},
                            {"e_lo", seg.e_lo},
                            {"e_hi", seg.e_hi}});
  }
  return json{{"mode", "continuous-linear"},
              {"breakpoints", std::move(breakpoints)},
              {"segments", std::move(segments)}}
             .dump(2) +
         "\n";
}

std::string solution_to_csv(const ContinuousSolution& solution) {
  std::ostringstream out;
  out << "t,e";
  for (std::size_t i = 0; i < solution.x.size(); ++i) out << ",x_" << i;
  out << "\n" << format_double(solution.t) << "," << format_double(solution.e);
  for (double v : solution.x) out << "," << format_double(v);
  out << "\n";
  return out.str();
}

std::string solution_to_json(const ContinuousSolution& solution) {
  return json{{"t", solution.t}, {"e", solution.e}, {"x", solution.x}}.dump(2) +
         "\n";
}

}  // namespace paretopart
