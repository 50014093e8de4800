#include "hinge/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hinge/calculus.hpp"
#include "json.hpp"

namespace hinge::io {

namespace {

using nlohmann::json;

json vec3_to_json(const Vec3& w) { return json::array({w[0], w[1], w[2]}); }

Vec3 vec3_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(std::string("sample field '") + field +
                                "' must be an array of three numbers");
  }
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number()) {
      throw std::invalid_argument(std::string("sample field '") + field +
                                  "' must contain only numbers");
    }
    out[i] = j[i].get<double>();
  }
  return out;
}

json sample_to_json_object(const Sample& sample) {
  return json{{"w1", vec3_to_json(sample.w1())}, {"w2", vec3_to_json(sample.w2())}};
}

Sample sample_from_json_object(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("sample must be a JSON object with fields 'w1' and 'w2'");
  }
  if (!j.contains("w1")) throw std::invalid_argument("sample is missing field 'w1'");
  if (!j.contains("w2")) throw std::invalid_argument("sample is missing field 'w2'");
  return Sample(vec3_from_json(j.at("w1"), "w1"), vec3_from_json(j.at("w2"), "w2"));
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("malformed JSON input");
  }
  return j;
}

json minima_array(const std::vector<Minimum>& minima) {
  json arr = json::array();
  for (const Minimum& m : minima) {
    arr.push_back({{"theta1", m.representative.theta1},
                   {"theta2", m.representative.theta2},
                   {"objective", m.objective},
                   {"basin_count", m.basin_count}});
  }
  return arr;
}

}  // namespace

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string sample_to_json(const Sample& sample) {
  return sample_to_json_object(sample).dump();
}

Sample sample_from_json(const std::string& text) {
  return sample_from_json_object(parse(text));
}

SampleSet sample_set_from_json(const std::string& text) {
  const json j = parse(text);
  std::vector<Sample> samples;
  if (j.is_object() && j.contains("w1")) {
    samples.push_back(sample_from_json_object(j));
  } else if (j.is_array()) {
    for (const json& item : j) samples.push_back(sample_from_json_object(item));
  } else if (j.is_object() && j.contains("samples")) {
    for (const json& item : j.at("samples")) samples.push_back(sample_from_json_object(item));
  } else {
    throw std::invalid_argument(
        "expected a sample object, an array of samples, or a 'samples' field");
  }
  return SampleSet(std::move(samples));
}

std::string sample_set_to_json(const SampleSet& set) {
  json arr = json::array();
  for (const Sample& s : set) arr.push_back(sample_to_json_object(s));
  return arr.dump();
}

void write_sample_set_csv(std::ostream& os, const SampleSet& set) {
  os << "w11,w12,w13,w21,w22,w23\n";
  for (const Sample& s : set) {
    os << format_double(s.w11()) << ',' << format_double(s.w12()) << ','
       << format_double(s.w13()) << ',' << format_double(s.w21()) << ','
       << format_double(s.w22()) << ',' << format_double(s.w23()) << '\n';
  }
}

SampleSet read_sample_set_csv(std::istream& is) {
  std::vector<Sample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (line_no == 1 && line.find("w11") != std::string::npos) continue;  // header
    std::stringstream ss(line);
    std::array<double, 6> vals{};
    std::string cell;
    for (std::size_t i = 0; i < 6; ++i) {
      if (!std::getline(ss, cell, ',')) {
        throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                    ": expected 6 comma-separated values");
      }
      try {
        vals[i] = std::stod(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                    ", column " + std::to_string(i + 1) +
                                    ": not a number: '" + cell + "'");
      }
    }
    samples.emplace_back(Vec3{vals[0], vals[1], vals[2]}, Vec3{vals[3], vals[4], vals[5]});
  }
  return SampleSet(std::move(samples));
}

SampleSet load_sample_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open sample file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw std::invalid_argument("sample file is empty: " + path);
  }
  if (text[first] == '{' || text[first] == '[') {
    return sample_set_from_json(text);
  }
  std::istringstream csv(text);
  return read_sample_set_csv(csv);
}

void write_curve_csv(std::ostream& os, const Sample& sample,
                     const std::vector<PatchPoint>& points) {
  os << "two_r1,two_r2,theta1,theta2,residual\n";
  const std::vector<Angles> thetas =
      unfold_to_theta(sample, std::span<const PatchPoint>(points));
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << format_double(points[i].x) << ',' << format_double(points[i].y) << ','
       << format_double(thetas[i].theta1) << ',' << format_double(thetas[i].theta2)
       << ',' << format_double(patch_residual(sample, points[i])) << '\n';
  }
}

void write_grid_csv(std::ostream& os, const Sample& sample,
                    const std::vector<GridPoint>& points) {
  os << "k1,k2,theta1,theta2,parity_case,classification,hessian_det,h11\n";
  for (const GridPoint& p : points) {
    const GridClassification c = classify_grid_point(sample, p);
    os << p.k1 << ',' << p.k2 << ',' << format_double(p.theta1) << ','
       << format_double(p.theta2) << ',' << to_string(p.parity) << ','
       << to_string(c.type) << ',' << format_double(c.hessian_det) << ','
       << format_double(c.h11) << '\n';
  }
}

void write_canonical_curve_csv(std::ostream& os, const std::vector<PatchPoint>& points) {
  os << "two_r1,two_r2\n";
  for (const PatchPoint& p : points) {
    os << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
}

void write_minima_csv(std::ostream& os, const std::vector<Minimum>& minima) {
  os << "theta1,theta2,objective,basin_count\n";
  for (const Minimum& m : minima) {
    os << format_double(m.representative.theta1) << ','
       << format_double(m.representative.theta2) << ','
       << format_double(m.objective) << ',' << m.basin_count << '\n';
  }
}

std::string census_to_json(const PatternCensus& census) {
  json patterns = json::array();
  for (const PatternWitness& w : census.patterns) {
    patterns.push_back({{"pattern", {w.pattern.hits_x0, w.pattern.hits_xpi,
                                     w.pattern.hits_y0, w.pattern.hits_ypi}},
                        {"labels", w.pattern.labels()},
                        {"witness_u", w.u},
                        {"witness_v", w.v}});
  }
  const json out{{"schema", kSchema},
                 {"patterns_found", census.patterns.size()},
                 {"cells_scanned", census.cells_scanned},
                 {"cells_with_curve", census.cells_with_curve},
                 {"patterns", patterns}};
  return out.dump(2);
}

std::string pair_report_to_json(const SamplePair& pair, const FalseMinimaReport& report) {
  const CanonicalCurve ca = canonical(pair.a);
  const CanonicalCurve cb = canonical(pair.b);
  json intersections = json::array();
  for (const FalseMinimum& m : report.minima) {
    intersections.push_back(
        {{"theta1", m.theta1}, {"theta2", m.theta2}, {"objective", m.objective}});
  }
  const json out{{"schema", kSchema},
                 {"sample_a", sample_to_json_object(pair.a)},
                 {"sample_b", sample_to_json_object(pair.b)},
                 {"lambda1", pair.lambda1},
                 {"lambda2", pair.lambda2},
                 {"u_a", ca.u},
                 {"v_a", ca.v},
                 {"u_b", cb.u},
                 {"v_b", cb.v},
                 {"intersections", intersections},
                 {"min_distance", report.min_pairwise_distance}};
  return out.dump(2);
}

std::string eval_report_to_json(double objective_value, const Gradient& gradient,
                                const Hessian& hessian, const HessianDet& det) {
  const json out{{"schema", kSchema},
                 {"objective", objective_value},
                 {"gradient", {{"d_theta1", gradient.d_theta1}, {"d_theta2", gradient.d_theta2}}},
                 {"hessian", {{"h11", hessian.h11}, {"h12", hessian.h12}, {"h22", hessian.h22}}},
                 {"hessian_det",
                  {{"value", det.value}, {"left", det.left}, {"right", det.right}}}};
  return out.dump(2);
}

std::string minima_to_json(const std::vector<Minimum>& minima) {
  const json out{{"schema", kSchema}, {"minima", minima_array(minima)}};
  return out.dump(2);
}

std::string multistart_report_to_json(const MultistartReport& report) {
  json starts = json::array();
  for (const StartRecord& record : report.starts) {
    starts.push_back({{"start_theta1", record.start.theta1},
                      {"start_theta2", record.start.theta2},
                      {"theta1", record.result.angles.theta1},
                      {"theta2", record.result.angles.theta2},
                      {"objective", record.result.objective_value},
                      {"iterations", record.result.iterations},
                      {"converged", record.result.converged},
                      {"termination", std::string(to_string(record.result.termination))}});
  }
  const json out{{"schema", kSchema},
                 {"minima", minima_array(report.minima)},
                 {"starts", starts}};
  return out.dump(2);
}

void write_false_minima_csv(std::ostream& os, const FalseMinimaReport& report) {
  os << "theta1,theta2,objective\n";
  for (const FalseMinimum& m : report.minima) {
    os << format_double(m.theta1) << ',' << format_double(m.theta2) << ','
       << format_double(m.objective) << '\n';
  }
}

std::string datagen_sidecar_to_json(const DatagenConfig& config, const GeneratedSet& set) {
  const json out{{"schema", kSchema},
                 {"truth",
                  {{"theta1_true", config.truth.theta1_true},
                   {"theta2_true", config.truth.theta2_true}}},
                 {"count", config.count},
                 {"noise_sigma", config.noise_sigma},
                 {"seed", config.seed},
                 {"magnitude_range", {config.magnitude_range.first, config.magnitude_range.second}},
                 {"parallel_components", set.parallel_components},
                 {"in_plane_phases", set.in_plane_phases}};
  return out.dump(2);
}

std::pair<PairRecipe, PairExtras> recipe_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) {
    throw std::invalid_argument("recipe must be a JSON object");
  }
  PairRecipe recipe;
  PairExtras extras;
  const auto get = [&](const char* field, double& target, bool required) {
    if (j.contains(field)) {
      if (!j.at(field).is_number()) {
        throw std::invalid_argument(std::string("recipe field '") + field +
                                    "' must be a number");
      }
      target = j.at(field).get<double>();
    } else if (required) {
      throw std::invalid_argument(std::string("recipe is missing field '") + field + "'");
    }
  };
  get("q", recipe.q, true);
  get("r", recipe.r, true);
  get("b_s1", recipe.b_s1, true);
  get("lambda1_sq", recipe.lambda1_sq, true);
  get("a_beta", recipe.a_beta, true);
  get("a_w22", extras.a_w22, false);
  get("b_w22", extras.b_w22, false);
  get("base_alpha1", extras.base_alpha1, false);
  get("base_alpha2", extras.base_alpha2, false);
  return {recipe, extras};
}

}  // namespace hinge::io
