// Command-line front end. Every subcommand is a thin adapter over the
// library: it parses flags, loads inputs, calls one library entry point and
// serializes the result. stdout carries data, stderr carries logs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hinge/ambiguity.hpp"
#include "hinge/calculus.hpp"
#include "hinge/curves.hpp"
#include "hinge/datagen.hpp"
#include "hinge/errors.hpp"
#include "hinge/io.hpp"
#include "hinge/model.hpp"
#include "hinge/solver.hpp"
#include "hinge/stationary.hpp"

namespace {

namespace fs = std::filesystem;

struct Logger {
  bool quiet = false;
  template <typename T>
  void operator()(const T& message) const {
    if (!quiet) std::cerr << message << '\n';
  }
};

// "lo:hi:step"
hinge::GridSpec parse_grid(const std::string& text, const char* flag) {
  hinge::GridSpec spec;
  std::stringstream ss(text);
  std::string part;
  double* fields[3] = {&spec.lo, &spec.hi, &spec.step};
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, part, ':')) {
      throw std::invalid_argument(std::string(flag) + ": expected lo:hi:step");
    }
    try {
      *fields[i] = std::stod(part);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(flag) + ": not a number: '" + part + "'");
    }
  }
  return spec;
}

// "a:b" inclusive
hinge::IndexRange parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(std::string(flag) + ": expected a:b");
  }
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + ": bad integer range: '" + text + "'");
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path.string());
  }
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"Planar hinge least-squares landscape toolkit"};
  app.require_subcommand(1);
  Logger log;
  app.add_flag("--quiet", log.quiet, "Suppress stderr logs");

  // --- eval ---
  auto* eval = app.add_subcommand("eval", "Objective, gradient and Hessian at a point");
  std::string eval_sample;
  double eval_theta1 = 0.0, eval_theta2 = 0.0;
  eval->add_option("--sample", eval_sample, "Sample file (JSON or CSV)")->required();
  eval->add_option("--theta1", eval_theta1, "First angle, radians")->required();
  eval->add_option("--theta2", eval_theta2, "Second angle, radians")->required();

  // --- grid ---
  auto* grid = app.add_subcommand("grid", "Classified stationary lattice as CSV");
  std::string grid_sample, grid_krange = "-2:2";
  grid->add_option("--sample", grid_sample, "Sample file")->required();
  grid->add_option("--k-range", grid_krange, "Inclusive index range a:b for both axes");

  // --- curve ---
  auto* curve = app.add_subcommand("curve", "Zero-error curve trace as CSV");
  std::string curve_sample;
  int curve_points = 200;
  curve->add_option("--sample", curve_sample, "Sample file")->required();
  curve->add_option("--points", curve_points, "Number of trace points");

  // --- patterns ---
  auto* patterns = app.add_subcommand("patterns", "Boundary-pattern census as JSON");
  std::string u_grid_text = "0.01:4:0.01", v_grid_text = "-4:4:0.01", patterns_out_dir;
  patterns->add_option("--u-grid", u_grid_text, "u grid as lo:hi:step");
  patterns->add_option("--v-grid", v_grid_text, "v grid as lo:hi:step");
  patterns->add_option("--out-dir", patterns_out_dir,
                       "Also write per-pattern witness curve CSVs here");

  // --- pair ---
  auto* pair_cmd = app.add_subcommand("pair", "Shared-lattice sample pair report as JSON");
  bool paper_flag = false;
  std::string recipe_path, pair_out_dir;
  pair_cmd->add_flag("--paper-example", paper_flag, "Use the built-in reference pair");
  pair_cmd->add_option("--recipe", recipe_path, "Recipe JSON file");
  pair_cmd->add_option("--out-dir", pair_out_dir, "Also write both curve CSVs here");

  // --- solve ---
  auto* solve_cmd = app.add_subcommand("solve", "Minimize the objective");
  std::string solve_samples;
  int multistart_density = 0;
  std::uint64_t solve_seed = 0;
  bool solve_verbose = false;
  std::optional<double> solve_theta1, solve_theta2;
  solve_cmd->add_option("--samples", solve_samples, "Sample set file")->required();
  solve_cmd->add_option("--multistart", multistart_density,
                        "Starts per axis; omit to run a single solve from --theta1/--theta2");
  solve_cmd->add_option("--seed", solve_seed, "Seed for jittered starts");
  solve_cmd->add_option("--theta1", solve_theta1, "Single-solve start angle");
  solve_cmd->add_option("--theta2", solve_theta2, "Single-solve start angle");
  solve_cmd->add_flag("--verbose", solve_verbose, "JSON output with per-cluster detail");

  // --- datagen ---
  auto* datagen_cmd = app.add_subcommand("datagen", "Generate a synthetic sample set");
  hinge::DatagenConfig config;
  std::string datagen_out = "samples";
  datagen_cmd->add_option("--theta1", config.truth.theta1_true, "True first angle")->required();
  datagen_cmd->add_option("--theta2", config.truth.theta2_true, "True second angle")->required();
  datagen_cmd->add_option("--count", config.count, "Number of samples");
  datagen_cmd->add_option("--noise", config.noise_sigma, "Gaussian component noise sigma");
  datagen_cmd->add_option("--seed", config.seed, "Generator seed");
  datagen_cmd->add_option("--mag-lo", config.magnitude_range.first, "Component magnitude low end");
  datagen_cmd->add_option("--mag-hi", config.magnitude_range.second, "Component magnitude high end");
  datagen_cmd->add_option("--out", datagen_out, "Output path prefix");

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) {
    const hinge::SampleSet set = hinge::io::load_sample_set(eval_sample);
    const hinge::Angles angles{eval_theta1, eval_theta2};
    log("eval: " + std::to_string(set.size()) + " sample(s)");
    std::cout << hinge::io::eval_report_to_json(
                     hinge::objective(set, angles), hinge::gradient_multi(set, angles),
                     hinge::hessian_multi(set, angles), hinge::hessian_det_multi(set, angles))
              << '\n';
    return 0;
  }

  if (grid->parsed()) {
    const hinge::SampleSet set = hinge::io::load_sample_set(grid_sample);
    if (set.size() != 1) {
      throw std::invalid_argument("grid: expects a single-sample file");
    }
    const hinge::IndexRange range = parse_range(grid_krange, "--k-range");
    hinge::io::write_grid_csv(std::cout, set[0], hinge::grid_points(set[0], range, range));
    return 0;
  }

  if (curve->parsed()) {
    const hinge::SampleSet set = hinge::io::load_sample_set(curve_sample);
    if (set.size() != 1) {
      throw std::invalid_argument("curve: expects a single-sample file");
    }
    const hinge::CanonicalCurve canonical = hinge::canonical(set[0]);
    log("curve: canonical u = " + hinge::io::format_double(canonical.u) +
        ", v = " + hinge::io::format_double(canonical.v));
    hinge::io::write_curve_csv(std::cout, set[0], hinge::trace_curve(set[0], curve_points));
    return 0;
  }

  if (patterns->parsed()) {
    const hinge::GridSpec u_grid = parse_grid(u_grid_text, "--u-grid");
    const hinge::GridSpec v_grid = parse_grid(v_grid_text, "--v-grid");
    const hinge::PatternCensus census = hinge::enumerate_patterns(u_grid, v_grid);
    std::cout << hinge::io::census_to_json(census) << '\n';
    if (!patterns_out_dir.empty()) {
      fs::create_directories(patterns_out_dir);
      for (const hinge::PatternWitness& witness : census.patterns) {
        std::ostringstream name;
        name << "pattern_" << static_cast<int>(witness.pattern.bits()) << ".csv";
        std::ostringstream body;
        hinge::io::write_canonical_curve_csv(
            body, hinge::trace_canonical({witness.u, witness.v}, 200));
        write_file(fs::path(patterns_out_dir) / name.str(), body.str());
      }
      log("patterns: wrote witness curves to " + patterns_out_dir);
    }
    return 0;
  }

  if (pair_cmd->parsed()) {
    if (paper_flag == !recipe_path.empty()) {
      // exactly one source must be chosen
      throw std::invalid_argument("pair: pass either --paper-example or --recipe FILE");
    }
    hinge::SamplePair pair = [&] {
      if (paper_flag) return hinge::paper_example();
      std::ifstream in(recipe_path);
      if (!in) throw std::invalid_argument("cannot open recipe file: " + recipe_path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      const auto [recipe, extras] = hinge::io::recipe_from_json(buffer.str());
      return hinge::construct_pair(recipe, extras);
    }();
    const hinge::FalseMinimaReport report = hinge::false_minima_report(pair);
    std::cout << hinge::io::pair_report_to_json(pair, report) << '\n';
    if (!pair_out_dir.empty()) {
      fs::create_directories(pair_out_dir);
      for (const auto& [name, sample] :
           {std::pair<const char*, const hinge::Sample&>{"curve_a.csv", pair.a},
            std::pair<const char*, const hinge::Sample&>{"curve_b.csv", pair.b}}) {
        std::ostringstream body;
        hinge::io::write_curve_csv(body, sample, hinge::trace_curve(sample, 200));
        write_file(fs::path(pair_out_dir) / name, body.str());
      }
      std::ostringstream markers;
      hinge::io::write_false_minima_csv(markers, report);
      write_file(fs::path(pair_out_dir) / "intersections.csv", markers.str());
      log(std::string("pair: wrote curve traces and intersections to ") + pair_out_dir);
    }
    return 0;
  }

  if (solve_cmd->parsed()) {
    const hinge::SampleSet set = hinge::io::load_sample_set(solve_samples);
    if (multistart_density > 0) {
      hinge::MultistartOptions opts;
      opts.grid_density = multistart_density;
      opts.seed = solve_seed;
      log("solve: multistart density " + std::to_string(multistart_density) + ", seed " +
          std::to_string(solve_seed));
      if (solve_verbose) {
        std::cout << hinge::io::multistart_report_to_json(hinge::multistart_detailed(set, opts))
                  << '\n';
      } else {
        hinge::io::write_minima_csv(std::cout, hinge::multistart(set, opts));
      }
      return 0;
    }
    if (!solve_theta1 || !solve_theta2) {
      throw std::invalid_argument("solve: pass --multistart N or both --theta1 and --theta2");
    }
    const hinge::SolveResult result =
        hinge::solve(set, {*solve_theta1, *solve_theta2});
    std::vector<hinge::Minimum> single{{result.angles, result.objective_value, 1}};
    if (solve_verbose) {
      std::cout << hinge::io::minima_to_json(single) << '\n';
    } else {
      hinge::io::write_minima_csv(std::cout, single);
    }
    log(std::string("solve: converged = ") + (result.converged ? "yes" : "no") +
        " after " + std::to_string(result.iterations) + " iteration(s)");
    return 0;
  }

  if (datagen_cmd->parsed()) {
    log("datagen: seed " + std::to_string(config.seed));
    const hinge::GeneratedSet generated = hinge::generate(config);
    const hinge::SampleSet set(generated.samples);
    std::ostringstream csv;
    hinge::io::write_sample_set_csv(csv, set);
    write_file(datagen_out + ".csv", csv.str());
    write_file(datagen_out + ".json", hinge::io::sample_set_to_json(set));
    write_file(datagen_out + ".meta.json",
               hinge::io::datagen_sidecar_to_json(config, generated));
    log("datagen: wrote " + datagen_out + ".csv, .json, .meta.json");
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hinge::InvalidSamplesError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hinge::NoIntersectionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hinge::DegenerateCurvesError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hinge::EmptyCurveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hinge::NotOnCurveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
