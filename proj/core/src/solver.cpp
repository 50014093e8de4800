#include "hinge/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hinge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_mod_pi(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  return t;
}

/// Distance on the period-pi torus.
double torus_distance(const Angles& a, const Angles& b) {
  auto axis = [](double x, double y) {
    double d = std::abs(wrap_mod_pi(x) - wrap_mod_pi(y));
    return std::min(d, kPi - d);
  };
  return std::hypot(axis(a.theta1, b.theta1), axis(a.theta2, b.theta2));
}

}  // namespace

ResidualsJacobian residuals_and_jacobian(const SampleSet& set, const Angles& angles) {
  ResidualsJacobian out;
  out.residuals.reserve(set.size());
  out.jacobian.reserve(set.size());
  for (const Sample& sample : set) {
    const double s1 = s_of(sample.w1());
    const double s2 = s_of(sample.w2());
    const double r1 = r_of(angles.theta1, sample.w1());
    const double r2 = r_of(angles.theta2, sample.w2());
    out.residuals.push_back(d_of(sample, angles));
    out.jacobian.push_back({-s1 * std::sin(2.0 * r1), s2 * std::sin(2.0 * r2)});
  }
  return out;
}

SolveResult solve(const SampleSet& set, const Angles& start, const SolveOptions& opts) {
  if (opts.max_iterations <= 0 || opts.gradient_tolerance <= 0.0 ||
      opts.step_tolerance <= 0.0 || opts.initial_damping <= 0.0) {
    throw std::invalid_argument("solve: options must be positive");
  }

  SolveResult result;
  result.angles = start;
  result.objective_value = objective(set, start);
  result.objective_history.push_back(result.objective_value);

  double damping = opts.initial_damping;
  result.termination = Termination::MaxIterations;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const ResidualsJacobian rj = residuals_and_jacobian(set, result.angles);

    double jtj11 = 0.0, jtj12 = 0.0, jtj22 = 0.0, g1 = 0.0, g2 = 0.0;
    for (std::size_t i = 0; i < rj.residuals.size(); ++i) {
      const double j1 = rj.jacobian[i][0];
      const double j2 = rj.jacobian[i][1];
      jtj11 += j1 * j1;
      jtj12 += j1 * j2;
      jtj22 += j2 * j2;
      g1 += j1 * rj.residuals[i];
      g2 += j2 * rj.residuals[i];
    }
    // Gradient of the objective is 2 J^T d.
    const double grad_norm = 2.0 * std::hypot(g1, g2);
    if (grad_norm <= opts.gradient_tolerance * (1.0 + result.objective_value)) {
      result.iterations = iter;
      result.termination = Termination::GradientSmall;
      break;
    }

    const double a11 = jtj11 + damping;
    const double a22 = jtj22 + damping;
    const double det = a11 * a22 - jtj12 * jtj12;
    if (det <= 0.0 || !std::isfinite(det)) {
      damping = std::min(damping * 10.0, 1e12);
      result.iterations = iter + 1;
      continue;
    }
    const double step1 = (-g1 * a22 + g2 * jtj12) / det;
    const double step2 = (-g2 * a11 + g1 * jtj12) / det;
    const double step_norm = std::hypot(step1, step2);

    const Angles trial{result.angles.theta1 + step1, result.angles.theta2 + step2};
    const double trial_objective = objective(set, trial);

    if (trial_objective < result.objective_value) {
      result.angles = trial;
      result.objective_value = trial_objective;
      result.objective_history.push_back(trial_objective);
      damping = std::max(damping / 10.0, 1e-12);
    } else {
      damping = std::min(damping * 10.0, 1e12);
    }

    if (step_norm <= opts.step_tolerance) {
      result.iterations = iter + 1;
      result.termination = Termination::StepSmall;
      break;
    }
    result.iterations = iter + 1;
  }

  const Gradient g = gradient_multi(set, result.angles);
  result.converged = std::hypot(g.d_theta1, g.d_theta2) <=
                     opts.gradient_tolerance * (1.0 + result.objective_value);
  return result;
}

MultistartReport multistart_detailed(const SampleSet& set, const MultistartOptions& opts) {
  if (opts.grid_density < 4) {
    throw std::invalid_argument("multistart: grid_density must be at least 4");
  }
  if (opts.merge_radius <= 0.0) {
    throw std::invalid_argument("multistart: merge_radius must be positive");
  }

  double keep_threshold;
  if (opts.objective_keep_threshold.has_value()) {
    keep_threshold = *opts.objective_keep_threshold;
  } else {
    double s_product_sum = 0.0;
    for (const Sample& s : set) {
      s_product_sum += s_of(s.w1()) * s_of(s.w2());
    }
    keep_threshold = 1e-10 * (1.0 + s_product_sum);
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double spacing = kTwoPi / opts.grid_density;

  MultistartReport report;
  report.starts.reserve(static_cast<std::size_t>(opts.grid_density) * opts.grid_density);
  std::vector<std::pair<Angles, double>> accepted;
  for (int i = 0; i < opts.grid_density; ++i) {
    for (int j = 0; j < opts.grid_density; ++j) {
      Angles start{i * spacing, j * spacing};
      if (opts.jitter > 0.0) {
        start.theta1 += opts.jitter * spacing * unit(rng);
        start.theta2 += opts.jitter * spacing * unit(rng);
      }
      report.starts.push_back({start, solve(set, start, opts.solve)});
      const SolveResult& r = report.starts.back().result;
      if (r.converged && r.objective_value <= keep_threshold) {
        accepted.emplace_back(
            Angles{wrap_mod_pi(r.angles.theta1), wrap_mod_pi(r.angles.theta2)},
            r.objective_value);
      }
    }
  }

  std::sort(accepted.begin(), accepted.end(), [](const auto& a, const auto& b) {
    if (a.first.theta1 != b.first.theta1) return a.first.theta1 < b.first.theta1;
    if (a.first.theta2 != b.first.theta2) return a.first.theta2 < b.first.theta2;
    return a.second < b.second;
  });

  std::vector<Minimum> clusters;
  for (const auto& [angles, obj] : accepted) {
    Minimum* home = nullptr;
    for (Minimum& m : clusters) {
      if (torus_distance(m.representative, angles) <= opts.merge_radius) {
        home = &m;
        break;
      }
    }
    if (home == nullptr) {
      clusters.push_back({angles, obj, 1});
    } else {
      home->basin_count += 1;
      if (obj < home->objective) {
        home->objective = obj;
        home->representative = angles;
      }
    }
  }

  std::sort(clusters.begin(), clusters.end(), [](const Minimum& a, const Minimum& b) {
    if (a.representative.theta1 != b.representative.theta1) {
      return a.representative.theta1 < b.representative.theta1;
    }
    return a.representative.theta2 < b.representative.theta2;
  });
  report.minima = std::move(clusters);
  return report;
}

std::vector<Minimum> multistart(const SampleSet& set, const MultistartOptions& opts) {
  return multistart_detailed(set, opts).minima;
}

std::string_view to_string(Termination termination) noexcept {
  switch (termination) {
    case Termination::GradientSmall: return "gradient_small";
    case Termination::StepSmall: return "step_small";
    case Termination::MaxIterations: return "max_iterations";
  }
  return "?";
}

}  // namespace hinge
