#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hinge/calculus.hpp"
#include "hinge/model.hpp"

namespace hinge {

struct SolveOptions {
  int max_iterations = 100;
  double gradient_tolerance = 1e-10;
  double step_tolerance = 1e-12;
  double initial_damping = 1e-3;
};

enum class Termination { GradientSmall, StepSmall, MaxIterations };

struct SolveResult {
  Angles angles;
  double objective_value = 0.0;
  int iterations = 0;
  bool converged = false;
  Termination termination = Termination::MaxIterations;
  /// Objective after the start and after each accepted step; accepted steps
  /// never increase it.
  std::vector<double> objective_history;
};

struct ResidualsJacobian {
  std::vector<double> residuals;                 // per-sample error d_s
  std::vector<std::array<double, 2>> jacobian;   // rows (-s1 sin 2r1, s2 sin 2r2)
};

/// Residual vector and its Jacobian; 2 J^T d reproduces the gradient.
ResidualsJacobian residuals_and_jacobian(const SampleSet& set, const Angles& angles);

/// Damped least squares on the two angles: solve (J^T J + lambda I) step =
/// -J^T d, accept only descent steps, scale lambda by 10 down on accept and
/// up on reject. Gradient convergence is tested against
/// gradient_tolerance * (1 + current objective).
SolveResult solve(const SampleSet& set, const Angles& start, const SolveOptions& opts = {});

struct MultistartOptions {
  int grid_density = 20;           // starts per axis over one 2 pi x 2 pi cell
  std::uint64_t seed = 0;          // used when jitter > 0
  double jitter = 0.0;             // uniform jitter as a fraction of the grid spacing
  double merge_radius = 1e-4;      // cluster radius in the period-pi torus metric
  /// Keep only converged results at or below this objective. Unset means
  /// the zero-residual default 1e-10 * (1 + sum of s1*s2); infinity keeps
  /// every converged local minimum.
  std::optional<double> objective_keep_threshold;
  SolveOptions solve;
};

struct Minimum {
  Angles representative;   // normalized into [0, pi)^2, the landscape's period cell
  double objective = 0.0;
  int basin_count = 0;
};

/// Runs solve from a uniform (optionally seeded-jittered) grid of starts,
/// keeps converged low-objective results, folds them into the period-pi
/// cell and merges by torus distance. Output is sorted by representative,
/// so it does not depend on visiting order.
std::vector<Minimum> multistart(const SampleSet& set, const MultistartOptions& opts = {});

struct StartRecord {
  Angles start;
  SolveResult result;
};

/// multistart plus the raw outcome of every start, for verbose reporting.
struct MultistartReport {
  std::vector<Minimum> minima;
  std::vector<StartRecord> starts;
};
MultistartReport multistart_detailed(const SampleSet& set, const MultistartOptions& opts = {});

std::string_view to_string(Termination termination) noexcept;

}  // namespace hinge
