#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "hinge/model.hpp"

namespace hinge {

/// Two samples whose stationary lattices coincide: the in-plane parts of
/// their readings are positive multiples of each other, (a_wi1, a_wi3) =
/// lambda_i * (b_wi1, b_wi3).
struct SamplePair {
  Sample a;
  Sample b;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

/// Free parameters of the pair construction:
///   q = b_s2 / b_s1, r = lambda2^2 / lambda1^2,
/// plus b_s1, lambda1^2 and the a-sample offset a_beta.
struct PairRecipe {
  double q = 2.0;
  double r = 0.5;
  double b_s1 = 4.0;
  double lambda1_sq = 4.0;
  double a_beta = 4.0;
};

/// Remaining degrees of freedom: the plane-normal components of the second
/// readings and the shared lattice phases. Defaults reproduce the
/// reference pair exactly.
struct PairExtras {
  double a_w22 = 0.0;
  double b_w22 = 0.0;
  double base_alpha1 = std::numbers::pi / 3.0;
  double base_alpha2 = std::atan2(1.0, std::sqrt(7.0));
};

/// Whether the two samples share their stationary lattice: both per-axis
/// phase offsets agree modulo 2 pi.
bool grids_equal(const Sample& a, const Sample& b, double tol = 1e-12);

/// The worked counterexample pair:
///   A: w1 = (sqrt 12, sqrt 2, 2),      w2 = (sqrt 2, 0, sqrt 14)
///   B: w1 = (sqrt 3, sqrt(7/4), 1),    w2 = (1, 0, sqrt 7)
/// with lambda1^2 = 4, lambda2^2 = 2. Shared lattice, both valid, distinct
/// curves that intersect; these invariants are re-verified on every call.
SamplePair paper_example();

/// Builds a candidate pair from a recipe: sample B from (b_s1, q) with
/// b_beta = b_s1 - a_beta / (2 lambda1^2), sample A by scaling B's in-plane
/// parts and applying a_beta. The closed-form relation only generates the
/// candidate; acceptance is always the numeric check that the two curves
/// intersect at an interior patch point. Throws InvalidSamplesError,
/// DegenerateCurvesError or NoIntersectionError.
SamplePair construct_pair(const PairRecipe& recipe, const PairExtras& extras = {});

struct FalseMinimum {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double objective = 0.0;  // of the two-sample problem
};

/// Curve intersections unfolded through the four reflection sectors of one
/// full 2 pi x 2 pi cell of the (2 r1, 2 r2) plane, reported in (theta1,
/// theta2). Every reported point is a zero, hence a global minimum, of the
/// combined two-sample objective; only one of the four is the "true"
/// solution.
struct FalseMinimaReport {
  std::vector<FalseMinimum> minima;
  double min_pairwise_distance = 0.0;
};

FalseMinimaReport false_minima_report(const SamplePair& pair);

}  // namespace hinge
