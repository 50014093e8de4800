#include "hinge/ambiguity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hinge/curves.hpp"
#include "hinge/errors.hpp"
#include "hinge/stationary.hpp"

namespace hinge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_difference(double a, double b) {
  return std::atan2(std::sin(a - b), std::cos(a - b));
}

void verify_pair(const SamplePair& pair) {
  if (!grids_equal(pair.a, pair.b)) {
    throw std::logic_error("SamplePair: lattices do not coincide");
  }
  if (!is_valid(pair.a) || !is_valid(pair.b)) {
    throw std::logic_error("SamplePair: a sample fails the validity condition");
  }
  const CurveIntersection hit = intersect(canonical(pair.a), canonical(pair.b));
  if (hit.kind != CurveIntersection::Kind::Points) {
    throw std::logic_error("SamplePair: curves do not intersect");
  }
}

}  // namespace

bool grids_equal(const Sample& a, const Sample& b, double tol) {
  const double d1 = angle_difference(alpha_of(a.w1()), alpha_of(b.w1()));
  const double d2 = angle_difference(alpha_of(a.w2()), alpha_of(b.w2()));
  return std::abs(d1) <= tol && std::abs(d2) <= tol;
}

SamplePair paper_example() {
  SamplePair pair{
      Sample({std::sqrt(12.0), std::sqrt(2.0), 2.0},
             {std::sqrt(2.0), 0.0, std::sqrt(14.0)}),
      Sample({std::sqrt(3.0), std::sqrt(7.0 / 4.0), 1.0},
             {1.0, 0.0, std::sqrt(7.0)}),
      2.0, std::sqrt(2.0)};
  verify_pair(pair);
  return pair;
}

SamplePair construct_pair(const PairRecipe& recipe, const PairExtras& extras) {
  if (recipe.q <= 0.0 || recipe.r <= 0.0 || recipe.b_s1 <= 0.0 ||
      recipe.lambda1_sq <= 0.0) {
    throw std::invalid_argument("construct_pair: q, r, b_s1, lambda1_sq must be positive");
  }

  const double b_s2 = recipe.q * recipe.b_s1;
  const double lambda1 = std::sqrt(recipe.lambda1_sq);
  const double lambda2 = std::sqrt(recipe.r * recipe.lambda1_sq);

  const double b_beta = recipe.b_s1 - recipe.a_beta / (2.0 * recipe.lambda1_sq);
  const double b_w12_sq = 0.5 * b_beta + extras.b_w22 * extras.b_w22;
  const double a_w12_sq = 0.5 * recipe.a_beta + extras.a_w22 * extras.a_w22;
  if (b_w12_sq < 0.0) {
    throw InvalidSamplesError("construct_pair: recipe forces b_w12^2 = " +
                              std::to_string(b_w12_sq) + " < 0");
  }
  if (a_w12_sq < 0.0) {
    throw InvalidSamplesError("construct_pair: recipe forces a_w12^2 = " +
                              std::to_string(a_w12_sq) + " < 0");
  }

  // Split each s_i between the in-plane components by the shared phases.
  const Vec3 b_w1 = {std::sqrt(recipe.b_s1) * std::sin(extras.base_alpha1),
                     std::sqrt(b_w12_sq),
                     std::sqrt(recipe.b_s1) * std::cos(extras.base_alpha1)};
  const Vec3 b_w2 = {std::sqrt(b_s2) * std::sin(extras.base_alpha2), extras.b_w22,
                     std::sqrt(b_s2) * std::cos(extras.base_alpha2)};
  const Vec3 a_w1 = {lambda1 * b_w1[0], std::sqrt(a_w12_sq), lambda1 * b_w1[2]};
  const Vec3 a_w2 = {lambda2 * b_w2[0], extras.a_w22, lambda2 * b_w2[2]};

  const Sample a(a_w1, a_w2);
  const Sample b(b_w1, b_w2);
  if (!is_valid(a)) {
    throw InvalidSamplesError(
        "construct_pair: sample A violates the validity condition "
        "(w12^2 < |w2|^2 and w22^2 < |w1|^2)");
  }
  if (!is_valid(b)) {
    throw InvalidSamplesError(
        "construct_pair: sample B violates the validity condition "
        "(w12^2 < |w2|^2 and w22^2 < |w1|^2)");
  }

  const CanonicalCurve curve_a = canonical(a);
  const CanonicalCurve curve_b = canonical(b);
  if (std::abs(curve_a.u - curve_b.u) <= 1e-9 * std::max(curve_a.u, curve_b.u)) {
    throw DegenerateCurvesError("construct_pair: equal slope coefficients (r = 1)");
  }
  const CurveIntersection hit = intersect(curve_a, curve_b);
  if (hit.kind != CurveIntersection::Kind::Points) {
    throw NoIntersectionError("construct_pair: candidate curves miss each other");
  }
  // Interior crossing required; a boundary tangency would collapse the
  // reflected copies onto each other.
  for (const PatchPoint& p : hit.points) {
    if (p.x <= 1e-9 || p.x >= kPi - 1e-9 || p.y <= 1e-9 || p.y >= kPi - 1e-9) {
      throw NoIntersectionError("construct_pair: intersection sits on the patch boundary");
    }
  }

  return SamplePair{a, b, lambda1, lambda2};
}

FalseMinimaReport false_minima_report(const SamplePair& pair) {
  verify_pair(pair);
  const CurveIntersection hit = intersect(canonical(pair.a), canonical(pair.b));

  const double alpha1 = alpha_of(pair.a.w1());
  const double alpha2 = alpha_of(pair.a.w2());
  const SampleSet both({pair.a, pair.b});

  FalseMinimaReport report;
  for (const PatchPoint& p : hit.points) {
    // The full solution set in one 2 pi cell is the patch point plus its
    // mirror images, (x, y), (2 pi - x, y), (x, 2 pi - y), (2 pi - x, 2 pi - y).
    const double xs[2] = {p.x, kTwoPi - p.x};
    const double ys[2] = {p.y, kTwoPi - p.y};
    for (double x : xs) {
      for (double y : ys) {
        const double theta1 = x / 2.0 - alpha1;
        const double theta2 = y / 2.0 - alpha2;
        const bool duplicate =
            std::any_of(report.minima.begin(), report.minima.end(),
                        [&](const FalseMinimum& m) {
                          return std::abs(m.theta1 - theta1) <= 1e-12 &&
                                 std::abs(m.theta2 - theta2) <= 1e-12;
                        });
        if (!duplicate) {
          report.minima.push_back(
              {theta1, theta2, objective(both, {theta1, theta2})});
        }
      }
    }
  }

  report.min_pairwise_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.minima.size(); ++i) {
    for (std::size_t j = i + 1; j < report.minima.size(); ++j) {
      const double dx = report.minima[i].theta1 - report.minima[j].theta1;
      const double dy = report.minima[i].theta2 - report.minima[j].theta2;
      report.min_pairwise_distance =
          std::min(report.min_pairwise_distance, std::hypot(dx, dy));
    }
  }
  return report;
}

}  // namespace hinge
