#include "hinge/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hinge/calculus.hpp"
#include "hinge/errors.hpp"

namespace hinge {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_to_unit(double x) { return std::clamp(x, -1.0, 1.0); }

ParityCase parity_of(int k1, int k2) {
  const bool odd1 = (k1 % 2) != 0;
  const bool odd2 = (k2 % 2) != 0;
  if (!odd1 && !odd2) return ParityCase::EvenEven;
  if (odd1 && !odd2) return ParityCase::OddEven;
  if (!odd1 && odd2) return ParityCase::EvenOdd;
  return ParityCase::OddOdd;
}

}  // namespace

std::string_view to_string(ParityCase parity) noexcept {
  switch (parity) {
    case ParityCase::EvenEven: return "EE";
    case ParityCase::OddEven: return "OE";
    case ParityCase::EvenOdd: return "EO";
    case ParityCase::OddOdd: return "OO";
  }
  return "?";
}

std::string_view to_string(Classification cls) noexcept {
  switch (cls) {
    case Classification::Saddle: return "Saddle";
    case Classification::Maximum: return "Maximum";
    case Classification::Minimum: return "Minimum";
    case Classification::Degenerate: return "Degenerate";
  }
  return "?";
}

std::vector<GridPoint> grid_points(const Sample& sample, IndexRange k1_range,
                                   IndexRange k2_range) {
  if (k1_range.lo > k1_range.hi || k2_range.lo > k2_range.hi) {
    throw std::invalid_argument("grid_points: empty index range");
  }
  const double alpha1 = alpha_of(sample.w1());
  const double alpha2 = alpha_of(sample.w2());
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(k1_range.hi - k1_range.lo + 1) *
              static_cast<std::size_t>(k2_range.hi - k2_range.lo + 1));
  for (int k1 = k1_range.lo; k1 <= k1_range.hi; ++k1) {
    for (int k2 = k2_range.lo; k2 <= k2_range.hi; ++k2) {
      GridPoint p;
      p.k1 = k1;
      p.k2 = k2;
      p.theta1 = -alpha1 + k1 * kPi / 2.0;
      p.theta2 = -alpha2 + k2 * kPi / 2.0;
      p.parity = parity_of(k1, k2);
      out.push_back(p);
    }
  }
  return out;
}

GridClassification classify_grid_point(const Sample& sample, const GridPoint& point) {
  const double s1 = s_of(sample.w1());
  const double s2 = s_of(sample.w2());
  const double beta = beta_of(sample);

  // Per-parity row of the closed-form table, in order EE, OE, EO, OO.
  double row = 0.0;
  double det_sign = 0.0;
  switch (point.parity) {
    case ParityCase::EvenEven:
      row = 4.0 * s1 - 4.0 * s2 + 2.0 * beta;
      det_sign = -1.0;
      break;
    case ParityCase::OddEven:
      row = 4.0 * s2 - 2.0 * beta;
      det_sign = 1.0;
      break;
    case ParityCase::EvenOdd:
      row = 4.0 * s1 + 2.0 * beta;
      det_sign = 1.0;
      break;
    case ParityCase::OddOdd:
      row = -2.0 * beta;
      det_sign = -1.0;
      break;
  }

  GridClassification result;
  result.hessian_det = det_sign * s1 * s2 * row * row;
  result.h11 = -s1 * row;

  const double magnitude = 4.0 * (s1 + s2 + std::abs(beta));
  const double det_scale = s1 * s2 * magnitude * magnitude;
  const double h11_scale = s1 * magnitude;

  if (std::abs(result.hessian_det) <= 1e-9 * det_scale) {
    result.type = Classification::Degenerate;
  } else if (result.hessian_det < 0.0) {
    result.type = Classification::Saddle;
  } else if (result.h11 < -1e-9 * h11_scale) {
    result.type = Classification::Maximum;
  } else if (result.h11 > 1e-9 * h11_scale) {
    result.type = Classification::Minimum;
  } else {
    result.type = Classification::Degenerate;
  }
  return result;
}

bool curve_exists(const Sample& sample) {
  const double s1 = s_of(sample.w1());
  const double s2 = s_of(sample.w2());
  const double beta = beta_of(sample);
  // The arccos argument sweeps [-1 - beta/s1, -1 - beta/s1 + 2 s2/s1]; the
  // curve exists iff that interval reaches into [-1, 1].
  const double lo = -1.0 - beta / s1;
  const double hi = lo + 2.0 * s2 / s1;
  return lo < 1.0 && hi > -1.0;
}

CanonicalCurve canonical(const Sample& sample) {
  const double s1 = s_of(sample.w1());
  return {s_of(sample.w2()) / s1, -c_of(sample) / s1};
}

double on_curve_residual(const Sample& sample, const Angles& angles) {
  const double r1 = r_of(angles.theta1, sample.w1());
  const double r2 = r_of(angles.theta2, sample.w2());
  return c_of(sample) + s_of(sample.w1()) * std::cos(2.0 * r1) -
         s_of(sample.w2()) * std::cos(2.0 * r2);
}

double patch_residual(const Sample& sample, const PatchPoint& point) {
  return c_of(sample) + s_of(sample.w1()) * std::cos(point.x) -
         s_of(sample.w2()) * std::cos(point.y);
}

std::vector<PatchPoint> trace_canonical(const CanonicalCurve& curve, int n_points) {
  if (curve.u <= 0.0) {
    throw std::invalid_argument("trace_canonical: u must be positive");
  }
  if (n_points < 2) {
    throw std::invalid_argument("trace_canonical: need at least two points");
  }
  // u*cos(y) + v decreases from u+v to v-u as y runs over [0, pi]; the
  // feasible sub-interval ends where it crosses +1/-1.
  const double at_y0 = curve.u + curve.v;
  const double at_ypi = curve.v - curve.u;
  if (at_ypi > 1.0 || at_y0 < -1.0) {
    throw EmptyCurveError("trace_canonical: arccos argument never enters [-1, 1]");
  }
  const double y_lo = at_y0 > 1.0 ? std::acos(clamp_to_unit((1.0 - curve.v) / curve.u)) : 0.0;
  const double y_hi = at_ypi < -1.0 ? std::acos(clamp_to_unit((-1.0 - curve.v) / curve.u)) : kPi;

  std::vector<PatchPoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  const double span = y_hi - y_lo;
  for (int i = 0; i < n_points; ++i) {
    const double y = y_lo + span * static_cast<double>(i) / (n_points - 1);
    const double arg = clamp_to_unit(curve.u * std::cos(y) + curve.v);
    out.push_back({std::acos(arg), y});
  }
  return out;
}

std::vector<PatchPoint> trace_curve(const Sample& sample, int n_points) {
  if (!curve_exists(sample)) {
    throw EmptyCurveError("trace_curve: sample has no zero-error curve");
  }
  return trace_canonical(canonical(sample), n_points);
}

std::vector<Angles> unfold_to_theta(const Sample& sample,
                                    std::span<const PatchPoint> points,
                                    bool reflect_x, bool reflect_y, int cell_x,
                                    int cell_y) {
  const double alpha1 = alpha_of(sample.w1());
  const double alpha2 = alpha_of(sample.w2());
  const double sx = reflect_x ? -1.0 : 1.0;
  const double sy = reflect_y ? -1.0 : 1.0;
  std::vector<Angles> out;
  out.reserve(points.size());
  for (const PatchPoint& p : points) {
    const double x = sx * p.x + 2.0 * kPi * cell_x;
    const double y = sy * p.y + 2.0 * kPi * cell_y;
    out.push_back({x / 2.0 - alpha1, y / 2.0 - alpha2});
  }
  return out;
}

MinimalityReport verify_curve_minimality(const Sample& sample, const Angles& angles,
                                         double residual_tol) {
  const double s1 = s_of(sample.w1());
  const double s2 = s_of(sample.w2());
  const double c_scale = std::abs(c_of(sample)) + s1 + s2;
  const double residual = on_curve_residual(sample, angles);
  if (std::abs(residual) > residual_tol * c_scale) {
    throw NotOnCurveError("verify_curve_minimality: residual " +
                          std::to_string(residual) + " exceeds tolerance");
  }
  MinimalityReport report;
  report.objective_value = objective(sample, angles);
  report.hessian_det_value = hessian_det(sample, angles).value;
  const double obj_scale = 0.25 * c_scale * c_scale;
  const double det_scale = s1 * s1 * s2 * s2;
  report.is_minimum = report.objective_value <= 1e-12 * obj_scale &&
                      std::abs(report.hessian_det_value) <= 1e-9 * det_scale;
  return report;
}

}  // namespace hinge
