#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hinge/model.hpp"

namespace hinge {

/// Parity of the lattice indices (k1 mod 2, k2 mod 2). The second
/// derivative test at a lattice point depends only on this.
enum class ParityCase { EvenEven, OddEven, EvenOdd, OddOdd };

enum class Classification { Saddle, Maximum, Minimum, Degenerate };

std::string_view to_string(ParityCase parity) noexcept;
std::string_view to_string(Classification cls) noexcept;

/// One point of the discrete stationary lattice
/// theta_i = -alpha_i + k_i * pi/2.
struct GridPoint {
  int k1 = 0;
  int k2 = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  ParityCase parity = ParityCase::EvenEven;
};

/// Outcome of the closed-form second derivative test at a lattice point,
/// with the quantities the decision was read off from.
struct GridClassification {
  Classification type = Classification::Degenerate;
  double hessian_det = 0.0;  // closed-form |H|; the cross term vanishes on the lattice
  double h11 = 0.0;          // closed-form leading second derivative
};

/// Slope/offset parameters of the solution curve written as
/// cos x = u*cos(y) + v with x = 2 r1, y = 2 r2 and u > 0.
struct CanonicalCurve {
  double u = 1.0;
  double v = 0.0;
};

/// A point of the (2 r1, 2 r2) plane; the primary patch is [0, pi]^2.
struct PatchPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Inclusive integer range.
struct IndexRange {
  int lo = 0;
  int hi = 0;
};

struct MinimalityReport {
  double objective_value = 0.0;
  double hessian_det_value = 0.0;
  bool is_minimum = false;
};

/// All lattice points with k1 in k1_range and k2 in k2_range, row-major in
/// (k1, k2).
std::vector<GridPoint> grid_points(const Sample& sample, IndexRange k1_range,
                                   IndexRange k2_range);

/// Second derivative test via the per-parity closed forms. |H| reduces to
/// the pure product term on the lattice (both sines vanish), so the sign
/// pattern over the four parities is saddle/extremum/extremum/saddle; the
/// extremal cases are told apart by the sign of h11. Degenerate is
/// reported when |H| (or h11 for extrema) vanishes within a scale-aware
/// tolerance: the closed forms are products of squared sums, so the
/// thresholds are relative to s1*s2*(4(s1+s2+|beta|))^2 and
/// 4*s1*(s1+s2+|beta|).
GridClassification classify_grid_point(const Sample& sample, const GridPoint& point);

/// Whether the zero-error curve exists, evaluated through the range
/// condition on the arccos argument. Equals is_valid(sample); the two
/// routes are kept separate so tests can check the equivalence.
bool curve_exists(const Sample& sample);

CanonicalCurve canonical(const Sample& sample);

/// Signed distance from the curve in the natural normalization:
/// c + s1*cos(2 r1) - s2*cos(2 r2), which is twice the per-sample error.
double on_curve_residual(const Sample& sample, const Angles& angles);

/// Residual of a patch point (x, y): c + s1*cos(x) - s2*cos(y).
double patch_residual(const Sample& sample, const PatchPoint& point);

/// Points of cos x = u*cos(y) + v inside the patch, parameterized by y over
/// the sub-interval where the arccos argument stays in [-1, 1]. The
/// argument is monotone in y, so the endpoints come from arccos directly
/// (to machine precision, which downstream intersection work relies on).
/// Throws EmptyCurveError when the feasible interval is empty.
std::vector<PatchPoint> trace_canonical(const CanonicalCurve& curve, int n_points);

/// trace_canonical for the sample's own curve. Throws EmptyCurveError when
/// the curve does not exist.
std::vector<PatchPoint> trace_curve(const Sample& sample, int n_points);

/// Maps patch points to (theta1, theta2): optional reflection through the
/// origin of the (2 r1, 2 r2) plane, a 2 pi cell shift per axis, then
/// theta_i = x_i/2 - alpha_i.
std::vector<Angles> unfold_to_theta(const Sample& sample,
                                    std::span<const PatchPoint> points,
                                    bool reflect_x = false, bool reflect_y = false,
                                    int cell_x = 0, int cell_y = 0);

/// Checks that a point of the curve is a global minimum: the objective
/// vanishes there (it is a zero of a non-negative function) while the
/// Hessian determinant also vanishes, which is why the second derivative
/// test alone cannot certify it. Throws NotOnCurveError when the supplied
/// angles are off the curve by more than residual_tol relative to
/// |c| + s1 + s2.
MinimalityReport verify_curve_minimality(const Sample& sample, const Angles& angles,
                                         double residual_tol = 1e-9);

}  // namespace hinge
