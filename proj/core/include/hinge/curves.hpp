#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hinge/stationary.hpp"

namespace hinge {

/// Which of the four patch boundary lines x = 0, x = pi, y = 0, y = pi a
/// canonical curve meets. The four closed-form conditions are, in the same
/// order: |1 - v|/u <= 1, |-1 - v|/u <= 1, |u + v| <= 1, |-u + v| <= 1,
/// conventionally labelled A, C, D, F.
struct BoundaryPattern {
  bool hits_x0 = false;
  bool hits_xpi = false;
  bool hits_y0 = false;
  bool hits_ypi = false;

  bool operator==(const BoundaryPattern&) const = default;

  /// Bit encoding (A, C, D, F) -> (8, 4, 2, 1).
  std::uint8_t bits() const noexcept {
    return static_cast<std::uint8_t>((hits_x0 ? 8 : 0) | (hits_xpi ? 4 : 0) |
                                     (hits_y0 ? 2 : 0) | (hits_ypi ? 1 : 0));
  }

  /// The subset of {"A", "C", "D", "F"} that holds.
  std::vector<std::string> labels() const;
};

/// Evaluates the four conditions. tie_tol widens each <= comparison by an
/// absolute band; the default is the exact printed conditions. Tangency
/// counts as an intersection.
BoundaryPattern boundary_pattern(const CanonicalCurve& curve, double tie_tol = 0.0);

/// Existence of the curve in canonical parameters: the argument interval
/// [v - u, v + u] reaches into [-1, 1].
bool curve_present(const CanonicalCurve& curve, double tie_tol = 0.0) noexcept;

/// Sampling-based counterpart of boundary_pattern that never looks at the
/// closed-form conditions: it walks the arccos argument over [0, pi] and
/// checks which boundary lines the traced curve reaches within tol. The
/// clearance entries report how far (in argument units) each test was from
/// flipping, so callers can tell a solid agreement from a tangency call.
struct BoundaryScan {
  BoundaryPattern pattern;
  std::array<double, 4> clearance{};  // >= 0 means the hit side, same order as labels
};
BoundaryScan geometric_boundary_scan(const CanonicalCurve& curve,
                                     int n_samples = 10000, double tol = 1e-9);

/// Closed uniform grid lo, lo + step, ..., hi.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

struct PatternWitness {
  BoundaryPattern pattern;
  double u = 0.0;
  double v = 0.0;
};

struct PatternCensus {
  std::vector<PatternWitness> patterns;  // sorted by bits()
  std::size_t cells_scanned = 0;
  std::size_t cells_with_curve = 0;
};

/// Sweeps the (u, v) grid and collects every boundary pattern realized by a
/// non-empty curve, with the lexicographically smallest witness per
/// pattern. Cells whose curve is empty are skipped (their all-false
/// pattern is the degenerate no-curve case, not a curve shape). The grids
/// place tangencies on exact decimals, so conditions are evaluated with a
/// 1e-9 band: far below the grid quantum, far above double rounding noise.
/// Each witness is cross-checked against geometric_boundary_scan.
PatternCensus enumerate_patterns(const GridSpec& u_grid = {0.01, 4.0, 0.01},
                                 const GridSpec& v_grid = {-4.0, 4.0, 0.01},
                                 double tie_tol = 1e-9);

struct CurveIntersection {
  enum class Kind { None, Points, Coincident };
  Kind kind = Kind::None;
  std::vector<PatchPoint> points;
};

/// Intersections of two canonical curves inside the patch. With unequal
/// slope coefficients there is at most one: cos y* = (v_b - v_a)/(u_a - u_b)
/// and cos x* follows from either curve; the point is kept when both stay
/// in [-1, 1]. Equal coefficients give whole-curve coincidence when the
/// offsets also agree, otherwise nothing.
CurveIntersection intersect(const CanonicalCurve& a, const CanonicalCurve& b,
                            double tol = 1e-12);

}  // namespace hinge
