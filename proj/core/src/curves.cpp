#include "hinge/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace hinge {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::vector<std::string> BoundaryPattern::labels() const {
  std::vector<std::string> out;
  if (hits_x0) out.emplace_back("A");
  if (hits_xpi) out.emplace_back("C");
  if (hits_y0) out.emplace_back("D");
  if (hits_ypi) out.emplace_back("F");
  return out;
}

BoundaryPattern boundary_pattern(const CanonicalCurve& curve, double tie_tol) {
  if (curve.u <= 0.0) {
    throw std::invalid_argument("boundary_pattern: u must be positive");
  }
  BoundaryPattern p;
  p.hits_x0 = std::abs(1.0 - curve.v) / curve.u <= 1.0 + tie_tol;
  p.hits_xpi = std::abs(-1.0 - curve.v) / curve.u <= 1.0 + tie_tol;
  p.hits_y0 = std::abs(curve.u + curve.v) <= 1.0 + tie_tol;
  p.hits_ypi = std::abs(-curve.u + curve.v) <= 1.0 + tie_tol;
  return p;
}

bool curve_present(const CanonicalCurve& curve, double tie_tol) noexcept {
  return curve.v - curve.u <= 1.0 + tie_tol && curve.u + curve.v >= -1.0 - tie_tol;
}

BoundaryScan geometric_boundary_scan(const CanonicalCurve& curve, int n_samples,
                                     double tol) {
  if (curve.u <= 0.0) {
    throw std::invalid_argument("geometric_boundary_scan: u must be positive");
  }
  if (n_samples < 2) {
    throw std::invalid_argument("geometric_boundary_scan: need at least two samples");
  }
  // Sample the arccos argument a(y) = u*cos(y) + v over [0, pi], endpoints
  // included. The traced curve reaches x = 0 exactly when a attains 1, and
  // x = pi when it attains -1; it reaches y = 0 / y = pi when the endpoint
  // values are themselves inside [-1, 1].
  double a_min = std::numeric_limits<double>::infinity();
  double a_max = -a_min;
  for (int i = 0; i < n_samples; ++i) {
    const double y = kPi * static_cast<double>(i) / (n_samples - 1);
    const double a = curve.u * std::cos(y) + curve.v;
    a_min = std::min(a_min, a);
    a_max = std::max(a_max, a);
  }
  const double a_y0 = curve.u + curve.v;   // a(0)
  const double a_ypi = curve.v - curve.u;  // a(pi)

  BoundaryScan scan;
  // Signed clearances: positive means the attained range covers the level.
  scan.clearance[0] = std::min(a_max - 1.0, 1.0 - a_min);
  scan.clearance[1] = std::min(a_max + 1.0, -1.0 - a_min);
  scan.clearance[2] = 1.0 - std::abs(a_y0);
  scan.clearance[3] = 1.0 - std::abs(a_ypi);
  scan.pattern.hits_x0 = scan.clearance[0] >= -tol;
  scan.pattern.hits_xpi = scan.clearance[1] >= -tol;
  scan.pattern.hits_y0 = scan.clearance[2] >= -tol;
  scan.pattern.hits_ypi = scan.clearance[3] >= -tol;
  return scan;
}

PatternCensus enumerate_patterns(const GridSpec& u_grid, const GridSpec& v_grid,
                                 double tie_tol) {
  if (u_grid.lo <= 0.0 || u_grid.step <= 0.0 || v_grid.step <= 0.0) {
    throw std::invalid_argument("enumerate_patterns: bad grid spec");
  }
  const auto grid_count = [](const GridSpec& g) {
    return static_cast<long>(std::floor((g.hi - g.lo) / g.step + 0.5)) + 1;
  };
  const long nu = grid_count(u_grid);
  const long nv = grid_count(v_grid);
  if (nu < 1 || nv < 1) {
    throw std::invalid_argument("enumerate_patterns: empty grid");
  }

  PatternCensus census;
  std::map<std::uint8_t, PatternWitness> found;
  for (long i = 0; i < nu; ++i) {
    const double u = u_grid.lo + static_cast<double>(i) * u_grid.step;
    for (long j = 0; j < nv; ++j) {
      const double v = v_grid.lo + static_cast<double>(j) * v_grid.step;
      ++census.cells_scanned;
      const CanonicalCurve curve{u, v};
      if (!curve_present(curve, tie_tol)) {
        continue;  // empty curve, the degenerate all-false case
      }
      ++census.cells_with_curve;
      const BoundaryPattern p = boundary_pattern(curve, tie_tol);
      found.try_emplace(p.bits(), PatternWitness{p, u, v});
    }
  }

  census.patterns.reserve(found.size());
  for (const auto& [bits, witness] : found) {
    // The scan must agree with the closed form at every witness; the band
    // makes tangency calls deterministic on decimal grids.
    const BoundaryScan scan =
        geometric_boundary_scan(CanonicalCurve{witness.u, witness.v}, 10000, tie_tol);
    if (!(scan.pattern == witness.pattern)) {
      throw std::logic_error("enumerate_patterns: geometric scan disagrees with "
                             "closed-form pattern at witness");
    }
    census.patterns.push_back(witness);
  }
  return census;
}

CurveIntersection intersect(const CanonicalCurve& a, const CanonicalCurve& b,
                            double tol) {
  CurveIntersection result;
  if (a.u == b.u || std::abs(a.u - b.u) <= tol * std::max(a.u, b.u)) {
    if (std::abs(a.v - b.v) <= tol * (1.0 + std::abs(a.v) + std::abs(b.v))) {
      result.kind = CurveIntersection::Kind::Coincident;
    } else {
      result.kind = CurveIntersection::Kind::None;
    }
    return result;
  }
  const double cos_y = (b.v - a.v) / (a.u - b.u);
  if (std::abs(cos_y) > 1.0 + tol) {
    result.kind = CurveIntersection::Kind::None;
    return result;
  }
  const double cos_x = a.u * cos_y + a.v;
  if (std::abs(cos_x) > 1.0 + tol) {
    result.kind = CurveIntersection::Kind::None;
    return result;
  }
  result.kind = CurveIntersection::Kind::Points;
  result.points.push_back({std::acos(std::clamp(cos_x, -1.0, 1.0)),
                           std::acos(std::clamp(cos_y, -1.0, 1.0))});
  return result;
}

}  // namespace hinge
