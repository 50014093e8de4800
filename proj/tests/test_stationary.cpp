#include <cmath>

#include "doctest.h"
#include "hinge/calculus.hpp"
#include "hinge/errors.hpp"
#include "hinge/stationary.hpp"
#include "support/test_helpers.hpp"

using namespace hinge;
using namespace hinge::testing;

TEST_CASE("grid_points enumerates the lattice") {
  const Sample a = paper_sample_a();
  const auto points = grid_points(a, {0, 1}, {0, 1});
  REQUIRE(points.size() == 4);

  CHECK(points[0].theta1 == doctest::Approx(-kPi / 3.0).epsilon(1e-14));
  CHECK(points[0].theta2 ==
        doctest::Approx(-std::atan2(std::sqrt(2.0), std::sqrt(14.0))).epsilon(1e-14));
  CHECK(points[0].parity == ParityCase::EvenEven);
  CHECK(points[3].parity == ParityCase::OddOdd);
}

TEST_CASE("every lattice point is stationary") {
  RandomDraw draw(31);
  for (int i = 0; i < 50; ++i) {
    const Sample s = draw.sample();
    const double scale = (s_of(s.w1()) + s_of(s.w2())) *
                         (std::abs(c_of(s)) + s_of(s.w1()) + s_of(s.w2()));
    for (const GridPoint& p : grid_points(s, {-3, 3}, {-3, 3})) {
      const Gradient g = gradient(s, {p.theta1, p.theta2});
      CHECK(std::hypot(g.d_theta1, g.d_theta2) <= 1e-10 * (1.0 + scale));
    }
  }
}

TEST_CASE("classification of the reference sample's lattice") {
  const Sample a = paper_sample_a();
  const auto points = grid_points(a, {0, 1}, {0, 1});

  const GridClassification ee = classify_grid_point(a, points[0]);  // (0,0)
  CHECK(ee.type == Classification::Saddle);
  CHECK(ee.hessian_det == doctest::Approx(-16384.0).epsilon(1e-13));

  const GridClassification oe = classify_grid_point(a, points[2]);  // (1,0)
  CHECK(oe.type == Classification::Maximum);
  CHECK(oe.hessian_det == doctest::Approx(802816.0).epsilon(1e-13));
  CHECK(oe.h11 == doctest::Approx(-896.0).epsilon(1e-13));

  const GridClassification eo = classify_grid_point(a, points[1]);  // (0,1)
  CHECK(eo.type == Classification::Maximum);

  const GridClassification oo = classify_grid_point(a, points[3]);  // (1,1)
  CHECK(oo.type == Classification::Saddle);
}

TEST_CASE("an invalid sample turns one extremal parity class into minima") {
  const Sample bad({1.0, 5.0, 0.0}, {1.0, 0.0, 1.0});
  REQUIRE_FALSE(is_valid(bad));
  const auto points = grid_points(bad, {0, 1}, {0, 1});

  const GridClassification oe = classify_grid_point(bad, points[2]);
  CHECK(oe.type == Classification::Minimum);
  CHECK(oe.h11 == doctest::Approx(92.0).epsilon(1e-13));
  CHECK(ring_oracle(bad, {points[2].theta1, points[2].theta2}) == RingVerdict::AllAbove);

  const GridClassification eo = classify_grid_point(bad, points[1]);
  CHECK(eo.type == Classification::Maximum);
  CHECK(ring_oracle(bad, {points[1].theta1, points[1].theta2}) == RingVerdict::AllBelow);
}

TEST_CASE("closed-form lattice |H| matches the generic determinant") {
  RandomDraw draw(32);
  for (int i = 0; i < 200; ++i) {
    const Sample s = draw.valid_sample();
    for (const GridPoint& p : grid_points(s, {0, 1}, {0, 1})) {
      const GridClassification closed = classify_grid_point(s, p);
      const HessianDet generic = hessian_det(s, {p.theta1, p.theta2});
      const double scale = std::abs(generic.left) + generic.right;
      CHECK(scaled_deviation(closed.hessian_det, generic.value, scale) < 1e-9);
    }
  }
}

TEST_CASE("ring oracle confirms the classification labels") {
  RandomDraw draw(33);
  for (int i = 0; i < 50; ++i) {
    const Sample s = draw.valid_sample();
    for (const GridPoint& p : grid_points(s, {0, 1}, {0, 1})) {
      const GridClassification c = classify_grid_point(s, p);
      const RingVerdict verdict = ring_oracle(s, {p.theta1, p.theta2});
      if (c.type == Classification::Saddle) CHECK(verdict == RingVerdict::Mixed);
      if (c.type == Classification::Maximum) CHECK(verdict == RingVerdict::AllBelow);
      if (c.type == Classification::Minimum) CHECK(verdict == RingVerdict::AllAbove);
    }
  }
}

TEST_CASE("curve existence equals validity, including near the boundary") {
  CHECK(curve_exists(paper_sample_a()));
  CHECK(curve_exists(paper_sample_b()));
  CHECK_FALSE(curve_exists(Sample({1.0, 5.0, 0.0}, {1.0, 0.0, 1.0})));

  RandomDraw draw(34);
  for (int i = 0; i < 2000; ++i) {
    const Sample s = draw.sample();
    CHECK(curve_exists(s) == is_valid(s));
  }
  // samples constructed right next to the existence boundary
  for (int i = 0; i < 500; ++i) {
    Vec3 w1 = draw.half();
    const Vec3 w2 = draw.half();
    const double norm2_sq = s_of(w2) + w2[1] * w2[1];
    const double side = (i % 2 == 0) ? 1.0 + 1e-6 : 1.0 - 1e-6;
    w1[1] = std::sqrt(norm2_sq * side);
    const Sample s(w1, w2);
    CHECK(curve_exists(s) == is_valid(s));
  }
}

TEST_CASE("canonical parameters") {
  const CanonicalCurve a = canonical(paper_sample_a());
  CHECK(a.u == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(a.v == doctest::Approx(-0.25).epsilon(1e-13));

  const CanonicalCurve b = canonical(paper_sample_b());
  CHECK(b.u == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(b.v == doctest::Approx(0.125).epsilon(1e-13));

  const CanonicalCurve sym = canonical(Sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}));
  CHECK(sym.u == doctest::Approx(1.0));
  CHECK(sym.v == doctest::Approx(0.0));
}

TEST_CASE("the arccos argument sweeps the predicted interval") {
  RandomDraw draw(35);
  for (int i = 0; i < 300; ++i) {
    const Sample s = draw.sample();
    const CanonicalCurve curve = canonical(s);
    const double s1 = s_of(s.w1());
    const double beta = beta_of(s);
    const double lo_predicted = -1.0 - beta / s1;
    const double hi_predicted = lo_predicted + 2.0 * s_of(s.w2()) / s1;
    const double tol = 1e-12 * (1.0 + std::abs(lo_predicted) + std::abs(hi_predicted));
    CHECK(std::abs((curve.v - curve.u) - lo_predicted) <= tol);
    CHECK(std::abs((curve.v + curve.u) - hi_predicted) <= tol);
  }
}

TEST_CASE("trace_curve worked point and structure") {
  const Sample a = paper_sample_a();

  // the worked point: y = pi/2 maps to x = arccos(-1/4)
  const PatchPoint worked{std::acos(-0.25), kPi / 2.0};
  CHECK(std::abs(patch_residual(a, worked)) < 1e-12 * 36.0);

  // the trace passes through it: the nearest traced point sits within one
  // grid step in y and the matching slope-bounded window in x
  const auto points = trace_curve(a, 401);
  double best_x = 0.0, best_gap = 1e9;
  for (const PatchPoint& p : points) {
    if (std::abs(p.y - worked.y) < best_gap) {
      best_gap = std::abs(p.y - worked.y);
      best_x = p.x;
    }
  }
  CHECK(best_gap < 0.01);
  CHECK(std::abs(best_x - worked.x) < 2.0 * best_gap + 1e-12);

  // symmetric sample: the curve is the diagonal
  const Sample sym({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
  for (const PatchPoint& p : trace_curve(sym, 64)) {
    CHECK(p.x == doctest::Approx(p.y).epsilon(1e-12));
  }
}

TEST_CASE("traced points are zeros, minima, and monotone in the patch") {
  RandomDraw draw(36);
  for (int i = 0; i < 100; ++i) {
    const Sample s = draw.valid_sample();
    const double s1 = s_of(s.w1());
    const double s2 = s_of(s.w2());
    const double c_scale = std::abs(c_of(s)) + s1 + s2;
    const auto points = trace_curve(s, 200);
    REQUIRE(points.size() == 200);
    double prev_x = -1.0;
    for (const PatchPoint& p : points) {
      CHECK(std::abs(patch_residual(s, p)) <= 1e-10 * c_scale);
      CHECK(p.x >= prev_x - 1e-12);  // positive slope in the patch
      prev_x = p.x;
      const auto thetas = unfold_to_theta(s, std::span<const PatchPoint>(&p, 1));
      CHECK(objective(s, thetas[0]) <= 1e-12 * 0.25 * c_scale * c_scale);
      CHECK(std::abs(hessian_det(s, thetas[0]).value) <= 1e-9 * s1 * s1 * s2 * s2);
    }
  }
}

TEST_CASE("trace endpoints sit on the patch boundary to machine precision") {
  const Sample a = paper_sample_a();  // curve leaves through x = pi and y = 0
  const auto points = trace_curve(a, 100);
  const double c_scale = std::abs(c_of(a)) + 32.0;
  CHECK(points.front().y == doctest::Approx(0.0));
  CHECK(std::abs(patch_residual(a, points.front())) <= 1e-12 * c_scale);
  CHECK(points.back().x == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(std::abs(patch_residual(a, points.back())) <= 1e-12 * c_scale);
}

TEST_CASE("trace_curve refuses samples without a curve") {
  CHECK_THROWS_AS(trace_curve(Sample({1.0, 5.0, 0.0}, {1.0, 0.0, 1.0}), 10),
                  EmptyCurveError);
}

TEST_CASE("on_curve_residual identities") {
  const Sample a = paper_sample_a();
  const Angles ee{-alpha_of(a.w1()), -alpha_of(a.w2())};
  CHECK(on_curve_residual(a, ee) == doctest::Approx(4.0).epsilon(1e-12));

  RandomDraw draw(37);
  for (int i = 0; i < 500; ++i) {
    const Sample s = draw.sample();
    const Angles angles = draw.angles();
    const double res = on_curve_residual(s, angles);
    const double twice_d = 2.0 * d_of(s, angles);
    CHECK(std::abs(res - twice_d) <=
          1e-12 * (1.0 + std::abs(res) + s_of(s.w1()) + s_of(s.w2())));
  }
}

TEST_CASE("verify_curve_minimality accepts curve points and rejects others") {
  const Sample a = paper_sample_a();
  const Angles on_curve = angles_for_two_r(a, std::acos(-0.25), kPi / 2.0);
  const MinimalityReport report = verify_curve_minimality(a, on_curve);
  CHECK(report.is_minimum);
  CHECK(report.objective_value <= 1e-12 * 0.25 * 36.0 * 36.0);
  CHECK(std::abs(report.hessian_det_value) <= 1e-9 * 256.0 * 256.0);

  const Sample b = paper_sample_b();
  for (const PatchPoint& p : trace_curve(b, 31)) {
    const auto thetas = unfold_to_theta(b, std::span<const PatchPoint>(&p, 1));
    CHECK(verify_curve_minimality(b, thetas[0]).is_minimum);
  }

  CHECK_THROWS_AS(verify_curve_minimality(a, {0.4, 1.3}), NotOnCurveError);
}

TEST_CASE("unfold_to_theta applies reflection, period, and phase offsets") {
  const Sample a = paper_sample_a();
  const PatchPoint p{1.0, 2.0};
  const auto plain = unfold_to_theta(a, std::span<const PatchPoint>(&p, 1));
  CHECK(plain[0].theta1 == doctest::Approx(0.5 - kPi / 3.0));

  const auto mirrored = unfold_to_theta(a, std::span<const PatchPoint>(&p, 1), true, true, 1, 0);
  CHECK(mirrored[0].theta1 == doctest::Approx(-0.5 + kPi - kPi / 3.0));

  // reflected and shifted images of a genuine curve point stay zeros
  const PatchPoint on_curve{std::acos(-0.25), kPi / 2.0};
  for (bool rx : {false, true}) {
    for (bool ry : {false, true}) {
      const auto image =
          unfold_to_theta(a, std::span<const PatchPoint>(&on_curve, 1), rx, ry, rx ? 1 : 0, ry ? -1 : 0);
      CHECK(objective(a, image[0]) <= 1e-12 * 0.25 * 36.0 * 36.0);
    }
  }
}
