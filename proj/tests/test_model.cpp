#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hinge/model.hpp"
#include "support/test_helpers.hpp"

using namespace hinge;
using namespace hinge::testing;

TEST_CASE("s_of ignores the middle component") {
  CHECK(s_of({3.0, 99.0, 4.0}) == doctest::Approx(25.0).epsilon(1e-15));
  CHECK(s_of({0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s_of(paper_sample_a().w1()) == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("alpha_of is the two-argument arctangent of (w1, w3)") {
  CHECK(alpha_of({1.0, 0.0, 1.0}) == doctest::Approx(kPi / 4.0));
  CHECK(alpha_of(paper_sample_a().w1()) == doctest::Approx(kPi / 3.0).epsilon(1e-14));
  CHECK(alpha_of(paper_sample_b().w1()) == doctest::Approx(kPi / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(alpha_of({0.0, 5.0, 0.0}), std::domain_error);
}

TEST_CASE("r_of offsets theta by alpha") {
  CHECK(r_of(0.0, {1.0, 0.0, 1.0}) == doctest::Approx(kPi / 4.0));
  CHECK(std::abs(r_of(-kPi / 3.0, paper_sample_a().w1())) < 1e-15);
  CHECK(r_of(kPi / 2.0, {0.0, 0.0, 1.0}) == doctest::Approx(kPi / 2.0));
}

TEST_CASE("t_of basic values") {
  CHECK(t_of(kPi / 2.0, {3.0, 0.0, 0.0}) == doctest::Approx(3.0));
  CHECK(t_of(0.0, {0.0, 0.0, 1.0}) == doctest::Approx(-1.0));
  CHECK(std::abs(t_of(kPi / 4.0, {1.0, 0.0, 1.0})) < 1e-15);
}

TEST_CASE("amplitude-phase form of t matches the sine-cosine form") {
  RandomDraw draw(11);
  for (int i = 0; i < 2000; ++i) {
    const Vec3 w = draw.half();
    const double theta = draw.angle(draw.rng);
    const double direct = t_of(theta, w);
    const double phasor = t_phasor(theta, w);
    CHECK(std::abs(direct - phasor) <= 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("p_of basic values") {
  CHECK(p_of(kPi / 2.0, {3.0, 4.0, 0.0}) == doctest::Approx(25.0));
  CHECK(std::abs(p_of(kPi / 4.0, {1.0, 0.0, 1.0})) < 1e-15);
  CHECK(p_of(0.0, {0.0, 2.0, 1.0}) == doctest::Approx(5.0));
}

TEST_CASE("p_of ranges over [w2^2, |w|^2] with the bounds attained") {
  RandomDraw draw(12);
  for (int i = 0; i < 200; ++i) {
    const Vec3 w = draw.half();
    const double lo = w[1] * w[1];
    const double hi = lo + s_of(w);
    for (int k = 0; k < 50; ++k) {
      const double p = p_of(draw.angle(draw.rng), w);
      CHECK(p >= lo - 1e-12 * (1.0 + hi));
      CHECK(p <= hi + 1e-12 * (1.0 + hi));
    }
    const double alpha = alpha_of(w);
    CHECK(p_of(-alpha + kPi / 2.0, w) == doctest::Approx(lo).epsilon(1e-12));
    CHECK(p_of(-alpha, w) == doctest::Approx(hi).epsilon(1e-12));
  }
}

TEST_CASE("d_of symmetry, worked values, and the half-angle route") {
  const Sample same({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
  CHECK(d_of(same, {0.7, 0.7}) == doctest::Approx(0.0));

  const Sample a = paper_sample_a();
  CHECK(d_of(a, angles_for_two_r(a, kPi, 0.0)) == doctest::Approx(-14.0).epsilon(1e-13));

  // a point of the sample's own zero curve: cos(2r1) = -1/4, cos(2r2) = 0
  const Angles on_curve = angles_for_two_r(a, std::acos(-0.25), kPi / 2.0);
  CHECK(std::abs(d_of(a, on_curve)) < 1e-12 * 36.0);

  RandomDraw draw(13);
  for (int i = 0; i < 2000; ++i) {
    const Sample s = draw.sample();
    const Angles angles = draw.angles();
    const double direct = d_of(s, angles);
    const double phasor = d_phasor(s, angles);
    CHECK(std::abs(direct - phasor) <= 1e-12 * (1.0 + std::abs(direct) +
                                                s_of(s.w1()) + s_of(s.w2())));
  }
}

TEST_CASE("c_of and beta_of") {
  const Sample a = paper_sample_a();
  CHECK(c_of(a) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(beta_of(a) == doctest::Approx(4.0).epsilon(1e-13));

  const Sample b = paper_sample_b();
  CHECK(c_of(b) == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(beta_of(b) == doctest::Approx(3.5).epsilon(1e-13));

  const Sample same({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
  CHECK(c_of(same) == doctest::Approx(0.0));
  CHECK(beta_of(same) == doctest::Approx(0.0));

  RandomDraw draw(14);
  for (int i = 0; i < 500; ++i) {
    const Sample s = draw.sample();
    const double lhs = c_of(s) - s_of(s.w1()) + s_of(s.w2()) - beta_of(s);
    CHECK(std::abs(lhs) <= 1e-12 * (1.0 + std::abs(c_of(s))));
  }
}

TEST_CASE("objective values and additivity") {
  const Sample a = paper_sample_a();
  const Angles on_curve = angles_for_two_r(a, std::acos(-0.25), kPi / 2.0);
  CHECK(objective(a, on_curve) < 1e-24 * 36.0 * 36.0);

  const Angles off = angles_for_two_r(a, kPi, 0.0);
  CHECK(objective(a, off) == doctest::Approx(196.0).epsilon(1e-12));

  const SampleSet twice({a, a});
  CHECK(objective(twice, off) == doctest::Approx(2.0 * objective(a, off)));
}

TEST_CASE("objective has period pi in each angle") {
  RandomDraw draw(15);
  for (int i = 0; i < 500; ++i) {
    const Sample s = draw.sample();
    const Angles angles = draw.angles();
    const double base = objective(s, angles);
    const double scale = 1.0 + base;
    CHECK(std::abs(objective(s, {angles.theta1 + kPi, angles.theta2}) - base) <=
          1e-9 * scale);
    CHECK(std::abs(objective(s, {angles.theta1, angles.theta2 + kPi}) - base) <=
          1e-9 * scale);
  }
}

TEST_CASE("scaling all components by lambda scales the objective by lambda^4") {
  RandomDraw draw(16);
  for (int i = 0; i < 200; ++i) {
    const Sample s = draw.sample();
    const Angles angles = draw.angles();
    const double lambda = 0.5 + std::abs(draw.component(draw.rng)) * 0.2;
    auto scaled = [&](const Vec3& w) {
      return Vec3{lambda * w[0], lambda * w[1], lambda * w[2]};
    };
    const Sample s_scaled(scaled(s.w1()), scaled(s.w2()));
    const double expected = std::pow(lambda, 4.0) * objective(s, angles);
    CHECK(objective(s_scaled, angles) ==
          doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("validity condition") {
  CHECK(is_valid(paper_sample_a()));
  CHECK(is_valid(paper_sample_b()));
  CHECK_FALSE(is_valid(Sample({1.0, 5.0, 0.0}, {1.0, 0.0, 1.0})));
}

TEST_CASE("sample construction rejects degenerate and non-finite input") {
  CHECK_THROWS_AS(Sample({0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Sample({1.0, 0.0, 1.0}, {0.0, 7.0, 0.0}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Sample({inf, 0.0, 1.0}, {1.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampleSet({}), std::invalid_argument);
}
