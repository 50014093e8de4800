#pragma once

// Shared generators and oracles for the test suites. Everything here is
// deliberately independent of the closed forms it is used to check:
// classification is probed by sampling the objective on a ring and the
// boundary tests by scanning the curve itself.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hinge/model.hpp"

namespace hinge::testing {

inline constexpr double kPi = std::numbers::pi;

struct RandomDraw {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> component{-10.0, 10.0};
  std::uniform_real_distribution<double> angle{-kPi, kPi};

  explicit RandomDraw(std::uint64_t seed) : rng(seed) {}

  Vec3 half() {
    while (true) {
      Vec3 w = {component(rng), component(rng), component(rng)};
      if (s_of(w) > 1e-6) return w;
    }
  }

  Sample sample() { return Sample(half(), half()); }

  Sample valid_sample() {
    while (true) {
      Sample s = sample();
      if (is_valid(s)) return s;
    }
  }

  /// A sample violating the validity condition with a comfortable margin:
  /// the plane-normal component of one reading is pushed above the other
  /// reading's norm.
  Sample invalid_sample() {
    while (true) {
      Vec3 w1 = half();
      Vec3 w2 = half();
      const double norm2_sq = s_of(w2) + w2[1] * w2[1];
      w1[1] = std::sqrt(norm2_sq) * (1.5 + std::abs(component(rng)) * 0.1);
      Sample s(w1, w2);
      if (!is_valid(s)) return s;
    }
  }

  Angles angles() { return {angle(rng), angle(rng)}; }
};

enum class RingVerdict { AllBelow, AllAbove, Mixed, Flat };

/// Second-derivative-free classification probe: compares the objective on a
/// ring of directions around the point against the center value.
inline RingVerdict ring_oracle(const Sample& sample, const Angles& center,
                               double radius = 1e-3, int directions = 32,
                               double slack_scale = 1e-12) {
  const double center_value = objective(sample, center);
  const double slack = slack_scale * (1.0 + std::abs(center_value));
  bool above = false;
  bool below = false;
  for (int i = 0; i < directions; ++i) {
    const double phi = 2.0 * kPi * i / directions;
    const Angles probe{center.theta1 + radius * std::cos(phi),
                       center.theta2 + radius * std::sin(phi)};
    const double diff = objective(sample, probe) - center_value;
    if (diff > slack) above = true;
    if (diff < -slack) below = true;
  }
  if (above && below) return RingVerdict::Mixed;
  if (above) return RingVerdict::AllAbove;
  if (below) return RingVerdict::AllBelow;
  return RingVerdict::Flat;
}

/// |a - b| against a scale-aware denominator. The two routes being compared
/// can lose different digits to cancellation, so pure relative error against
/// a near-zero result would be meaningless.
inline double scaled_deviation(double a, double b, double scale) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b), scale});
}

/// Distance on the period-pi torus of the angle plane.
inline double torus_pi_distance(const Angles& a, const Angles& b) {
  auto axis = [](double x, double y) {
    double d = std::fmod(std::abs(x - y), kPi);
    return std::min(d, kPi - d);
  };
  return std::hypot(axis(a.theta1, b.theta1), axis(a.theta2, b.theta2));
}

inline Sample paper_sample_a() {
  return Sample({std::sqrt(12.0), std::sqrt(2.0), 2.0},
                {std::sqrt(2.0), 0.0, std::sqrt(14.0)});
}

inline Sample paper_sample_b() {
  return Sample({std::sqrt(3.0), std::sqrt(7.0 / 4.0), 1.0},
                {1.0, 0.0, std::sqrt(7.0)});
}

/// Angles that place (2 r1, 2 r2) at the requested values.
inline Angles angles_for_two_r(const Sample& sample, double two_r1, double two_r2) {
  return {two_r1 / 2.0 - alpha_of(sample.w1()), two_r2 / 2.0 - alpha_of(sample.w2())};
}

}  // namespace hinge::testing
