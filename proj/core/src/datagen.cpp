#include "hinge/datagen.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hinge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

RejectionParts rejection_decomposition(const Vec3& g, double axis_theta) noexcept {
  const double parallel = g[0] * std::cos(axis_theta) + g[2] * std::sin(axis_theta);
  const double norm_sq = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
  return {parallel, norm_sq - parallel * parallel};
}

GeneratedSet generate(const DatagenConfig& config) {
  const auto [lo, hi] = config.magnitude_range;
  if (config.count < 1) {
    throw std::invalid_argument("generate: count must be at least 1");
  }
  if (config.noise_sigma < 0.0) {
    throw std::invalid_argument("generate: noise_sigma must be non-negative");
  }
  if (!(lo > 0.0) || lo > hi) {
    throw std::invalid_argument(
        "generate: magnitude_range must satisfy 0 < lo <= hi, otherwise a "
        "degenerate s_i = 0 reading becomes possible");
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> magnitude(lo, hi);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::uniform_int_distribution<int> coin(0, 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto signed_magnitude = [&] {
    return (coin(rng) == 0 ? 1.0 : -1.0) * magnitude(rng);
  };

  const double c2 = std::cos(config.truth.theta2_true);
  const double s2 = std::sin(config.truth.theta2_true);

  GeneratedSet out;
  out.samples.reserve(static_cast<std::size_t>(config.count));
  for (int i = 0; i < config.count; ++i) {
    const Vec3 w1 = {signed_magnitude(), signed_magnitude(), signed_magnitude()};
    const double rejection = std::sqrt(p_of(config.truth.theta1_true, w1));

    // w2 = a * axis + b * in-plane-normal + m * e_y with b^2 + m^2 matching
    // w1's rejection, leaving p equal at the true angles.
    const double a = signed_magnitude();
    const double psi = phase(rng);
    const double b = rejection * std::cos(psi);
    const double m = rejection * std::sin(psi);
    Vec3 w2 = {a * c2 - b * s2, m, a * s2 + b * c2};

    if (config.noise_sigma > 0.0) {
      Vec3 w1_noisy = w1;
      for (double& x : w1_noisy) x += config.noise_sigma * gauss(rng);
      for (double& x : w2) x += config.noise_sigma * gauss(rng);
      out.samples.emplace_back(w1_noisy, w2);
    } else {
      out.samples.emplace_back(w1, w2);
      if (!is_valid(out.samples.back())) {
        // Only possible for measure-zero draws; an exact sample satisfies
        // the validity condition.
        throw std::logic_error("generate: exact sample failed the validity condition");
      }
    }
    out.parallel_components.push_back(a);
    out.in_plane_phases.push_back(psi);
  }
  return out;
}

}  // namespace hinge
