#include "hinge/model.hpp"

#include <cmath>
#include <stdexcept>

namespace hinge {

namespace {

void require_finite(const Vec3& w, const char* name) {
  for (double x : w) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string("Sample: non-finite component in ") + name);
    }
  }
}

}  // namespace

Sample::Sample(const Vec3& w1, const Vec3& w2) : w1_(w1), w2_(w2) {
  require_finite(w1, "w1");
  require_finite(w2, "w2");
  if (s_of(w1) <= 0.0) {
    throw std::invalid_argument("Sample: degenerate reading, w11 = w13 = 0");
  }
  if (s_of(w2) <= 0.0) {
    throw std::invalid_argument("Sample: degenerate reading, w21 = w23 = 0");
  }
}

SampleSet::SampleSet(std::vector<Sample> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw std::invalid_argument("SampleSet: needs at least one sample");
  }
}

double s_of(const Vec3& w) noexcept { return w[0] * w[0] + w[2] * w[2]; }

double alpha_of(const Vec3& w) {
  if (w[0] == 0.0 && w[2] == 0.0) {
    throw std::domain_error("alpha_of: undefined for w1 = w3 = 0");
  }
  return std::atan2(w[0], w[2]);
}

double r_of(double theta, const Vec3& w) { return theta + alpha_of(w); }

double t_of(double theta, const Vec3& w) noexcept {
  return w[0] * std::sin(theta) - w[2] * std::cos(theta);
}

double t_phasor(double theta, const Vec3& w) {
  if (w[0] == 0.0 && w[2] == 0.0) {
    throw std::domain_error("t_phasor: undefined for w1 = w3 = 0");
  }
  const double phase = std::atan2(-w[0], -w[2]);
  return std::sqrt(s_of(w)) * std::cos(theta + phase);
}

double p_of(double theta, const Vec3& w) noexcept {
  const double t = t_of(theta, w);
  return t * t + w[1] * w[1];
}

double c_of(const Sample& sample) noexcept {
  return s_of(sample.w1()) + 2.0 * sample.w12() * sample.w12() -
         s_of(sample.w2()) - 2.0 * sample.w22() * sample.w22();
}

double beta_of(const Sample& sample) noexcept {
  return 2.0 * sample.w12() * sample.w12() - 2.0 * sample.w22() * sample.w22();
}

double d_of(const Sample& sample, const Angles& angles) noexcept {
  return p_of(angles.theta1, sample.w1()) - p_of(angles.theta2, sample.w2());
}

double d_phasor(const Sample& sample, const Angles& angles) {
  const double r1 = r_of(angles.theta1, sample.w1());
  const double r2 = r_of(angles.theta2, sample.w2());
  return 0.5 * (c_of(sample) + s_of(sample.w1()) * std::cos(2.0 * r1) -
                s_of(sample.w2()) * std::cos(2.0 * r2));
}

double objective(const Sample& sample, const Angles& angles) noexcept {
  const double d = d_of(sample, angles);
  return d * d;
}

double objective(const SampleSet& set, const Angles& angles) noexcept {
  double sum = 0.0;
  for (const Sample& s : set) {
    sum += objective(s, angles);
  }
  return sum;
}

bool is_valid(const Sample& sample) noexcept {
  const double norm1_sq = s_of(sample.w1()) + sample.w12() * sample.w12();
  const double norm2_sq = s_of(sample.w2()) + sample.w22() * sample.w22();
  return sample.w12() * sample.w12() < norm2_sq &&
         sample.w22() * sample.w22() < norm1_sq;
}

}  // namespace hinge
