#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace hinge {

/// One three-axis angular-velocity reading. Component order is (1, 2, 3)
/// where component 2 is the one along the candidate hinge plane's normal.
using Vec3 = std::array<double, 3>;

/// The two optimization variables, in radians. The landscape is periodic
/// with period pi in each of them, callers may normalize as they see fit.
struct Angles {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// A measurement pair (w1, w2): six components that determine one squared
/// error term. Construction rejects non-finite input and readings whose
/// in-plane part vanishes (w_i1 = w_i3 = 0), which would degenerate every
/// derived quantity.
class Sample {
 public:
  Sample(const Vec3& w1, const Vec3& w2);

  const Vec3& w1() const noexcept { return w1_; }
  const Vec3& w2() const noexcept { return w2_; }

  double w11() const noexcept { return w1_[0]; }
  double w12() const noexcept { return w1_[1]; }
  double w13() const noexcept { return w1_[2]; }
  double w21() const noexcept { return w2_[0]; }
  double w22() const noexcept { return w2_[1]; }
  double w23() const noexcept { return w2_[2]; }

 private:
  Vec3 w1_;
  Vec3 w2_;
};

/// An ordered, non-empty collection of samples.
class SampleSet {
 public:
  explicit SampleSet(std::vector<Sample> samples);

  std::size_t size() const noexcept { return samples_.size(); }
  const Sample& operator[](std::size_t i) const noexcept { return samples_[i]; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

 private:
  std::vector<Sample> samples_;
};

/// Squared magnitude of the in-plane part: w1^2 + w3^2.
double s_of(const Vec3& w) noexcept;

/// Phase offset atan2(w1, w3), in (-pi, pi]. Throws std::domain_error when
/// w1 = w3 = 0.
double alpha_of(const Vec3& w);

/// theta + alpha_of(w).
double r_of(double theta, const Vec3& w);

/// w1*sin(theta) - w3*cos(theta), the sine-cosine form.
double t_of(double theta, const Vec3& w) noexcept;

/// The same quantity in amplitude-phase form, sqrt(s)*cos(theta + phase).
/// The phase is the atan2(-w1, -w3) branch of atan(w1/w3); with the
/// principal branch the amplitude-phase form flips sign relative to t_of.
double t_phasor(double theta, const Vec3& w);

/// t^2 + w2^2. Ranges over [w2^2, |w|^2] as theta varies.
double p_of(double theta, const Vec3& w) noexcept;

/// s1 + 2*w12^2 - s2 - 2*w22^2.
double c_of(const Sample& sample) noexcept;

/// 2*w12^2 - 2*w22^2.
double beta_of(const Sample& sample) noexcept;

/// Per-sample error p(theta1, w1) - p(theta2, w2).
double d_of(const Sample& sample, const Angles& angles) noexcept;

/// The same error through the half-angle identity,
/// (c + s1*cos(2 r1) - s2*cos(2 r2)) / 2.
double d_phasor(const Sample& sample, const Angles& angles);

/// Squared error of a single sample.
double objective(const Sample& sample, const Angles& angles) noexcept;

/// Sum of squared errors over the set.
double objective(const SampleSet& set, const Angles& angles) noexcept;

/// Validity test: w12^2 < |w2|^2 and w22^2 < |w1|^2. Exact (noise-free)
/// samples always satisfy it; it is also exactly the condition for the
/// zero-error curve to exist. Note the second inequality compares the
/// plane-normal component of w2 against |w1|: that is what both the
/// extremum sign analysis and the range-overlap argument produce.
bool is_valid(const Sample& sample) noexcept;

}  // namespace hinge
