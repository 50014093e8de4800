#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hinge/model.hpp"

namespace hinge {

/// The true axis angle in each sensor frame; the axis itself is
/// (cos theta, 0, sin theta).
struct HingeTruth {
  double theta1_true = 0.0;
  double theta2_true = 0.0;
};

struct DatagenConfig {
  HingeTruth truth;
  int count = 1;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  /// Component magnitudes are drawn from this range; the low end must stay
  /// positive so no reading can degenerate to s_i = 0.
  std::pair<double, double> magnitude_range{0.5, 2.0};
};

/// A generated set plus the free parameters drawn per sample, recorded so a
/// run can be reproduced and audited.
struct GeneratedSet {
  std::vector<Sample> samples;
  std::vector<double> parallel_components;  // second reading's axis component
  std::vector<double> in_plane_phases;      // phase of its rejection part
};

/// Splits a reading against the axis (cos theta, 0, sin theta): the
/// component along the axis and the squared magnitude of what remains.
/// The remainder's squared magnitude is exactly p(theta, g).
struct RejectionParts {
  double parallel = 0.0;
  double rejection_sq = 0.0;
};
RejectionParts rejection_decomposition(const Vec3& g, double axis_theta) noexcept;

/// Draws w1 freely, then builds w2 so both readings reject equally much
/// about their own frame's axis, which zeroes the sample's error at the
/// true angles by construction. Gaussian component noise is added
/// afterwards when noise_sigma > 0. Same seed, same set.
GeneratedSet generate(const DatagenConfig& config);

}  // namespace hinge
