#pragma once

#include "hinge/model.hpp"

namespace hinge {

struct Gradient {
  double d_theta1 = 0.0;
  double d_theta2 = 0.0;
};

/// Symmetric 2x2 second-derivative matrix; the mixed entry is stored once.
struct Hessian {
  double h11 = 0.0;
  double h12 = 0.0;
  double h22 = 0.0;
};

/// Hessian determinant together with its product/cross decomposition:
/// value = left - right, left = h11*h22, right = h12^2.
struct HessianDet {
  double value = 0.0;
  double left = 0.0;
  double right = 0.0;
};

/// Gradient of the single-sample objective in factored form,
/// (-2 s1 d sin(2 r1), 2 s2 d sin(2 r2)).
Gradient gradient(const Sample& sample, const Angles& angles);

/// The same gradient with the error expanded and products reduced to
/// single- and double-angle terms. Used as an algebraic cross-check.
Gradient gradient_expanded(const Sample& sample, const Angles& angles);

/// Componentwise sum of per-sample gradients.
Gradient gradient_multi(const SampleSet& set, const Angles& angles);

/// Second derivatives in the compact (d-carrying) form.
Hessian hessian(const Sample& sample, const Angles& angles);

/// Second derivatives in the fully expanded trigonometric form.
Hessian hessian_expanded(const Sample& sample, const Angles& angles);

/// Entrywise sum of per-sample Hessians.
Hessian hessian_multi(const SampleSet& set, const Angles& angles);

HessianDet hessian_det(const Sample& sample, const Angles& angles);
HessianDet hessian_det_multi(const SampleSet& set, const Angles& angles);

/// Machine-generated closed forms, transcribed factor by factor from their
/// printed shape with no algebraic simplification. They are deliberately
/// kept in that raw shape to serve as an independent oracle for the
/// structured forms above.
double raw_gradient_theta1(const Sample& sample, const Angles& angles);
double raw_hessian_theta1(const Sample& sample, const Angles& angles);
double raw_hessian_det(const Sample& sample, const Angles& angles);

/// Central finite differences of the objective. Step defaults to 1e-5,
/// near the optimum for a smooth trigonometric objective in double
/// precision.
Gradient fd_gradient(const SampleSet& set, const Angles& angles, double h = 1e-5);
Hessian fd_hessian(const SampleSet& set, const Angles& angles, double h = 1e-5);

}  // namespace hinge
