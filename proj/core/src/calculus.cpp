#include "hinge/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace hinge {

namespace {

// Everything the closed forms consume, computed once per (sample, angles).
struct Frame {
  double s1, s2, c;
  double sin2r1, cos2r1, sin4r1, cos4r1;
  double sin2r2, cos2r2, sin4r2, cos4r2;
  double d;  // (c + s1 cos2r1 - s2 cos2r2) / 2
};

Frame make_frame(const Sample& sample, const Angles& angles) {
  Frame f;
  f.s1 = s_of(sample.w1());
  f.s2 = s_of(sample.w2());
  f.c = c_of(sample);
  const double r1 = r_of(angles.theta1, sample.w1());
  const double r2 = r_of(angles.theta2, sample.w2());
  f.sin2r1 = std::sin(2.0 * r1);
  f.cos2r1 = std::cos(2.0 * r1);
  f.sin4r1 = std::sin(4.0 * r1);
  f.cos4r1 = std::cos(4.0 * r1);
  f.sin2r2 = std::sin(2.0 * r2);
  f.cos2r2 = std::cos(2.0 * r2);
  f.sin4r2 = std::sin(4.0 * r2);
  f.cos4r2 = std::cos(4.0 * r2);
  f.d = 0.5 * (f.c + f.s1 * f.cos2r1 - f.s2 * f.cos2r2);
  return f;
}

Hessian hessian_from_frame(const Frame& f) {
  Hessian h;
  h.h11 = -2.0 * f.s1 *
          (-0.5 * f.s1 + 2.0 * f.d * f.cos2r1 + 0.5 * f.s1 * f.cos4r1);
  h.h22 = 2.0 * f.s2 *
          (0.5 * f.s2 + 2.0 * f.d * f.cos2r2 - 0.5 * f.s2 * f.cos4r2);
  h.h12 = -2.0 * f.s1 * f.s2 * f.sin2r1 * f.sin2r2;
  return h;
}

}  // namespace

Gradient gradient(const Sample& sample, const Angles& angles) {
  const Frame f = make_frame(sample, angles);
  return {-2.0 * f.s1 * f.d * f.sin2r1, 2.0 * f.s2 * f.d * f.sin2r2};
}

Gradient gradient_expanded(const Sample& sample, const Angles& angles) {
  const Frame f = make_frame(sample, angles);
  Gradient g;
  g.d_theta1 = -f.s1 * (f.c * f.sin2r1 + 0.5 * f.s1 * f.sin4r1 -
                        f.s2 * f.sin2r1 * f.cos2r2);
  g.d_theta2 = f.s2 * (f.c * f.sin2r2 + f.s1 * f.cos2r1 * f.sin2r2 -
                       0.5 * f.s2 * f.sin4r2);
  return g;
}

Gradient gradient_multi(const SampleSet& set, const Angles& angles) {
  Gradient total;
  for (const Sample& s : set) {
    const Gradient g = gradient(s, angles);
    total.d_theta1 += g.d_theta1;
    total.d_theta2 += g.d_theta2;
  }
  return total;
}

Hessian hessian(const Sample& sample, const Angles& angles) {
  return hessian_from_frame(make_frame(sample, angles));
}

Hessian hessian_expanded(const Sample& sample, const Angles& angles) {
  const Frame f = make_frame(sample, angles);
  Hessian h;
  h.h11 = -2.0 * f.s1 * (f.c * f.cos2r1 + f.s1 * f.cos4r1 -
                         f.s2 * f.cos2r1 * f.cos2r2);
  h.h22 = 2.0 * f.s2 * (f.c * f.cos2r2 - f.s2 * f.cos4r2 +
                        f.s1 * f.cos2r1 * f.cos2r2);
  h.h12 = -2.0 * f.s1 * f.s2 * f.sin2r1 * f.sin2r2;
  return h;
}

Hessian hessian_multi(const SampleSet& set, const Angles& angles) {
  Hessian total;
  for (const Sample& s : set) {
    const Hessian h = hessian(s, angles);
    total.h11 += h.h11;
    total.h12 += h.h12;
    total.h22 += h.h22;
  }
  return total;
}

HessianDet hessian_det(const Sample& sample, const Angles& angles) {
  const Hessian h = hessian(sample, angles);
  HessianDet det;
  det.left = h.h11 * h.h22;
  det.right = h.h12 * h.h12;
  det.value = det.left - det.right;
  return det;
}

HessianDet hessian_det_multi(const SampleSet& set, const Angles& angles) {
  const Hessian h = hessian_multi(set, angles);
  HessianDet det;
  det.left = h.h11 * h.h22;
  det.right = h.h12 * h.h12;
  det.value = det.left - det.right;
  return det;
}

double raw_gradient_theta1(const Sample& sample, const Angles& angles) {
  const double w11 = sample.w11(), w12 = sample.w12(), w13 = sample.w13();
  const double w21 = sample.w21(), w22 = sample.w22(), w23 = sample.w23();
  const double th1 = angles.theta1, th2 = angles.theta2;
  return (2 * (w11 * std::sin(th1) - w13 * std::cos(th1)) *
          (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) *
          (w12 * w12 - w22 * w22 +
           (w11 * std::sin(th1) - w13 * std::cos(th1)) *
               (w11 * std::sin(th1) - w13 * std::cos(th1)) -
           (w21 * std::sin(th2) - w23 * std::cos(th2)) *
               (w21 * std::sin(th2) - w23 * std::cos(th2))));
}

double raw_hessian_theta1(const Sample& sample, const Angles& angles) {
  const double w11 = sample.w11(), w12 = sample.w12(), w13 = sample.w13();
  const double w21 = sample.w21(), w22 = sample.w22(), w23 = sample.w23();
  const double th1 = angles.theta1, th2 = angles.theta2;
  return (2 * (-2 * w11 * std::sin(th1) + 2 * w13 * std::cos(th1)) *
              (w11 * std::sin(th1) - w13 * std::cos(th1)) *
              (w12 * w12 - w22 * w22 +
               (w11 * std::sin(th1) - w13 * std::cos(th1)) *
                   (w11 * std::sin(th1) - w13 * std::cos(th1)) -
               (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                   (w21 * std::sin(th2) - w23 * std::cos(th2))) +
          2 * (w11 * std::sin(th1) - w13 * std::cos(th1)) *
              (w11 * std::sin(th1) - w13 * std::cos(th1)) *
              (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) *
              (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) +
          2 * (w11 * std::cos(th1) + w13 * std::sin(th1)) *
              (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) *
              (w12 * w12 - w22 * w22 +
               (w11 * std::sin(th1) - w13 * std::cos(th1)) *
                   (w11 * std::sin(th1) - w13 * std::cos(th1)) -
               (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                   (w21 * std::sin(th2) - w23 * std::cos(th2))));
}

double raw_hessian_det(const Sample& sample, const Angles& angles) {
  const double w11 = sample.w11(), w12 = sample.w12(), w13 = sample.w13();
  const double w21 = sample.w21(), w22 = sample.w22(), w23 = sample.w23();
  const double th1 = angles.theta1, th2 = angles.theta2;
  return (-4 * (w11 * std::sin(th1) - w13 * std::cos(th1)) *
              (w11 * std::sin(th1) - w13 * std::cos(th1)) *
              (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) *
              (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) *
              (w21 * std::sin(th2) - w23 * std::cos(th2)) *
              (w21 * std::sin(th2) - w23 * std::cos(th2)) *
              (2 * w21 * std::cos(th2) + 2 * w23 * std::sin(th2)) *
              (2 * w21 * std::cos(th2) + 2 * w23 * std::sin(th2)) +
          (2 * (-2 * w11 * std::sin(th1) + 2 * w13 * std::cos(th1)) *
               (w11 * std::sin(th1) - w13 * std::cos(th1)) *
               (w12 * w12 - w22 * w22 +
                (w11 * std::sin(th1) - w13 * std::cos(th1)) *
                    (w11 * std::sin(th1) - w13 * std::cos(th1)) -
                (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                    (w21 * std::sin(th2) - w23 * std::cos(th2))) +
           2 * (w11 * std::sin(th1) - w13 * std::cos(th1)) *
               (w11 * std::sin(th1) - w13 * std::cos(th1)) *
               (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) *
               (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) +
           2 * (w11 * std::cos(th1) + w13 * std::sin(th1)) *
               (2 * w11 * std::cos(th1) + 2 * w13 * std::sin(th1)) *
               (w12 * w12 - w22 * w22 +
                (w11 * std::sin(th1) - w13 * std::cos(th1)) *
                    (w11 * std::sin(th1) - w13 * std::cos(th1)) -
                (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                    (w21 * std::sin(th2) - w23 * std::cos(th2)))) *
              (-2 * (-2 * w21 * std::sin(th2) + 2 * w23 * std::cos(th2)) *
                   (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                   (w12 * w12 - w22 * w22 +
                    (w11 * std::sin(th1) - w13 * std::cos(th1)) *
                        (w11 * std::sin(th1) - w13 * std::cos(th1)) -
                    (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                        (w21 * std::sin(th2) - w23 * std::cos(th2))) +
               2 * (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                   (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                   (2 * w21 * std::cos(th2) + 2 * w23 * std::sin(th2)) *
                   (2 * w21 * std::cos(th2) + 2 * w23 * std::sin(th2)) -
               2 * (w21 * std::cos(th2) + w23 * std::sin(th2)) *
                   (2 * w21 * std::cos(th2) + 2 * w23 * std::sin(th2)) *
                   (w12 * w12 - w22 * w22 +
                    (w11 * std::sin(th1) - w13 * std::cos(th1)) *
                        (w11 * std::sin(th1) - w13 * std::cos(th1)) -
                    (w21 * std::sin(th2) - w23 * std::cos(th2)) *
                        (w21 * std::sin(th2) - w23 * std::cos(th2)))));
}

Gradient fd_gradient(const SampleSet& set, const Angles& angles, double h) {
  if (h <= 0.0) {
    throw std::invalid_argument("fd_gradient: step must be positive");
  }
  Gradient g;
  g.d_theta1 = (objective(set, {angles.theta1 + h, angles.theta2}) -
                objective(set, {angles.theta1 - h, angles.theta2})) /
               (2.0 * h);
  g.d_theta2 = (objective(set, {angles.theta1, angles.theta2 + h}) -
                objective(set, {angles.theta1, angles.theta2 - h})) /
               (2.0 * h);
  return g;
}

Hessian fd_hessian(const SampleSet& set, const Angles& angles, double h) {
  if (h <= 0.0) {
    throw std::invalid_argument("fd_hessian: step must be positive");
  }
  const double o0 = objective(set, angles);
  const double t1 = angles.theta1, t2 = angles.theta2;
  Hessian out;
  out.h11 = (objective(set, {t1 + h, t2}) - 2.0 * o0 + objective(set, {t1 - h, t2})) / (h * h);
  out.h22 = (objective(set, {t1, t2 + h}) - 2.0 * o0 + objective(set, {t1, t2 - h})) / (h * h);
  out.h12 = (objective(set, {t1 + h, t2 + h}) - objective(set, {t1 + h, t2 - h}) -
             objective(set, {t1 - h, t2 + h}) + objective(set, {t1 - h, t2 - h})) /
            (4.0 * h * h);
  return out;
}

}  // namespace hinge
