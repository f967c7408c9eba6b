#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace coophunt {

// dimensional system: growth r, carrying capacity K, conversion c, mortality d,
// encounter rate e, cooperation a, handling time h_dim
struct dimensional_params {
  double r, K, c, d, e, a, h_dim;
};

struct param_set {
  double alpha = 0;  // cooperation intensity
  double kappa = 1;  // scaled carrying capacity
  double sigma = 1;  // scaled prey growth rate
  double h = 0.5;    // scaled handling time

  void validate() const {
    if (!(alpha >= 0) || !(kappa > 0) || !(sigma > 0) || !(h > 0))
      throw std::domain_error("param_set: need alpha >= 0 and kappa, sigma, h > 0");
  }
};

struct state {
  double x = 0, y = 0;
};

struct mat2 {
  double a11, a12, a21, a22;
  double det() const { return a11 * a22 - a12 * a21; }
  double trace() const { return a11 + a22; }
  double discriminant() const { return trace() * trace() - 4 * det(); }
};

inline param_set nondimensionalize(const dimensional_params& p) {
  if (!(p.r > 0 && p.K > 0 && p.c > 0 && p.d > 0 && p.e > 0 && p.a >= 0 && p.h_dim > 0))
    throw std::domain_error("nondimensionalize: parameters must be positive");
  param_set q;
  q.alpha = p.a / p.e * std::sqrt(p.d * p.c / p.e);
  q.sigma = p.r / p.d;
  q.kappa = std::sqrt(p.c * p.e / p.d) * p.K;
  q.h = p.h_dim * p.d / p.c;
  return q;
}

// rational field with Holling III response and cooperative attack rate
inline std::array<double, 2> field2(const param_set& p, const state& s) {
  const double w = 1 + p.alpha * s.y;
  const double x2 = s.x * s.x;
  const double uptake = w * x2 * s.y / (1 + p.h * w * x2);
  return {p.sigma * s.x * (1 - s.x / p.kappa) - uptake, uptake - s.y};
}

// Positive factor relating the two fields: field3 = orbital_factor * field2.
// Multiplying the rational field by kappa (1 + h(1 + alpha y) x^2) clears the
// denominator, which is why kappa multiplies the predation term below.
inline double orbital_factor(const param_set& p, const state& s) {
  return p.kappa * (1 + p.h * (1 + p.alpha * s.y) * s.x * s.x);
}

// quartic polynomial field, orbitally equivalent to field2
inline std::array<double, 2> field3(const param_set& p, const state& s) {
  const double w = 1 + p.alpha * s.y;
  const double x2 = s.x * s.x;
  return {s.x * (p.sigma * (p.kappa - s.x) * (1 + p.h * w * x2) - p.kappa * w * s.x * s.y),
          p.kappa * s.y * ((1 - p.h) * w * x2 - 1)};
}

inline mat2 jacobian3(const param_set& p, const state& s) {
  const double x = s.x, y = s.y;
  const double w = 1 + p.alpha * y;
  const double x2 = x * x;
  mat2 j;
  j.a11 = p.sigma * (p.kappa - 2 * x) * (1 + p.h * w * x2) + 2 * p.sigma * p.h * w * x2 * (p.kappa - x) -
          2 * p.kappa * w * x * y;
  j.a12 = p.sigma * p.h * p.alpha * x2 * x * (p.kappa - x) - p.kappa * x2 * (w + p.alpha * y);
  j.a21 = 2 * p.kappa * (1 - p.h) * w * x * y;
  j.a22 = p.kappa * ((1 - p.h) * w * x2 - 1) + p.kappa * (1 - p.h) * p.alpha * x2 * y;
  return j;
}

}  // namespace coophunt
