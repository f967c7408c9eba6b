#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "coophunt/detail/focal_terms.hpp"
#include "coophunt/detail/focus_terms.hpp"
#include "coophunt/equilibria.hpp"
#include "coophunt/lyapunov.hpp"
#include "coophunt/model.hpp"

namespace coophunt {

// lower kappa bound of the Hopf set; same expression as the cusp kappa2
inline double hopf_kappa2(double h, double x1) {
  const double q = (h - 1) * x1 * x1;
  return 2 * x1 * (q + 2) / (q + 3);
}

// (kappa, h, x1) admits a weak focus E1 at x = x1 with positive alpha, sigma
inline bool hopf_in_P(double kappa, double h, double x1) {
  if (!(kappa > 0 && h > 0 && h < 1 && x1 > 0)) return false;
  const double k2 = hopf_kappa2(h, x1);
  const double x2 = x1 * x1;
  if (!(kappa > k2)) return false;
  const bool h_window = x1 <= 1 || (x2 - 1) / x2 < h;
  if (h <= 0.5) return h_window && x1 < std::sqrt(2.0);
  if (!(kappa < 2 * h * x1 / (2 * h - 1))) return false;
  return x1 <= std::sqrt(2.0) || h_window;
}

struct hopf_point {
  double x1, kappa, h;
  double alpha, sigma;
  double omega;      // sqrt(det J) at E1
  double D_printed;  // det J at E1 up to a positive factor
  bool in_P;
  state e1;

  param_set params() const { return {alpha, kappa, sigma, h}; }
};

// alpha and sigma making x1 a zero-trace positive equilibrium
inline hopf_point hopf_critical(double kappa, double h, double x1) {
  if (!hopf_in_P(kappa, h, x1)) throw std::domain_error("hopf_critical: (kappa, h, x1) outside the Hopf set");
  hopf_point c;
  c.x1 = x1;
  c.kappa = kappa;
  c.h = h;
  c.in_P = true;
  const double g = (2 * h - 1) * kappa - 2 * h * x1;
  const double q = (h - 1) * x1 * x1;
  c.alpha = g / (x1 * x1 * x1 * (h - 1) * (h - 1) * (x1 - kappa));
  c.sigma = kappa * (h - 1) * (q + 1) / g;
  c.e1 = {x1, c.sigma * x1 * (1 - x1 / kappa)};
  c.D_printed = ((q + 3) * kappa - 2 * x1 * (q + 2)) / ((kappa - x1) * (1 - h) * x1 * x1);
  const double d = jacobian3(c.params(), c.e1).det();
  if (!(d > 0)) throw std::domain_error("hopf_critical: E1 is not a focus");
  c.omega = std::sqrt(d);
  return c;
}

enum class hopf_class { H1, H2, H3 };

inline const char* to_string(hopf_class c) {
  constexpr const char* n[] = {"H1", "H2", "H3"};
  return n[static_cast<int>(c)];
}

struct focal_report {
  double f1, f2;      // printed focal numerators
  double l1, l2, l3;  // l1, l2 from the printed prefactors, l3 from the series
  double L1, L2;      // series values on the printed normal form
  double prefactor1, prefactor2;
  bool f1_zero, f2_zero;
  int multiplicity;
  std::string method_l3 = "numerical Lyapunov";
};

inline double focal_f1(double kappa, double h, double x1) {
  return detail::eval_terms<double, 3>(detail::focal_f1, {x1, h, kappa});
}

inline double focal_f2(double kappa, double h, double x1) {
  return detail::eval_terms<double, 3>(detail::focal_f2, {x1, h, kappa});
}

// |f_i| below this counts as zero. The kappa^5 guard covers moderate kappa;
// the term scale takes over when cancellation among large terms dominates.
inline double focal_zero_tol(double kappa, double term_scale = 0) {
  return 1e-8 * std::max(1 + std::pow(std::abs(kappa), 5), term_scale);
}

inline double focal_f1_tol(double kappa, double h, double x1) {
  return focal_zero_tol(kappa, detail::eval_terms_abs<3>(detail::focal_f1, {x1, h, kappa}));
}

inline double focal_f2_tol(double kappa, double h, double x1) {
  return focal_zero_tol(kappa, detail::eval_terms_abs<3>(detail::focal_f2, {x1, h, kappa}));
}

// normalized system at E1 from the printed quadratic-to-quintic coefficients
inline std::pair<bipoly, bipoly> printed_focus_system(const hopf_point& c) {
  std::pair<bipoly, bipoly> pq;
  for (const auto& t : detail::eval_focus_terms(c.x1, c.h, c.kappa, c.omega)) {
    if (t.a != 0) pq.first.c[{t.i, t.j}] = t.a;
    if (t.b != 0) pq.second.c[{t.i, t.j}] = t.b;
  }
  return pq;
}

inline hopf_class multiplicity_region(double kappa, double h, double x1) {
  if (!hopf_in_P(kappa, h, x1)) throw std::domain_error("multiplicity_region: outside the Hopf set");
  if (std::abs(focal_f1(kappa, h, x1)) >= focal_f1_tol(kappa, h, x1)) return hopf_class::H1;
  if (std::abs(focal_f2(kappa, h, x1)) >= focal_f2_tol(kappa, h, x1)) return hopf_class::H2;
  return hopf_class::H3;
}

inline focal_report focal_values(const hopf_point& c) {
  if (!c.in_P) throw std::domain_error("focal_values: point outside the Hopf set");
  const double k = c.kappa, h = c.h, x = c.x1, w = c.omega;
  focal_report r;
  r.f1 = focal_f1(k, h, x);
  r.f2 = focal_f2(k, h, x);
  const double q = (h * x * x - x * x + 3) * k - 2 * x * (h * x * x - x * x + 2);
  const double g = 2 * h * k - 2 * h * x - k;
  r.prefactor1 = k / (16 * std::pow(h - 1, 2) * std::pow(k - x, 2) * std::pow(w, 3) * q * x);
  r.prefactor2 = std::pow(k, 5) / (3072 * std::pow(h - 1, 4) * std::pow(k - x, 4) * std::pow(w, 9) * q * g * g *
                                   x * x * x);
  r.l1 = r.prefactor1 * r.f1;
  r.l2 = r.prefactor2 * r.f2;
  const auto [P, Q] = printed_focus_system(c);
  const auto L = lyapunov_constants(P, Q, 3);
  r.L1 = L[0];
  r.L2 = L[1];
  r.l3 = L[2];
  r.f1_zero = std::abs(r.f1) < focal_f1_tol(k, h, x);
  r.f2_zero = std::abs(r.f2) < focal_f2_tol(k, h, x);
  if (!r.f1_zero) {
    r.multiplicity = 1;
  } else if (!r.f2_zero) {
    r.multiplicity = 2;
  } else if (r.l3 != 0 && std::abs(r.l3) > 1e-6 * (std::abs(r.l1) + std::abs(r.l2) + std::abs(r.l3))) {
    r.multiplicity = 3;
  } else {
    throw std::runtime_error("focal_values: inconclusive, all focal values vanish");
  }
  return r;
}

}  // namespace coophunt
