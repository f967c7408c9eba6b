#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coophunt/model.hpp"
#include "coophunt/poly.hpp"

namespace coophunt {

enum class eq_kind { origin, boundary_kappa, positive };

enum class eq_class {
  saddle,
  stable_node,
  stable_focus,
  unstable_node,
  unstable_focus,
  center_or_weak_focus,
  degenerate_fold_candidate,
  degenerate_boundary
};

inline const char* to_string(eq_kind k) {
  switch (k) {
    case eq_kind::origin: return "origin";
    case eq_kind::boundary_kappa: return "boundary_kappa";
    case eq_kind::positive: return "positive";
  }
  return "?";
}

inline const char* to_string(eq_class c) {
  switch (c) {
    case eq_class::saddle: return "saddle";
    case eq_class::stable_node: return "stable_node";
    case eq_class::stable_focus: return "stable_focus";
    case eq_class::unstable_node: return "unstable_node";
    case eq_class::unstable_focus: return "unstable_focus";
    case eq_class::center_or_weak_focus: return "center_or_weak_focus";
    case eq_class::degenerate_fold_candidate: return "degenerate_fold_candidate";
    case eq_class::degenerate_boundary: return "degenerate_boundary";
  }
  return "?";
}

struct equilibrium {
  state point;
  eq_kind kind;
  eq_class cls;
  double det, trace, discriminant;
  bool near_degenerate = false;
  bool borderline_node_focus = false;  // trace^2 - 4 det inside the dead band
  int multiplicity = 1;                // as a root of F for positive equilibria
};

enum class region { P1, P2, P3, P4, P5, P6, P7, HGe1 };

inline const char* to_string(region r) {
  constexpr const char* n[] = {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "HGe1"};
  return n[static_cast<int>(r)];
}

struct region_tag {
  region tag;
  double kappa1 = INFINITY;
  std::optional<double> alpha1, alpha2;
  int positive_count() const {
    switch (tag) {
      case region::P3:
      case region::P5:
      case region::P6: return 1;
      case region::P7: return 2;
      default: return 0;
    }
  }
};

inline constexpr double degeneracy_tol = 1e-8;
inline constexpr double node_focus_band = 1e-10;

// abscissae of positive equilibria are the zeros of F in (0, kappa)
inline poly<double> quartic_F(const param_set& p) {
  const double a = p.alpha, s = p.sigma, k = p.kappa, h = p.h;
  return poly<double>({k, 0.0, k * (h - 1), k * a * s * (h - 1), -a * s * (h - 1)});
}

inline double critical_abscissa(const param_set& p) {
  if (!(p.alpha > 0) || !(p.sigma > 0)) throw std::domain_error("critical_abscissa: needs alpha > 0");
  const double q = p.kappa * p.alpha * p.sigma;
  return (3 * q + std::sqrt(q * (9 * q + 32))) / (8 * p.alpha * p.sigma);
}

inline double kappa1(double h) {
  if (!(h > 0 && h < 1)) throw std::domain_error("kappa1: needs 0 < h < 1");
  return 1 / std::sqrt(1 - h);
}

// trace at a positive equilibrium has the sign of this factor
inline double trace_factor(const param_set& p, double x) {
  const double k = p.kappa, h = p.h, s = p.sigma;
  return -k * (h - 1) * (h - 1) * x * x - 2 * h * s * x + k * (s * (2 * h - 1) - h + 1);
}

// fold thresholds: the two largest positive zeros of the cubic in alpha
inline std::pair<double, double> alpha_thresholds(double kappa, double sigma, double h) {
  const double k = kappa, s = sigma;
  poly<double> f({-16 * k * k * (h - 1) * (h - 1), -4 * s * k * (h - 1) * (h * k * k - k * k + 32),
                  -16 * s * s * (9 * h * k * k - 9 * k * k + 16), -27 * k * k * k * s * s * s * (h - 1)});
  if (f.degree() < 2) throw std::domain_error("alpha_thresholds: no threshold");
  double bound = 0;
  for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, std::abs(f.c[i] / f.lead()));
  const auto rs = real_roots(f, 0.0, 1 + bound);
  std::vector<double> xs;
  for (const auto& r : rs)
    for (int m = 0; m < r.multiplicity; ++m) xs.push_back(r.x);
  if (xs.size() < 2) throw std::domain_error("alpha_thresholds: no threshold");
  return {xs[xs.size() - 2], xs.back()};
}

inline region_tag classify_region(const param_set& p) {
  p.validate();
  region_tag t;
  if (p.h >= 1) {
    t.tag = region::HGe1;
    return t;
  }
  t.kappa1 = kappa1(p.h);
  try {
    auto [a1, a2] = alpha_thresholds(p.kappa, p.sigma, p.h);
    t.alpha1 = a1;
    t.alpha2 = a2;
  } catch (const std::domain_error&) {
  }
  const auto F = quartic_F(p);
  const double Fk = F(p.kappa);
  const double Fk_tol = degeneracy_tol * detail::magnitude(F, p.kappa);
  if (p.alpha == 0) {
    if (Fk < -Fk_tol) t.tag = region::P5;
    else t.tag = region::P4;
    return t;
  }
  const double xs = critical_abscissa(p);
  const double Fx = F(xs);
  const double Fx_tol = degeneracy_tol * detail::magnitude(F, xs);
  if (Fk < -Fk_tol) {
    t.tag = region::P5;
  } else if (Fk <= Fk_tol) {
    // kappa = kappa1: one zero below kappa exactly when alpha > 2/(kappa sigma)
    t.tag = (xs < p.kappa && Fx < -Fx_tol) ? region::P6 : region::P4;
  } else if (Fx > Fx_tol) {
    t.tag = region::P1;
  } else if (Fx >= -Fx_tol) {
    t.tag = xs >= p.kappa ? region::P2 : region::P3;
  } else {
    t.tag = xs > p.kappa ? region::P4 : region::P7;
  }
  return t;
}

namespace detail {

inline equilibrium make_equilibrium(const param_set& p, state s, eq_kind kind) {
  const mat2 j = jacobian3(p, s);
  equilibrium e{s, kind, eq_class::saddle, j.det(), j.trace(), j.discriminant()};
  const double det_scale = std::abs(j.a11 * j.a22) + std::abs(j.a12 * j.a21);
  const double tr_scale = std::abs(j.a11) + std::abs(j.a22);
  const bool det0 = std::abs(e.det) <= degeneracy_tol * det_scale;
  const bool tr0 = std::abs(e.trace) <= degeneracy_tol * tr_scale;
  e.near_degenerate = det0 || tr0;
  e.borderline_node_focus = std::abs(e.discriminant) <= node_focus_band * std::max(1.0, tr_scale * tr_scale);
  if (det0) {
    e.cls = kind == eq_kind::positive ? eq_class::degenerate_fold_candidate : eq_class::degenerate_boundary;
  } else if (e.det < 0) {
    e.cls = eq_class::saddle;
  } else if (tr0) {
    e.cls = eq_class::center_or_weak_focus;
  } else if (e.discriminant < 0) {
    e.cls = e.trace < 0 ? eq_class::stable_focus : eq_class::unstable_focus;
  } else {
    e.cls = e.trace < 0 ? eq_class::stable_node : eq_class::unstable_node;
  }
  return e;
}

}  // namespace detail

// E0, E_kappa, then positive equilibria by increasing x
inline std::vector<equilibrium> find_equilibria(const param_set& p) {
  p.validate();
  std::vector<equilibrium> out;
  out.push_back(detail::make_equilibrium(p, {0, 0}, eq_kind::origin));
  out.push_back(detail::make_equilibrium(p, {p.kappa, 0}, eq_kind::boundary_kappa));
  if (p.h >= 1) return out;
  for (const auto& r : real_roots(quartic_F(p), 0.0, p.kappa)) {
    const double x = r.x;
    auto e = detail::make_equilibrium(p, {x, p.sigma * x * (1 - x / p.kappa)}, eq_kind::positive);
    e.multiplicity = r.multiplicity;
    if (r.multiplicity > 1 && e.cls != eq_class::degenerate_fold_candidate) {
      e.cls = eq_class::degenerate_fold_candidate;
      e.near_degenerate = true;
    }
    out.push_back(e);
  }
  return out;
}

inline std::vector<equilibrium> positive_equilibria(const param_set& p) {
  std::vector<equilibrium> out;
  for (const auto& e : find_equilibria(p))
    if (e.kind == eq_kind::positive) out.push_back(e);
  return out;
}

}  // namespace coophunt
