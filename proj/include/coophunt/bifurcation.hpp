#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "coophunt/detail/bt_terms.hpp"
#include "coophunt/equilibria.hpp"
#include "coophunt/model.hpp"
#include "coophunt/poly.hpp"

namespace coophunt {

// ---- boundary equilibrium E_kappa at kappa = kappa1 ----

enum class boundary_kind { transcritical, pitchfork };

struct boundary_bifurcation_report {
  boundary_kind kind;
  double critical_kappa;
  double pitchfork_alpha;
  double quadratic_coeff;  // u^2 term of the centre-manifold flow
  double cubic_coeff;      // u^3 term
};

inline boundary_bifurcation_report boundary_bifurcation(const param_set& p, double kappa_tol = 1e-8,
                                                        double alpha_tol = 1e-9) {
  const double k1 = kappa1(p.h);
  if (std::abs(p.kappa - k1) > kappa_tol * k1)
    throw std::invalid_argument("boundary_bifurcation: kappa must equal kappa1");
  const double a = p.alpha, s = p.sigma, h = p.h;
  boundary_bifurcation_report r;
  r.critical_kappa = k1;
  r.pitchfork_alpha = 2 / (s * k1);
  r.quadratic_coeff = -(a * k1 * s - 2) * (h - 1) / (s * k1);
  r.cubic_coeff = (h - 1) * ((h - 1) * (4 * h * s - 4 * h - 3 * s + 4) * k1 + 2 * a * s * (h * s - h - 2 * s + 1)) /
                  (s * s * k1);
  r.kind = std::abs(a - r.pitchfork_alpha) <= alpha_tol * r.pitchfork_alpha ? boundary_kind::pitchfork
                                                                             : boundary_kind::transcritical;
  return r;
}

// ---- degenerate positive equilibrium E_* ----

template <class T>
bool cusp_admissible(const T& xs, const T& h) {
  if (!(h > 0 && h < 1) || !(xs > 0)) return false;
  if (xs <= 1) return true;
  return T((xs * xs - 1) / (xs * xs)) < h;
}

template <class T>
struct cusp_locus_t {
  T x_star, h, sigma;
  T alpha3;  // fold value of alpha at this sigma
  T kappa2;
  T sigma1;  // sigma at which the fold is also a zero-trace point
  bool admissible;
};

// F(x_*) = F'(x_*) = 0 solved for alpha and kappa; sigma defaults to sigma1
template <class T>
cusp_locus_t<T> cusp_locus(const T& xs, const T& h, std::optional<T> sigma = std::nullopt) {
  if (!cusp_admissible(xs, h)) throw std::domain_error("cusp_locus: (x_*, h) outside the admissible window");
  cusp_locus_t<T> c;
  c.x_star = xs;
  c.h = h;
  c.admissible = true;
  const T x2 = xs * xs;
  const T q = (h - 1) * x2;
  c.kappa2 = T(2) * xs * (q + 2) / (q + 3);
  c.sigma1 = (h - 1) * (q + 2) * (q + 1) / ((h - 1) * (h - 1) * x2 + h - 2);
  c.sigma = sigma ? *sigma : c.sigma1;
  c.alpha3 = T(2) * (q + 2) / ((T(1) - h) * c.sigma * x2 * xs);
  return c;
}

struct saddle_node_report {
  double d0_prime, d1_prime, d2;  // d0'(0), d1'(0), d2(0)
  double zeta_prime;              // d0'(0)/d2(0)
  double zeta_prime_closed;       // the simplified closed form
  int d2_sign;
};

inline saddle_node_report saddle_node_normal_form(double xs, double h, double sigma) {
  const auto c = cusp_locus<double>(xs, h, sigma);
  if (std::abs(sigma - c.sigma1) < 1e-8) throw std::domain_error("saddle_node_normal_form: sigma = sigma1 is the cusp");
  const double x2 = xs * xs, hm = h - 1;
  const double q1 = hm * x2 + 1, q2 = q1 + 1, q3 = q1 + 2, q6 = q1 + 5;
  const double G = (-hm * hm * x2 - h + 2) * sigma + hm * q2 * q1;
  saddle_node_report r;
  r.d0_prime = q1 * q1 * hm * sigma * sigma * std::pow(xs, 5) / (2 * G * q3);
  r.d1_prime = hm * q1 * sigma * sigma * std::pow(xs, 4) / (2 * G * G * q3) *
               ((-std::pow(hm, 4) * std::pow(xs, 6) - 8 * std::pow(hm, 3) * std::pow(xs, 4) - hm * (11 * h - 13) * x2 -
                 4 * h + 2) *
                    sigma +
                hm * q2 * q1 * (hm * hm * x2 * x2 + 7 * hm * x2 + 4));
  r.d2 = q2 * q6 * q1 * sigma / (G * q3);
  r.zeta_prime = r.d0_prime / r.d2;
  r.zeta_prime_closed = hm * q1 * sigma * std::pow(xs, 5) / (2 * q6 * q2);
  r.d2_sign = r.d2 > 0 ? 1 : -1;
  return r;
}

// exact fold test for arbitrary parameters: F and F' share a zero
inline double fold_resultant(const param_set& p) {
  const auto F = quartic_F(p);
  return resultant(F, F.derivative());
}

// ---- Bogdanov-Takens unfolding at the cusp ----

template <class T>
struct bt_normal_form {
  T beta1, beta2, A, B;
};

template <class T>
struct bt_expansion {
  T x_star, h;
  T alpha_star, sigma_star, kappa;
  T f11, f12, f22, f32;
  T g01, g10, h01, h10;
  T J0;

  // (eps1, eps2) = (alpha - alpha_*, sigma - sigma_*)
  bt_normal_form<T> normal_form(const T& e1, const T& e2) const {
    const auto cd = detail::eval_bt_cd(x_star, h, e1, e2);
    const auto e = detail::eval_bt_e(cd);
    const T f00 = e.e00 - e.e10 * e.e01 / e.e11 + e.e20 * e.e01 * e.e01 / (e.e11 * e.e11);
    const T f10 = e.e10 - T(2) * e.e20 * e.e01 / e.e11;
    const T mu1 = f00;
    const T mu2 = f10 - T(2) * e.e02 * f00;
    bt_normal_form<T> r;
    r.A = e.e20 + T(2) * e.e02 * (e.e02 * f00 - f10);
    r.B = e.e11;
    const T B2 = r.B * r.B;
    r.beta1 = B2 * B2 * mu1 / (r.A * r.A * r.A);
    r.beta2 = B2 * mu2 / (r.A * r.A);
    return r;
  }

  T alpha_sn(const T& sigma) const { return curve(sigma, f12); }
  T alpha_hopf(const T& sigma) const { return curve(sigma, f22); }
  T alpha_homoclinic(const T& sigma) const { return curve(sigma, f32); }

 private:
  T curve(const T& sigma, const T& f2) const {
    const T e = sigma - sigma_star;
    return alpha_star + f11 * e + f2 * e * e;
  }
};

template <class T>
bt_expansion<T> bt_curves(const T& xs, const T& h) {
  const auto c = cusp_locus<T>(xs, h);
  bt_expansion<T> b;
  b.x_star = xs;
  b.h = h;
  b.alpha_star = c.alpha3;
  b.sigma_star = c.sigma1;
  b.kappa = c.kappa2;
  const auto t = detail::eval_bt_curve_terms(xs, h);
  b.f11 = t.f11;
  b.f12 = t.f12;
  b.f22 = t.f22;
  b.f32 = t.f32;
  b.g01 = t.g01;
  b.g10 = t.g10;
  b.h01 = t.h01;
  b.h10 = t.h10;
  const T x2 = xs * xs;
  const T q = h * x2 - x2;
  const T s = h * h * x2 + (T(1) - T(2) * x2) * h + x2 - T(2);
  const T w = T(3) * h * h * h * x2 * x2 - T(2) * x2 * (T(4) * x2 - T(3)) * h * h + (x2 - T(1)) * (T(7) * x2 - T(3)) * h -
              T(2) * x2 * (x2 - T(2));
  b.J0 = -(x2 * x2) * (q + T(6)) * s * s / (T(4) * (h - T(1)) * (h - T(1)) * (q + T(1)) * (q + T(2)) * w);
  return b;
}

enum class bt_zone { I1, SNminus, I2, H, I3, HL, I4, SNplus, Cusp };

inline const char* to_string(bt_zone z) {
  constexpr const char* n[] = {"I1", "SN-", "I2", "H", "I3", "HL", "I4", "SN+", "cusp"};
  return n[static_cast<int>(z)];
}

// locate (sigma, alpha) against the quadratic curves near the cusp
inline bt_zone bt_region(const param_set& p, const bt_expansion<double>& b, double radius = 0.1,
                         double tie = 1e-6) {
  const double e2 = p.sigma - b.sigma_star;
  if (std::abs(e2) > radius) throw std::out_of_range("bt_region: outside trust region");
  const double a = p.alpha;
  const double sn = b.alpha_sn(p.sigma);
  auto near = [&](double v) { return std::abs(a - v) <= tie * std::max(1.0, std::abs(v)); };
  if (std::abs(e2) <= tie && near(b.alpha_star)) return bt_zone::Cusp;
  if (near(sn)) return e2 < 0 ? bt_zone::SNplus : bt_zone::SNminus;
  if (a < sn) return bt_zone::I1;
  if (e2 <= 0) return bt_zone::I4;
  const double hopf = b.alpha_hopf(p.sigma), hl = b.alpha_homoclinic(p.sigma);
  if (near(hopf)) return bt_zone::H;
  if (near(hl)) return bt_zone::HL;
  if (a < hopf) return bt_zone::I2;
  if (a < hl) return bt_zone::I3;
  return bt_zone::I4;
}

}  // namespace coophunt
