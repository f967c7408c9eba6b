#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/numeric/odeint/stepper/runge_kutta_dopri5.hpp>

namespace coophunt {

using vec2 = std::array<double, 2>;

struct ode_options {
  double tol = 1e-9;               // relative per-step error; the absolute floor uses the same value
  double first_step = 1e-3;
  double max_step = 0;             // 0: unbounded
  std::size_t max_steps = 20000000;
  bool clamp_orthant = true;       // keep both coordinates nonnegative
};

struct ode_stats {
  std::size_t steps = 0;
  std::size_t rejected = 0;
  std::size_t clamps = 0;          // overshoots below zero pulled back to the axis
  double max_error = 0;            // largest accepted scaled error estimate
};

// one accepted step, enough for cubic Hermite interpolation
struct ode_step {
  double t0, t1;
  vec2 x0, x1, f0, f1;

  vec2 at(double t) const {
    const double dt = t1 - t0;
    const double s = (t - t0) / dt;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    vec2 r;
    for (int i = 0; i < 2; ++i) r[i] = h00 * x0[i] + h10 * dt * f0[i] + h01 * x1[i] + h11 * dt * f1[i];
    return r;
  }
};

// Dormand-Prince 5(4) from odeint for the stage arithmetic, with a local
// step controller so that rejections, clamps and error estimates are counted.
// on_step(const ode_step&) returns false to stop early. Returns the final time.
template <class Field, class OnStep>
double solve_ode(Field&& field, vec2 x, double t0, double t_end, const ode_options& o, ode_stats& st,
                 OnStep&& on_step) {
  if (!(t_end > t0)) throw std::invalid_argument("solve_ode: need t_end > t0");
  if (!(o.tol > 0)) throw std::invalid_argument("solve_ode: need tol > 0");
  namespace odeint = boost::numeric::odeint;
  odeint::runge_kutta_dopri5<vec2> stepper;
  auto sys = [&](const vec2& s, vec2& d, double) { d = field(s); };

  const double span = t_end - t0;
  const double h_min = 1e-14 * std::max(std::abs(t_end), span);
  double t = t0;
  double dt = std::min(o.first_step, span);
  vec2 f = field(x);
  vec2 x_new, f_new, err;
  while (t < t_end) {
    if (st.steps + st.rejected >= o.max_steps) throw std::runtime_error("solve_ode: step budget exhausted");
    if (o.max_step > 0) dt = std::min(dt, o.max_step);
    const bool last = t + dt >= t_end;
    if (last) dt = t_end - t;
    stepper.do_step(sys, x, f, t, x_new, f_new, dt, err);

    double e = 0;
    bool finite = true;
    for (int i = 0; i < 2; ++i) {
      finite = finite && std::isfinite(x_new[i]);
      const double sc = o.tol + o.tol * std::max(std::abs(x[i]), std::abs(x_new[i]));
      e = std::max(e, std::abs(err[i]) / sc);
    }
    // an overshoot past an invariant axis is a rejected step unless it is at rounding level
    bool crossed = false;
    if (o.clamp_orthant && finite)
      for (int i = 0; i < 2; ++i)
        if (x_new[i] < -1e-12) crossed = true;
    if (!finite || e > 1 || crossed) {
      ++st.rejected;
      const double shrink = (!finite || crossed) ? 0.25 : std::max(0.2, 0.9 * std::pow(e, -0.2));
      dt *= shrink;
      if (dt < h_min) throw std::runtime_error("solve_ode: stiff/stalled, step size underflow");
      continue;
    }
    if (o.clamp_orthant) {
      bool clamped = false;
      for (int i = 0; i < 2; ++i)
        if (x_new[i] < 0) {
          x_new[i] = 0;
          clamped = true;
        }
      if (clamped) {
        ++st.clamps;
        f_new = field(x_new);
      }
    }
    ++st.steps;
    st.max_error = std::max(st.max_error, e);
    const ode_step s{t, last ? t_end : t + dt, x, x_new, f, f_new};
    t = s.t1;
    x = x_new;
    f = f_new;
    if (!on_step(s)) return t;
    dt *= e == 0 ? 5.0 : std::clamp(0.9 * std::pow(e, -0.2), 0.2, 5.0);
  }
  return t;
}

// root of g along one step by bisection on the Hermite interpolant
template <class G>
double bisect_event(const ode_step& s, G&& g, double t_tol = 1e-12) {
  double lo = s.t0, hi = s.t1;
  double g_lo = g(s.x0);
  const double tol = t_tol * std::max(1.0, std::abs(s.t1));
  while (hi - lo > tol) {
    const double m = 0.5 * (lo + hi);
    if (m <= lo || m >= hi) break;
    const double gm = g(s.at(m));
    if ((gm > 0) == (g_lo > 0) && gm != 0) {
      lo = m;
      g_lo = gm;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace coophunt
