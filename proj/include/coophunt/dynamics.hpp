#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "coophunt/equilibria.hpp"
#include "coophunt/lyapunov.hpp"
#include "coophunt/model.hpp"
#include "coophunt/ode.hpp"

namespace coophunt {

// ---- worker pool for fans and grids ----

inline unsigned worker_count() {
  if (const char* env = std::getenv("COOPHUNT_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// fn(i) for i in [0, n), independent tasks; the first exception is rethrown
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned w = std::min<std::size_t>(worker_count(), n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < w; ++k)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// ---- trajectories ----

inline vec2 to_vec(const state& s) { return {s.x, s.y}; }
inline state to_state(const vec2& v) { return {v[0], v[1]}; }

struct trajectory {
  param_set params;
  std::vector<double> t;
  std::vector<state> x;
  ode_stats stats;
  bool rest = false;  // stopped early at an equilibrium
};

inline auto polynomial_field(const param_set& p) {
  return [p](const vec2& v) { return field3(p, to_state(v)); };
}

// polynomial field from s0 over [0, t_end], one sample per accepted step
inline trajectory integrate(const param_set& p, const state& s0, double t_end, double tol = 1e-9,
                            bool stop_at_rest = false, std::size_t max_steps = ode_options{}.max_steps) {
  p.validate();
  if (!(t_end > 0) || !(tol > 0)) throw std::invalid_argument("integrate: need t_end > 0 and tol > 0");
  if (s0.x < 0 || s0.y < 0) throw std::domain_error("integrate: start outside the nonnegative orthant");
  trajectory tr;
  tr.params = p;
  tr.t.push_back(0);
  tr.x.push_back(s0);
  ode_options o;
  o.tol = tol;
  o.max_steps = max_steps;
  solve_ode(polynomial_field(p), to_vec(s0), 0.0, t_end, o, tr.stats, [&](const ode_step& s) {
    tr.t.push_back(s.t1);
    tr.x.push_back(to_state(s.x1));
    if (stop_at_rest && std::hypot(s.f1[0], s.f1[1]) < 1e-12 * (1 + std::hypot(s.x1[0], s.x1[1]))) {
      tr.rest = true;
      return false;
    }
    return true;
  });
  return tr;
}

// ---- Poincare sections ----

struct section {
  state anchor;
  vec2 direction{0, -1};  // ray anchor + r d, r > 0; normalized on use
  int orientation = 0;    // required sign of field . normal at a crossing, 0: set by the first crossing
};

struct crossing {
  double t;
  state point;
  double r;  // distance from the anchor along the ray
};

struct return_options {
  ode_options ode;
  double t_max = 1e4;
  double escape_radius = 1e6;  // |state| beyond this is an escape
  double rest_tol = 1e-12;     // |field| below this (relative) ends the search
  double transversal = 1e-6;
};

namespace detail {

struct ray_frame {
  vec2 a, d, n;
  explicit ray_frame(const section& sec) {
    const double len = std::hypot(sec.direction[0], sec.direction[1]);
    if (!(len > 0)) throw std::invalid_argument("section: zero direction");
    a = to_vec(sec.anchor);
    d = {sec.direction[0] / len, sec.direction[1] / len};
    n = {-d[1], d[0]};
  }
  double g(const vec2& v) const { return (v[0] - a[0]) * n[0] + (v[1] - a[1]) * n[1]; }
  double r(const vec2& v) const { return (v[0] - a[0]) * d[0] + (v[1] - a[1]) * d[1]; }
};

}  // namespace detail

// n successive same-direction crossings of the section ray starting from s0.
// Fewer than n are returned if the orbit comes to rest or the time budget ends.
inline std::vector<crossing> return_map(const param_set& p, section sec, const state& s0, int n,
                                        const return_options& o = {}) {
  const detail::ray_frame fr(sec);
  auto field = polynomial_field(p);
  std::vector<crossing> out;
  if (n <= 0) return out;
  ode_stats st;
  const double scale = 1 + std::hypot(s0.x, s0.y);
  // a start on the section counts as already on the side the flow leaves to
  const vec2 f0 = field(to_vec(s0));
  if (std::hypot(f0[0], f0[1]) < o.rest_tol * scale) return out;
  const bool on_section = std::abs(fr.g(to_vec(s0))) <= 1e-12 * scale;
  const double g_start = f0[0] * fr.n[0] + f0[1] * fr.n[1];
  bool first = true;
  solve_ode(field, to_vec(s0), 0.0, o.t_max, o.ode, st, [&](const ode_step& s) {
    if (std::hypot(s.x1[0], s.x1[1]) > o.escape_radius) throw std::runtime_error("return_map: escaped domain");
    const double g0 = first && on_section ? g_start : fr.g(s.x0), g1 = fr.g(s.x1);
    first = false;
    if ((g0 >= 0) != (g1 >= 0)) {
      const double tc = bisect_event(s, [&](const vec2& v) { return fr.g(v); });
      const vec2 pc = s.at(tc);
      const double r = fr.r(pc);
      if (r > 0) {
        const vec2 f = field(pc);
        const double fn = f[0] * fr.n[0] + f[1] * fr.n[1];
        if (std::abs(fn) <= o.transversal) throw std::runtime_error("return_map: non-transverse section");
        const int dir = fn > 0 ? 1 : -1;
        if (sec.orientation == 0) sec.orientation = dir;
        if (dir == sec.orientation) {
          out.push_back({tc, to_state(pc), r});
          if (static_cast<int>(out.size()) >= n) return false;
        }
      }
    }
    return std::hypot(s.f1[0], s.f1[1]) >= o.rest_tol * scale;
  });
  return out;
}

// ---- limit cycles ----

enum class cycle_stability { stable, unstable };

inline const char* to_string(cycle_stability s) { return s == cycle_stability::stable ? "stable" : "unstable"; }

struct limit_cycle {
  state point;  // section crossing
  double r;
  double period;
  cycle_stability stability;
  double multiplier;  // slope of the return map at the fixed point
};

// two starts on the section whose displacements have opposite signs
struct annulus {
  double r_in, r_out;
  double d_in, d_out;
};

struct fan_sample {
  double r;
  double displacement;  // P(r) - r
  bool returned;
};

struct cycle_report {
  std::vector<limit_cycle> cycles;  // by increasing r
  std::vector<annulus> annuli;
  std::vector<fan_sample> fan;
  double r_escape = NAN;  // smallest fan radius whose orbit did not return
  std::size_t evaluations = 0;
};

struct budget_exhausted : std::runtime_error {
  cycle_report partial;
  explicit budget_exhausted(cycle_report r)
      : std::runtime_error("detect_cycles: budget exhausted"), partial(std::move(r)) {}
};

struct cycle_options {
  vec2 direction{0, -1};
  double r_min = 0;  // 0: r_max * 1e-4
  double r_max = 0;  // 0: 98% of the distance to the orthant boundary along the ray
  int per_decade = 16;
  int zoom = 8;              // extra starts inside a ring whose displacement sign is ambiguous
  int edge_rounds = 8;       // refinement rounds at the first start that does not return
  std::size_t budget = 4000; // return-map evaluations
  double noise = 0;          // |displacement| below this is sign-ambiguous; 0: 1e3 * tol * (1 + |anchor|)
  int steps_per_turn = 64;   // step cap from the linear rotation period, unless ret.ode.max_step is set
  return_options ret{ode_options{1e-11}};
};

namespace detail {

inline double ray_exit(const state& a, const vec2& d) {
  const double len = std::hypot(d[0], d[1]);
  double r = INFINITY;
  if (d[0] < 0) r = std::min(r, a.x / (-d[0] / len));
  if (d[1] < 0) r = std::min(r, a.y / (-d[1] / len));
  if (!std::isfinite(r)) throw std::invalid_argument("detect_cycles: ray never leaves the orthant, give r_max");
  return r;
}

}  // namespace detail

inline cycle_report detect_cycles(const param_set& p, const equilibrium& around, cycle_options o = {}) {
  if (around.kind != eq_kind::positive || !(around.det > 0))
    throw std::domain_error("detect_cycles: need a positive equilibrium of focus type");
  const double len = std::hypot(o.direction[0], o.direction[1]);
  const vec2 d{o.direction[0] / len, o.direction[1] / len};
  if (o.r_max <= 0) o.r_max = 0.98 * detail::ray_exit(around.point, d);
  if (o.r_min <= 0) o.r_min = o.r_max * 1e-4;
  if (!(o.r_min < o.r_max)) throw std::invalid_argument("detect_cycles: need r_min < r_max");
  if (o.noise <= 0) o.noise = 1e3 * o.ret.ode.tol * (1 + std::hypot(around.point.x, around.point.y));
  // the step cap keeps the rotation error of the stepper below the displacements of interest
  const double w = std::sqrt(around.det);
  if (o.ret.ode.max_step <= 0) o.ret.ode.max_step = 2 * M_PI / w / o.steps_per_turn;

  const section sec{around.point, d, 0};
  cycle_report rep;
  auto start = [&](double r) { return state{around.point.x + r * d[0], around.point.y + r * d[1]}; };
  std::atomic<std::size_t> evals{0};
  // first return to the section, with its flight time
  auto first_return = [&](double r) -> std::optional<crossing> {
    if (evals++ >= o.budget) return std::nullopt;
    try {
      auto c = return_map(p, sec, start(r), 1, o.ret);
      if (c.empty()) return std::nullopt;
      return c.front();
    } catch (const std::runtime_error&) {
      return std::nullopt;
    }
  };
  auto check_budget = [&] {
    rep.evaluations = evals;
    if (evals >= o.budget) throw budget_exhausted(rep);
  };

  // logarithmic fan
  const int m = std::max(2, static_cast<int>(std::ceil(o.per_decade * std::log10(o.r_max / o.r_min)))) + 1;
  std::vector<double> radii(m);
  for (int i = 0; i < m; ++i) radii[i] = o.r_min * std::pow(o.r_max / o.r_min, double(i) / (m - 1));
  auto sample = [&](const std::vector<double>& rs) {
    std::vector<fan_sample> out(rs.size());
    parallel_for(rs.size(), [&](std::size_t i) {
      const auto c = first_return(rs[i]);
      out[i] = {rs[i], c ? c->r - rs[i] : NAN, c.has_value()};
    });
    return out;
  };
  auto fan = sample(radii);
  check_budget();

  // the fan ends at the first start that does not come back
  std::vector<fan_sample> kept;
  for (const auto& s : fan) {
    if (!s.returned) {
      rep.r_escape = s.r;
      break;
    }
    kept.push_back(s);
  }
  // A stable cycle near a separatrix loop can sit just inside the first start
  // that fails to return, so narrow that edge before looking for sign changes.
  if (!kept.empty() && !std::isnan(rep.r_escape)) {
    double lo = kept.back().r, hi = rep.r_escape;
    for (int round = 0; round < o.edge_rounds; ++round) {
      std::vector<double> rs;
      for (int k = 1; k <= o.zoom; ++k) rs.push_back(lo + (hi - lo) * k / (o.zoom + 1));
      const auto zs = sample(rs);
      check_budget();
      bool negative = false;
      for (const auto& s : zs) {
        if (!s.returned) {
          hi = s.r;
          break;
        }
        lo = s.r;
        kept.push_back(s);
        negative = negative || s.displacement < -o.noise;
      }
      if (negative) break;
    }
    rep.r_escape = hi;
  }

  // zoom into rings with a sign-ambiguous end
  std::vector<fan_sample> sharp;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    sharp.push_back(kept[i]);
    if (i + 1 == kept.size()) break;
    const bool amb = std::abs(kept[i].displacement) < o.noise || std::abs(kept[i + 1].displacement) < o.noise;
    if (!amb || o.zoom <= 0) continue;
    std::vector<double> rs;
    for (int k = 1; k <= o.zoom; ++k)
      rs.push_back(kept[i].r * std::pow(kept[i + 1].r / kept[i].r, double(k) / (o.zoom + 1)));
    for (const auto& s : sample(rs))
      if (s.returned) sharp.push_back(s);
    check_budget();
  }
  rep.fan = sharp;

  // brackets between resolved samples of opposite sign
  std::vector<const fan_sample*> resolved;
  for (const auto& s : sharp)
    if (std::abs(s.displacement) >= o.noise) resolved.push_back(&s);
  for (std::size_t i = 0; i + 1 < resolved.size(); ++i) {
    const auto& a = *resolved[i];
    const auto& b = *resolved[i + 1];
    if ((a.displacement > 0) != (b.displacement > 0)) rep.annuli.push_back({a.r, b.r, a.displacement, b.displacement});
  }

  for (const auto& an : rep.annuli) {
    auto disp = [&](double r) {
      const auto c = first_return(r);
      if (!c) throw budget_exhausted(rep);
      return c->r - r;
    };
    std::uintmax_t it = 80;
    const auto br = boost::math::tools::toms748_solve(disp, an.r_in, an.r_out, an.d_in, an.d_out,
                                                      boost::math::tools::eps_tolerance<double>(40), it);
    const double rs = 0.5 * (br.first + br.second);
    const auto c = first_return(rs);
    const double dr = std::max(1e-5 * rs, 1e-9);
    const auto cp = first_return(rs + dr), cm = first_return(rs - dr);
    if (!c || !cp || !cm) throw budget_exhausted(rep);
    limit_cycle lc;
    lc.point = c->point;
    lc.r = rs;
    lc.period = c->t;
    lc.multiplier = (cp->r - cm->r) / (2 * dr);
    lc.stability = std::abs(lc.multiplier) < 1 ? cycle_stability::stable : cycle_stability::unstable;
    rep.cycles.push_back(lc);
  }
  rep.evaluations = evals;
  return rep;
}

// ---- saddle separatrices ----

enum class manifold_fate { captured, escaped };

inline const char* to_string(manifold_fate f) { return f == manifold_fate::captured ? "captured" : "escaped"; }

struct manifold_shot {
  double alpha;
  manifold_fate fate;  // captured if some unstable branch stays away from E_kappa
  state end;
  double t;
};

struct shooting_options {
  double offset = 1e-6;
  double t_max = 4000;
  double capture_radius = 1e-3;  // distance to E_kappa that counts as escape
  double tol = 1e-10;
};

inline vec2 unstable_direction(const mat2& j) {
  const double disc = j.discriminant();
  if (!(j.det() < 0) || disc < 0) throw std::domain_error("unstable_direction: not a saddle");
  const double lam = 0.5 * (j.trace() + std::sqrt(disc));
  vec2 v = std::abs(j.a12) > std::abs(j.a21) ? vec2{j.a12, lam - j.a11} : vec2{lam - j.a22, j.a21};
  const double n = std::hypot(v[0], v[1]);
  return {v[0] / n, v[1] / n};
}

// the saddle among the positive equilibria
inline equilibrium positive_saddle(const param_set& p) {
  for (const auto& e : positive_equilibria(p))
    if (e.cls == eq_class::saddle) return e;
  throw std::domain_error("positive_saddle: no positive saddle");
}

inline manifold_shot shoot_unstable_manifold(const param_set& p, const shooting_options& o = {}) {
  const equilibrium s = positive_saddle(p);
  const vec2 v = unstable_direction(jacobian3(p, s.point));
  manifold_shot shot{p.alpha, manifold_fate::escaped, s.point, 0};
  for (int sign : {1, -1}) {
    const state s0{s.point.x + sign * o.offset * v[0], s.point.y + sign * o.offset * v[1]};
    if (s0.x < 0 || s0.y < 0) continue;
    ode_options oo;
    oo.tol = o.tol;
    ode_stats st;
    bool escaped = false;
    state end = s0;
    const double tf = solve_ode(polynomial_field(p), to_vec(s0), 0.0, o.t_max, oo, st, [&](const ode_step& stp) {
      end = to_state(stp.x1);
      escaped = std::hypot(end.x - p.kappa, end.y) < o.capture_radius;
      return !escaped;
    });
    if (!escaped) {
      shot.fate = manifold_fate::captured;
      shot.end = end;
      shot.t = tf;
      return shot;
    }
    shot.end = end;
    shot.t = tf;
  }
  return shot;
}

struct homoclinic_interval {
  double lo, hi;  // captured at lo, escaped at hi
  std::vector<manifold_shot> shots;
};

// alpha where the saddle's unstable branch stops being captured, at fixed sigma
inline homoclinic_interval homoclinic_bracket(const param_set& base, const std::vector<double>& grid,
                                              double width = 1e-3, const shooting_options& o = {}) {
  // grid points without a positive saddle (below the fold) are dropped
  std::vector<double> alphas;
  for (double a : grid) {
    param_set q = base;
    q.alpha = a;
    for (const auto& e : positive_equilibria(q))
      if (e.cls == eq_class::saddle) {
        alphas.push_back(a);
        break;
      }
  }
  if (alphas.size() < 2) throw std::invalid_argument("homoclinic_bracket: need at least two alphas with a saddle");
  std::vector<manifold_shot> shots(alphas.size());
  parallel_for(alphas.size(), [&](std::size_t i) {
    param_set p = base;
    p.alpha = alphas[i];
    shots[i] = shoot_unstable_manifold(p, o);
  });
  homoclinic_interval r{NAN, NAN, shots};
  for (std::size_t i = 0; i + 1 < shots.size(); ++i) {
    if (shots[i].fate == manifold_fate::captured && shots[i + 1].fate == manifold_fate::escaped) {
      r.lo = alphas[i];
      r.hi = alphas[i + 1];
      break;
    }
  }
  if (std::isnan(r.lo)) throw std::runtime_error("homoclinic_bracket: no transition in grid");
  while (r.hi - r.lo > width * (1 + 1e-9)) {
    param_set p = base;
    p.alpha = 0.5 * (r.lo + r.hi);
    const auto s = shoot_unstable_manifold(p, o);
    r.shots.push_back(s);
    (s.fate == manifold_fate::captured ? r.lo : r.hi) = p.alpha;
  }
  return r;
}

// ---- regime verdicts near the cusp ----

struct regime_verdict {
  std::string inventory;  // positive equilibria with their types
  std::string orbits;     // "none", "stable cycle", "homoclinic", ...
  int cycles = 0;
  std::vector<limit_cycle> cycle_list;
  std::optional<homoclinic_interval> homoclinic;
  double l1 = NAN;  // first Lyapunov coefficient when E1 is a weak focus
};

struct regime_options {
  double weak_trace = 1e-8;  // relative |trace| treated as a weak focus
  cycle_options cycles;
  shooting_options shooting;
  double homoclinic_halfwidth = 0.02;  // alpha search around a suspected homoclinic sample
  double homoclinic_width = 0.005;     // no bisection below the grid cell by default
};

namespace detail {

inline std::string describe(const param_set& p, const equilibrium& e, double weak_trace, double& l1) {
  const mat2 j = jacobian3(p, e.point);
  const double tr_scale = std::abs(j.a11) + std::abs(j.a22);
  if (e.multiplicity > 1 || e.cls == eq_class::degenerate_fold_candidate)
    return std::abs(j.trace()) <= 1e-6 * std::max(1.0, tr_scale) ? "cusp" : "saddle-node";
  if (e.cls == eq_class::saddle) return "saddle";
  if (std::abs(j.trace()) <= weak_trace * std::max(1.0, tr_scale)) {
    l1 = first_lyapunov_projection(p, e.point);
    return l1 < 0 ? "stable weak focus" : "unstable weak focus";
  }
  switch (e.cls) {
    case eq_class::stable_focus: return "stable focus";
    case eq_class::stable_node: return "stable node";
    case eq_class::unstable_focus: return "unstable focus";
    case eq_class::unstable_node: return "unstable node";
    default: return to_string(e.cls);
  }
}

}  // namespace detail

// Positive equilibria and closed-orbit verdict at one parameter point.
// When check_homoclinic is set the saddle separatrix is bracketed in alpha
// around the sample instead of counting cycles.
inline regime_verdict classify_regime(const param_set& p, bool check_homoclinic = false,
                                      const regime_options& o = {}) {
  regime_verdict v;
  const auto eqs = positive_equilibria(p);
  const equilibrium* focus = nullptr;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const std::string d = detail::describe(p, eqs[i], o.weak_trace, v.l1);
    if (!v.inventory.empty()) v.inventory += ", ";
    v.inventory += (eqs.size() == 1 && eqs[i].multiplicity > 1 ? "E*" : "E" + std::to_string(i + 1)) + " " + d;
    if (eqs[i].det > 0 && eqs[i].multiplicity == 1) focus = &eqs[i];
  }
  if (v.inventory.empty()) v.inventory = "none";

  // a closed orbit must surround an equilibrium of index +1
  if (!focus) {
    v.orbits = "none";
    return v;
  }
  if (check_homoclinic) {
    const double a = p.alpha, hw = o.homoclinic_halfwidth;
    std::vector<double> grid;
    // cells of width 2 hw / 8 with the sample at a cell centre
    for (int k = 0; k < 8; ++k) grid.push_back(a - hw + 2 * hw * (k + 0.5) / 8);
    v.homoclinic = homoclinic_bracket(p, grid, o.homoclinic_width, o.shooting);
    v.orbits = v.homoclinic->lo <= a && a <= v.homoclinic->hi ? "homoclinic" : "none";
    return v;
  }
  const auto rep = detect_cycles(p, *focus, o.cycles);
  v.cycles = static_cast<int>(rep.cycles.size());
  v.cycle_list = rep.cycles;
  if (rep.cycles.empty()) {
    v.orbits = "none";
  } else {
    for (const auto& c : rep.cycles) {
      if (v.orbits.size()) v.orbits += ", ";
      v.orbits += std::string(to_string(c.stability)) + " cycle";
    }
  }
  return v;
}

struct table1_row {
  std::string zone;
  double sigma, alpha;
  bool homoclinic_row;
  std::string expected_inventory;  // accepted inventory strings, separated by '|'
  std::string expected_orbits;
};

// sample points for the nine rows at kappa = 1.2, h = 1/2
inline std::vector<table1_row> table1_rows(double hopf_alpha_035) {
  const double fold = 6;  // alpha sigma on the saddle-node curve
  return {
      {"I1", 0.35, 17.1, false, "none", "none"},
      {"SN-", 0.35, fold / 0.35, false, "E* saddle-node", "none"},
      {"I2", 0.35, 17.5, false, "E1 stable focus, E2 saddle|E1 stable node, E2 saddle", "none"},
      {"H", 0.35, hopf_alpha_035, false, "E1 stable weak focus, E2 saddle", "none"},
      {"I3", 0.35, 18, false, "E1 unstable focus, E2 saddle", "stable cycle"},
      {"HL", 0.305, 19.6855, true, "E1 unstable focus, E2 saddle", "homoclinic"},
      {"I4", 0.35, 18.6, false, "E1 unstable focus, E2 saddle|E1 unstable node, E2 saddle", "none"},
      {"SN+", 0.25, fold / 0.25, false, "E* saddle-node", "none"},
      {"cusp", 0.3, 20, false, "E* cusp", "none"},
  };
}

inline bool verdict_matches(const table1_row& row, const regime_verdict& v) {
  bool inv = false;
  std::size_t pos = 0;
  while (pos <= row.expected_inventory.size()) {
    const std::size_t bar = std::min(row.expected_inventory.find('|', pos), row.expected_inventory.size());
    inv = inv || row.expected_inventory.substr(pos, bar - pos) == v.inventory;
    pos = bar + 1;
  }
  return inv && v.orbits == row.expected_orbits;
}

// alpha where E1 has zero trace at (sigma, kappa, h), above the fold alpha_fold
inline double hopf_alpha_zero_trace(double sigma, double kappa, double h, double alpha_fold, double alpha_hi) {
  auto tr = [&](double a) {
    const param_set p{a, kappa, sigma, h};
    const auto e = positive_equilibria(p);
    if (e.empty()) throw std::domain_error("hopf_alpha_zero_trace: no positive equilibrium");
    return jacobian3(p, e.front().point).trace();
  };
  std::uintmax_t it = 200;
  const auto r = boost::math::tools::toms748_solve(tr, alpha_fold * (1 + 1e-9), alpha_hi,
                                                   boost::math::tools::eps_tolerance<double>(52), it);
  return 0.5 * (r.first + r.second);
}

}  // namespace coophunt
