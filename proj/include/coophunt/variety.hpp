#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "coophunt/detail/focal_terms.hpp"
#include "coophunt/detail/slice_terms.hpp"
#include "coophunt/hopf.hpp"
#include "coophunt/poly.hpp"

// Exact checks of the common zeros of the first two focal numerators:
// the x1 = 1/2 slice with its printed eliminant, plus a few other slices
// eliminated from scratch.

namespace coophunt {

using qpoly = poly<rational>;
using qqpoly = poly<qpoly>;  // polynomial in kappa with coefficients in Q[h]

namespace detail {

inline rational exact_lit(const char* s) { return lit<rational>(s); }

inline qpoly univariate(const std::vector<poly_term<1>>& terms) {
  qpoly p;
  for (const auto& t : terms) p += qpoly::monomial(exact_lit(t.coeff), t.exp[0]);
  return p;
}

// exponents (h, kappa)
inline qqpoly bivariate(const std::vector<poly_term<2>>& terms) {
  qqpoly p;
  for (const auto& t : terms) p += qqpoly::monomial(qpoly::monomial(exact_lit(t.coeff), t.exp[0]), t.exp[1]);
  return p;
}

// exponents (x1, h, kappa), x1 fixed
inline qqpoly focal_slice(const std::vector<poly_term<3>>& terms, const rational& x1) {
  qqpoly p;
  for (const auto& t : terms) {
    rational c = exact_lit(t.coeff);
    for (int k = 0; k < t.exp[0]; ++k) c *= x1;
    p += qqpoly::monomial(qpoly::monomial(c, t.exp[1]), t.exp[2]);
  }
  return p;
}

// kd^n f(kn / kd) for f of degree n in kappa
inline qpoly homogenize(const qqpoly& f, const qpoly& kn, const qpoly& kd) {
  const int n = f.degree();
  std::vector<qpoly> kn_pow{qpoly({rational(1)})}, kd_pow{qpoly({rational(1)})};
  for (int i = 1; i <= n; ++i) {
    kn_pow.push_back(kn_pow.back() * kn);
    kd_pow.push_back(kd_pow.back() * kd);
  }
  qpoly s;
  for (int i = 0; i <= n; ++i) s += f.c[i] * kn_pow[i] * kd_pow[n - i];
  return s;
}

inline qpoly at_h(const qqpoly& f, const rational& h) {
  qpoly r;
  for (const auto& c : f.c) r.c.push_back(c(h));
  r.trim();
  return r;
}

inline double at_double(const qqpoly& f, double h, double kappa) {
  double s = 0;
  for (int i = f.degree(); i >= 0; --i) {
    double c = 0;
    for (int j = f.c[i].degree(); j >= 0; --j) c = c * h + f.c[i].c[j].get_d();
    s = s * kappa + c;
  }
  return s;
}

// sum of |terms|, the natural scale for a residual
inline double term_scale(const qqpoly& f, double h, double kappa) {
  double s = 0;
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j <= f.c[i].degree(); ++j)
      s += std::abs(f.c[i].c[j].get_d()) * std::pow(std::abs(h), j) * std::pow(std::abs(kappa), i);
  return s;
}

// shrink an isolating interval of a simple root to width 2^-bits
inline std::pair<rational, rational> refine_root(const qpoly& p, rational lo, rational hi, int bits) {
  const int s_hi = sign_of(rational(p(hi)));
  rational width(1);
  for (int k = 0; k < bits; ++k) width /= 2;
  while (rational(hi - lo) > width) {
    const rational m = (lo + hi) / 2;
    const int s = sign_of(rational(p(m)));
    if (s == 0) return {m, m};
    (s == s_hi ? hi : lo) = m;
  }
  return {lo, hi};
}

// c with a = c b, if one exists
inline std::optional<rational> proportional(const qqpoly& a, const qqpoly& b) {
  if (a.degree() != b.degree() || b.zero()) return std::nullopt;
  const rational c = a.lead().lead() / b.lead().lead();
  for (int i = 0; i <= a.degree(); ++i)
    if (!(a.c[i] == b.c[i] * c)) return std::nullopt;
  return c;
}

}  // namespace detail

struct variety_root {
  int factor;  // index into the printed factor list
  int power;
  double h;
  double kappa;  // kappa_n / kappa_d at this h
  bool feasible;
  std::string reason;
};

struct variety_witness {
  double x1, h, kappa;
  bool f1_zero_exact, f2_zero_exact;  // printed eliminant divides the homogenized numerators
  double f1_residual;                  // |f1| / term scale at the refined rational point
  double f3_slice;                     // printed third numerator on the slice, exact evaluation
  double l3;                           // series value on the printed normal form
  int multiplicity;
};

struct h3_sample {
  double x1, h, kappa;
  double l3;
  int multiplicity;
};

struct variety_report {
  bool slice_matches_general = false;  // printed slice numerators equal f1, f2 at x1 = 1/2 up to constants
  int resultant_degree = 0;
  int resultant_sign = 0;  // computed resultant = sign * printed factorization, 0 if neither
  std::vector<variety_root> roots;
  std::vector<variety_witness> witnesses;
  bool half_h_common_zero_feasible = false;  // any common zero on the h = 1/2 line inside the Hopf set
  std::vector<h3_sample> h3_samples;
  std::vector<std::string> violations;
};

namespace detail {

// common zeros (h, kappa) of f1 and f2 on a slice x1 = const, inside the Hopf set
inline std::vector<std::pair<double, double>> slice_common_zeros(const qqpoly& f1, const qqpoly& f2, double x1) {
  std::vector<std::pair<double, double>> out;
  const qpoly r = resultant(f1, f2);
  if (r.zero()) throw std::domain_error("slice_common_zeros: f1 and f2 share a factor");
  for (const auto& z : real_roots_exact(r, rational(0), rational(1), 1e-15)) {
    const double h = z.x;
    // kappa from the float roots of f1 at this h, confirmed on f2
    poly<double> g;
    for (const auto& c : f1.c) g.c.push_back(c(rational(h)).get_d());
    g.trim();
    if (g.degree() < 1) continue;
    double bound = 0;
    for (int i = 0; i < g.degree(); ++i) bound = std::max(bound, std::abs(g.c[i] / g.lead()));
    for (const auto& k : real_roots(g, 0.0, 1 + bound)) {
      const double res = std::abs(at_double(f2, h, k.x)) / term_scale(f2, h, k.x);
      if (res < 1e-6 && hopf_in_P(k.x, h, x1)) out.push_back({h, k.x});
    }
  }
  return out;
}

}  // namespace detail

inline variety_report variety_check_desk(const std::vector<rational>& extra_slices = {rational(3, 10), rational(2, 5),
                                                                                      rational(3, 5), rational(7, 10),
                                                                                      rational(9, 10)}) {
  using namespace detail;
  variety_report rep;
  const rational half(1, 2);
  const qqpoly t1 = bivariate(slice_t1), t2 = bivariate(slice_t2), t3 = bivariate(slice_t3);

  // (a) the printed slice numerators agree with the general ones
  const auto c1 = proportional(focal_slice(detail::focal_f1, half), t1);
  const auto c2 = proportional(focal_slice(detail::focal_f2, half), t2);
  rep.slice_matches_general = c1 && c2 && *c1 > 0 && *c2 > 0;
  if (!rep.slice_matches_general) rep.violations.push_back("printed slice numerators differ from f1, f2 at x1 = 1/2");

  // (b) eliminate kappa and compare with the printed factorization
  const qpoly R = resultant(t1, t2);
  rep.resultant_degree = R.degree();
  qpoly printed({exact_lit(slice_res_constant)});
  for (const auto& [terms, power] : slice_res_factors) {
    const qpoly f = univariate(*terms);
    for (int k = 0; k < power; ++k) printed *= f;
  }
  if (R == printed) rep.resultant_sign = 1;
  else if (R == -printed) rep.resultant_sign = -1;
  else rep.violations.push_back("resultant differs from the printed factorization");

  // (c) roots in (0, 1) of each factor, kappa = kappa_n / kappa_d, feasibility
  const qpoly kn = univariate(slice_kappa_num), kd = univariate(slice_kappa_den);
  const rational x1(half);
  for (std::size_t fi = 0; fi < slice_res_factors.size(); ++fi) {
    const auto& [terms, power] = slice_res_factors[fi];
    const qpoly f = univariate(*terms);
    for (const auto& z : real_roots_exact(f, rational(0), rational(1), 1e-15)) {
      variety_root vr{static_cast<int>(fi), power, z.x, NAN, false, ""};
      // kappa_n and kappa_d nearly cancel at some roots, so refine h well past double precision
      const rational a(z.x - 1e-12), b(z.x + 1e-12);
      if (sign_of(rational(f(a))) * sign_of(rational(f(b))) >= 0) {
        vr.reason = "root not bracketed";
        rep.violations.push_back("factor root not bracketed at h = " + std::to_string(z.x));
        rep.roots.push_back(vr);
        continue;
      }
      const auto [lo, hi] = refine_root(f, a, b, 256);
      const rational hq = (lo + hi) / 2;
      const rational dq = kd(hq);
      rational kq;
      if (dq == 0) {
        vr.reason = "kappa_d vanishes";
      } else {
        kq = kn(hq) / dq;
        vr.kappa = kq.get_d();
        if (!(vr.kappa > 0)) vr.reason = "kappa not positive";
        else if (!hopf_in_P(vr.kappa, vr.h, 0.5)) vr.reason = "outside the Hopf set";
        else vr.feasible = true;
      }
      rep.roots.push_back(vr);
      if (!vr.feasible) continue;

      // (d) exact vanishing on the algebraic root and the sign of the third value
      variety_witness w{0.5, vr.h, vr.kappa, false, false, NAN, NAN, NAN, 0};
      w.f1_zero_exact = divide(homogenize(t1, kn, kd), f).remainder.zero();
      w.f2_zero_exact = divide(homogenize(t2, kn, kd), f).remainder.zero();
      if (!w.f1_zero_exact || !w.f2_zero_exact) rep.violations.push_back("witness is not an exact common zero");
      w.f1_residual = std::abs(at_h(t1, hq)(kq).get_d()) / term_scale(t1, vr.h, vr.kappa);
      w.f3_slice = at_h(t3, hq)(kq).get_d();
      const auto fr = focal_values(hopf_critical(w.kappa, w.h, w.x1));
      w.l3 = fr.l3;
      w.multiplicity = fr.multiplicity;
      if (w.multiplicity != 3) rep.violations.push_back("witness is not a weak focus of multiplicity three");
      if (!(w.l3 < 0) || (w.f3_slice < 0) != (w.l3 < 0))
        rep.violations.push_back("third focal value does not have the sign of the printed one");
      rep.witnesses.push_back(w);
    }
  }

  // (e) on h = 1/2 the two numerators have no common zero in the Hopf set
  {
    const qpoly a = at_h(t1, half), b = at_h(t2, half);
    const qpoly g = gcd(a, b);
    if (g.degree() > 0)
      for (const auto& z : real_roots_exact(g, rational(0), rational(1000000), 1e-12))
        if (hopf_in_P(z.x, 0.5, 0.5)) rep.half_h_common_zero_feasible = true;
    if (rep.half_h_common_zero_feasible) rep.violations.push_back("common zero on h = 1/2 inside the Hopf set");
  }

  // (f) other slices eliminated from scratch; l3 must stay away from zero
  for (const rational& xs : extra_slices) {
    const double x = xs.get_d();
    const auto zs =
        slice_common_zeros(focal_slice(detail::focal_f1, xs), focal_slice(detail::focal_f2, xs), x);
    for (auto [h, k] : zs) {
      h3_sample s{x, h, k, NAN, 0};
      try {
        const auto r = focal_values(hopf_critical(k, h, x));
        s.l3 = r.l3;
        s.multiplicity = r.multiplicity;
      } catch (const std::exception& e) {
        rep.violations.push_back(std::string("slice sample: ") + e.what());
      }
      if (!(std::abs(s.l3) > 0)) rep.violations.push_back("vanishing third focal value on a sampled slice");
      rep.h3_samples.push_back(s);
    }
  }
  return rep;
}

}  // namespace coophunt
