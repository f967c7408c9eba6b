#include <gtest/gtest.h>

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <random>

#include "coophunt/bifurcation.hpp"

using namespace coophunt;

namespace {

rational q(long n, long d = 1) {
  rational r(n, d);
  r.canonicalize();
  return r;
}

// F over Q for the exact fold checks
poly<rational> quartic_F_exact(const rational& a, const rational& k, const rational& s, const rational& h) {
  return poly<rational>({k, rational(0), k * (h - 1), k * a * s * (h - 1), -a * s * (h - 1)});
}

// admissible (x_*, h) grid, both sides of x_* = 1
std::vector<std::pair<double, double>> cusp_grid() {
  std::vector<std::pair<double, double>> g;
  for (double xs : {0.3, 0.6, 0.9, 1.0, 1.1, 1.3})
    for (double h : {0.2, 0.35, 0.5, 0.65, 0.8, 0.9})
      if (cusp_admissible(xs, h)) g.push_back({xs, h});
  return g;
}

// alpha where the smaller positive equilibrium has zero trace, at kappa = kappa2
double hopf_alpha_numeric(const bt_expansion<double>& b, double sigma) {
  const double fold = b.alpha_star * b.sigma_star / sigma;
  auto tr = [&](double a) {
    param_set p{a, b.kappa, sigma, b.h};
    auto e = positive_equilibria(p);
    return trace_factor(p, e.at(0).point.x);
  };
  std::uintmax_t it = 200;
  auto r = boost::math::tools::toms748_solve(tr, fold * (1 + 1e-9), fold * 1.2,
                                             boost::math::tools::eps_tolerance<double>(50), it);
  return 0.5 * (r.first + r.second);
}

}  // namespace

// ---- boundary equilibrium ----

TEST(BoundaryBifurcation, Pitchfork) {
  param_set p{1, 2, 1, 0.75};
  auto r = boundary_bifurcation(p);
  EXPECT_EQ(r.kind, boundary_kind::pitchfork);
  EXPECT_DOUBLE_EQ(r.critical_kappa, 2);
  EXPECT_DOUBLE_EQ(r.pitchfork_alpha, 1);
  EXPECT_NEAR(r.quadratic_coeff, 0, 1e-15);
  // general cubic coefficient against its reduced form at the pitchfork value
  EXPECT_NEAR(r.cubic_coeff, 5 * p.sigma * (1 - p.h) / (p.sigma * p.sigma * 4), 1e-14);
  EXPECT_GT(r.cubic_coeff, 0);
}

TEST(BoundaryBifurcation, Transcritical) {
  auto r = boundary_bifurcation({0.5, 2, 1, 0.75});
  EXPECT_EQ(r.kind, boundary_kind::transcritical);
  EXPECT_NEAR(r.quadratic_coeff, -0.125, 1e-15);
}

TEST(BoundaryBifurcation, RequiresKappa1) {
  EXPECT_THROW(boundary_bifurcation({0.5, 2.1, 1, 0.75}), std::invalid_argument);
}

TEST(BoundaryBifurcation, QuadraticCoefficientMatchesCentreManifold) {
  // Leading centre-manifold slope from the Jacobian, then the y-equation
  // restricted to it; in y-coordinates the u^2 coefficient picks up (1-h)/kappa1.
  for (double h : {0.2, 0.5, 0.75, 0.9})
    for (double s : {0.3, 1.0, 2.5})
      for (double a : {0.1, 1.0, 5.0}) {
        const double k1 = kappa1(h);
        param_set p{a, k1, s, h};
        const mat2 j = jacobian3(p, {k1, 0});
        ASSERT_NEAR(j.a22, 0, 1e-12);
        const double phi1 = -j.a12 / j.a11;
        const double c2 = k1 * (1 - h) * (a * k1 * k1 + 2 * k1 * phi1);
        EXPECT_NEAR(boundary_bifurcation(p).quadratic_coeff, c2 * (1 - h) / k1, 1e-12 * (1 + std::abs(c2)));
      }
}

TEST(BoundaryBifurcation, TranscriticalExchangesStability) {
  const double h = 0.75, s = 1, a = 0.5, k1 = kappa1(h);
  auto below = find_equilibria({a, k1 - 1e-3, s, h});
  EXPECT_EQ(below[1].cls, eq_class::stable_node);
  EXPECT_EQ(below.size(), 2u);
  auto above = find_equilibria({a, k1 + 1e-3, s, h});
  EXPECT_EQ(above[1].cls, eq_class::saddle);
  ASSERT_EQ(above.size(), 3u);
  EXPECT_NEAR(above[2].point.x, k1, 1e-2);
  EXPECT_TRUE(above[2].cls == eq_class::stable_node || above[2].cls == eq_class::stable_focus);
}

// ---- cusp locus and fold ----

TEST(CuspLocus, ExactCusp) {
  auto c = cusp_locus<rational>(q(1), q(1, 2));
  EXPECT_EQ(c.kappa2, q(6, 5));
  EXPECT_EQ(c.sigma1, q(3, 10));
  EXPECT_EQ(c.alpha3, q(20));
  EXPECT_TRUE(c.admissible);
}

TEST(CuspLocus, ExactFoldAtUnitGrowth) {
  auto c = cusp_locus<rational>(q(1), q(1, 2), q(1));
  EXPECT_EQ(c.alpha3, q(6));
  EXPECT_EQ(c.kappa2, q(6, 5));
}

TEST(CuspLocus, AdmissibilityWindow) {
  EXPECT_THROW(cusp_locus<double>(1.5, 0.5), std::domain_error);  // needs h > 5/9
  EXPECT_NO_THROW(cusp_locus<double>(1.5, 0.6));
  EXPECT_THROW(cusp_locus<double>(0.5, 1.0), std::domain_error);
  EXPECT_THROW(cusp_locus<double>(-0.5, 0.5), std::domain_error);
}

TEST(CuspLocus, DoubleRootInExactArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 40);
  int checked = 0;
  while (checked < 100) {
    const rational xs = q(num(rng), 20), h = q(num(rng), 41), s = q(num(rng), 10);
    if (!cusp_admissible(xs, h)) continue;
    auto c = cusp_locus<rational>(xs, h, s);
    const auto F = quartic_F_exact(c.alpha3, c.kappa2, s, h);
    EXPECT_EQ(F(xs), 0);
    EXPECT_EQ(F.derivative()(xs), 0);
    ++checked;
  }
}

TEST(CuspLocus, TraceSignAtFold) {
  for (auto [xs, h] : cusp_grid()) {
    const auto c0 = cusp_locus<double>(xs, h);
    for (double f : {0.5, 0.9, 1.1, 2.0}) {
      const double s = c0.sigma1 * f;
      const auto c = cusp_locus<double>(xs, h, s);
      const param_set p{c.alpha3, c.kappa2, s, h};
      const double tr = jacobian3(p, {xs, s * xs * (1 - xs / c.kappa2)}).trace();
      EXPECT_EQ(tr < 0, s > c.sigma1) << xs << ' ' << h << ' ' << s;
    }
  }
}

TEST(CuspLocus, CuspHasDoubleZeroEigenvalue) {
  param_set p{20, 1.2, 0.3, 0.5};
  auto e = positive_equilibria(p);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_LT(std::abs(e[0].det), 1e-10);
  EXPECT_LT(std::abs(e[0].trace), 1e-10);
}

TEST(SaddleNode, ReferenceValue) {
  auto r = saddle_node_normal_form(1, 0.5, 1);
  EXPECT_NEAR(r.zeta_prime, -1.0 / 66, 1e-15);
  EXPECT_NEAR(r.zeta_prime_closed, -1.0 / 66, 1e-15);
  EXPECT_EQ(r.d2_sign, 1);
}

TEST(SaddleNode, RejectsCusp) { EXPECT_THROW(saddle_node_normal_form(1, 0.5, 0.3), std::domain_error); }

TEST(SaddleNode, ClosedFormAndSigns) {
  for (auto [xs, h] : cusp_grid()) {
    const double s1 = cusp_locus<double>(xs, h).sigma1;
    for (double f : {0.3, 0.8, 1.2, 3.0}) {
      auto r = saddle_node_normal_form(xs, h, s1 * f);
      EXPECT_NEAR(r.zeta_prime, r.zeta_prime_closed, 1e-12 * std::abs(r.zeta_prime_closed));
      EXPECT_LT(r.zeta_prime, 0);
      EXPECT_EQ(r.d2_sign, f > 1 ? 1 : -1);
    }
  }
}

TEST(SaddleNode, SplittingRateMatchesZetaPrime) {
  // just past the fold the two equilibria separate as (x2 - x1)^2 ~ -4 zeta'(0) eps
  for (auto [xs, h] : cusp_grid()) {
    const double s = 1.7 * cusp_locus<double>(xs, h).sigma1;
    const auto c = cusp_locus<double>(xs, h, s);
    const auto r = saddle_node_normal_form(xs, h, s);
    double prev = 0;
    for (double eps : {1e-4, 1e-5}) {
      const double e = eps * c.alpha3;
      auto eq = positive_equilibria({c.alpha3 + e, c.kappa2, s, h});
      ASSERT_EQ(eq.size(), 2u);
      const double d = eq[1].point.x - eq[0].point.x;
      const double est = d * d / (4 * e);
      if (prev) {
        EXPECT_NEAR(est, -r.zeta_prime, 20 * std::abs(est - prev)) << xs << ' ' << h;
      }
      EXPECT_NEAR(est, -r.zeta_prime, 2e-2 * std::abs(r.zeta_prime)) << xs << ' ' << h;
      prev = est;
    }
    EXPECT_TRUE(positive_equilibria({c.alpha3 * (1 - 1e-4), c.kappa2, s, h}).empty());
  }
}

TEST(FoldResultant, VanishesOnFold) {
  const double r0 = fold_resultant({6, 1.2, 1, 0.5});
  const double r1 = fold_resultant({6.1, 1.2, 1, 0.5});
  EXPECT_LT(std::abs(r0), 1e-10 * std::abs(r1));
  EXPECT_LT(fold_resultant({5.9, 1.2, 1, 0.5}) * r1, 0);
}

// ---- Bogdanov-Takens unfolding ----

TEST(BtCurves, ExactCoefficients) {
  auto b = bt_curves<rational>(q(1), q(1, 2));
  EXPECT_EQ(b.f11, q(-200, 3));
  EXPECT_EQ(b.f12, q(2000, 9));
  EXPECT_EQ(b.alpha_star, q(20));
  EXPECT_EQ(b.sigma_star, q(3, 10));
}

TEST(BtCurves, SaddleNodeCoefficientsMatchExactFoldCurve) {
  // F depends on alpha and sigma only through their product, so the fold
  // curve at fixed (kappa2, h) is alpha sigma = alpha_* sigma_*
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(1, 40);
  int checked = 0;
  while (checked < 40) {
    const rational xs = q(num(rng), 20), h = q(num(rng), 41);
    if (!cusp_admissible(xs, h)) continue;
    auto b = bt_curves<rational>(xs, h);
    EXPECT_EQ(b.f11, -b.alpha_star / b.sigma_star);
    EXPECT_EQ(b.f12, b.alpha_star / (b.sigma_star * b.sigma_star));
    ++checked;
  }
}

TEST(BtCurves, ExactFoldCurveAgreesWithThresholds) {
  const auto b = bt_curves<double>(1, 0.5);
  for (double s : {0.28, 0.3, 0.35, 0.4}) {
    EXPECT_NEAR(alpha_thresholds(b.kappa, s, b.h).second, b.alpha_star * b.sigma_star / s, 1e-6);
    EXPECT_NEAR(b.alpha_sn(s), b.alpha_star * b.sigma_star / s, 4 * b.alpha_star * std::pow(std::abs(s - 0.3) / 0.3, 3));
  }
}

TEST(BtCurves, ReferenceCurveValues) {
  const auto b = bt_curves<double>(1, 0.5);
  EXPECT_NEAR(b.alpha_sn(0.35), 17.2222, 1e-4);
  EXPECT_NEAR(b.alpha_hopf(0.35), 17.9012, 1e-4);
  // the true zero-trace value sits between the I2 and I3 samples
  const double h_num = hopf_alpha_numeric(b, 0.35);
  EXPECT_GT(h_num, 17.5);
  EXPECT_LT(h_num, 18);
  EXPECT_NEAR(b.alpha_homoclinic(0.35), 18.5531, 1e-4);
  EXPECT_NEAR(b.alpha_homoclinic(0.305), 19.6855, 1e-4);
}

TEST(BtCurves, SnPredictionSeparatesObservations) {
  const auto b = bt_curves<double>(1, 0.5);
  const double sn = b.alpha_sn(0.35);
  EXPECT_LT(17.1, sn);
  EXPECT_GT(17.5, sn);
  EXPECT_TRUE(positive_equilibria({17.1, 1.2, 0.35, 0.5}).empty());
  EXPECT_EQ(positive_equilibria({17.5, 1.2, 0.35, 0.5}).size(), 2u);
}

TEST(BtCurves, HopfCurveMatchesZeroTraceLocus) {
  for (auto [xs, h] : cusp_grid()) {
    const auto b = bt_curves<double>(xs, h);
    double prev = 0;
    for (double rel : {0.02, 0.01}) {
      const double e2 = rel * b.sigma_star;
      const double err = std::abs(hopf_alpha_numeric(b, b.sigma_star + e2) - b.alpha_hopf(b.sigma_star + e2));
      // truncation error is cubic in e2: halving e2 cuts it by about 8
      if (prev > 1e-9 * b.alpha_star) {
        EXPECT_LT(err, prev / 5) << xs << ' ' << h;
      }
      EXPECT_LT(err, 1e-2 * b.alpha_star) << xs << ' ' << h;
      prev = err;
    }
  }
}

TEST(BtCurves, CurveOrdering) {
  for (auto [xs, h] : cusp_grid()) {
    const auto b = bt_curves<double>(xs, h);
    EXPECT_LT(b.f12, b.f22) << xs << ' ' << h;
    EXPECT_LT(b.f22, b.f32) << xs << ' ' << h;
  }
}

TEST(BtProperty, NormalFormAnchoring) {
  for (auto [xs, h] : cusp_grid()) {
    const auto b = bt_curves<double>(xs, h);
    const auto nf = b.normal_form(0, 0);
    EXPECT_NEAR(nf.beta1, 0, 1e-9) << xs << ' ' << h;
    EXPECT_NEAR(nf.beta2, 0, 1e-9) << xs << ' ' << h;
    EXPECT_LT(nf.A, 0) << xs << ' ' << h;
    EXPECT_GT(nf.B, 0) << xs << ' ' << h;
  }
}

TEST(BtProperty, ExactAnchoringAtReferenceCusp) {
  auto b = bt_curves<rational>(q(1), q(1, 2));
  auto nf = b.normal_form(q(0), q(0));
  EXPECT_EQ(nf.beta1, 0);
  EXPECT_EQ(nf.beta2, 0);
}

TEST(BtProperty, NondegenerateUnfolding) {
  for (auto [xs, h] : cusp_grid()) {
    const auto b = bt_curves<double>(xs, h);
    const double d1 = 1e-5 * b.alpha_star, d2 = 1e-5 * b.sigma_star;
    auto nf = [&](double e1, double e2) { return b.normal_form(e1, e2); };
    // fourth-order central differences
    auto diff = [&](auto get, bool first) {
      const double d = first ? d1 : d2;
      auto at = [&](double t) { return get(first ? nf(t, 0) : nf(0, t)); };
      return (-at(2 * d) + 8 * at(d) - 8 * at(-d) + at(-2 * d)) / (12 * d);
    };
    auto b1 = [](const bt_normal_form<double>& n) { return n.beta1; };
    auto b2 = [](const bt_normal_form<double>& n) { return n.beta2; };
    const double det = diff(b1, true) * diff(b2, false) - diff(b1, false) * diff(b2, true);
    const auto n0 = nf(0, 0);
    const double predicted = std::pow(n0.B, 6) * b.J0 / std::pow(n0.A, 5);
    EXPECT_NE(det, 0);
    EXPECT_NEAR(det, predicted, 1e-6 * std::abs(predicted)) << xs << ' ' << h;
  }
}

TEST(BtRegion, ReferenceSamples) {
  const auto b = bt_curves<double>(1, 0.5);
  EXPECT_EQ(bt_region({17.1, 1.2, 0.35, 0.5}, b), bt_zone::I1);
  EXPECT_EQ(bt_region({17.5, 1.2, 0.35, 0.5}, b), bt_zone::I2);
  EXPECT_EQ(bt_region({18, 1.2, 0.35, 0.5}, b), bt_zone::I3);
  EXPECT_EQ(bt_region({18.6, 1.2, 0.35, 0.5}, b), bt_zone::I4);
  EXPECT_EQ(bt_region({20, 1.2, 0.3, 0.5}, b), bt_zone::Cusp);
  EXPECT_EQ(bt_region({b.alpha_homoclinic(0.305), 1.2, 0.305, 0.5}, b), bt_zone::HL);
  EXPECT_EQ(bt_region({b.alpha_hopf(0.32), 1.2, 0.32, 0.5}, b), bt_zone::H);
  EXPECT_EQ(bt_region({b.alpha_sn(0.32), 1.2, 0.32, 0.5}, b), bt_zone::SNminus);
  EXPECT_EQ(bt_region({b.alpha_sn(0.28), 1.2, 0.28, 0.5}, b), bt_zone::SNplus);
  EXPECT_EQ(bt_region({30, 1.2, 0.28, 0.5}, b), bt_zone::I4);
  EXPECT_EQ(bt_region({10, 1.2, 0.28, 0.5}, b), bt_zone::I1);
  EXPECT_THROW(bt_region({17, 1.2, 0.45, 0.5}, b), std::out_of_range);
}

TEST(BtRegion, InventoryMatchesZone) {
  // below SN: no positive equilibrium; above SN inside the wedge: two
  const auto b = bt_curves<double>(1, 0.5);
  for (double s : {0.31, 0.33, 0.35}) {
    EXPECT_TRUE(positive_equilibria({b.alpha_sn(s) * 0.99, 1.2, s, 0.5}).empty());
    const double a = 0.5 * (b.alpha_hopf(s) + b.alpha_homoclinic(s));
    auto e = positive_equilibria({a, 1.2, s, 0.5});
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0].cls, eq_class::unstable_focus);
    EXPECT_EQ(e[1].cls, eq_class::saddle);
  }
}
