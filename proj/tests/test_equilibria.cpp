#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "coophunt/equilibria.hpp"

using namespace coophunt;

namespace {

// log-uniform draws covering both sides of kappa1 and of the fold
struct draw_gen {
  std::mt19937_64 rng{20240917};
  double log_uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
  }
  param_set operator()() {
    std::uniform_real_distribution<double> uh(0.02, 0.98);
    param_set p;
    p.h = uh(rng);
    p.alpha = log_uniform(0.01, 200);
    p.sigma = log_uniform(0.02, 5);
    p.kappa = log_uniform(0.3, 20);
    return p;
  }
};

int sgn(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

TEST(QuarticF, HandlingTimeOneIsConstant) {
  auto F = quartic_F({3, 2, 1, 1});
  EXPECT_EQ(F.degree(), 0);
  EXPECT_DOUBLE_EQ(F.c[0], 2);
}

TEST(QuarticF, NoCooperationRootIsKappa1) {
  param_set p{0, 5, 1, 0.75};
  auto r = real_roots(quartic_F(p), 0, p.kappa);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].x, kappa1(p.h), 1e-12);
  EXPECT_DOUBLE_EQ(kappa1(0.75), 2);
}

TEST(CriticalAbscissa, FoldExample) {
  param_set p{6, 1.2, 1, 0.5};
  EXPECT_NEAR(critical_abscissa(p), 1, 1e-15);
  EXPECT_NEAR(quartic_F(p).derivative()(1.0), 0, 1e-14);
}

TEST(CriticalAbscissa, DependsOnlyOnAlphaSigmaProduct) {
  param_set p{6, 1.2, 1, 0.5}, q{24, 1.2, 0.25, 0.5};
  EXPECT_NEAR(critical_abscissa(p), critical_abscissa(q), 1e-14);
  EXPECT_THROW(critical_abscissa({0, 1.2, 1, 0.5}), std::domain_error);
}

TEST(CriticalAbscissa, ZeroOfDerivative) {
  draw_gen g;
  for (int n = 0; n < 200; ++n) {
    auto p = g();
    const auto dF = quartic_F(p).derivative();
    const double x = critical_abscissa(p);
    EXPECT_LE(std::abs(dF(x)), 1e-10 * detail::magnitude(dF, x));
  }
}

TEST(AlphaThresholds, CuspValue) {
  auto [a1, a2] = alpha_thresholds(1.2, 0.3, 0.5);
  EXPECT_NEAR(a2, 20, 1e-6);
  EXPECT_LT(a1, a2);
}

TEST(AlphaThresholds, FoldValue) {
  auto [a1, a2] = alpha_thresholds(1.2, 1, 0.5);
  EXPECT_NEAR(a2, 6, 1e-7);
  EXPECT_LT(a1, a2);
}

TEST(AlphaThresholds, LargerRootIsFold) {
  for (double s : {0.3, 0.5, 1.0, 2.0}) {
    const double a2 = alpha_thresholds(1.2, s, 0.5).second;
    param_set p{a2, 1.2, s, 0.5};
    const auto F = quartic_F(p);
    const double x = critical_abscissa(p);
    EXPECT_LE(std::abs(F(x)), 1e-8 * detail::magnitude(F, x)) << s;
  }
}

TEST(ClassifyRegion, HandlingTimeAtLeastOne) {
  EXPECT_EQ(classify_region({1, 1, 1, 1}).tag, region::HGe1);
  EXPECT_EQ(classify_region({1, 1, 1, 2}).tag, region::HGe1);
}

TEST(ClassifyRegion, BelowFoldHasNoPositiveEquilibrium) {
  auto t = classify_region({17.1, 1.2, 0.35, 0.5});
  EXPECT_TRUE(t.tag == region::P1 || t.tag == region::P2 || t.tag == region::P4) << to_string(t.tag);
  EXPECT_EQ(t.positive_count(), 0);
  EXPECT_NEAR(t.kappa1, std::sqrt(2.0), 1e-15);
}

TEST(ClassifyRegion, AboveFoldHasTwo) {
  auto t = classify_region({18, 1.2, 0.35, 0.5});
  EXPECT_EQ(t.tag, region::P7);
  EXPECT_EQ(positive_equilibria({18, 1.2, 0.35, 0.5}).size(), 2u);
}

TEST(ClassifyRegion, TwoCycleParameters) {
  param_set p{0.3555, 133.7629, 2.319, 0.45};
  auto t = classify_region(p);
  EXPECT_TRUE(t.tag == region::P5 || t.tag == region::P7) << to_string(t.tag);
  auto e = positive_equilibria(p);
  ASSERT_FALSE(e.empty());
  EXPECT_NEAR(e[0].point.x, 1, 5e-4);
  EXPECT_NEAR(e[0].point.y, 2.3016, 1e-3);
}

TEST(ClassifyRegion, FoldIsDoubleRoot) {
  EXPECT_EQ(classify_region({6, 1.2, 1, 0.5}).tag, region::P3);
}

TEST(ClassifyRegion, BeyondKappa1) {
  // F(kappa) < 0 leaves exactly one zero below kappa
  EXPECT_EQ(classify_region({1, 3, 1, 0.5}).tag, region::P5);
}

TEST(FindEquilibria, OriginIsSaddle) {
  draw_gen g;
  for (int n = 0; n < 100; ++n) {
    auto p = g();
    auto e = find_equilibria(p);
    EXPECT_EQ(e[0].kind, eq_kind::origin);
    EXPECT_EQ(e[0].cls, eq_class::saddle);
    EXPECT_NEAR(e[0].det, -p.sigma * p.kappa * p.kappa, 1e-12 * p.sigma * p.kappa * p.kappa);
  }
}

TEST(FindEquilibria, FoldCandidate) {
  param_set p{6, 1.2, 1, 0.5};
  auto e = find_equilibria(p);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[1].cls, eq_class::stable_node);
  EXPECT_EQ(e[2].cls, eq_class::degenerate_fold_candidate);
  EXPECT_EQ(e[2].multiplicity, 2);
  EXPECT_NEAR(e[2].point.x, 1, 1e-7);
  EXPECT_NEAR(e[2].point.y, 1.0 / 6, 1e-7);
  EXPECT_TRUE(e[2].near_degenerate);
}

TEST(FindEquilibria, WeakFocusPerturbation) {
  param_set p{54.902, 0.8, 0.68, 0.5};
  auto e = find_equilibria(p);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[2].cls, eq_class::unstable_focus);
  EXPECT_NEAR(e[2].trace, 0.02, 1e-3);
  EXPECT_EQ(e[3].cls, eq_class::saddle);
}

// ---- properties over random draws ----

TEST(EquilibriaProperty, AtMostTwoPositive) {
  draw_gen g;
  int two = 0;
  for (int n = 0; n < 10000; ++n) {
    auto e = positive_equilibria(g());
    EXPECT_LE(e.size(), 2u);
    two += e.size() == 2;
  }
  EXPECT_GT(two, 100);  // the sample actually visits the bistable regime
}

TEST(EquilibriaProperty, RegionCountMatchesRootCount) {
  draw_gen g;
  for (int n = 0; n < 10000; ++n) {
    auto p = g();
    auto e = positive_equilibria(p);
    EXPECT_EQ(static_cast<int>(e.size()), classify_region(p).positive_count())
        << p.alpha << ' ' << p.kappa << ' ' << p.sigma << ' ' << p.h;
  }
}

TEST(EquilibriaProperty, PositiveEquilibriaLieOnParabola) {
  draw_gen g;
  for (int n = 0; n < 2000; ++n) {
    auto p = g();
    for (const auto& e : positive_equilibria(p)) {
      EXPECT_GT(e.point.x, 0);
      EXPECT_LT(e.point.x, p.kappa);
      EXPECT_NEAR(e.point.y, p.sigma * e.point.x * (1 - e.point.x / p.kappa), 1e-10);
      const auto f = field3(p, e.point);
      const double scale = p.kappa * p.kappa * (1 + p.alpha) * 10;
      EXPECT_LE(std::abs(f[0]) + std::abs(f[1]), 1e-8 * scale);
    }
  }
}

TEST(EquilibriaProperty, DeterminantSignOppositeToFPrime) {
  draw_gen g;
  int checked = 0;
  for (int n = 0; n < 10000; ++n) {
    auto p = g();
    const auto dF = quartic_F(p).derivative();
    for (const auto& e : positive_equilibria(p)) {
      const double d = dF(e.point.x);
      if (std::abs(d) <= 1e-8) continue;
      EXPECT_EQ(sgn(e.det), -sgn(d));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(EquilibriaProperty, TraceSignMatchesT) {
  draw_gen g;
  int checked = 0;
  for (int n = 0; n < 10000; ++n) {
    auto p = g();
    for (const auto& e : positive_equilibria(p)) {
      const double t = trace_factor(p, e.point.x);
      if (std::abs(t) <= 1e-8) continue;
      EXPECT_EQ(sgn(e.trace), sgn(t));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(EquilibriaProperty, BoundaryNodeOrSaddleByKappa1) {
  draw_gen g;
  for (int n = 0; n < 2000; ++n) {
    auto p = g();
    const auto eq = find_equilibria(p)[1];
    ASSERT_EQ(eq.kind, eq_kind::boundary_kappa);
    const double k1 = kappa1(p.h);
    if (std::abs(p.kappa - k1) < 1e-6 * k1) continue;
    EXPECT_EQ(eq.cls, p.kappa < k1 ? eq_class::stable_node : eq_class::saddle);
  }
}

TEST(EquilibriaProperty, ClassificationMatchesSignTriple) {
  draw_gen g;
  for (int n = 0; n < 2000; ++n) {
    for (const auto& e : find_equilibria(g())) {
      if (e.near_degenerate) continue;
      switch (e.cls) {
        case eq_class::saddle: EXPECT_LT(e.det, 0); break;
        case eq_class::stable_node: EXPECT_TRUE(e.det > 0 && e.trace < 0 && e.discriminant >= 0); break;
        case eq_class::unstable_node: EXPECT_TRUE(e.det > 0 && e.trace > 0 && e.discriminant >= 0); break;
        case eq_class::stable_focus: EXPECT_TRUE(e.det > 0 && e.trace < 0 && e.discriminant < 0); break;
        case eq_class::unstable_focus: EXPECT_TRUE(e.det > 0 && e.trace > 0 && e.discriminant < 0); break;
        default: ADD_FAILURE() << to_string(e.cls);
      }
    }
  }
}
