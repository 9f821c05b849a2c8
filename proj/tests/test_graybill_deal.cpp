// Copyright 2026 The admlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <vector>

#include "admlab/errors.hpp"
#include "admlab/graybill_deal.hpp"
#include "ks.hpp"

namespace admlab::gd {
namespace {

double combined_se(const MCEstimate& a, const MCEstimate& b) {
  return std::hypot(a.std_error, b.std_error);
}

McConfig mc(std::uint64_t samples, std::uint64_t seed = 1) {
  McConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

TEST(Summary, MeansVariancesAndDifference) {
  const std::vector<double> x1 = {0.0, 2.0};
  const std::vector<double> x2 = {1.0, 1.0};
  const auto s = summarize(x1, x2);
  EXPECT_DOUBLE_EQ(s.mean1, 1.0);
  EXPECT_DOUBLE_EQ(s.s1_sq, 2.0);
  EXPECT_DOUBLE_EQ(s.s2_sq, 0.0);
  EXPECT_DOUBLE_EQ(s.d, 0.0);
  const std::vector<double> one = {1.0};
  EXPECT_THROW(summarize(one, one), InputError);
  EXPECT_THROW(summarize(x1, one), InputError);
}

TEST(Phi, ClosedFormExamples) {
  EXPECT_DOUBLE_EQ(phi_gd(1.0, 3.0), 0.25);
  EXPECT_THROW(phi_gd(0.0, 0.0), InputError);
  const GDPriorParams prior{0.25, 0.01, 5};
  EXPECT_DOUBLE_EQ(phi_bayes(1.0, 2.0, prior), 1.005 / 3.01);
  // The Bayes choice tends to φ_GD as β → 0 and to 1/2 as β → ∞.
  const GDPriorParams tiny{0.25, 1e-300, 5};
  EXPECT_DOUBLE_EQ(phi_bayes(1.0, 3.0, tiny), phi_gd(1.0, 3.0));
  const GDPriorParams huge{0.25, 1e12, 5};
  EXPECT_NEAR(phi_bayes(1.0, 3.0, huge), 0.5, 1e-9);
}

TEST(GdEstimate, BothFormsAgreeAndLieBetweenMeans) {
  SampleSummary s;
  s.mean1 = 0.0;
  s.mean2 = 4.0;
  s.s1_sq = 1.0;
  s.s2_sq = 3.0;
  s.d = 4.0;
  const auto f = gd_estimate_forms(s);
  EXPECT_DOUBLE_EQ(f.precision_weighted, 1.0);
  EXPECT_DOUBLE_EQ(f.class_c1, 1.0);

  const std::vector<double> x1 = {0.3, -1.2, 0.8, 2.0, 0.1};
  const std::vector<double> x2 = {5.0, 3.5, 4.1, 6.2, 4.4};
  const double est = gd_estimate(x1, x2);
  const auto sum = summarize(x1, x2);
  EXPECT_GT(est, sum.mean1);
  EXPECT_LT(est, sum.mean2);
  EXPECT_NEAR(gd_estimate(x2, x1), est, 1e-12);
}

TEST(Sampling, ScaledVarianceIsChiSquare) {
  const GDParams params{1.0, 2.0, 0.5, 6};
  PhiloxEngine rng(3, 0, 0);
  Sampler sampler(rng);
  std::vector<double> q1;
  std::vector<double> q2;
  for (int i = 0; i < 4000; ++i) {
    const auto d = sample_data(params, sampler);
    q1.push_back((params.n - 1) * d.summary.s1_sq / params.sigma1_sq);
    q2.push_back((params.n - 1) * d.summary.s2_sq / params.sigma2_sq);
  }
  const boost::math::chi_squared chi(params.n - 1);
  auto cdf = [&](double x) { return boost::math::cdf(chi, x); };
  EXPECT_TRUE(test::ks_accepts(q1, cdf));
  EXPECT_TRUE(test::ks_accepts(q2, cdf));
}

TEST(RiskC1, OraclePhiAttainsTheVarianceFloor) {
  const GDParams params{0.0, 1.0, 3.0, 5};
  const double theta = params.theta_prime();
  const auto r = risk_c1(params, [theta](double, double) { return theta; }, mc(200000));
  EXPECT_DOUBLE_EQ(r.variance_floor, 3.0 / (5.0 * 4.0));
  EXPECT_NEAR(r.analytic.mean, r.variance_floor, 1e-12);
  EXPECT_NEAR(r.direct.mean, r.variance_floor, 4 * r.direct.std_error);
  EXPECT_NEAR(r.bias.mean, 0.0, 4 * r.bias.std_error);
}

TEST(RiskC1, DirectAndAnalyticAgree) {
  for (const GDParams& params : {GDParams{0.0, 1.0, 1.0, 5}, GDParams{2.0, 0.2, 5.0, 3},
                                 GDParams{-1.0, 4.0, 1.0, 10}}) {
    const auto r = risk_c1(params, phi_gd, mc(200000, 9));
    EXPECT_NEAR(r.direct.mean, r.analytic.mean, 4 * r.joint_std_error);
    EXPECT_GE(r.analytic.mean, r.variance_floor);
  }
}

TEST(RiskDiff, ExactCases) {
  const GDParams params{0.0, 1.0, 3.0, 5};
  const auto same = risk_diff(params, phi_gd, phi_gd, mc(10000));
  EXPECT_EQ(same.mean, 0.0);
  EXPECT_EQ(same.std_error, 0.0);
  const double theta = params.theta_prime();
  const auto gap = risk_diff(
      params, [](double, double) { return 0.0; }, [theta](double, double) { return theta; },
      mc(10000));
  EXPECT_NEAR(gap.mean, (4.0 / 5.0) * theta * theta, 1e-12);
}

TEST(RiskDiff, MatchesDifferenceOfAnalyticRisks) {
  const GDParams params{0.0, 2.0, 1.0, 4};
  auto half = [](double, double) { return 0.5; };
  const auto diff = risk_diff(params, half, phi_gd, mc(200000, 4));
  const auto r0 = risk_c1(params, half, mc(200000, 5));
  const auto r1 = risk_c1(params, phi_gd, mc(200000, 6));
  EXPECT_NEAR(diff.mean, r0.analytic.mean - r1.analytic.mean,
              4 * std::sqrt(diff.std_error * diff.std_error +
                            r0.analytic.std_error * r0.analytic.std_error +
                            r1.analytic.std_error * r1.analytic.std_error));
}

TEST(Hierarchical, PosteriorShapeAndScale) {
  const GDPriorParams prior{0.25, 1.0, 5};
  EXPECT_DOUBLE_EQ(posterior_shape(prior), 2.25);
  EXPECT_DOUBLE_EQ(posterior_scale(prior, 0.5), 1.0 + 4 * 0.5 / 2);
  EXPECT_DOUBLE_EQ(posterior_mean(prior, 0.5), 2.0 / 1.25);
  EXPECT_THROW(posterior_mean(GDPriorParams{0.25, 1.0, 2}, 1.0), InputError);
}

// Tower property: E[E(1/σ² | S²)] = E(1/σ²) = α/β under the prior. The
// posterior of 1/σ² is Gamma(shape, rate = scale).
TEST(Hierarchical, PosteriorScaleSatisfiesTowerProperty) {
  const GDPriorParams prior{0.25, 1.0, 5};
  const auto acc = run_sharded<2>(mc(400000, 21), 0x7e57, [&](Sampler& s, auto& a, auto count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto h = sample_hierarchical(prior, s);
      const double shape = prior.alpha + 0.5 * (prior.n - 1);
      a[0].add(shape / (prior.beta + 0.5 * (prior.n - 1) * h.s1_sq));
      a[1].add(shape / (prior.beta + 0.5 * h.s1_sq));
      EXPECT_DOUBLE_EQ(h.posterior_scale1, posterior_scale(prior, h.s1_sq));
    }
  });
  const double truth = prior.alpha / prior.beta;
  EXPECT_NEAR(acc[0].mean(), truth, 4 * acc[0].std_error());
  // Dropping the (n-1) factor is detectably wrong.
  EXPECT_GT(std::abs(acc[1].mean() - truth), 10 * acc[1].std_error());
}

TEST(Hierarchical, BetaVariableHasBetaLaw) {
  const GDPriorParams prior{0.3, 0.5, 6};
  PhiloxEngine rng(8, 1, 0);
  Sampler sampler(rng);
  std::vector<double> v;
  for (int i = 0; i < 4000; ++i) {
    v.push_back(beta_variable(prior, sample_hierarchical(prior, sampler).s1_sq));
  }
  const double b = 0.5 * (prior.n - 1);
  EXPECT_TRUE(test::ks_accepts(v, [&](double x) {
    return x <= 0 ? 0.0 : x >= 1 ? 1.0 : boost::math::ibeta(prior.alpha, b, x);
  }));
}

TEST(Excess, IntegrandExamples) {
  const GDPriorParams prior{0.25, 0.1, 5};
  EXPECT_EQ(excess_integrand(2.0, 2.0, prior), 0.0);
  // a = 4, b = 0: 4β²·16 / (5·2.5·16·4.4).
  EXPECT_NEAR(excess_integrand(1.0, 0.0, prior), 4 * 0.01 * 16 / (5 * 2.5 * 16 * 4.4), 1e-15);
  // Independent evaluation: posterior-mean sum times (φ_GD - φ_Bayes)² / n.
  for (double s1 : {0.1, 1.0, 7.0}) {
    for (double s2 : {0.3, 2.0}) {
      const double sum_mean = posterior_mean(prior, s1) + posterior_mean(prior, s2);
      const double gap = phi_gd(s1, s2) - phi_bayes(s1, s2, prior);
      EXPECT_NEAR(excess_integrand(s1, s2, prior), sum_mean * gap * gap / prior.n, 1e-14);
    }
  }
}

TEST(Excess, BoundedByTwiceBeta) {
  for (double beta : {1e-1, 1e-2, 1e-3}) {
    const GDPriorParams prior{0.25, beta, 5};
    const auto e = excess_bayes_risk(prior, mc(200000));
    EXPECT_GT(e.mean, 0.0);
    EXPECT_LE(e.mean, 2 * beta + 3 * e.std_error);
  }
  EXPECT_THROW(excess_bayes_risk(GDPriorParams{0.25, 0.1, 2}, mc(10)), InputError);
}

TEST(Excess, BetaIdentityAgrees) {
  const auto r = beta_identity_check(GDPriorParams{0.25, 0.1, 5}, mc(400000));
  EXPECT_NEAR(r.predictive.mean, r.beta_draws.mean, 4 * r.joint_std_error);
}

// The closed-form excess against a joint (σ², data) simulation that never
// uses the posterior. n = 8 keeps the joint estimator's variance finite.
TEST(Excess, AgreesWithJointSimulation) {
  const GDPriorParams prior{0.25, 0.1, 8};
  const auto closed = excess_bayes_risk(prior, mc(400000, 2));
  const auto joint = bayes_risk_difference(
      prior, phi_gd, [&](double a, double b) { return phi_bayes(a, b, prior); }, mc(2000000, 3));
  EXPECT_NEAR(joint.mean, closed.mean, 4 * combined_se(joint, closed));
}

TEST(Mass, QuadratureMatchesIncompleteGamma) {
  const RectangleO rect;
  for (double beta : {0.5, 0.1, 1e-3}) {
    const GDPriorParams prior{0.25, beta, 5};
    const auto m = prior_mass_bound(rect, prior, mc(400000));
    // P(σ² ∈ [1, 2]) = P(1/σ² ∈ [1/2, 1]) with 1/σ² ~ Gamma(α, rate β).
    const double side = boost::math::gamma_q(prior.alpha, beta / 2) -
                        boost::math::gamma_q(prior.alpha, beta);
    EXPECT_NEAR(m.quadrature_mass, side * side, 1e-9 * side * side);
    EXPECT_NEAR(m.mc_mass.mean, side * side, 4 * m.mc_mass.std_error + 1e-12);
    EXPECT_DOUBLE_EQ(m.lower_bound, mass_constant(rect, 0.25) * std::pow(beta, 0.5));
    EXPECT_EQ(m.holds, m.quadrature_mass > m.lower_bound);
  }
  EXPECT_THROW(prior_mass_bound(rect, GDPriorParams{0.25, 0.7, 5}, mc(10)), InputError);
}

// On [1,2]² the constant has slack only while β is small: the exact
// coefficient of β^{2α} per side is 4(1 - 2^{-1/4})/Γ(α) against 1/(2Γ(α)).
TEST(Mass, BoundHoldsForSmallBetaOnUnitRectangle) {
  for (double beta : {1e-1, 1e-2, 1e-3, 1e-4}) {
    EXPECT_TRUE(prior_mass_bound(RectangleO{}, GDPriorParams{0.25, beta, 5}, mc(1000)).holds);
  }
  // Inside the ln 2 precondition yet above the bound.
  EXPECT_FALSE(prior_mass_bound(RectangleO{}, GDPriorParams{0.25, 0.5, 5}, mc(1000)).holds);
}

// With inf(O) > 1 the constant exceeds the true coefficient, because
// (1/σ²)^{α+1} <= inf(O)^{-(α+1)} on O. The report says so honestly.
TEST(Mass, ConstantFailsWhenInfimumExceedsOne) {
  const RectangleO rect{2.0, 3.0, 1.5, 4.0};
  const auto m = prior_mass_bound(rect, GDPriorParams{0.25, 1e-4, 5}, mc(1000));
  EXPECT_LT(m.quadrature_mass, m.lower_bound);
  EXPECT_FALSE(m.holds);
}

TEST(Mass, ConstantAndDegenerateRectangle) {
  const RectangleO rect{2.0, 3.0, 1.5, 4.0};
  EXPECT_NEAR(mass_constant(rect, 0.25),
              std::pow(1.5, 2.5) * 2.5 / (4 * std::pow(std::tgamma(0.25), 2)), 1e-15);
  const RectangleO flat{1.0, 1.0, 1.0, 2.0};
  const auto m = prior_mass_bound(flat, GDPriorParams{0.25, 0.1, 5}, mc(1000));
  EXPECT_EQ(m.quadrature_mass, 0.0);
  EXPECT_EQ(m.lower_bound, 0.0);
  EXPECT_THROW((RectangleO{0.0, 1.0, 1.0, 2.0}.validate()), InputError);
  EXPECT_THROW((RectangleO{2.0, 1.0, 1.0, 2.0}.validate()), InputError);
}

TEST(Blyth, RatioShrinksBySqrtTen) {
  const auto r = blyth_sequence_report(0.25, 5, {1e-1, 1e-2, 1e-3, 1e-4}, RectangleO{}, mc(200000));
  ASSERT_EQ(r.rows.size(), 4u);
  ASSERT_EQ(r.shrink_factors.size(), 3u);
  for (double f : r.shrink_factors) EXPECT_NEAR(f, std::sqrt(10.0), 1e-9);
  EXPECT_TRUE(r.decreasing);
  EXPECT_TRUE(r.final_bound_ok);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.slow_convergence);
  const auto csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "beta,excess_mean,excess_se,mass_bound,ratio");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Blyth, EdgeCases) {
  const auto single = blyth_sequence_report(0.25, 5, {1e-2}, RectangleO{}, mc(1000));
  EXPECT_TRUE(single.shrink_factors.empty());
  EXPECT_TRUE(single.passed());
  const auto slow = blyth_sequence_report(0.49, 5, {1e-1, 1e-2}, RectangleO{}, mc(1000));
  EXPECT_TRUE(slow.slow_convergence);
  EXPECT_THROW(blyth_sequence_report(0.25, 5, {}, RectangleO{}, mc(10)), InputError);
  EXPECT_THROW(blyth_sequence_report(0.25, 5, {1e-2, 1e-1}, RectangleO{}, mc(10)), InputError);
  EXPECT_THROW(blyth_sequence_report(0.25, 5, {1e-2}, RectangleO{1, 1, 1, 2}, mc(10)),
               InputError);
}

TEST(Determinism, SameSeedIsBitIdentical) {
  const GDParams params{0.5, 1.0, 2.0, 5};
  McConfig a = mc(100000, 77);
  McConfig b = a;
  a.threads = 1;
  b.threads = 4;
  const auto ra = risk_c1(params, phi_gd, a);
  const auto rb = risk_c1(params, phi_gd, b);
  EXPECT_EQ(ra.direct.mean, rb.direct.mean);
  EXPECT_EQ(ra.direct.std_error, rb.direct.std_error);
  EXPECT_EQ(ra.analytic.mean, rb.analytic.mean);
  const auto rc = risk_c1(params, phi_gd, mc(100000, 78));
  EXPECT_NE(rc.direct.mean, ra.direct.mean);
  EXPECT_NEAR(rc.direct.mean, ra.direct.mean, 4 * std::hypot(ra.direct.std_error, rc.direct.std_error));
}

}  // namespace
}  // namespace admlab::gd
