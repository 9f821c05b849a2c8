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

#ifndef ADMLAB_GRAYBILL_DEAL_HPP_
#define ADMLAB_GRAYBILL_DEAL_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "admlab/monte_carlo.hpp"

namespace admlab::gd {

// Two normal samples of size n share the mean μ and have unknown variances
// σ₁², σ₂². Estimators of class C₁ have the form X̄₁ + D·φ(S₁², S₂²) with
// D = X̄₂ - X̄₁ and φ taking values in [0, 1].

struct GDParams {
  double mu = 0.0;
  double sigma1_sq = 1.0;
  double sigma2_sq = 1.0;
  int n = 5;

  /// Throws InputError unless n > 1 and both variances are positive.
  void validate() const;
  /// θ′ = σ₁² / (σ₁² + σ₂²).
  double theta_prime() const { return sigma1_sq / (sigma1_sq + sigma2_sq); }
};

/// Inverse-gamma(α, β) ⊗ inverse-gamma(α, β) prior on (σ₁², σ₂²).
struct GDPriorParams {
  double alpha = 0.25;
  double beta = 1e-3;
  int n = 5;

  /// Throws InputError unless 0 < α < 1/2, β > 0 and n > 1.
  void validate() const;
};

struct SampleSummary {
  double mean1 = 0.0;
  double mean2 = 0.0;
  double s1_sq = 0.0;
  double s2_sq = 0.0;
  /// X̄₂ - X̄₁.
  double d = 0.0;
};

struct DataSample {
  std::vector<double> x1;
  std::vector<double> x2;
  SampleSummary summary;
};

/// Means, unbiased variances S² = Σ(x - x̄)²/(n-1) and D.
SampleSummary summarize(std::span<const double> x1, std::span<const double> x2);

DataSample sample_data(const GDParams& params, Sampler& sampler);

/// S₁² / (S₁² + S₂²). Throws InputError when both are zero.
double phi_gd(double s1_sq, double s2_sq);

/// (S₁² + 2β/(n-1)) / (S₁² + S₂² + 4β/(n-1)), the Bayes choice of φ under
/// the inverse-gamma prior.
double phi_bayes(double s1_sq, double s2_sq, const GDPriorParams& prior);

struct GdEstimateForms {
  /// (Σ n/Sᵢ²)⁻¹ Σ (n/Sᵢ²) X̄ᵢ.
  double precision_weighted = 0.0;
  /// X̄₁ + D·φ_GD.
  double class_c1 = 0.0;
};

GdEstimateForms gd_estimate_forms(const SampleSummary& s);

/// Graybill–Deal estimate; both algebraic forms are computed and must agree
/// to 1e-12 relative (std::logic_error otherwise).
double gd_estimate(std::span<const double> x1, std::span<const double> x2);
double gd_estimate(const SampleSummary& s);

using PhiFn = std::function<double(double, double)>;

struct RiskC1Report {
  /// Monte Carlo mean of (est - μ)² from raw data.
  MCEstimate direct;
  /// σ₁²σ₂²/(n(σ₁²+σ₂²)) + (σ₁²+σ₂²)/n · (φ - θ′)², averaged over S² draws only.
  MCEstimate analytic;
  /// Monte Carlo mean of est - μ.
  MCEstimate bias;
  /// The exact first term σ₁²σ₂²/(n(σ₁²+σ₂²)).
  double variance_floor = 0.0;
  /// sqrt(se_direct² + se_analytic²); the two estimates use independent streams.
  double joint_std_error = 0.0;
};

RiskC1Report risk_c1(const GDParams& params, const PhiFn& phi, const McConfig& mc);

/// (σ₁²+σ₂²)/n · E[(φ₀ - θ′)² - (φ₁ - θ′)²] with φ₀ and φ₁ evaluated on the
/// same S² draws.
MCEstimate risk_diff(const GDParams& params, const PhiFn& phi0, const PhiFn& phi1,
                     const McConfig& mc);

/// Posterior of σᵢ² given Sᵢ² is inverse-gamma(α + (n-1)/2, β + (n-1)Sᵢ²/2).
double posterior_shape(const GDPriorParams& prior);
double posterior_scale(const GDPriorParams& prior, double s_sq);
double posterior_mean(const GDPriorParams& prior, double s_sq);

struct HierarchicalDraw {
  double sigma1_sq = 0.0;
  double sigma2_sq = 0.0;
  double s1_sq = 0.0;
  double s2_sq = 0.0;
  double posterior_shape = 0.0;
  double posterior_scale1 = 0.0;
  double posterior_scale2 = 0.0;
  double posterior_mean1 = 0.0;
  double posterior_mean2 = 0.0;
};

/// σᵢ² = 1/Gamma(α, rate β); Sᵢ² = σᵢ² χ²_{n-1}/(n-1).
HierarchicalDraw sample_hierarchical(const GDPriorParams& prior, Sampler& sampler);

/// Vᵢ = 2β / (2β + (n-1)Sᵢ²), distributed Beta(α, (n-1)/2) under the
/// predictive law.
double beta_variable(const GDPriorParams& prior, double s_sq);

/// Pointwise excess of φ_GD over φ_Bayes in posterior expected loss:
/// 4β²(a-b)² / (n(2α+n-3)(a+b)²(a+b+4β)) with a = (n-1)S₁², b = (n-1)S₂².
double excess_integrand(double s1_sq, double s2_sq, const GDPriorParams& prior);

/// Bayes-risk excess of δ_GD over the Bayes procedure under the prior,
/// estimated over the predictive law of (S₁², S₂²). Requires 2α + n - 3 > 0.
MCEstimate excess_bayes_risk(const GDPriorParams& prior, const McConfig& mc);

/// Joint prior-and-data Monte Carlo of the Bayes-risk difference
/// r(π, φ₀) - r(π, φ₁) in the loss (σ₁²+σ₂²)/n·(φ - θ′)², without using
/// any closed form for the posterior.
MCEstimate bayes_risk_difference(const GDPriorParams& prior, const PhiFn& phi0, const PhiFn& phi1,
                                 const McConfig& mc);

struct BetaIdentityReport {
  /// E 4β²/((n-1)(S₁²+S₂²) + 4β) over the predictive law.
  MCEstimate predictive;
  /// 2β E[V₁V₂/(V₁+V₂)] with V drawn directly from Beta(α, (n-1)/2).
  MCEstimate beta_draws;
  double joint_std_error = 0.0;
};

BetaIdentityReport beta_identity_check(const GDPriorParams& prior, const McConfig& mc);

/// Axis-aligned rectangle [a1,b1]×[a2,b2] in (0,∞)². Degenerate sides
/// (a == b) are allowed and have zero area.
struct RectangleO {
  double a1 = 1.0;
  double b1 = 2.0;
  double a2 = 1.0;
  double b2 = 2.0;

  void validate() const;
  double area() const { return (b1 - a1) * (b2 - a2); }
  /// Infimum of the coordinate projections.
  double inf() const { return a1 < a2 ? a1 : a2; }
  bool contains(double x, double y) const { return a1 <= x && x <= b1 && a2 <= y && y <= b2; }
};

double inverse_gamma_density(double x, double alpha, double beta);

/// C = ε^{2(α+1)} λ(O) / (4Γ(α)²) with ε = inf(O).
double mass_constant(const RectangleO& rect, double alpha);

struct MassBound {
  double constant = 0.0;
  /// C·β^{2α}.
  double lower_bound = 0.0;
  double quadrature_mass = 0.0;
  double quadrature_error = 0.0;
  MCEstimate mc_mass;
  bool holds = false;
};

/// Requires β < ln 2 · inf(O).
MassBound prior_mass_bound(const RectangleO& rect, const GDPriorParams& prior, const McConfig& mc);

struct BlythRow {
  double beta = 0.0;
  MCEstimate excess;
  double mass_bound = 0.0;
  double ratio = 0.0;
  double ratio_se = 0.0;
};

struct BlythReport {
  double alpha = 0.0;
  int n = 0;
  std::vector<BlythRow> rows;
  /// ratio[i] / ratio[i+1].
  std::vector<double> shrink_factors;
  bool decreasing = true;
  bool final_bound_ok = true;
  bool slow_convergence = false;

  bool passed() const { return decreasing && final_bound_ok; }
};

/// Excess, mass bound and their ratio along a strictly decreasing β
/// sequence. All β share one seed, so draws are common across rows.
BlythReport blyth_sequence_report(double alpha, int n, const std::vector<double>& betas,
                                  const RectangleO& rect, const McConfig& mc);

/// CSV with header beta,excess_mean,excess_se,mass_bound,ratio.
std::string to_csv(const BlythReport& report);

}  // namespace admlab::gd

#endif  // ADMLAB_GRAYBILL_DEAL_HPP_
