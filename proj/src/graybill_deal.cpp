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

#include "admlab/graybill_deal.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "admlab/errors.hpp"
#include "admlab/quadrature.hpp"

namespace admlab::gd {
namespace {

// Philox stream identifiers; distinct per estimator so that no two
// estimates in a report share draws unless that is intended.
constexpr std::uint32_t kStreamRiskDirect = 0x47440001u;
constexpr std::uint32_t kStreamRiskAnalytic = 0x47440002u;
constexpr std::uint32_t kStreamRiskDiff = 0x47440003u;
constexpr std::uint32_t kStreamPredictive = 0x47440004u;
constexpr std::uint32_t kStreamBeta = 0x47440005u;
constexpr std::uint32_t kStreamMass = 0x47440006u;
constexpr std::uint32_t kStreamJoint = 0x47440007u;

void draw_into(const GDParams& params, Sampler& sampler, std::span<double> x1,
               std::span<double> x2) {
  const double sd1 = std::sqrt(params.sigma1_sq);
  const double sd2 = std::sqrt(params.sigma2_sq);
  for (auto& x : x1) x = params.mu + sd1 * sampler.normal();
  for (auto& x : x2) x = params.mu + sd2 * sampler.normal();
}

double mean_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double unbiased_variance(std::span<const double> x, double mean) {
  double s = 0.0;
  for (double v : x) s += (v - mean) * (v - mean);
  return s / static_cast<double>(x.size() - 1);
}

// Sᵢ² given σᵢ²: σᵢ² χ²_{n-1} / (n-1).
double draw_s_sq(double sigma_sq, int n, Sampler& sampler) {
  return sigma_sq * sampler.chi_square(n - 1) / (n - 1);
}

}  // namespace

void GDParams::validate() const {
  if (n <= 1) throw InputError("n must exceed 1");
  if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0) || !std::isfinite(sigma1_sq) ||
      !std::isfinite(sigma2_sq)) {
    throw InputError("variances must be positive and finite");
  }
  if (!std::isfinite(mu)) throw InputError("mu must be finite");
}

void GDPriorParams::validate() const {
  if (!(alpha > 0.0 && alpha < 0.5)) throw InputError("alpha must lie in (0, 1/2)");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InputError("beta must be positive");
  if (n <= 1) throw InputError("n must exceed 1");
}

SampleSummary summarize(std::span<const double> x1, std::span<const double> x2) {
  if (x1.size() < 2 || x1.size() != x2.size()) {
    throw InputError("both samples need the same size n > 1");
  }
  SampleSummary s;
  s.mean1 = mean_of(x1);
  s.mean2 = mean_of(x2);
  s.s1_sq = unbiased_variance(x1, s.mean1);
  s.s2_sq = unbiased_variance(x2, s.mean2);
  s.d = s.mean2 - s.mean1;
  return s;
}

DataSample sample_data(const GDParams& params, Sampler& sampler) {
  params.validate();
  DataSample out;
  out.x1.resize(static_cast<std::size_t>(params.n));
  out.x2.resize(static_cast<std::size_t>(params.n));
  draw_into(params, sampler, out.x1, out.x2);
  out.summary = summarize(out.x1, out.x2);
  return out;
}

double phi_gd(double s1_sq, double s2_sq) {
  const double total = s1_sq + s2_sq;
  if (!(total > 0.0)) throw InputError("phi_gd needs S1^2 + S2^2 > 0");
  return s1_sq / total;
}

double phi_bayes(double s1_sq, double s2_sq, const GDPriorParams& prior) {
  const double shift = prior.beta / (prior.n - 1);
  const double den = s1_sq + s2_sq + 4.0 * shift;
  if (!(den > 0.0)) throw InputError("phi_bayes denominator must be positive");
  return (s1_sq + 2.0 * shift) / den;
}

GdEstimateForms gd_estimate_forms(const SampleSummary& s) {
  GdEstimateForms forms;
  forms.class_c1 = s.mean1 + s.d * phi_gd(s.s1_sq, s.s2_sq);
  if (s.s1_sq > 0.0 && s.s2_sq > 0.0) {
    // The factor n cancels; kept to mirror the precision weights n/Sᵢ².
    const double w1 = 1.0 / s.s1_sq;
    const double w2 = 1.0 / s.s2_sq;
    forms.precision_weighted = (w1 * s.mean1 + w2 * s.mean2) / (w1 + w2);
  } else {
    // A zero-variance sample has infinite precision and takes all the weight.
    forms.precision_weighted = s.s1_sq == 0.0 ? s.mean1 : s.mean2;
  }
  return forms;
}

double gd_estimate(const SampleSummary& s) {
  const auto forms = gd_estimate_forms(s);
  const double scale = std::max({1.0, std::abs(s.mean1), std::abs(s.mean2)});
  if (std::abs(forms.precision_weighted - forms.class_c1) > 1e-12 * scale) {
    throw std::logic_error("Graybill-Deal forms disagree");
  }
  return forms.class_c1;
}

double gd_estimate(std::span<const double> x1, std::span<const double> x2) {
  return gd_estimate(summarize(x1, x2));
}

RiskC1Report risk_c1(const GDParams& params, const PhiFn& phi, const McConfig& mc) {
  params.validate();
  const double n = params.n;
  const double total_var = params.sigma1_sq + params.sigma2_sq;
  const double theta_p = params.theta_prime();

  RiskC1Report out;
  out.variance_floor = params.sigma1_sq * params.sigma2_sq / (n * total_var);

  const auto direct = run_sharded<2>(mc, kStreamRiskDirect,
                                     [&](Sampler& sampler, auto& acc, std::uint64_t count) {
    std::vector<double> x1(static_cast<std::size_t>(params.n));
    std::vector<double> x2(static_cast<std::size_t>(params.n));
    for (std::uint64_t i = 0; i < count; ++i) {
      draw_into(params, sampler, x1, x2);
      const auto s = summarize(x1, x2);
      const double est = s.mean1 + s.d * phi(s.s1_sq, s.s2_sq);
      const double err = est - params.mu;
      acc[0].add(err * err);
      acc[1].add(err);
    }
  });
  out.direct = direct[0].estimate(mc.seed);
  out.bias = direct[1].estimate(mc.seed);

  const auto analytic = run_sharded<1>(mc, kStreamRiskAnalytic,
                                       [&](Sampler& sampler, auto& acc, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const double s1 = draw_s_sq(params.sigma1_sq, params.n, sampler);
      const double s2 = draw_s_sq(params.sigma2_sq, params.n, sampler);
      const double dev = phi(s1, s2) - theta_p;
      acc[0].add(out.variance_floor + total_var / n * dev * dev);
    }
  });
  out.analytic = analytic[0].estimate(mc.seed);
  out.joint_std_error = std::hypot(out.direct.std_error, out.analytic.std_error);
  return out;
}

MCEstimate risk_diff(const GDParams& params, const PhiFn& phi0, const PhiFn& phi1,
                     const McConfig& mc) {
  params.validate();
  const double scale = (params.sigma1_sq + params.sigma2_sq) / params.n;
  const double theta_p = params.theta_prime();
  const auto acc = run_sharded<1>(mc, kStreamRiskDiff,
                                  [&](Sampler& sampler, auto& a, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const double s1 = draw_s_sq(params.sigma1_sq, params.n, sampler);
      const double s2 = draw_s_sq(params.sigma2_sq, params.n, sampler);
      const double e0 = phi0(s1, s2) - theta_p;
      const double e1 = phi1(s1, s2) - theta_p;
      a[0].add(scale * (e0 * e0 - e1 * e1));
    }
  });
  return acc[0].estimate(mc.seed);
}

double posterior_shape(const GDPriorParams& prior) { return prior.alpha + 0.5 * (prior.n - 1); }

double posterior_scale(const GDPriorParams& prior, double s_sq) {
  return prior.beta + 0.5 * (prior.n - 1) * s_sq;
}

double posterior_mean(const GDPriorParams& prior, double s_sq) {
  const double shape = posterior_shape(prior);
  if (!(shape > 1.0)) throw InputError("posterior mean needs alpha + (n-1)/2 > 1");
  return posterior_scale(prior, s_sq) / (shape - 1.0);
}

HierarchicalDraw sample_hierarchical(const GDPriorParams& prior, Sampler& sampler) {
  HierarchicalDraw d;
  d.sigma1_sq = prior.beta / sampler.gamma(prior.alpha);
  d.sigma2_sq = prior.beta / sampler.gamma(prior.alpha);
  d.s1_sq = draw_s_sq(d.sigma1_sq, prior.n, sampler);
  d.s2_sq = draw_s_sq(d.sigma2_sq, prior.n, sampler);
  d.posterior_shape = posterior_shape(prior);
  d.posterior_scale1 = posterior_scale(prior, d.s1_sq);
  d.posterior_scale2 = posterior_scale(prior, d.s2_sq);
  if (d.posterior_shape > 1.0) {
    d.posterior_mean1 = posterior_mean(prior, d.s1_sq);
    d.posterior_mean2 = posterior_mean(prior, d.s2_sq);
  }
  return d;
}

double beta_variable(const GDPriorParams& prior, double s_sq) {
  return 2.0 * prior.beta / (2.0 * prior.beta + (prior.n - 1) * s_sq);
}

double excess_integrand(double s1_sq, double s2_sq, const GDPriorParams& prior) {
  const double a = (prior.n - 1) * s1_sq;
  const double b = (prior.n - 1) * s2_sq;
  const double sum = a + b;
  if (!std::isfinite(sum)) return 0.0;  // limit as either variance grows without bound
  if (!(sum > 0.0)) return 0.0;
  const double t = (a - b) / sum;
  const double beta = prior.beta;
  return 4.0 * beta * beta * t * t /
         (prior.n * (2.0 * prior.alpha + prior.n - 3.0) * (sum + 4.0 * beta));
}

MCEstimate excess_bayes_risk(const GDPriorParams& prior, const McConfig& mc) {
  prior.validate();
  if (!(2.0 * prior.alpha + prior.n - 3.0 > 0.0)) {
    throw InputError("excess Bayes risk needs 2*alpha + n - 3 > 0");
  }
  const auto acc = run_sharded<1>(mc, kStreamPredictive,
                                  [&](Sampler& sampler, auto& a, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto draw = sample_hierarchical(prior, sampler);
      a[0].add(excess_integrand(draw.s1_sq, draw.s2_sq, prior));
    }
  });
  return acc[0].estimate(mc.seed);
}

MCEstimate bayes_risk_difference(const GDPriorParams& prior, const PhiFn& phi0, const PhiFn& phi1,
                                 const McConfig& mc) {
  prior.validate();
  const auto acc = run_sharded<1>(mc, kStreamJoint,
                                  [&](Sampler& sampler, auto& a, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto draw = sample_hierarchical(prior, sampler);
      const double total = draw.sigma1_sq + draw.sigma2_sq;
      if (!std::isfinite(total)) continue;
      const double theta_p = draw.sigma1_sq / total;
      const double e0 = phi0(draw.s1_sq, draw.s2_sq) - theta_p;
      const double e1 = phi1(draw.s1_sq, draw.s2_sq) - theta_p;
      a[0].add(total / prior.n * (e0 - e1) * (e0 + e1));
    }
  });
  return acc[0].estimate(mc.seed);
}

BetaIdentityReport beta_identity_check(const GDPriorParams& prior, const McConfig& mc) {
  prior.validate();
  const double beta = prior.beta;
  BetaIdentityReport out;
  const auto pred = run_sharded<1>(mc, kStreamPredictive,
                                   [&](Sampler& sampler, auto& a, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto draw = sample_hierarchical(prior, sampler);
      const double sum = (prior.n - 1) * (draw.s1_sq + draw.s2_sq);
      a[0].add(std::isfinite(sum) ? 4.0 * beta * beta / (sum + 4.0 * beta) : 0.0);
    }
  });
  const double b_shape = 0.5 * (prior.n - 1);
  const auto direct = run_sharded<1>(mc, kStreamBeta,
                                     [&](Sampler& sampler, auto& a, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const double v1 = sampler.beta(prior.alpha, b_shape);
      const double v2 = sampler.beta(prior.alpha, b_shape);
      const double h = (v1 > 0.0 && v2 > 0.0) ? v1 * v2 / (v1 + v2) : 0.0;
      a[0].add(2.0 * beta * h);
    }
  });
  out.predictive = pred[0].estimate(mc.seed);
  out.beta_draws = direct[0].estimate(mc.seed);
  out.joint_std_error = std::hypot(out.predictive.std_error, out.beta_draws.std_error);
  return out;
}

void RectangleO::validate() const {
  if (!(a1 > 0.0 && a2 > 0.0)) throw InputError("rectangle must lie in (0, inf)^2");
  if (!(a1 <= b1 && a2 <= b2)) throw InputError("rectangle bounds must satisfy a <= b");
  if (!std::isfinite(b1) || !std::isfinite(b2)) throw InputError("rectangle must be bounded");
}

double inverse_gamma_density(double x, double alpha, double beta) {
  if (!(x > 0.0)) return 0.0;
  return std::exp(alpha * std::log(beta) - std::lgamma(alpha) - (alpha + 1.0) * std::log(x) -
                  beta / x);
}

double mass_constant(const RectangleO& rect, double alpha) {
  const double g = std::tgamma(alpha);
  return std::pow(rect.inf(), 2.0 * (alpha + 1.0)) * rect.area() / (4.0 * g * g);
}

MassBound prior_mass_bound(const RectangleO& rect, const GDPriorParams& prior,
                           const McConfig& mc) {
  rect.validate();
  prior.validate();
  if (!(prior.beta < std::numbers::ln2 * rect.inf())) {
    throw InputError("beta must be below ln(2) * inf(O)");
  }
  MassBound out;
  out.constant = mass_constant(rect, prior.alpha);
  out.lower_bound = out.constant * std::pow(prior.beta, 2.0 * prior.alpha);

  const auto cub = adaptive_cubature(
      [&](double x, double y) {
        return inverse_gamma_density(x, prior.alpha, prior.beta) *
               inverse_gamma_density(y, prior.alpha, prior.beta);
      },
      rect.a1, rect.b1, rect.a2, rect.b2, 1e-6);
  out.quadrature_mass = cub.value;
  out.quadrature_error = cub.error;

  const auto acc = run_sharded<1>(mc, kStreamMass,
                                  [&](Sampler& sampler, auto& a, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const double s1 = prior.beta / sampler.gamma(prior.alpha);
      const double s2 = prior.beta / sampler.gamma(prior.alpha);
      a[0].add(rect.contains(s1, s2) ? 1.0 : 0.0);
    }
  });
  out.mc_mass = acc[0].estimate(mc.seed);
  // A degenerate rectangle has bound 0 and mass 0; the inequality is then tight.
  out.holds = rect.area() > 0.0 ? out.quadrature_mass > out.lower_bound
                                : out.quadrature_mass == out.lower_bound;
  return out;
}

BlythReport blyth_sequence_report(double alpha, int n, const std::vector<double>& betas,
                                  const RectangleO& rect, const McConfig& mc) {
  if (betas.empty()) throw InputError("beta list is empty");
  rect.validate();
  if (!(rect.area() > 0.0)) throw InputError("rectangle must have positive area");
  for (std::size_t i = 1; i < betas.size(); ++i) {
    if (!(betas[i] < betas[i - 1])) throw InputError("betas must be strictly decreasing");
  }
  BlythReport report;
  report.alpha = alpha;
  report.n = n;
  const double constant = mass_constant(rect, alpha);
  for (double beta : betas) {
    GDPriorParams prior{alpha, beta, n};
    prior.validate();
    BlythRow row;
    row.beta = beta;
    row.excess = excess_bayes_risk(prior, mc);
    row.mass_bound = constant * std::pow(beta, 2.0 * alpha);
    row.ratio = row.excess.mean / row.mass_bound;
    row.ratio_se = row.excess.std_error / row.mass_bound;
    report.rows.push_back(row);
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& prev = report.rows[i - 1];
    const auto& cur = report.rows[i];
    report.shrink_factors.push_back(prev.ratio / cur.ratio);
    if (!(cur.ratio < prev.ratio + 3.0 * std::hypot(prev.ratio_se, cur.ratio_se))) {
      report.decreasing = false;
    }
  }
  if (report.rows.size() > 1) {
    const auto& first = report.rows.front();
    const auto& last = report.rows.back();
    // Half the theoretical exponent 1 - 2α, as slack for Monte Carlo error.
    const double allowed =
        first.ratio * std::pow(last.beta / first.beta, 0.5 * (1.0 - 2.0 * alpha));
    report.final_bound_ok = last.ratio <= allowed + 3.0 * last.ratio_se;
  }
  report.slow_convergence = 1.0 - 2.0 * alpha < 0.1;
  return report;
}

std::string to_csv(const BlythReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "beta,excess_mean,excess_se,mass_bound,ratio\n";
  for (const auto& row : report.rows) {
    out << row.beta << ',' << row.excess.mean << ',' << row.excess.std_error << ','
        << row.mass_bound << ',' << row.ratio << '\n';
  }
  return out.str();
}

}  // namespace admlab::gd
