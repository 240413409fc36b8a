#include <cmath>
#include <numeric>

#include "test_support.hpp"

namespace lcv {
namespace {

using testing::expect_errc;

NormalizedPair noiseless_pair(std::vector<double> a1, std::vector<double> a2) {
  NormalizedPair p;
  p.weights.w.assign(a1.size(), 1.0);
  p.block_bounds = BlockPartition::equal(a1.size(), 2);
  p.a1 = std::move(a1);
  p.a2 = std::move(a2);
  return p;
}

AlignedPair swapped(AlignedPair p) {
  std::swap(p.z1, p.z2);
  std::swap(p.n1, p.n2);
  std::swap(p.label1, p.label2);
  return p;
}

TEST(Gcp, FromIntermediaryEffects) {
  EXPECT_DOUBLE_EQ(gcp_from_q(1.0, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(gcp_from_q(0.6, 0.6), 0.0);
  EXPECT_DOUBLE_EQ(gcp_from_q(0.5, 1.0), -1.0);
  EXPECT_DOUBLE_EQ(gcp_from_q(1.0, -0.5), 1.0);
  // q2^2 / q1^2 = (rho^2)^x with rho = q1 q2.
  const double q1 = 0.8, q2 = 0.3, x = gcp_from_q(q1, q2);
  EXPECT_NEAR(std::pow(q1 * q2, 2.0 * x), q2 * q2 / (q1 * q1), 1e-12);
  expect_errc([] { gcp_from_q(0.0, 0.5); }, Errc::UndefinedGcp);
  expect_errc([] { gcp_from_q(1.0, 1.0); }, Errc::UndefinedGcp);
}

TEST(Moments, TheoreticalMixedMoment) {
  const double rho = 0.3;
  EXPECT_DOUBLE_EQ(theoretical_m31(0.6, 0.5, 0.0), 3.0 * rho);
  EXPECT_DOUBLE_EQ(theoretical_m31(1.0, rho, 2.0), 5.0 * rho);
  EXPECT_DOUBLE_EQ(theoretical_m31(0.0, 0.7, 4.0), 0.0);
  EXPECT_DOUBLE_EQ(theoretical_m31(0.7, 0.0, 4.0), 0.0);
}

TEST(Moments, NoiselessToyCancels) {
  const auto p = noiseless_pair({1, -1, 1, -1}, {1, -1, -1, 1});
  const auto m = estimate_moments(p, 0.5);
  EXPECT_DOUBLE_EQ(m.m31, 0.0);
  EXPECT_DOUBLE_EQ(m.m13, 0.0);
  EXPECT_DOUBLE_EQ(m.k1, -3.0);
}

TEST(Moments, SelfPairReducesToFourthMoment) {
  const std::vector<double> a{0.5, -2.0, 1.0, 3.0, -0.25, 0.0};
  const auto m = estimate_moments(noiseless_pair(a, a), 1.0);
  double m4 = 0.0;
  for (double v : a) m4 += v * v * v * v / static_cast<double>(a.size());
  EXPECT_DOUBLE_EQ(m.m31, m4);
  EXPECT_DOUBLE_EQ(m.m13, m4);
  expect_errc([&] { estimate_moments(noiseless_pair(a, a), 0.0); }, Errc::ZeroRho);
}

TEST(Moments, NoiseCorrectionRemovesGaussianBias) {
  // a_k = alpha_k + e_k with correlated noise; the corrected moments match
  // the noiseless ones in expectation.
  const std::size_t m = 400'000;
  const double v1 = 0.5, v2 = 0.8, v12 = 0.2;
  std::vector<double> alpha1(m), alpha2(m), a1(m), a2(m);
  SplitMix64 gen(5);
  for (std::size_t i = 0; i < m; ++i) {
    const double pi = gen.uniform() < 0.1 ? gen.normal() * std::sqrt(10.0) : 0.0;
    alpha1[i] = 0.9 * pi + std::sqrt(1.0 - 0.81) * gen.normal();
    alpha2[i] = 0.3 * pi + std::sqrt(1.0 - 0.09) * gen.normal();
    const double u0 = gen.normal(), u1 = gen.normal(), u2 = gen.normal();
    const double c = v12 / std::sqrt(v1 * v2);
    a1[i] = alpha1[i] + std::sqrt(v1) * (std::sqrt(c) * u0 + std::sqrt(1 - c) * u1);
    a2[i] = alpha2[i] + std::sqrt(v2) * (std::sqrt(c) * u0 + std::sqrt(1 - c) * u2);
  }
  auto noisy = noiseless_pair(a1, a2);
  noisy.noise_var_1 = v1;
  noisy.noise_var_2 = v2;
  noisy.noise_cov_12 = v12;
  const auto est = estimate_moments(noisy, 0.27);
  const auto truth = estimate_moments(noiseless_pair(alpha1, alpha2), 0.27);
  EXPECT_NEAR(est.m31, truth.m31, 0.1 * std::abs(truth.m31));
  EXPECT_NEAR(est.m13, truth.m13, 0.1 * std::abs(truth.m13) + 0.05);
}

TEST(SStatistic, HandArithmetic) {
  EXPECT_NEAR(s_statistic(0.0, 0.5, 0.2, 0.4), 0.12, 1e-15);
  EXPECT_DOUBLE_EQ(s_statistic(0.0, 0.7, 0.7, 0.3), 0.0);
  // Root at x = 0.5 for k1 = kappa q1^2, k2 = kappa q2^2 with q1 = rho^(1/4).
  const double rho = 0.2, q1 = std::pow(rho, 0.25), q2 = std::pow(rho, 0.75), kappa = 10.0;
  EXPECT_NEAR(s_statistic(0.5, kappa * q1 * q1, kappa * q2 * q2, rho), 0.0, 1e-12);
  expect_errc([] { s_statistic(0.0, 1.0, 1.0, 0.0); }, Errc::ZeroRho);
}

TEST(SStatistic, ZeroAtTruthForRandomEffects) {
  SplitMix64 gen(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const double q1 = 0.05 + 0.95 * gen.uniform();
    double q2 = (0.05 + 0.95 * gen.uniform()) * (gen.uniform() < 0.5 ? -1.0 : 1.0);
    if (q1 == 1.0 && std::abs(q2) == 1.0) continue;
    const double kappa = 0.5 + 20.0 * gen.uniform();
    const double x = gcp_from_q(q1, q2);
    const double s = s_statistic(x, kappa * q1 * q1, kappa * q2 * q2, q1 * q2);
    EXPECT_NEAR(s, 0.0, 1e-10) << "q1=" << q1 << " q2=" << q2;
  }
}

TEST(SStatistic, AntisymmetricInTraitOrder) {
  SplitMix64 gen(8);
  for (int trial = 0; trial < 500; ++trial) {
    const double k1 = 10.0 * gen.normal(), k2 = 10.0 * gen.normal();
    const double rho = 0.01 + 0.98 * gen.uniform();
    const double x = 2.0 * gen.uniform() - 1.0;
    EXPECT_NEAR(s_statistic(x, k2, k1, rho), -s_statistic(-x, k1, k2, rho), 1e-12);
  }
}

TEST(SStatistic, NumeratorDecreasesAndChangesSignAtMostOnce) {
  SplitMix64 gen(9);
  const auto grid = GcpGrid::make(0.01);
  for (int trial = 0; trial < 300; ++trial) {
    const double k1 = 0.01 + 20.0 * gen.uniform(), k2 = 0.01 + 20.0 * gen.uniform();
    const double rho = 0.01 + 0.98 * gen.uniform();
    double prev = INFINITY;
    int changes = 0;
    double prev_s = s_statistic(grid.xs[0], k1, k2, rho);
    for (double x : grid.xs) {
      const double diff = std::pow(rho, x) * k1 - std::pow(rho, -x) * k2;
      EXPECT_LT(diff, prev);
      prev = diff;
      const double s = s_statistic(x, k1, k2, rho);
      if ((s > 0.0) != (prev_s > 0.0) && s != 0.0 && prev_s != 0.0) ++changes;
      prev_s = s;
    }
    EXPECT_LE(changes, 1);
  }
}

TEST(SStatistic, ScaleInvarianceOfMoments) {
  SplitMix64 gen(10);
  const auto grid = GcpGrid::make(0.01);
  for (int trial = 0; trial < 300; ++trial) {
    const double k1 = 20.0 * gen.normal(), k2 = 20.0 * gen.normal();
    const double rho = 0.05 + 0.9 * gen.uniform();
    const double c = 0.1 + 10.0 * gen.uniform();
    for (double x : grid.xs) {
      const double s = s_statistic(x, k1, k2, rho);
      const double sc = s_statistic(x, c * k1, c * k2, rho);
      if (s != 0.0) {
        EXPECT_EQ(std::signbit(s), std::signbit(sc));
      }
      const double a = std::pow(rho, x) * k1, b = std::pow(rho, -x) * k2;
      if (std::hypot(a, b) >= 1.0 / rho && c >= 1.0) {
        EXPECT_NEAR(s, sc, 1e-12);
      }
    }
  }
}

TEST(Grid, HasTwoHundredOneSymmetricPoints) {
  const auto g = GcpGrid::make(0.01);
  ASSERT_EQ(g.xs.size(), 201u);
  EXPECT_EQ(g.xs.front(), -1.0);
  EXPECT_EQ(g.xs.back(), 1.0);
  EXPECT_EQ(g.xs[g.zero_index()], 0.0);
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    if (i > 0) {
      EXPECT_GT(g.xs[i], g.xs[i - 1]);
    }
    EXPECT_EQ(g.xs[i], -g.xs[g.xs.size() - 1 - i]);
  }
  expect_errc([] { GcpGrid::make(0.3); }, Errc::InvalidArgument);
}

TEST(Posterior, UniformLikelihood) {
  const auto g = GcpGrid::make(0.01);
  const std::vector<double> log_l(g.xs.size(), -3.0);
  const auto l = normalize_log_likelihood(log_l);
  const auto post = posterior_summary(g.xs, l);
  double sum_sq = 0.0;
  for (int k = -100; k <= 100; ++k) sum_sq += (k / 100.0) * (k / 100.0);
  EXPECT_NEAR(post.mean, 0.0, 1e-15);
  EXPECT_NEAR(post.sd, std::sqrt(sum_sq / 201.0), 1e-12);
  EXPECT_NEAR(post.sd, 0.580, 5e-4);
}

TEST(Posterior, PointMass) {
  const auto g = GcpGrid::make(0.01);
  std::vector<double> l(g.xs.size(), 0.0);
  l[150] = 1.0;
  const auto post = posterior_summary(g.xs, l);
  EXPECT_DOUBLE_EQ(post.mean, 0.5);
  EXPECT_DOUBLE_EQ(post.sd, 0.0);
}

TEST(Posterior, LogLikelihoodNormalizesWithoutUnderflow) {
  const std::vector<double> log_l{-1e4, -1e4 + 1.0, -1e4 + 2.0};
  const auto l = normalize_log_likelihood(log_l);
  EXPECT_NEAR(std::accumulate(l.begin(), l.end(), 0.0), 1.0, 1e-15);
  EXPECT_NEAR(l[2] / l[1], std::exp(1.0), 1e-12);
}

TEST(Posterior, BimodalDetection) {
  const auto g = GcpGrid::make(0.01);
  std::vector<double> one(g.xs.size()), two(g.xs.size());
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    const double x = g.xs[i];
    one[i] = std::exp(-50.0 * (x - 0.3) * (x - 0.3));
    two[i] = std::exp(-50.0 * (x - 0.6) * (x - 0.6)) + std::exp(-50.0 * (x + 0.6) * (x + 0.6));
  }
  EXPECT_FALSE(is_bimodal(one));
  EXPECT_TRUE(is_bimodal(two));
}

TEST(Flags, RoundTripThroughText) {
  LcvFlags f;
  EXPECT_EQ(f.to_string(), ".");
  f.set(LcvFlag::LowZh);
  f.set(LcvFlag::UndefinedGcp);
  EXPECT_EQ(f.to_string(), "LOW_ZH,UNDEFINED_GCP");
  EXPECT_EQ(LcvFlags::parse(f.to_string()), f);
  EXPECT_TRUE(LcvFlags::parse(".").empty());
  expect_errc([] { LcvFlags::parse("LOW_ZH,NOPE"); }, Errc::MalformedInput);
}

class LcvFitOnSimulation : public ::testing::Test {
 protected:
  static AlignedPair pair(const std::string& preset, std::uint64_t seed) {
    auto sc = preset_scenario(preset);
    sc.seed = seed;
    const auto sim = simulate(sc);
    return align_pair(sim.sumstats1, sim.sumstats2, sim.ld_scores);
  }
};

TEST_F(LcvFitOnSimulation, LikelihoodIsNormalizedAndEstimatesBounded) {
  for (const char* preset : {"fig2b", "fig3a", "table3-c"}) {
    const auto p = pair(preset, 3);
    auto opt = AnalysisOptions{};
    if (preset_scenario(preset).ld_mode == LdMode::None) opt.mode = NormalizationMode::Analytic;
    const auto fit = fit_pair(p, opt);
    const auto r = lcv_fit(fit.normalized, fit.cross);
    const auto& l = r.grid.likelihood;
    EXPECT_NEAR(std::accumulate(l.begin(), l.end(), 0.0), 1.0, 1e-12);
    for (double v : l) EXPECT_GE(v, 0.0);
    EXPECT_GE(r.gcp_mean, -1.0);
    EXPECT_LE(r.gcp_mean, 1.0);
    EXPECT_LE(r.gcp_se, 1.0);
    EXPECT_GE(r.p_partial_causality, 0.0);
    EXPECT_LE(r.p_partial_causality, 1.0);
  }
}

TEST_F(LcvFitOnSimulation, SwappingTraitsMirrorsTheFit) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto p = pair("table3-u", seed);
    const auto a = fit_pair(p, AnalysisOptions{});
    const auto b = fit_pair(swapped(p), AnalysisOptions{});
    const auto ra = lcv_fit(a.normalized, a.cross);
    const auto rb = lcv_fit(b.normalized, b.cross);
    EXPECT_NEAR(rb.gcp_mean, -ra.gcp_mean, 0.01);
    EXPECT_NEAR(rb.s0, -ra.s0, 1e-10);
    EXPECT_NEAR(rb.p_partial_causality, ra.p_partial_causality, 1e-10);
    const auto rs = swap_traits(ra);
    EXPECT_NEAR(rs.gcp_mean, rb.gcp_mean, 1e-10);
    EXPECT_NEAR(rs.gcp_se, rb.gcp_se, 1e-10);
    EXPECT_EQ(rs.p_partial_causality, ra.p_partial_causality);
  }
}

TEST_F(LcvFitOnSimulation, CausalScenarioIsDetected) {
  const auto p = pair("fig3a", 5);
  AnalysisOptions opt;
  opt.mode = NormalizationMode::Analytic;
  const auto fit = fit_pair(p, opt);
  const auto r = lcv_fit(fit.normalized, fit.cross);
  EXPECT_LT(r.p_partial_causality, 1e-3);
  EXPECT_GT(r.gcp_mean, 0.5);
  EXPECT_TRUE(r.flags.empty()) << r.flags.to_string();
}

TEST_F(LcvFitOnSimulation, FixedRhoJackknifeIsNoWiderThanJoint) {
  const auto p = pair("table3-c", 6);
  const auto fit = fit_pair(p, AnalysisOptions{});
  LcvOptions joint, fixed;
  fixed.jackknife_rho = false;
  const auto a = lcv_fit(fit.normalized, fit.cross, joint);
  const auto b = lcv_fit(fit.normalized, fit.cross, fixed);
  EXPECT_EQ(a.s0, b.s0);
  EXPECT_GT(a.s0_se, 0.0);
  EXPECT_GT(b.s0_se, 0.0);
}

TEST(Fdr, HandStepUp) {
  const std::vector<double> p{0.001, 0.02, 0.04};
  const auto r = benjamini_hochberg(p, 0.05);
  EXPECT_EQ(r.rejected, (std::vector<bool>{true, true, true}));
  EXPECT_NEAR(r.q_values[0], 0.003, 1e-15);
  EXPECT_NEAR(r.q_values[1], 0.03, 1e-15);
  EXPECT_NEAR(r.q_values[2], 0.04, 1e-15);
}

TEST(Fdr, NoSignalNoRejections) {
  const std::vector<double> p(5, 1.0);
  const auto r = benjamini_hochberg(p, 0.05);
  for (bool b : r.rejected) EXPECT_FALSE(b);
  for (double q : r.q_values) EXPECT_EQ(q, 1.0);
  expect_errc([] { const std::vector<double> bad{0.5, 1.5}; benjamini_hochberg(bad, 0.05); },
              Errc::InvalidArgument);
}

TEST(Fdr, MatchesBruteForceStepUp) {
  SplitMix64 gen(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(gen.uniform() * 30);
    std::vector<double> p(m);
    for (auto& v : p) v = gen.uniform() < 0.3 ? gen.uniform() * 0.01 : gen.uniform();
    if (trial % 7 == 0 && m > 2) p[1] = p[0];
    const double level = 0.01 + 0.2 * gen.uniform();
    const auto r = benjamini_hochberg(p, level);
    // Largest k such that at least k p-values are <= k level / m.
    std::size_t k_star = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      const double thr = static_cast<double>(k) * level / static_cast<double>(m);
      const auto count = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](double v) { return v <= thr; }));
      if (count >= k) k_star = k;
    }
    const double cut = static_cast<double>(k_star) * level / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_EQ(r.rejected[i], k_star > 0 && p[i] <= cut);
      EXPECT_EQ(r.rejected[i], r.q_values[i] <= level);
    }
  }
}

TEST(Stats, TailProbabilities) {
  EXPECT_NEAR(stats::normal_two_tailed_p(1.959963984540054), 0.05, 1e-12);
  EXPECT_NEAR(stats::normal_two_tailed_p(6.0), 1.973175290075e-9, 1e-18);
  EXPECT_NEAR(stats::chi2_upper_p(3.841458820694124), 0.05, 1e-12);
  EXPECT_NEAR(stats::t_two_tailed_p(2.0, 98.0), 0.0482678, 1e-6);
  EXPECT_NEAR(stats::t_two_tailed_p(0.0, 5.0), 1.0, 1e-15);
}

}  // namespace
}  // namespace lcv
