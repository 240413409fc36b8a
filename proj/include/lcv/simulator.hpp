#pragma once

// Summary-statistic simulator: point-normal LCV architectures (one or more
// intermediaries, colocalized direct effects), bivariate Gaussian mixtures,
// block-diagonal LD with PSD projection, and z-score sampling with sample
// overlap.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcv/core.hpp"
#include "lcv/data_io.hpp"
#include "lcv/error.hpp"
#include "lcv/jackknife.hpp"
#include "lcv/rng.hpp"

namespace lcv {

/// Latent intermediary with effects (q1, q2) on the two traits and a
/// point-normal effect vector with causal proportion p_pi.
struct Intermediary {
  double q1 = 0.0;
  double q2 = 0.0;
  double p_pi = 0.01;
};

/// Bivariate normal mixture component; the leftover weight is a point mass
/// at (0, 0).
struct MixtureComponent {
  double weight = 0.0;
  double var1 = 0.0;
  double var2 = 0.0;
  double cov = 0.0;
};

enum class LdMode { None, Blocks };

/// Synthetic LD: AR(1) correlation rho_ld^|i-j| within blocks, a few of them
/// perturbed off the PSD cone so the projection step is exercised.
struct LdConfig {
  std::size_t block_size = 50;
  double rho_ld = 0.5;
  /// Per-block correlation is rho_ld + spread * U(-1, 1); a nonzero spread
  /// gives LD scores the range needed to separate intercept from slope.
  double rho_ld_spread = 0.45;
  std::size_t n_perturbed = 3;
  double perturbation = 0.2;
  std::uint64_t seed = 1001;
};

struct SimScenario {
  std::string name = "custom";
  std::size_t m_snps = 10'000;
  double n1 = 20'000.0, n2 = 20'000.0;
  double h2_1 = 0.3, h2_2 = 0.3;
  std::vector<Intermediary> intermediaries;
  double p_gamma1 = 0.04, p_gamma2 = 0.04, p_gamma_shared = 0.0;
  std::vector<MixtureComponent> mixture;
  /// Ground-truth gcp when it is not implied by a single intermediary.
  std::optional<double> declared_gcp;
  LdMode ld_mode = LdMode::None;
  LdConfig ld;
  double n_shared = 0.0;
  double rho_total = 0.0;
  /// Multiplies the sampling noise of the LD-free sampler (0 = noiseless).
  double noise_scale = 1.0;
  std::uint64_t seed = 1;

  bool is_mixture() const noexcept { return !mixture.empty(); }

  /// sum_j q_1j q_2j, or the correlation implied by the mixture.
  double target_rho() const {
    if (is_mixture()) {
      double c = 0.0, v1 = 0.0, v2 = 0.0;
      for (const auto& m : mixture) {
        c += m.weight * m.cov;
        v1 += m.weight * m.var1;
        v2 += m.weight * m.var2;
      }
      return (v1 > 0.0 && v2 > 0.0) ? c / std::sqrt(v1 * v2) : 0.0;
    }
    double r = 0.0;
    for (const auto& q : intermediaries) r += q.q1 * q.q2;
    return r;
  }

  std::optional<double> true_gcp() const {
    if (declared_gcp) return declared_gcp;
    if (!is_mixture() && intermediaries.size() == 1) {
      const auto& q = intermediaries.front();
      if (q.q1 != 0.0 && q.q2 != 0.0 && !(std::abs(q.q1) == 1.0 && std::abs(q.q2) == 1.0)) {
        return gcp_from_q(q.q1, q.q2);
      }
    }
    return std::nullopt;
  }

  void validate() const {
    auto fail = [](const std::string& what) { throw Error(Errc::InfeasibleScenario, what); };
    if (m_snps < 2) fail("scenario needs at least 2 SNPs");
    if (!(n1 > 0.0) || !(n2 > 0.0)) fail("sample sizes must be positive");
    if (!(h2_1 >= 0.0 && h2_1 <= 1.0) || !(h2_2 >= 0.0 && h2_2 <= 1.0)) {
      fail("heritability must lie in [0, 1]");
    }
    if (n_shared < 0.0 || n_shared > std::min(n1, n2)) fail("n_shared must lie in [0, min(n1, n2)]");
    if (noise_scale < 0.0) fail("noise_scale must be non-negative");
    if (is_mixture()) {
      double total = 0.0;
      for (const auto& m : mixture) {
        if (m.weight < 0.0 || m.var1 < 0.0 || m.var2 < 0.0) fail("mixture weights and variances must be non-negative");
        if (m.cov * m.cov > m.var1 * m.var2 * (1.0 + 1e-12)) fail("mixture covariance exceeds sqrt(var1 var2)");
        total += m.weight;
      }
      if (total > 1.0 + 1e-12) fail("mixture weights exceed 1");
      return;
    }
    double s1 = 0.0, s2 = 0.0;
    for (const auto& q : intermediaries) {
      if (std::abs(q.q1) > 1.0 || std::abs(q.q2) > 1.0) fail("|q| must not exceed 1");
      if (!(q.p_pi > 0.0 && q.p_pi <= 1.0)) fail("p_pi must lie in (0, 1]");
      s1 += q.q1 * q.q1;
      s2 += q.q2 * q.q2;
    }
    if (s1 > 1.0 + 1e-12 || s2 > 1.0 + 1e-12) fail("sum of q^2 exceeds 1 for a trait");
    if (p_gamma1 < 0.0 || p_gamma2 < 0.0 || p_gamma_shared < 0.0) fail("causal proportions must be non-negative");
    if (p_gamma_shared > std::min(p_gamma1, p_gamma2)) fail("p_gamma_shared exceeds min(p_gamma1, p_gamma2)");
    if (p_gamma1 + p_gamma2 - p_gamma_shared > 1.0 + 1e-12) fail("direct-effect proportions exceed 1");
  }
};

struct SimTruth {
  std::vector<double> beta1, beta2;
  std::optional<double> gcp;
  double rho = 0.0;           ///< target genetic correlation
  double rho_realized = 0.0;  ///< correlation of the drawn beta vectors
  std::vector<double> kappa_pi;  ///< realized excess kurtosis per intermediary
  double h2_1 = 0.0, h2_2 = 0.0;  ///< realized sum of beta^2
  /// Point-normal mode: bit j marks a nonzero pi_j, bits 6 and 7 mark nonzero
  /// gamma_1 and gamma_2. Mixture mode: component index + 1, 0 for the null.
  std::vector<std::uint8_t> assignments;
};

inline constexpr std::uint8_t kGamma1Bit = 1u << 6;
inline constexpr std::uint8_t kGamma2Bit = 1u << 7;

namespace detail {

/// Centers the nonzero entries and rescales so that (1/M) sum v^2 = target.
inline std::size_t standardize_nonzero(std::vector<double>& v, double target,
                                       const std::vector<char>& active) {
  std::size_t count = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (active[i]) {
      ++count;
      sum += v[i];
    }
  }
  if (count >= 2) {
    const double mean = sum / static_cast<double>(count);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (active[i]) v[i] -= mean;
    }
  }
  double ss = 0.0;
  for (double x : v) ss += x * x;
  if (target <= 0.0) {
    std::fill(v.begin(), v.end(), 0.0);
    return count;
  }
  if (!(ss > 0.0)) return 0;
  const double scale = std::sqrt(target * static_cast<double>(v.size()) / ss);
  for (double& x : v) x *= scale;
  return count;
}

inline double excess_kurtosis(std::span<const double> v) {
  double m2 = 0.0, m4 = 0.0;
  for (double x : v) {
    m2 += x * x;
    m4 += x * x * x * x;
  }
  const auto n = static_cast<double>(v.size());
  m2 /= n;
  m4 /= n;
  return m4 / (m2 * m2) - 3.0;
}

inline void draw_point_normal(SimTruth& truth, std::vector<double>& g1, std::vector<double>& g2,
                              const SimScenario& sc) {
  const std::size_t m = sc.m_snps;
  double used1 = 0.0, used2 = 0.0;
  for (std::size_t j = 0; j < sc.intermediaries.size(); ++j) {
    const auto& inter = sc.intermediaries[j];
    std::vector<double> pi(m, 0.0);
    std::vector<char> active(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      SplitMix64 gen(sc.seed, stream::kPi + j, i);
      if (gen.uniform() < inter.p_pi) {
        active[i] = 1;
        pi[i] = gen.normal();
        if (j < 6) truth.assignments[i] |= static_cast<std::uint8_t>(1u << j);
      }
    }
    if (standardize_nonzero(pi, 1.0, active) == 0 && (inter.q1 != 0.0 || inter.q2 != 0.0)) {
      throw Error(Errc::InfeasibleScenario, "intermediary drew no causal SNPs; raise p_pi or M");
    }
    truth.kappa_pi.push_back(excess_kurtosis(pi));
    for (std::size_t i = 0; i < m; ++i) {
      g1[i] += inter.q1 * pi[i];
      g2[i] += inter.q2 * pi[i];
    }
    used1 += inter.q1 * inter.q1;
    used2 += inter.q2 * inter.q2;
  }

  const double rem1 = std::max(0.0, 1.0 - used1);
  const double rem2 = std::max(0.0, 1.0 - used2);
  std::vector<double> gamma1(m, 0.0), gamma2(m, 0.0);
  std::vector<char> act1(m, 0), act2(m, 0);
  const double only1 = sc.p_gamma1 - sc.p_gamma_shared;
  const double only2 = sc.p_gamma2 - sc.p_gamma_shared;
  for (std::size_t i = 0; i < m; ++i) {
    SplitMix64 gen(sc.seed, stream::kGamma, i);
    const double u = gen.uniform();
    const double x1 = gen.normal();
    const double x2 = gen.normal();
    if (u < sc.p_gamma_shared) {
      act1[i] = act2[i] = 1;
    } else if (u < sc.p_gamma_shared + only1) {
      act1[i] = 1;
    } else if (u < sc.p_gamma_shared + only1 + only2) {
      act2[i] = 1;
    }
    if (act1[i]) {
      gamma1[i] = x1;
      truth.assignments[i] |= kGamma1Bit;
    }
    if (act2[i]) {
      gamma2[i] = x2;
      truth.assignments[i] |= kGamma2Bit;
    }
  }
  if (standardize_nonzero(gamma1, rem1, act1) == 0 && rem1 > 1e-12 && sc.h2_1 > 0.0) {
    throw Error(Errc::InfeasibleScenario, "trait 1 needs direct effects but drew none");
  }
  if (standardize_nonzero(gamma2, rem2, act2) == 0 && rem2 > 1e-12 && sc.h2_2 > 0.0) {
    throw Error(Errc::InfeasibleScenario, "trait 2 needs direct effects but drew none");
  }
  for (std::size_t i = 0; i < m; ++i) {
    g1[i] += gamma1[i];
    g2[i] += gamma2[i];
  }
}

inline void draw_mixture(SimTruth& truth, std::vector<double>& g1, std::vector<double>& g2,
                         const SimScenario& sc) {
  for (std::size_t i = 0; i < sc.m_snps; ++i) {
    SplitMix64 gen(sc.seed, stream::kMixture, i);
    const double u = gen.uniform();
    const double x1 = gen.normal();
    const double x2 = gen.normal();
    double cumulative = 0.0;
    for (std::size_t c = 0; c < sc.mixture.size(); ++c) {
      const auto& comp = sc.mixture[c];
      cumulative += comp.weight;
      if (u >= cumulative) continue;
      truth.assignments[i] = static_cast<std::uint8_t>(c + 1);
      if (comp.var1 > 0.0) {
        const double sd1 = std::sqrt(comp.var1);
        const double slope = comp.cov / sd1;
        g1[i] = sd1 * x1;
        g2[i] = slope * x1 + std::sqrt(std::max(0.0, comp.var2 - slope * slope)) * x2;
      } else {
        g2[i] = std::sqrt(comp.var2) * x2;
      }
      break;
    }
  }
}

}  // namespace detail

/// Draws true per-SNP effects beta_k = sqrt(h2_k / M) g_k / rms(g_k), with g_k
/// built from the intermediaries and direct effects (or from the mixture).
/// The final rescale makes sum beta_k^2 = h2_k exactly.
inline SimTruth draw_effects(const SimScenario& sc) {
  sc.validate();
  const std::size_t m = sc.m_snps;
  SimTruth truth;
  truth.assignments.assign(m, 0);
  std::vector<double> g1(m, 0.0), g2(m, 0.0);
  if (sc.is_mixture()) {
    detail::draw_mixture(truth, g1, g2, sc);
  } else {
    detail::draw_point_normal(truth, g1, g2, sc);
  }

  auto finish = [&](std::vector<double>& g, double h2) {
    double ss = 0.0;
    for (double x : g) ss += x * x;
    if (h2 > 0.0 && !(ss > 0.0)) {
      throw Error(Errc::InfeasibleScenario, "trait has positive heritability but no causal SNPs");
    }
    const double scale = ss > 0.0 ? std::sqrt(h2 / ss) : 0.0;
    for (double& x : g) x *= scale;
  };
  finish(g1, sc.h2_1);
  finish(g2, sc.h2_2);

  double s11 = 0.0, s22 = 0.0, s12 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    s11 += g1[i] * g1[i];
    s22 += g2[i] * g2[i];
    s12 += g1[i] * g2[i];
  }
  truth.h2_1 = s11;
  truth.h2_2 = s22;
  truth.rho_realized = (s11 > 0.0 && s22 > 0.0) ? s12 / std::sqrt(s11 * s22) : 0.0;
  truth.rho = sc.target_rho();
  truth.gcp = sc.true_gcp();
  truth.beta1 = std::move(g1);
  truth.beta2 = std::move(g2);
  return truth;
}

// ---------------------------------------------------------------------------
// SNP layout

struct SnpLayout {
  std::vector<std::string> snp_ids;
  std::vector<int> chrom;
  std::vector<std::int64_t> position_bp;
  std::vector<double> position_cm;

  std::size_t size() const noexcept { return snp_ids.size(); }
};

/// M SNPs split evenly across 22 autosomes, 10 kb apart, 1 cM per Mb.
inline SnpLayout make_snp_layout(std::size_t m) {
  SnpLayout out;
  out.snp_ids.resize(m);
  out.chrom.resize(m);
  out.position_bp.resize(m);
  out.position_cm.resize(m);
  std::size_t start = 0;
  for (int c = 1; c <= 22; ++c) {
    const std::size_t end = m * static_cast<std::size_t>(c) / 22;
    for (std::size_t i = start; i < end; ++i) {
      out.snp_ids[i] = "rs" + std::to_string(i + 1);
      out.chrom[i] = c;
      out.position_bp[i] = static_cast<std::int64_t>(i - start + 1) * 10'000;
      out.position_cm[i] = static_cast<double>(out.position_bp[i]) * 1e-6;
    }
    start = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// LD

struct LdBlockSet {
  std::vector<IndexRange> ranges;
  std::vector<Eigen::MatrixXd> blocks;       ///< PSD, unit diagonal
  std::vector<Eigen::MatrixXd> block_sqrts;  ///< symmetric square roots
  std::vector<double> ld_scores;

  std::size_t n_snps() const noexcept { return ld_scores.size(); }
};

/// Projects each block onto the PSD cone (negative eigenvalues set to zero),
/// rescales to unit diagonal and computes its square root and LD scores.
inline LdBlockSet build_ld_blocks(std::span<const Eigen::MatrixXd> raw_blocks) {
  LdBlockSet out;
  std::size_t offset = 0;
  for (const auto& a : raw_blocks) {
    if (a.rows() != a.cols() || a.rows() == 0) {
      throw Error(Errc::InvalidArgument, "LD blocks must be non-empty square matrices");
    }
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff())) {
      throw Error(Errc::InvalidArgument, "LD block is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    const Eigen::VectorXd clipped = eig.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXd b =
        eig.eigenvectors() * clipped.asDiagonal() * eig.eigenvectors().transpose();
    const Eigen::VectorXd d = b.diagonal();
    if ((d.array() <= 0.0).any()) {
      throw Error(Errc::SingularDiagonal, "PSD projection left a non-positive diagonal entry");
    }
    const Eigen::VectorXd inv_sqrt = d.cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd c = inv_sqrt.asDiagonal() * b * inv_sqrt.asDiagonal();
    c = 0.5 * (c + c.transpose());
    c.diagonal().setOnes();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_c(c);
    const Eigen::VectorXd root = eig_c.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Eigen::MatrixXd f = eig_c.eigenvectors() * root.asDiagonal() * eig_c.eigenvectors().transpose();

    const auto n = static_cast<std::size_t>(c.rows());
    for (Eigen::Index i = 0; i < c.rows(); ++i) out.ld_scores.push_back(c.row(i).squaredNorm());
    out.ranges.push_back({offset, offset + n});
    offset += n;
    out.blocks.push_back(std::move(c));
    out.block_sqrts.push_back(std::move(f));
  }
  return out;
}

/// AR(1) correlation of block b.
inline double block_rho(const LdConfig& cfg, std::size_t b) {
  if (cfg.rho_ld_spread == 0.0) return cfg.rho_ld;
  SplitMix64 gen(cfg.seed, stream::kLdPerturb + 1, b);
  return cfg.rho_ld + cfg.rho_ld_spread * (2.0 * gen.uniform() - 1.0);
}

/// AR(1) correlation blocks following the SNP layout (no block spans two
/// chromosomes). `cfg.n_perturbed` evenly spaced blocks receive symmetric
/// uniform(-perturbation, perturbation) off-diagonal noise.
inline std::vector<Eigen::MatrixXd> synthetic_ld_blocks(std::span<const int> chrom,
                                                        const LdConfig& cfg) {
  if (cfg.block_size == 0) throw Error(Errc::InvalidArgument, "LD block size must be positive");
  std::vector<Eigen::MatrixXd> raw;
  std::size_t i = 0;
  while (i < chrom.size()) {
    std::size_t end = i;
    while (end < chrom.size() && end - i < cfg.block_size && chrom[end] == chrom[i]) ++end;
    const auto n = static_cast<Eigen::Index>(end - i);
    const double rho = block_rho(cfg, raw.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) a(r, c) = std::pow(rho, std::abs(r - c));
    }
    raw.push_back(std::move(a));
    i = end;
  }
  const std::size_t n_pert = std::min(cfg.n_perturbed, raw.size());
  for (std::size_t p = 0; p < n_pert; ++p) {
    const std::size_t b = (2 * p + 1) * raw.size() / (2 * n_pert);
    auto& a = raw[b];
    SplitMix64 gen(cfg.seed, stream::kLdPerturb, b);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      for (Eigen::Index c = r + 1; c < a.cols(); ++c) {
        const double e = cfg.perturbation * (2.0 * gen.uniform() - 1.0);
        a(r, c) += e;
        a(c, r) += e;
      }
    }
  }
  return raw;
}

/// Mean LD score of the unperturbed AR(1) block layout; used for scaling
/// desk-size presets to the effective number of independent SNPs.
inline double ar1_mean_ld_score(std::size_t m, const LdConfig& cfg) {
  const auto layout = make_snp_layout(m);
  double total = 0.0;
  std::size_t i = 0, block = 0;
  while (i < m) {
    std::size_t end = i;
    while (end < m && end - i < cfg.block_size && layout.chrom[end] == layout.chrom[i]) ++end;
    const double rho = block_rho(cfg, block++);
    for (std::size_t a = i; a < end; ++a) {
      for (std::size_t b = i; b < end; ++b) {
        total += std::pow(rho, 2.0 * std::abs(static_cast<double>(a) - static_cast<double>(b)));
      }
    }
    i = end;
  }
  return total / static_cast<double>(m);
}

// ---------------------------------------------------------------------------
// Sampling

struct SimOutput {
  SumstatsTable sumstats1, sumstats2;
  LdScoreTable ld_scores;
  SimTruth truth;
};

namespace detail {

inline SumstatsTable make_table(const SnpLayout& layout, std::span<const double> z, double n,
                                std::string label) {
  SumstatsTable t;
  t.trait_label = std::move(label);
  t.records.resize(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    auto& r = t.records[i];
    r.snp_id = layout.snp_ids[i];
    r.chrom = layout.chrom[i];
    r.position_bp = layout.position_bp[i];
    r.position_cm = layout.position_cm[i];
    r.allele_a1 = 'A';
    r.allele_a2 = 'G';
    r.z = z[i];
    r.n = n;
  }
  return t;
}

inline LdScoreTable make_ld_table(const SnpLayout& layout, std::span<const double> ell) {
  LdScoreTable t;
  t.entries.reserve(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    t.entries.emplace(layout.snp_ids[i], LdScore{ell[i], ell[i]});
  }
  return t;
}

inline double overlap_correlation(double rho_total, double n_shared, double n1, double n2) {
  const double r = rho_total * n_shared / std::sqrt(n1 * n2);
  if (std::abs(r) > 1.0) {
    throw Error(Errc::OverlapInfeasible, "rho_total * n_shared / sqrt(n1 n2) exceeds 1 in magnitude");
  }
  return r;
}

}  // namespace detail

/// z_k = sqrt(N_k) beta_k + noise_scale e_k with e_k ~ N(0, I); sample
/// overlap correlates e_1 and e_2 by rho_total n_shared / sqrt(N1 N2).
inline SimOutput sample_sumstats_no_ld(SimTruth truth, const SimScenario& sc) {
  const std::size_t m = truth.beta1.size();
  const double r = detail::overlap_correlation(sc.rho_total, sc.n_shared, sc.n1, sc.n2);
  const double shared = std::sqrt(std::abs(r));
  const double own = std::sqrt(1.0 - std::abs(r));
  const double sign = r < 0.0 ? -1.0 : 1.0;
  const double rn1 = std::sqrt(sc.n1), rn2 = std::sqrt(sc.n2);
  std::vector<double> z1(m), z2(m);
  for (std::size_t i = 0; i < m; ++i) {
    SplitMix64 g0(sc.seed, stream::kNoiseShared, i);
    SplitMix64 g1(sc.seed, stream::kNoise1, i);
    SplitMix64 g2(sc.seed, stream::kNoise2, i);
    const double u0 = shared > 0.0 ? g0.normal() : 0.0;
    const double e1 = shared * u0 + own * g1.normal();
    const double e2 = sign * shared * u0 + own * g2.normal();
    z1[i] = rn1 * truth.beta1[i] + sc.noise_scale * e1;
    z2[i] = rn2 * truth.beta2[i] + sc.noise_scale * e2;
  }
  const auto layout = make_snp_layout(m);
  SimOutput out;
  out.sumstats1 = detail::make_table(layout, z1, sc.n1, "trait1");
  out.sumstats2 = detail::make_table(layout, z2, sc.n2, "trait2");
  const std::vector<double> ones(m, 1.0);
  out.ld_scores = detail::make_ld_table(layout, ones);
  out.truth = std::move(truth);
  return out;
}

/// z_k = sqrt(N_k) C beta_k + F (sqrt|r| u_0 + sqrt(1 - |r|) u_k) per block,
/// where F is the square root of C, so cov(z_1, z_2) = r C under the null.
inline SimOutput sample_sumstats_ld(SimTruth truth, const LdBlockSet& ld, const SimScenario& sc) {
  const std::size_t m = truth.beta1.size();
  if (ld.n_snps() != m) throw Error(Errc::InvalidArgument, "LD blocks do not cover the SNP set");
  const double r = detail::overlap_correlation(sc.rho_total, sc.n_shared, sc.n1, sc.n2);
  const double shared = std::sqrt(std::abs(r));
  const double own = std::sqrt(1.0 - std::abs(r));
  const double sign = r < 0.0 ? -1.0 : 1.0;
  const double rn1 = std::sqrt(sc.n1), rn2 = std::sqrt(sc.n2);
  std::vector<double> z1(m), z2(m);
  for (std::size_t b = 0; b < ld.blocks.size(); ++b) {
    const auto range = ld.ranges[b];
    const auto n = static_cast<Eigen::Index>(range.size());
    Eigen::VectorXd b1(n), b2(n), e1(n), e2(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::size_t i = range.begin + static_cast<std::size_t>(j);
      b1(j) = truth.beta1[i];
      b2(j) = truth.beta2[i];
      SplitMix64 g0(sc.seed, stream::kNoiseShared, i);
      SplitMix64 g1(sc.seed, stream::kNoise1, i);
      SplitMix64 g2(sc.seed, stream::kNoise2, i);
      const double u0 = shared > 0.0 ? g0.normal() : 0.0;
      e1(j) = shared * u0 + own * g1.normal();
      e2(j) = sign * shared * u0 + own * g2.normal();
    }
    const Eigen::VectorXd y1 = rn1 * (ld.blocks[b] * b1) + ld.block_sqrts[b] * e1;
    const Eigen::VectorXd y2 = rn2 * (ld.blocks[b] * b2) + ld.block_sqrts[b] * e2;
    for (Eigen::Index j = 0; j < n; ++j) {
      z1[range.begin + static_cast<std::size_t>(j)] = y1(j);
      z2[range.begin + static_cast<std::size_t>(j)] = y2(j);
    }
  }
  const auto layout = make_snp_layout(m);
  SimOutput out;
  out.sumstats1 = detail::make_table(layout, z1, sc.n1, "trait1");
  out.sumstats2 = detail::make_table(layout, z2, sc.n2, "trait2");
  out.ld_scores = detail::make_ld_table(layout, ld.ld_scores);
  out.truth = std::move(truth);
  return out;
}

/// LD blocks for a scenario's SNP layout and LD configuration.
inline LdBlockSet scenario_ld(const SimScenario& sc) {
  const auto layout = make_snp_layout(sc.m_snps);
  const auto raw = synthetic_ld_blocks(layout.chrom, sc.ld);
  return build_ld_blocks(raw);
}

/// Full simulation. `ld` may pass prebuilt blocks to avoid rebuilding them
/// for every replicate of the same scenario.
inline SimOutput simulate(const SimScenario& sc, const LdBlockSet* ld = nullptr) {
  auto truth = draw_effects(sc);
  if (sc.ld_mode == LdMode::None) return sample_sumstats_no_ld(std::move(truth), sc);
  if (ld != nullptr) return sample_sumstats_ld(std::move(truth), *ld, sc);
  const auto built = scenario_ld(sc);
  return sample_sumstats_ld(std::move(truth), built, sc);
}

}  // namespace lcv
