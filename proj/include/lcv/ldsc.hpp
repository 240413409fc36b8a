#pragma once

// Weighted LD score regressions used to put two traits on a common
// unit-genetic-variance scale and to estimate their genetic correlation.
//
// Everything here works from per-block sufficient statistics, so each
// leave-one-block-out refit costs O(1) once the block sums are known.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lcv/data_io.hpp"
#include "lcv/error.hpp"
#include "lcv/jackknife.hpp"
#include "lcv/stats.hpp"

namespace lcv {

struct RegressionWeights {
  std::vector<double> w;
};

/// w_i = 1 / max(1, l_i): down-weights SNPs in high LD with other
/// regression SNPs; SNPs with l_i <= 1 keep unit weight.
inline RegressionWeights compute_weights(std::span<const double> ell_regression) {
  RegressionWeights out;
  out.w.resize(ell_regression.size());
  for (std::size_t i = 0; i < ell_regression.size(); ++i) {
    out.w[i] = 1.0 / std::max(1.0, ell_regression[i]);
  }
  return out;
}

struct NormalizationOptions {
  /// SNPs with chi2 above this multiple of the weighted mean chi2 are left
  /// out of the intercept fit (but not out of the mean itself).
  double exclusion_multiplier = 30.0;
  /// Constrained-intercept mode; `1.0` is the no-LD analytic setting.
  std::optional<double> fixed_intercept;
};

struct TraitNormalization {
  double s = 0.0;           ///< sqrt(weighted mean chi2 - intercept)
  double s_se = 0.0;
  double intercept = 0.0;   ///< noise variance of z
  double slope = 0.0;       ///< chi2 ~ l slope
  double h2 = 0.0;          ///< slope * M / mean N
  double h2_se = 0.0;
  double z_h = 0.0;         ///< s / jackknife se(s)
  double weighted_mean_chi2 = 0.0;
  std::size_t excluded_count = 0;
  bool intercept_fixed = false;
};

namespace detail {

struct TraitBlockSums {
  double sw = 0.0;
  double swy = 0.0;
  stats::RegressionSums fit;

  TraitBlockSums& operator-=(const TraitBlockSums& o) {
    sw -= o.sw;
    swy -= o.swy;
    fit -= o.fit;
    return *this;
  }
};

struct TraitFitValues {
  double mean_chi2, intercept, slope;
};

inline TraitFitValues solve_trait(const TraitBlockSums& s, const NormalizationOptions& opt) {
  TraitFitValues v{};
  v.mean_chi2 = s.swy / s.sw;
  if (opt.fixed_intercept) {
    v.intercept = *opt.fixed_intercept;
    v.slope = stats::fit_slope_fixed_intercept(s.fit, v.intercept);
  } else {
    const auto line = stats::fit_line(s.fit);
    v.intercept = line.intercept;
    v.slope = line.slope;
  }
  return v;
}

}  // namespace detail

/// Fits chi2 = z^2 on LD scores with weights `weights` and derives the
/// normalizing constant s. Jackknife refits the intercept on every
/// leave-one-block-out subset (the exclusion set is fixed globally).
inline TraitNormalization fit_trait_normalization(std::span<const double> z,
                                                  std::span<const double> n,
                                                  std::span<const double> ell,
                                                  const RegressionWeights& weights,
                                                  const BlockPartition& blocks,
                                                  const NormalizationOptions& opt = {}) {
  const std::size_t m = z.size();
  if (n.size() != m || ell.size() != m || weights.w.size() != m || blocks.n_snps() != m) {
    throw Error(Errc::InvalidArgument, "trait normalization inputs differ in length");
  }
  blocks.validate();

  double sw = 0.0, swy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sw += weights.w[i];
    swy += weights.w[i] * z[i] * z[i];
  }
  const double cutoff = opt.exclusion_multiplier * swy / sw;

  TraitNormalization out;
  out.intercept_fixed = opt.fixed_intercept.has_value();
  std::vector<detail::TraitBlockSums> per_block(blocks.count());
  detail::TraitBlockSums total;
  for (std::size_t b = 0; b < blocks.count(); ++b) {
    auto& bs = per_block[b];
    for (std::size_t i = blocks.blocks[b].begin; i < blocks.blocks[b].end; ++i) {
      const double chi2 = z[i] * z[i];
      bs.sw += weights.w[i];
      bs.swy += weights.w[i] * chi2;
      if (chi2 <= cutoff) {
        bs.fit.add(weights.w[i], ell[i], chi2);
      } else {
        ++out.excluded_count;
      }
    }
    total.sw += bs.sw;
    total.swy += bs.swy;
    total.fit += bs.fit;
  }

  const auto full = detail::solve_trait(total, opt);
  if (!std::isfinite(full.intercept)) {
    throw Error(Errc::SingularRegression,
                "LD scores have no spread; use a fixed intercept for LD-free data");
  }
  const double var = full.mean_chi2 - full.intercept;
  if (!(var > 0.0)) {
    throw Error(Errc::ZeroHeritability, "weighted mean chi2 does not exceed the intercept");
  }
  const double mean_n = stats::mean(n);
  out.s = std::sqrt(var);
  out.intercept = full.intercept;
  out.slope = full.slope;
  out.weighted_mean_chi2 = full.mean_chi2;
  out.h2 = full.slope * static_cast<double>(m) / mean_n;

  std::vector<double> s_loo(blocks.count()), h2_loo(blocks.count());
  for (std::size_t b = 0; b < blocks.count(); ++b) {
    auto sums = total;
    sums -= per_block[b];
    const auto v = detail::solve_trait(sums, opt);
    s_loo[b] = std::sqrt(std::max(0.0, v.mean_chi2 - v.intercept));
    h2_loo[b] = v.slope * static_cast<double>(m) / mean_n;
  }
  out.s_se = jackknife_se(s_loo);
  out.h2_se = jackknife_se(h2_loo);
  out.z_h = out.s_se > 0.0 ? out.s / out.s_se : std::numeric_limits<double>::infinity();
  return out;
}

struct CrossTraitOptions {
  double exclusion_multiplier = 30.0;
  /// Fixed cross-trait intercept on the normalized scale; `0.0` is the
  /// no-LD, no-overlap analytic setting.
  std::optional<double> fixed_intercept;
};

struct CrossTraitFit {
  double rho_g = 0.0;     ///< clamped to [-1, 1]
  double rho_raw = 0.0;   ///< before clamping
  double rho_se = 0.0;
  double rho_p = 1.0;
  double intercept_12 = 0.0;  ///< normalized scale
  double slope = 0.0;         ///< z1 z2 ~ l slope, raw scale
  std::size_t excluded_count = 0;
  bool clamped = false;
};

/// Genetic correlation on the normalized scale: rho = W(a1 a2) - nu12, the
/// weighted mean product net of the cross-trait intercept. The intercept
/// comes from regressing z1 z2 on l (or is fixed), with a SNP excluded when
/// either trait's chi2 exceeds the multiplier times that trait's mean.
inline CrossTraitFit fit_cross_trait(const AlignedPair& pair, const TraitNormalization& norm1,
                                     const TraitNormalization& norm2,
                                     const RegressionWeights& weights, const BlockPartition& blocks,
                                     const CrossTraitOptions& opt = {}) {
  const std::size_t m = pair.size();
  if (weights.w.size() != m || blocks.n_snps() != m) {
    throw Error(Errc::InvalidArgument, "cross-trait inputs differ in length");
  }
  blocks.validate();
  const double scale = norm1.s * norm2.s;
  const double cut1 = opt.exclusion_multiplier * norm1.weighted_mean_chi2;
  const double cut2 = opt.exclusion_multiplier * norm2.weighted_mean_chi2;

  CrossTraitFit out;
  std::vector<detail::TraitBlockSums> per_block(blocks.count());
  detail::TraitBlockSums total;
  for (std::size_t b = 0; b < blocks.count(); ++b) {
    auto& bs = per_block[b];
    for (std::size_t i = blocks.blocks[b].begin; i < blocks.blocks[b].end; ++i) {
      const double y = pair.z1[i] * pair.z2[i];
      bs.sw += weights.w[i];
      bs.swy += weights.w[i] * y;
      if (pair.z1[i] * pair.z1[i] <= cut1 && pair.z2[i] * pair.z2[i] <= cut2) {
        bs.fit.add(weights.w[i], pair.ld[i].ell, y);
      } else {
        ++out.excluded_count;
      }
    }
    total.sw += bs.sw;
    total.swy += bs.swy;
    total.fit += bs.fit;
  }

  auto solve = [&](const detail::TraitBlockSums& s) {
    double intercept = 0.0, slope = 0.0;
    if (opt.fixed_intercept) {
      intercept = *opt.fixed_intercept * scale;
      slope = stats::fit_slope_fixed_intercept(s.fit, intercept);
    } else {
      const auto line = stats::fit_line(s.fit);
      intercept = line.intercept;
      slope = line.slope;
    }
    const double rho = (s.swy / s.sw - intercept) / scale;
    return std::array<double, 3>{rho, intercept, slope};
  };

  const auto full = solve(total);
  if (!std::isfinite(full[1])) {
    throw Error(Errc::SingularRegression,
                "LD scores have no spread; use a fixed intercept for LD-free data");
  }
  out.rho_raw = full[0];
  out.intercept_12 = full[1] / scale;
  out.slope = full[2];

  std::vector<double> loo(blocks.count());
  for (std::size_t b = 0; b < blocks.count(); ++b) {
    auto sums = total;
    sums -= per_block[b];
    loo[b] = solve(sums)[0];
  }
  out.rho_se = jackknife_se(loo);
  out.rho_p = out.rho_se > 0.0 ? stats::normal_two_tailed_p(out.rho_raw / out.rho_se)
                               : (out.rho_raw == 0.0 ? 1.0 : 0.0);
  out.rho_g = std::clamp(out.rho_raw, -1.0, 1.0);
  out.clamped = out.rho_g != out.rho_raw;
  return out;
}

/// Two effect-size series on the unit-genetic-variance scale, with noise
/// moments and jackknife blocks: everything the fourth-moment engine needs.
struct NormalizedPair {
  std::vector<double> a1, a2;
  double noise_var_1 = 0.0;
  double noise_var_2 = 0.0;
  double noise_cov_12 = 0.0;
  RegressionWeights weights;
  BlockPartition block_bounds;
  double z_h1 = 0.0, z_h2 = 0.0;

  std::size_t size() const noexcept { return a1.size(); }
};

inline NormalizedPair normalize_pair(const AlignedPair& pair, const TraitNormalization& norm1,
                                     const TraitNormalization& norm2, const CrossTraitFit& cross,
                                     std::size_t k_blocks = 100) {
  NormalizedPair out;
  const std::size_t m = pair.size();
  out.a1.resize(m);
  out.a2.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.a1[i] = pair.z1[i] / norm1.s;
    out.a2[i] = pair.z2[i] / norm2.s;
  }
  out.noise_var_1 = norm1.intercept / (norm1.s * norm1.s);
  out.noise_var_2 = norm2.intercept / (norm2.s * norm2.s);
  out.noise_cov_12 = cross.intercept_12;
  out.weights = compute_weights(pair.ell_regression());
  out.block_bounds = BlockPartition::equal(m, k_blocks);
  out.z_h1 = norm1.z_h;
  out.z_h2 = norm2.z_h;
  return out;
}

}  // namespace lcv
