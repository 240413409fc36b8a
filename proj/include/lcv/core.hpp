#pragma once

// Latent causal variable inference: bias-corrected mixed fourth moments, the
// S(x) statistic over a grid of candidate causality proportions, the block
// jackknife likelihood and the posterior summary.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcv/error.hpp"
#include "lcv/jackknife.hpp"
#include "lcv/ldsc.hpp"
#include "lcv/stats.hpp"

namespace lcv {

/// Genetic causality proportion implied by the latent variable's effects:
/// the x with q2^2 / q1^2 = (rho^2)^x, rho = q1 q2.
inline double gcp_from_q(double q1, double q2) {
  const double a1 = std::abs(q1), a2 = std::abs(q2);
  if (a1 == 0.0 || a2 == 0.0) throw Error(Errc::UndefinedGcp, "q1 and q2 must be nonzero");
  if (a1 > 1.0 || a2 > 1.0) throw Error(Errc::InvalidArgument, "|q| must not exceed 1");
  if (a1 == 1.0 && a2 == 1.0) throw Error(Errc::UndefinedGcp, "gcp is undefined at |rho| = 1");
  return (std::log(a2) - std::log(a1)) / (std::log(a2) + std::log(a1));
}

/// E(alpha1^3 alpha2) under the model: kappa q1^3 q2 + 3 q1 q2.
constexpr double theoretical_m31(double q1, double q2, double kappa_pi) noexcept {
  return kappa_pi * q1 * q1 * q1 * q2 + 3.0 * q1 * q2;
}

struct MomentEstimates {
  double m31 = 0.0;  ///< E(alpha1^3 alpha2)
  double m13 = 0.0;  ///< E(alpha1 alpha2^3)
  double k1 = 0.0;   ///< (m31 - 3 rho) / rho, estimates kappa q1^2
  double k2 = 0.0;   ///< (m13 - 3 rho) / rho, estimates kappa q2^2
};

namespace detail {

/// Weighted power sums of a block of normalized effects.
struct MomentSums {
  double sw = 0.0, s11 = 0.0, s22 = 0.0, s12 = 0.0, s31 = 0.0, s13 = 0.0;

  void add(double w, double a1, double a2) {
    const double p = a1 * a2;
    sw += w;
    s11 += w * a1 * a1;
    s22 += w * a2 * a2;
    s12 += w * p;
    s31 += w * p * a1 * a1;
    s13 += w * p * a2 * a2;
  }
  MomentSums& operator+=(const MomentSums& o) {
    sw += o.sw; s11 += o.s11; s22 += o.s22; s12 += o.s12; s31 += o.s31; s13 += o.s13;
    return *this;
  }
  MomentSums& operator-=(const MomentSums& o) {
    sw -= o.sw; s11 -= o.s11; s22 -= o.s22; s12 -= o.s12; s31 -= o.s31; s13 -= o.s13;
    return *this;
  }
};

struct NoiseMoments {
  double v1, v2, v12;
};

/// Weighted means of the power sums with the noise contribution removed.
/// For a2 = alpha2 + e2 with Gaussian noise,
///   E[a1 a2^3] = alpha1 alpha2^3 + 3 v12 v2 + 3 v2 alpha1 alpha2 + 3 v12 alpha2^2.
struct CorrectedMoments {
  double rho, m31, m13;
};

inline CorrectedMoments correct_moments(const MomentSums& s, const NoiseMoments& nu) {
  const double w11 = s.s11 / s.sw, w22 = s.s22 / s.sw, w12 = s.s12 / s.sw;
  const double w31 = s.s31 / s.sw, w13 = s.s13 / s.sw;
  const double e11 = w11 - nu.v1;
  const double e22 = w22 - nu.v2;
  const double e12 = w12 - nu.v12;
  CorrectedMoments out;
  out.rho = e12;
  out.m31 = w31 - 3.0 * nu.v12 * nu.v1 - 3.0 * nu.v1 * e12 - 3.0 * nu.v12 * e11;
  out.m13 = w13 - 3.0 * nu.v12 * nu.v2 - 3.0 * nu.v2 * e12 - 3.0 * nu.v12 * e22;
  return out;
}

/// Rescales the sums so that trait k has unit weighted genetic variance on
/// the retained SNPs: a_k -> a_k / c_k with c_k^2 = W(a_k^2) - v_k.
inline void renormalize(MomentSums& s, NoiseMoments& nu) {
  const double c1sq = s.s11 / s.sw - nu.v1;
  const double c2sq = s.s22 / s.sw - nu.v2;
  if (!(c1sq > 0.0) || !(c2sq > 0.0)) return;
  const double c1 = std::sqrt(c1sq), c2 = std::sqrt(c2sq);
  s.s11 /= c1sq;
  s.s22 /= c2sq;
  s.s12 /= c1 * c2;
  s.s31 /= c1sq * c1 * c2;
  s.s13 /= c1 * c2sq * c2;
  nu.v1 /= c1sq;
  nu.v2 /= c2sq;
  nu.v12 /= c1 * c2;
}

inline MomentSums total_sums(const NormalizedPair& pair) {
  MomentSums s;
  for (std::size_t i = 0; i < pair.size(); ++i) s.add(pair.weights.w[i], pair.a1[i], pair.a2[i]);
  return s;
}

}  // namespace detail

inline MomentEstimates estimate_moments(const NormalizedPair& pair, double rho_hat) {
  if (rho_hat == 0.0) throw Error(Errc::ZeroRho, "k-values are undefined at rho = 0");
  const auto c = detail::correct_moments(
      detail::total_sums(pair), {pair.noise_var_1, pair.noise_var_2, pair.noise_cov_12});
  MomentEstimates out;
  out.m31 = c.m31;
  out.m13 = c.m13;
  out.k1 = (c.m31 - 3.0 * rho_hat) / rho_hat;
  out.k2 = (c.m13 - 3.0 * rho_hat) / rho_hat;
  return out;
}

namespace detail {

inline double s_statistic_unchecked(double x, double k1, double k2, double abs_rho) {
  const double a = std::pow(abs_rho, x) * k1;
  const double b = std::pow(abs_rho, -x) * k2;
  return (a - b) / std::max(1.0 / abs_rho, std::hypot(a, b));
}

}  // namespace detail

/// S(x) = (A - B) / max(1/|rho|, sqrt(A^2 + B^2)) with A = |rho|^x k1 and
/// B = |rho|^-x k2. Under the model S vanishes at the true gcp.
inline double s_statistic(double x, double k1, double k2, double rho_hat) {
  if (rho_hat == 0.0) throw Error(Errc::ZeroRho, "S(x) is undefined at rho = 0");
  return detail::s_statistic_unchecked(x, k1, k2, std::abs(rho_hat));
}

struct GcpGrid {
  std::vector<double> xs;
  std::vector<double> s_values;
  std::vector<double> s_ses;
  std::vector<double> likelihood;

  /// Points {-1, -1 + step, ..., 1}; `1 / step` must be an integer.
  static GcpGrid make(double step) {
    const double inv = 1.0 / step;
    const auto half = static_cast<long>(std::llround(inv));
    if (!(step > 0.0) || half < 1 || std::abs(inv - static_cast<double>(half)) > 1e-9 * inv) {
      throw Error(Errc::InvalidArgument, "grid step must divide 1 evenly");
    }
    GcpGrid g;
    g.xs.resize(static_cast<std::size_t>(2 * half + 1));
    for (long i = 0; i <= 2 * half; ++i) {
      g.xs[static_cast<std::size_t>(i)] = static_cast<double>(i - half) / static_cast<double>(half);
    }
    return g;
  }

  std::size_t zero_index() const noexcept { return xs.size() / 2; }
};

enum class LcvFlag : std::uint32_t {
  RhoNonsig = 1u << 0,
  LowZh = 1u << 1,
  ClampedRho = 1u << 2,
  BimodalLikelihood = 1u << 3,
  UndefinedGcp = 1u << 4,
};

class LcvFlags {
 public:
  static constexpr LcvFlag kAll[] = {LcvFlag::RhoNonsig, LcvFlag::LowZh, LcvFlag::ClampedRho,
                                     LcvFlag::BimodalLikelihood, LcvFlag::UndefinedGcp};

  void set(LcvFlag f) noexcept { bits_ |= static_cast<std::uint32_t>(f); }
  bool has(LcvFlag f) const noexcept { return (bits_ & static_cast<std::uint32_t>(f)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  bool operator==(const LcvFlags&) const = default;

  static constexpr std::string_view name(LcvFlag f) noexcept {
    switch (f) {
      case LcvFlag::RhoNonsig: return "RHO_NONSIG";
      case LcvFlag::LowZh: return "LOW_ZH";
      case LcvFlag::ClampedRho: return "CLAMPED_RHO";
      case LcvFlag::BimodalLikelihood: return "BIMODAL_LIKELIHOOD";
      case LcvFlag::UndefinedGcp: return "UNDEFINED_GCP";
    }
    return "";
  }

  /// Comma-separated names, or "." when no flag is set.
  std::string to_string() const {
    std::string out;
    for (auto f : kAll) {
      if (!has(f)) continue;
      if (!out.empty()) out += ',';
      out += name(f);
    }
    return out.empty() ? "." : out;
  }

  static LcvFlags parse(std::string_view text) {
    LcvFlags flags;
    if (text == "." || text.empty()) return flags;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      const auto token = text.substr(start, end - start);
      bool known = false;
      for (auto f : kAll) {
        if (name(f) == token) {
          flags.set(f);
          known = true;
        }
      }
      if (!known) throw Error(Errc::MalformedInput, "unknown flag '" + std::string(token) + "'");
      start = end + 1;
    }
    return flags;
  }

 private:
  std::uint32_t bits_ = 0;
};

struct LcvOptions {
  double grid_step = 0.01;
  double df = 98.0;
  /// Recompute rho on each leave-one-block-out subset (otherwise hold it).
  bool jackknife_rho = true;
  /// Re-impose unit genetic variance on each leave-one-block-out subset.
  bool jackknife_renormalize = false;
  double rho_p_threshold = 0.05;
  double zh_threshold = 7.0;
};

struct LcvResult {
  double p_partial_causality = 1.0;
  double gcp_mean = 0.0;
  double gcp_se = 0.0;
  double rho_g = 0.0;
  double rho_se = 0.0;
  double rho_p = 1.0;
  double z_h1 = 0.0, z_h2 = 0.0;
  double s0 = 0.0;      ///< S(0)
  double s0_se = 0.0;   ///< jackknife se of S(0)
  double t0 = 0.0;      ///< S(0) / se
  MomentEstimates moments;
  LcvFlags flags;
  GcpGrid grid;
};

/// Posterior mean and standard deviation of x under normalized weights.
struct PosteriorSummary {
  double mean;
  double sd;
};

inline PosteriorSummary posterior_summary(std::span<const double> xs,
                                          std::span<const double> likelihood) {
  double mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) mean += xs[i] * likelihood[i];
  double var = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) var += (xs[i] - mean) * (xs[i] - mean) * likelihood[i];
  return {std::clamp(mean, -1.0, 1.0), std::sqrt(var)};
}

/// Two local maxima separated by a trough below half the smaller peak.
/// Peaks under 1e-3 of the global maximum are numerically negligible and
/// ignored.
inline bool is_bimodal(std::span<const double> likelihood) {
  const std::size_t n = likelihood.size();
  if (n < 3) return false;
  const double top = *std::max_element(likelihood.begin(), likelihood.end());
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? likelihood[i - 1] : -1.0;
    const double right = i + 1 < n ? likelihood[i + 1] : -1.0;
    if (likelihood[i] > left && likelihood[i] >= right && likelihood[i] >= 1e-3 * top) {
      peaks.push_back(i);
    }
  }
  for (std::size_t p = 0; p + 1 < peaks.size(); ++p) {
    const auto lo = peaks[p], hi = peaks[p + 1];
    const double trough = *std::min_element(likelihood.begin() + static_cast<long>(lo),
                                            likelihood.begin() + static_cast<long>(hi) + 1);
    if (trough < 0.5 * std::min(likelihood[lo], likelihood[hi])) return true;
  }
  return false;
}

/// Normalizes log-likelihoods to probabilities summing to one.
inline std::vector<double> normalize_log_likelihood(std::span<const double> log_l) {
  const double top = *std::max_element(log_l.begin(), log_l.end());
  std::vector<double> out(log_l.size());
  if (!std::isfinite(top)) {
    std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(out.size()));
    return out;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < log_l.size(); ++i) {
    out[i] = std::exp(log_l[i] - top);
    total += out[i];
  }
  for (double& v : out) v /= total;
  return out;
}

namespace detail {

inline double t_ratio(double s, double se) {
  if (se > 0.0) return s / se;
  if (s == 0.0) return 0.0;
  return std::copysign(std::numeric_limits<double>::infinity(), s);
}

struct KValues {
  double k1, k2, abs_rho;
  bool valid;
};

inline KValues k_values(const CorrectedMoments& c, double rho) {
  if (rho == 0.0) return {0.0, 0.0, 0.0, false};
  return {(c.m31 - 3.0 * rho) / rho, (c.m13 - 3.0 * rho) / rho, std::min(1.0, std::abs(rho)), true};
}

}  // namespace detail

/// Full LCV fit: S(x) on the grid, jackknife standard errors, likelihood,
/// posterior mean/sd of gcp and the S(0) test of partial causality.
inline LcvResult lcv_fit(const NormalizedPair& pair, const CrossTraitFit& cross,
                         const LcvOptions& opt = {}) {
  const auto& blocks = pair.block_bounds;
  blocks.validate();
  if (blocks.n_snps() != pair.size()) {
    throw Error(Errc::InvalidArgument, "jackknife blocks do not cover the SNP series");
  }
  if (cross.rho_g == 0.0) throw Error(Errc::ZeroRho, "genetic correlation estimate is exactly 0");

  LcvResult out;
  out.rho_g = cross.rho_g;
  out.rho_se = cross.rho_se;
  out.rho_p = cross.rho_p;
  out.z_h1 = pair.z_h1;
  out.z_h2 = pair.z_h2;
  out.grid = GcpGrid::make(opt.grid_step);
  auto& grid = out.grid;
  const std::size_t n_x = grid.xs.size();
  const std::size_t k = blocks.count();

  std::vector<detail::MomentSums> per_block(k);
  detail::MomentSums total;
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t i = blocks.blocks[b].begin; i < blocks.blocks[b].end; ++i) {
      per_block[b].add(pair.weights.w[i], pair.a1[i], pair.a2[i]);
    }
    total += per_block[b];
  }
  const detail::NoiseMoments nu{pair.noise_var_1, pair.noise_var_2, pair.noise_cov_12};

  const auto full = detail::correct_moments(total, nu);
  out.moments = estimate_moments(pair, cross.rho_g);
  const auto kv = detail::k_values(full, cross.rho_g);

  grid.s_values.resize(n_x);
  for (std::size_t i = 0; i < n_x; ++i) {
    grid.s_values[i] = detail::s_statistic_unchecked(grid.xs[i], kv.k1, kv.k2, kv.abs_rho);
  }

  // loo[b * n_x + i] = S_b(x_i)
  std::vector<double> loo(k * n_x);
  for (std::size_t b = 0; b < k; ++b) {
    auto sums = total;
    sums -= per_block[b];
    auto nu_b = nu;
    if (opt.jackknife_renormalize) detail::renormalize(sums, nu_b);
    const auto c = detail::correct_moments(sums, nu_b);
    const double rho_b = opt.jackknife_rho ? std::clamp(c.rho, -1.0, 1.0) : cross.rho_g;
    const auto kb = detail::k_values(c, rho_b);
    for (std::size_t i = 0; i < n_x; ++i) {
      loo[b * n_x + i] =
          kb.valid ? detail::s_statistic_unchecked(grid.xs[i], kb.k1, kb.k2, kb.abs_rho) : 0.0;
    }
  }

  grid.s_ses.resize(n_x);
  std::vector<double> column(k);
  std::vector<double> log_l(n_x);
  for (std::size_t i = 0; i < n_x; ++i) {
    for (std::size_t b = 0; b < k; ++b) column[b] = loo[b * n_x + i];
    grid.s_ses[i] = jackknife_se(column);
    log_l[i] = stats::t_log_pdf(detail::t_ratio(grid.s_values[i], grid.s_ses[i]), opt.df);
  }
  grid.likelihood = normalize_log_likelihood(log_l);

  const auto post = posterior_summary(grid.xs, grid.likelihood);
  out.gcp_mean = post.mean;
  out.gcp_se = post.sd;

  const std::size_t i0 = grid.zero_index();
  out.s0 = grid.s_values[i0];
  out.s0_se = grid.s_ses[i0];
  out.t0 = detail::t_ratio(out.s0, out.s0_se);
  out.p_partial_causality = out.t0 == 0.0 ? 1.0 : stats::t_two_tailed_p(out.t0, opt.df);

  if (cross.rho_p >= opt.rho_p_threshold) out.flags.set(LcvFlag::RhoNonsig);
  if (std::min(pair.z_h1, pair.z_h2) <= opt.zh_threshold) out.flags.set(LcvFlag::LowZh);
  if (cross.clamped) out.flags.set(LcvFlag::ClampedRho);
  if (std::abs(cross.rho_g) >= 1.0) out.flags.set(LcvFlag::UndefinedGcp);
  if (is_bimodal(grid.likelihood)) out.flags.set(LcvFlag::BimodalLikelihood);
  return out;
}

}  // namespace lcv
