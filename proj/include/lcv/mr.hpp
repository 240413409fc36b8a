#pragma once

// Mendelian randomization baselines: genome-wide significant instruments,
// zero-intercept two-sample MR, MR-Egger, bidirectional MR on Spearman
// correlations, and greedy genetic-distance pruning.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcv/error.hpp"
#include "lcv/stats.hpp"

namespace lcv {

enum class MrMethod { Mr, Egger, Bidir };

constexpr std::string_view mr_method_name(MrMethod m) noexcept {
  switch (m) {
    case MrMethod::Mr: return "MR";
    case MrMethod::Egger: return "EGGER";
    case MrMethod::Bidir: return "BIDIR";
  }
  return "";
}

enum class InstrumentSource { ExposureSignificant, Pruned };

struct InstrumentSet {
  std::vector<std::size_t> snp_indices;
  std::vector<double> beta_exposure;
  std::vector<double> beta_outcome;
  InstrumentSource source = InstrumentSource::ExposureSignificant;

  std::size_t size() const noexcept { return snp_indices.size(); }
};

struct MrResult {
  MrMethod method = MrMethod::Mr;
  double estimate = 0.0;  ///< slope, or atanh r1 - atanh r2 for BIDIR
  double se = 0.0;
  double p = 1.0;
  std::size_t k_instruments = 0;
  std::size_t k_instruments_2 = 0;  ///< BIDIR only: SNPs assigned to trait 2
  std::optional<double> intercept;  ///< EGGER only
};

inline constexpr double kGenomeWideP = 5e-8;

/// Standardized effect z / sqrt(n).
inline double standardized_beta(double z, double n) { return z / std::sqrt(n); }

/// SNPs whose exposure z has two-tailed p below `threshold_p`, in input order.
inline InstrumentSet select_instruments(std::span<const double> z_exposure,
                                        std::span<const double> n_exposure,
                                        std::span<const double> z_outcome,
                                        std::span<const double> n_outcome,
                                        double threshold_p = kGenomeWideP) {
  const std::size_t m = z_exposure.size();
  if (n_exposure.size() != m || z_outcome.size() != m || n_outcome.size() != m) {
    throw Error(Errc::InvalidArgument, "instrument inputs differ in length");
  }
  InstrumentSet out;
  for (std::size_t i = 0; i < m; ++i) {
    if (stats::normal_two_tailed_p(z_exposure[i]) < threshold_p) {
      out.snp_indices.push_back(i);
      out.beta_exposure.push_back(standardized_beta(z_exposure[i], n_exposure[i]));
      out.beta_outcome.push_back(standardized_beta(z_outcome[i], n_outcome[i]));
    }
  }
  if (out.snp_indices.empty()) {
    throw Error(Errc::NoInstruments, "no SNP reaches the significance threshold on the exposure");
  }
  return out;
}

struct PruneCandidate {
  int chrom = 0;
  std::optional<double> position_cm;
  double chi2 = 0.0;
};

/// Greedy clumping: take the largest remaining chi2 (earlier input wins
/// ties), drop every same-chromosome candidate within `window_cm`, repeat.
/// Returns the indices of kept candidates in ascending order.
inline std::vector<std::size_t> prune_instruments(std::span<const PruneCandidate> candidates,
                                                  double window_cm = 1.0) {
  for (const auto& c : candidates) {
    if (!c.position_cm) {
      throw Error(Errc::MissingGeneticMap, "pruning requires genetic map positions (cM)");
    }
  }
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].chi2 > candidates[b].chi2;
  });
  std::vector<char> removed(candidates.size(), 0);
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    if (removed[idx]) continue;
    kept.push_back(idx);
    const auto& top = candidates[idx];
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (!removed[j] && candidates[j].chrom == top.chrom &&
          std::abs(*candidates[j].position_cm - *top.position_cm) <= window_cm) {
        removed[j] = 1;
      }
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// Restricts an instrument set to positions `keep` (indices into the set).
inline InstrumentSet subset_instruments(const InstrumentSet& set, std::span<const std::size_t> keep) {
  InstrumentSet out;
  out.source = InstrumentSource::Pruned;
  for (std::size_t k : keep) {
    out.snp_indices.push_back(set.snp_indices[k]);
    out.beta_exposure.push_back(set.beta_exposure[k]);
    out.beta_outcome.push_back(set.beta_outcome[k]);
  }
  return out;
}

/// Zero-intercept least squares of outcome on exposure effects. Residual
/// variance is estimated freely, so overdispersion widens the se.
inline MrResult two_sample_mr(const InstrumentSet& set) {
  const std::size_t k = set.size();
  if (k < 2) throw Error(Errc::TooFewInstruments, "two-sample MR needs at least 2 instruments");
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += set.beta_exposure[i] * set.beta_exposure[i];
    sxy += set.beta_exposure[i] * set.beta_outcome[i];
  }
  MrResult out;
  out.method = MrMethod::Mr;
  out.k_instruments = k;
  out.estimate = sxy / sxx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = set.beta_outcome[i] - out.estimate * set.beta_exposure[i];
    ssr += r * r;
  }
  out.se = std::sqrt(ssr / static_cast<double>(k) / sxx);
  const double t = out.se > 0.0 ? out.estimate / out.se
                                : (out.estimate == 0.0 ? 0.0 : std::copysign(INFINITY, out.estimate));
  out.p = t == 0.0 ? 1.0 : stats::t_two_tailed_p(t, static_cast<double>(k - 1));
  return out;
}

/// Flips instruments so every exposure effect is positive.
inline InstrumentSet orient_instruments(InstrumentSet set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.beta_exposure[i] < 0.0) {
      set.beta_exposure[i] = -set.beta_exposure[i];
      set.beta_outcome[i] = -set.beta_outcome[i];
    }
  }
  return set;
}

/// Least squares with intercept on oriented instruments; slope tested with
/// K - 2 degrees of freedom.
inline MrResult mr_egger(const InstrumentSet& raw) {
  const std::size_t k = raw.size();
  if (k < 3) throw Error(Errc::TooFewInstruments, "MR-Egger needs at least 3 instruments");
  const auto set = orient_instruments(raw);
  stats::RegressionSums sums;
  for (std::size_t i = 0; i < k; ++i) sums.add(1.0, set.beta_exposure[i], set.beta_outcome[i]);
  const auto line = stats::fit_line(sums);
  if (!std::isfinite(line.slope)) {
    throw Error(Errc::TooFewInstruments, "MR-Egger instruments have identical exposure effects");
  }
  const double sxx_c = sums.swxx - sums.swx * sums.swx / sums.sw;
  double ssr = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = set.beta_outcome[i] - line.intercept - line.slope * set.beta_exposure[i];
    ssr += r * r;
  }
  MrResult out;
  out.method = MrMethod::Egger;
  out.k_instruments = k;
  out.estimate = line.slope;
  out.intercept = line.intercept;
  out.se = std::sqrt(ssr / static_cast<double>(k) / sxx_c);
  const double t = out.se > 0.0 ? out.estimate / out.se
                                : (out.estimate == 0.0 ? 0.0 : std::copysign(INFINITY, out.estimate));
  out.p = t == 0.0 ? 1.0 : stats::t_two_tailed_p(t, static_cast<double>(k - 2));
  return out;
}

/// SNPs assigned to each trait for bidirectional MR. A SNP significant for
/// both goes to the trait where its chi2 rank (1 = largest) is smaller;
/// equal ranks exclude it from both.
struct BidirAssignment {
  std::vector<std::size_t> set1, set2;
};

inline BidirAssignment assign_bidirectional(std::span<const double> z1, std::span<const double> z2,
                                            double threshold_p = kGenomeWideP) {
  const std::size_t m = z1.size();
  std::vector<double> neg1(m), neg2(m);
  for (std::size_t i = 0; i < m; ++i) {
    neg1[i] = -z1[i] * z1[i];
    neg2[i] = -z2[i] * z2[i];
  }
  const auto rank1 = stats::average_ranks(neg1);
  const auto rank2 = stats::average_ranks(neg2);
  BidirAssignment out;
  for (std::size_t i = 0; i < m; ++i) {
    const bool sig1 = stats::normal_two_tailed_p(z1[i]) < threshold_p;
    const bool sig2 = stats::normal_two_tailed_p(z2[i]) < threshold_p;
    if (sig1 && sig2) {
      if (rank1[i] < rank2[i]) out.set1.push_back(i);
      else if (rank2[i] < rank1[i]) out.set2.push_back(i);
    } else if (sig1) {
      out.set1.push_back(i);
    } else if (sig2) {
      out.set2.push_back(i);
    }
  }
  return out;
}

/// chi2 = (atanh r1 - atanh r2)^2 / (1/(K1 - 3) + 1/(K2 - 3)).
inline double bidirectional_chi2(double r1, std::size_t k1, double r2, std::size_t k2) {
  const double d = std::atanh(r1) - std::atanh(r2);
  const double var = 1.0 / (static_cast<double>(k1) - 3.0) + 1.0 / (static_cast<double>(k2) - 3.0);
  return d * d / var;
}

inline MrResult bidirectional_mr(std::span<const double> z1, std::span<const double> z2,
                                 double threshold_p = kGenomeWideP) {
  if (z1.size() != z2.size()) throw Error(Errc::InvalidArgument, "z series differ in length");
  const auto sets = assign_bidirectional(z1, z2, threshold_p);
  if (sets.set1.size() < 4 || sets.set2.size() < 4) {
    throw Error(Errc::TooFewInstruments, "bidirectional MR needs at least 4 SNPs per trait");
  }
  auto corr = [&](const std::vector<std::size_t>& idx) {
    std::vector<double> a(idx.size()), b(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      a[i] = z1[idx[i]];
      b[i] = z2[idx[i]];
    }
    // |r| = 1 would make atanh infinite.
    const double r = stats::spearman(a, b);
    const double cap = std::nextafter(1.0, 0.0);
    return std::isfinite(r) ? std::clamp(r, -cap, cap) : 0.0;
  };
  const double r1 = corr(sets.set1);
  const double r2 = corr(sets.set2);
  MrResult out;
  out.method = MrMethod::Bidir;
  out.k_instruments = sets.set1.size();
  out.k_instruments_2 = sets.set2.size();
  out.estimate = std::atanh(r1) - std::atanh(r2);
  const double chi2 = bidirectional_chi2(r1, sets.set1.size(), r2, sets.set2.size());
  out.se = std::sqrt(1.0 / (static_cast<double>(out.k_instruments) - 3.0) +
                     1.0 / (static_cast<double>(out.k_instruments_2) - 3.0));
  out.p = stats::chi2_upper_p(chi2, 1.0);
  return out;
}

}  // namespace lcv
