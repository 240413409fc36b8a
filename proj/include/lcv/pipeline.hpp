#pragma once

// End-to-end workflows: single-pair analysis, all-pairs matrix with
// Benjamini-Hochberg control, benchmark replicates and the gcp sweep.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "lcv/core.hpp"
#include "lcv/data_io.hpp"
#include "lcv/error.hpp"
#include "lcv/fdr.hpp"
#include "lcv/jackknife.hpp"
#include "lcv/ldsc.hpp"
#include "lcv/mr.hpp"
#include "lcv/presets.hpp"
#include "lcv/rng.hpp"
#include "lcv/simulator.hpp"
#include "lcv/stats.hpp"

namespace lcv {

/// Runs body(i) for i in [0, n) on up to `workers` threads. Callers write
/// results into slot i, so the outcome never depends on scheduling. The
/// first exception thrown by any task is rethrown after all threads join.
inline void parallel_for(std::size_t n, std::size_t workers,
                         const std::function<void(std::size_t)>& body) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

enum class NormalizationMode {
  Estimated,  ///< free LD score regression intercepts
  Analytic,   ///< LD-free data: intercept 1 per trait and 0 across traits
};

struct AnalysisOptions {
  std::size_t blocks = 100;
  LcvOptions lcv;
  NormalizationMode mode = NormalizationMode::Estimated;
  double exclusion_multiplier = 30.0;
  bool run_mr = true;
  double mr_threshold_p = kGenomeWideP;
  /// Prune MR instruments to one per window when set (needs cM positions).
  std::optional<double> prune_window_cm;
  /// Report the putatively causal trait first.
  bool orient = true;
};

/// Output of the LD score stage for one aligned pair.
struct PairFit {
  TraitNormalization norm1, norm2;
  CrossTraitFit cross;
  NormalizedPair normalized;
};

inline PairFit fit_pair(const AlignedPair& pair, const AnalysisOptions& opt) {
  const auto weights = compute_weights(pair.ell_regression());
  const auto blocks = BlockPartition::equal(pair.size(), opt.blocks);
  const auto ell = pair.ell();
  const bool analytic = opt.mode == NormalizationMode::Analytic;
  NormalizationOptions nopt;
  nopt.exclusion_multiplier = opt.exclusion_multiplier;
  if (analytic) nopt.fixed_intercept = 1.0;
  CrossTraitOptions copt;
  copt.exclusion_multiplier = opt.exclusion_multiplier;
  if (analytic) copt.fixed_intercept = 0.0;

  PairFit out;
  out.norm1 = fit_trait_normalization(pair.z1, pair.n1, ell, weights, blocks, nopt);
  out.norm2 = fit_trait_normalization(pair.z2, pair.n2, ell, weights, blocks, nopt);
  out.cross = fit_cross_trait(pair, out.norm1, out.norm2, weights, blocks, copt);
  out.normalized = normalize_pair(pair, out.norm1, out.norm2, out.cross, opt.blocks);
  return out;
}

/// The same fit with trait labels exchanged: S'(x) = -S(-x), so the grid
/// and likelihood are mirrored and gcp changes sign.
inline LcvResult swap_traits(const LcvResult& r) {
  LcvResult out = r;
  std::swap(out.z_h1, out.z_h2);
  std::swap(out.moments.m31, out.moments.m13);
  std::swap(out.moments.k1, out.moments.k2);
  auto& g = out.grid;
  const std::size_t n = g.xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    g.s_values[i] = -r.grid.s_values[n - 1 - i];
    g.s_ses[i] = r.grid.s_ses[n - 1 - i];
    g.likelihood[i] = r.grid.likelihood[n - 1 - i];
  }
  const auto post = posterior_summary(g.xs, g.likelihood);
  out.gcp_mean = post.mean;
  out.gcp_se = post.sd;
  out.s0 = -r.s0;
  out.t0 = -r.t0;
  return out;
}

struct MrOutcome {
  MrMethod method = MrMethod::Mr;
  std::optional<MrResult> result;
  std::optional<Errc> error;
};

/// Runs the three baselines with trait 1 as exposure. Inapplicable methods
/// are recorded with their error code instead of aborting.
inline std::vector<MrOutcome> run_mr_suite(std::span<const double> z1, std::span<const double> n1,
                                           std::span<const double> z2, std::span<const double> n2,
                                           std::span<const PruneCandidate> positions,
                                           const AnalysisOptions& opt) {
  std::vector<MrOutcome> out;
  auto guarded = [&](MrMethod method, auto&& fn) {
    MrOutcome o;
    o.method = method;
    try {
      o.result = fn();
    } catch (const Error& e) {
      o.error = e.code();
    }
    out.push_back(std::move(o));
  };
  std::optional<InstrumentSet> instruments;
  std::optional<Errc> instrument_error;
  try {
    instruments = select_instruments(z1, n1, z2, n2, opt.mr_threshold_p);
    if (opt.prune_window_cm) {
      std::vector<PruneCandidate> cand;
      for (std::size_t idx : instruments->snp_indices) {
        auto c = positions.empty() ? PruneCandidate{} : positions[idx];
        c.chi2 = z1[idx] * z1[idx];
        cand.push_back(c);
      }
      const auto keep = prune_instruments(cand, *opt.prune_window_cm);
      instruments = subset_instruments(*instruments, keep);
    }
  } catch (const Error& e) {
    instrument_error = e.code();
  }
  auto need = [&]() -> const InstrumentSet& {
    if (!instruments) throw Error(*instrument_error, "instrument selection failed");
    return *instruments;
  };
  guarded(MrMethod::Mr, [&] { return two_sample_mr(need()); });
  guarded(MrMethod::Egger, [&] { return mr_egger(need()); });
  guarded(MrMethod::Bidir, [&] { return bidirectional_mr(z1, z2, opt.mr_threshold_p); });
  return out;
}

struct PairReport {
  std::string trait1, trait2;
  LcvResult lcv;
  TraitNormalization norm1, norm2;
  CrossTraitFit cross;
  std::vector<MrOutcome> mr;
  std::int64_t runtime_ms = 0;
  bool swapped = false;
  std::size_t n_snps = 0;
};

namespace detail {

inline std::vector<PruneCandidate> prune_positions(const AlignedPair& pair) {
  std::vector<PruneCandidate> out(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) {
    out[i].chrom = pair.chrom[i];
    out[i].position_cm = pair.position_cm[i];
  }
  return out;
}

}  // namespace detail

/// LD score stage, LCV and (optionally) MR on one aligned pair. When
/// `opt.orient` is set and gcp < 0, the traits are relabeled so that trait 1
/// is the putatively causal one.
inline PairReport analyze_pair(const AlignedPair& pair, const AnalysisOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  PairReport rep;
  rep.n_snps = pair.size();
  const auto fit = fit_pair(pair, opt);
  rep.norm1 = fit.norm1;
  rep.norm2 = fit.norm2;
  rep.cross = fit.cross;
  rep.lcv = lcv_fit(fit.normalized, fit.cross, opt.lcv);
  rep.trait1 = pair.label1;
  rep.trait2 = pair.label2;
  if (opt.orient && rep.lcv.gcp_mean < 0.0) {
    rep.swapped = true;
    rep.lcv = swap_traits(rep.lcv);
    std::swap(rep.trait1, rep.trait2);
    std::swap(rep.norm1, rep.norm2);
  }
  if (opt.run_mr) {
    const auto positions = detail::prune_positions(pair);
    rep.mr = rep.swapped ? run_mr_suite(pair.z2, pair.n2, pair.z1, pair.n1, positions, opt)
                         : run_mr_suite(pair.z1, pair.n1, pair.z2, pair.n2, positions, opt);
  }
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

// ---------------------------------------------------------------------------
// Matrix

struct MatrixEntry {
  std::string trait1, trait2;  ///< canonical (sorted) labels before orientation
  bool prescreen_passed = false;
  std::optional<CrossTraitFit> cross;
  std::optional<PairReport> report;
  std::optional<Errc> error;
  std::string error_message;
  double q_value = 1.0;
  bool rejected = false;
};

struct MatrixResult {
  std::vector<MatrixEntry> entries;
  double prescreen_p = 0.05;
  double fdr_level = 0.01;
  std::size_t family_size = 0;
};

/// All unordered trait pairs. Pairs whose genetic correlation fails the
/// prescreen are not tested; BH runs over the pairs that were tested.
inline MatrixResult analyze_matrix(std::vector<SumstatsTable> traits, const LdScoreTable& ld,
                                   const AnalysisOptions& opt, double prescreen_p = 0.05,
                                   double fdr_level = 0.01, std::size_t workers = 1) {
  if (traits.size() < 2) throw Error(Errc::InvalidArgument, "matrix analysis needs at least 2 traits");
  std::stable_sort(traits.begin(), traits.end(),
                   [](const SumstatsTable& a, const SumstatsTable& b) { return a.trait_label < b.trait_label; });
  MatrixResult out;
  out.prescreen_p = prescreen_p;
  out.fdr_level = fdr_level;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < traits.size(); ++i) {
    for (std::size_t j = i + 1; j < traits.size(); ++j) pairs.emplace_back(i, j);
  }
  out.entries.resize(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t p) {
    auto& e = out.entries[p];
    const auto& t1 = traits[pairs[p].first];
    const auto& t2 = traits[pairs[p].second];
    e.trait1 = t1.trait_label;
    e.trait2 = t2.trait_label;
    try {
      const auto aligned = align_pair(t1, t2, ld);
      const auto fit = fit_pair(aligned, opt);
      e.cross = fit.cross;
      e.prescreen_passed = fit.cross.rho_p < prescreen_p;
      if (e.prescreen_passed) e.report = analyze_pair(aligned, opt);
    } catch (const Error& err) {
      e.error = err.code();
      e.error_message = err.what();
    }
  });
  std::vector<double> ps;
  std::vector<std::size_t> idx;
  for (std::size_t p = 0; p < out.entries.size(); ++p) {
    const auto& e = out.entries[p];
    if (e.report && std::isfinite(e.report->lcv.p_partial_causality)) {
      ps.push_back(e.report->lcv.p_partial_causality);
      idx.push_back(p);
    }
  }
  out.family_size = ps.size();
  const auto bh = benjamini_hochberg(ps, fdr_level);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.entries[idx[k]].q_value = bh.q_values[k];
    out.entries[idx[k]].rejected = bh.rejected[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simulation-based experiments

/// Pair analysis settings matching how a scenario was simulated: LD-free data
/// use constrained intercepts, data with LD use free intercepts.
inline AnalysisOptions analysis_options_for(const SimScenario& sc, AnalysisOptions base = {}) {
  base.mode = sc.ld_mode == LdMode::None ? NormalizationMode::Analytic : NormalizationMode::Estimated;
  return base;
}

enum class BenchMethod { Lcv, Mr, Egger, Bidir };

constexpr std::string_view bench_method_name(BenchMethod m) noexcept {
  switch (m) {
    case BenchMethod::Lcv: return "LCV";
    case BenchMethod::Mr: return "MR";
    case BenchMethod::Egger: return "EGGER";
    case BenchMethod::Bidir: return "BIDIR";
  }
  return "";
}

inline BenchMethod parse_bench_method(std::string_view s) {
  for (auto m : {BenchMethod::Lcv, BenchMethod::Mr, BenchMethod::Egger, BenchMethod::Bidir}) {
    if (bench_method_name(m) == s) return m;
  }
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::toupper(c); });
  for (auto m : {BenchMethod::Lcv, BenchMethod::Mr, BenchMethod::Egger, BenchMethod::Bidir}) {
    if (bench_method_name(m) == lower) return m;
  }
  throw Error(Errc::InvalidArgument, "unknown method '" + std::string(s) + "'");
}

/// One replicate of one method. `ok` is false when the method was
/// inapplicable or failed; such replicates count as non-rejections.
struct ReplicateRecord {
  bool ok = false;
  std::optional<Errc> error;
  double p = 1.0;
  double gcp = 0.0, gcp_se = 0.0;
  double s0 = 0.0, s0_se = 0.0;
  double chi2 = 0.0;
  double zh1 = 0.0;
  double rho_g = 0.0, rho_p = 1.0;
  double estimate = 0.0;  ///< MR slope
};

struct ReplicateResult {
  std::uint64_t seed = 0;
  std::optional<double> true_gcp;
  double true_rho = 0.0;
  std::map<BenchMethod, ReplicateRecord> methods;
};

/// Seed of replicate r under a base seed (identical across scenarios, so
/// scenarios share random numbers replicate by replicate).
inline std::uint64_t replicate_seed(std::uint64_t base_seed, std::size_t r) {
  return derive_seed(base_seed, stream::kReplicate, r);
}

inline ReplicateResult run_replicate(SimScenario sc, std::uint64_t seed,
                                     std::span<const BenchMethod> methods, const LdBlockSet* ld,
                                     const AnalysisOptions& base) {
  sc.seed = seed;
  ReplicateResult out;
  out.seed = seed;
  out.true_gcp = sc.true_gcp();
  out.true_rho = sc.target_rho();
  const auto sim = simulate(sc, ld);
  const auto aligned = align_pair(sim.sumstats1, sim.sumstats2, sim.ld_scores);
  auto opt = analysis_options_for(sc, base);
  opt.orient = false;
  opt.run_mr = false;

  const bool want_lcv = std::find(methods.begin(), methods.end(), BenchMethod::Lcv) != methods.end();
  if (want_lcv) {
    ReplicateRecord rec;
    try {
      const auto fit = fit_pair(aligned, opt);
      const auto res = lcv_fit(fit.normalized, fit.cross, opt.lcv);
      rec.ok = std::isfinite(res.p_partial_causality);
      rec.p = rec.ok ? res.p_partial_causality : 1.0;
      rec.gcp = res.gcp_mean;
      rec.gcp_se = res.gcp_se;
      rec.s0 = res.s0;
      rec.s0_se = res.s0_se;
      rec.chi2 = res.t0 * res.t0;
      rec.zh1 = res.z_h1;
      rec.rho_g = res.rho_g;
      rec.rho_p = res.rho_p;
    } catch (const Error& e) {
      rec.error = e.code();
    }
    out.methods[BenchMethod::Lcv] = rec;
  }

  const bool want_mr = std::any_of(methods.begin(), methods.end(),
                                   [](BenchMethod m) { return m != BenchMethod::Lcv; });
  if (want_mr) {
    const auto outcomes = run_mr_suite(aligned.z1, aligned.n1, aligned.z2, aligned.n2, {}, opt);
    for (const auto& o : outcomes) {
      const BenchMethod m = o.method == MrMethod::Mr      ? BenchMethod::Mr
                            : o.method == MrMethod::Egger ? BenchMethod::Egger
                                                          : BenchMethod::Bidir;
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) continue;
      ReplicateRecord rec;
      if (o.result) {
        rec.ok = std::isfinite(o.result->p);
        rec.p = rec.ok ? o.result->p : 1.0;
        rec.estimate = o.result->estimate;
        rec.chi2 = o.result->se > 0.0 ? std::pow(o.result->estimate / o.result->se, 2) : 0.0;
      } else {
        rec.error = o.error;
      }
      out.methods[m] = rec;
    }
  }
  return out;
}

struct BenchmarkSummary {
  std::string scenario;
  BenchMethod method = BenchMethod::Lcv;
  std::size_t n_reps = 0;
  std::size_t n_failed = 0;
  double fpr_05 = 0.0, fpr_001 = 0.0;  ///< rejection rates at 0.05 and 0.001
  double mean_gcp = 0.0, sd_gcp = 0.0, rms_se = 0.0;
  double mean_chi2 = 0.0;
  double mean_zh1 = 0.0;
  double rho = 0.0;
};

inline BenchmarkSummary summarize(const std::string& scenario, BenchMethod method, double rho,
                                  std::span<const ReplicateResult> reps) {
  BenchmarkSummary s;
  s.scenario = scenario;
  s.method = method;
  s.rho = rho;
  s.n_reps = reps.size();
  std::vector<double> gcps;
  double se2 = 0.0, chi2 = 0.0, zh = 0.0;
  std::size_t rej05 = 0, rej001 = 0;
  for (const auto& r : reps) {
    auto it = r.methods.find(method);
    if (it == r.methods.end() || !it->second.ok) {
      ++s.n_failed;
      continue;
    }
    const auto& rec = it->second;
    if (rec.p < 0.05) ++rej05;
    if (rec.p < 0.001) ++rej001;
    gcps.push_back(rec.gcp);
    se2 += rec.gcp_se * rec.gcp_se;
    chi2 += rec.chi2;
    zh += rec.zh1;
  }
  const auto n = static_cast<double>(s.n_reps);
  const auto ok = static_cast<double>(gcps.size());
  s.fpr_05 = n > 0 ? static_cast<double>(rej05) / n : 0.0;
  s.fpr_001 = n > 0 ? static_cast<double>(rej001) / n : 0.0;
  if (ok > 0) {
    s.mean_gcp = stats::mean(gcps);
    s.sd_gcp = gcps.size() > 1 ? stats::sample_sd(gcps) : 0.0;
    s.rms_se = std::sqrt(se2 / ok);
    s.mean_chi2 = chi2 / ok;
    s.mean_zh1 = zh / ok;
  }
  return s;
}

struct BenchmarkRun {
  SimScenario scenario;
  std::vector<ReplicateResult> replicates;
  std::vector<BenchmarkSummary> summaries;
};

inline BenchmarkRun run_benchmark(const SimScenario& sc, std::size_t n_reps,
                                  std::span<const BenchMethod> methods, std::uint64_t seed,
                                  std::size_t workers = 1, const AnalysisOptions& base = {}) {
  BenchmarkRun run;
  run.scenario = sc;
  std::optional<LdBlockSet> ld;
  if (sc.ld_mode == LdMode::Blocks) ld = scenario_ld(sc);
  run.replicates.resize(n_reps);
  parallel_for(n_reps, workers, [&](std::size_t r) {
    try {
      run.replicates[r] = run_replicate(sc, replicate_seed(seed, r), methods, ld ? &*ld : nullptr, base);
    } catch (const Error& e) {
      // Simulation-level failure: every method fails for this replicate.
      auto& rep = run.replicates[r];
      rep.seed = replicate_seed(seed, r);
      for (auto m : methods) {
        ReplicateRecord rec;
        rec.error = e.code();
        rep.methods[m] = rec;
      }
    }
  });
  for (auto m : methods) run.summaries.push_back(summarize(sc.name, m, sc.target_rho(), run.replicates));
  return run;
}

// ---------------------------------------------------------------------------
// gcp sweep

struct SweepOptions {
  std::size_t n_reps = 1000;
  std::uint64_t seed = 1;
  double min_abs_rho = 0.05;
  LdMode ld_mode = LdMode::Blocks;
  std::size_t workers = 1;
  double ascertain_rho_p = 0.05;
  double ascertain_p = 0.001;
};

struct SweepReplicate {
  double true_gcp = 0.0;
  double true_rho = 0.0;
  bool ok = false;
  double gcp = 0.0, gcp_se = 0.0, p = 1.0, rho_p = 1.0;
};

struct SweepStats {
  std::size_t n = 0;
  double slope = 0.0;     ///< regression of true on estimated gcp
  double slope_se = 0.0;
  double intercept = 0.0;
  double rmse = 0.0;
  double rmpv = 0.0;      ///< root mean posterior variance
};

struct SweepSummary {
  SweepStats all, ascertained;
  std::size_t n_failed = 0;
  std::vector<SweepReplicate> replicates;
};

inline SweepStats sweep_stats(std::span<const SweepReplicate> reps) {
  SweepStats s;
  stats::RegressionSums sums;
  double se2 = 0.0, err2 = 0.0;
  for (const auto& r : reps) {
    sums.add(1.0, r.gcp, r.true_gcp);
    se2 += r.gcp_se * r.gcp_se;
    err2 += (r.gcp - r.true_gcp) * (r.gcp - r.true_gcp);
  }
  s.n = reps.size();
  if (s.n < 3) return s;
  const auto n = static_cast<double>(s.n);
  const auto line = stats::fit_line(sums);
  s.slope = line.slope;
  s.intercept = line.intercept;
  const double sxx = sums.swxx - sums.swx * sums.swx / sums.sw;
  double ssr = 0.0;
  for (const auto& r : reps) {
    const double res = r.true_gcp - line.intercept - line.slope * r.gcp;
    ssr += res * res;
  }
  s.slope_se = std::sqrt(ssr / (n - 2.0) / sxx);
  s.rmse = std::sqrt(err2 / n);
  s.rmpv = std::sqrt(se2 / n);
  return s;
}

/// Base architecture of the sweep: the default LD scenario with the
/// intermediary effects replaced per replicate.
inline SimScenario sweep_scenario(double gcp, double rho, LdMode mode) {
  SimScenario sc = mode == LdMode::Blocks ? preset_scenario("table3-c") : preset_scenario("fig2b");
  sc.name = "gcp-sweep";
  const double a = std::abs(rho);
  const double q1 = std::pow(a, 0.5 * (1.0 - gcp));
  const double q2 = std::copysign(std::pow(a, 0.5 * (1.0 + gcp)), rho);
  sc.intermediaries = {{q1, q2, sc.intermediaries.front().p_pi}};
  sc.declared_gcp = gcp;
  if (q1 >= 1.0) sc.p_gamma1 = 0.0;
  if (std::abs(q2) >= 1.0) sc.p_gamma2 = 0.0;
  return sc;
}

/// True gcp ~ U(-1, 1); rho ~ U(-1, 1) conditioned on |rho| > min_abs_rho.
inline SweepSummary run_gcp_sweep(const SweepOptions& opt, const AnalysisOptions& base = {}) {
  SweepSummary out;
  out.replicates.resize(opt.n_reps);
  std::optional<LdBlockSet> ld;
  if (opt.ld_mode == LdMode::Blocks) ld = scenario_ld(sweep_scenario(0.0, 0.2, opt.ld_mode));
  parallel_for(opt.n_reps, opt.workers, [&](std::size_t r) {
    SplitMix64 gen(opt.seed, stream::kSweep, r);
    auto& rep = out.replicates[r];
    rep.true_gcp = 2.0 * gen.uniform() - 1.0;
    do {
      rep.true_rho = 2.0 * gen.uniform() - 1.0;
    } while (std::abs(rep.true_rho) <= opt.min_abs_rho);
    auto sc = sweep_scenario(rep.true_gcp, rep.true_rho, opt.ld_mode);
    sc.seed = replicate_seed(opt.seed, r);
    try {
      const auto sim = simulate(sc, ld ? &*ld : nullptr);
      const auto aligned = align_pair(sim.sumstats1, sim.sumstats2, sim.ld_scores);
      const auto aopt = analysis_options_for(sc, base);
      const auto fit = fit_pair(aligned, aopt);
      const auto res = lcv_fit(fit.normalized, fit.cross, aopt.lcv);
      rep.ok = std::isfinite(res.gcp_mean);
      rep.gcp = res.gcp_mean;
      rep.gcp_se = res.gcp_se;
      rep.p = res.p_partial_causality;
      rep.rho_p = res.rho_p;
    } catch (const Error&) {
      rep.ok = false;
    }
  });
  std::vector<SweepReplicate> ok, asc;
  for (const auto& r : out.replicates) {
    if (!r.ok) {
      ++out.n_failed;
      continue;
    }
    ok.push_back(r);
    if (r.rho_p < opt.ascertain_rho_p && r.p < opt.ascertain_p) asc.push_back(r);
  }
  out.all = sweep_stats(ok);
  out.ascertained = sweep_stats(asc);
  return out;
}

}  // namespace lcv
