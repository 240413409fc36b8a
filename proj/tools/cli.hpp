#pragma once

// Command-line front end. run_cli() is the whole program minus process
// setup, so tests can drive it in-process and inspect its output.
//
// Exit codes: 0 success, 2 data or usage error, 3 statistical
// inapplicability, 4 internal error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcv/lcv.hpp"

namespace lcv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 2;
inline constexpr int kExitInapplicable = 3;
inline constexpr int kExitInternal = 4;

inline int exit_code_for(Errc c) { return is_inapplicable(c) ? kExitInapplicable : kExitData; }

/// JSON configuration files for CLI11. Top-level keys set global options; an
/// object-valued key sets options of the subcommand with that name. Arrays
/// supply repeated values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    nlohmann::ordered_json j;
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& res = opt->results();
        j[name] = res.size() == 1 ? nlohmann::ordered_json(res.front()) : nlohmann::ordered_json(res);
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    for (const CLI::App* sub : app->get_subcommands({})) {
      auto nested = nlohmann::ordered_json::parse(to_config(sub, default_also, false, ""));
      if (!nested.empty()) j[sub->get_name()] = nested;
    }
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void collect(const nlohmann::json& j, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto next = parents;
        next.push_back(key);
        collect(value, next, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

enum class Format { Tsv, Json };

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::size_t blocks = 100;
  double grid_step = 0.01;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;
  bool tsv = false;
  std::string output = "-";

  Format format(Format fallback) const {
    if (json) return Format::Json;
    if (tsv) return Format::Tsv;
    return fallback;
  }
};

/// Shared input options of the commands that read summary statistics.
struct InputOptions {
  std::string ld_scores;
  std::string intercept = "auto";
  std::string keep;
  bool exclude_mhc = false;
  bool no_mr = false;
  double mr_threshold_p = kGenomeWideP;
  double prune_window_cm = 0.0;
  std::string jackknife_rho = "joint";
  bool no_orient = false;
};

namespace detail {

inline void add_input_options(CLI::App* sub, InputOptions& in) {
  sub->add_option("--ld-scores", in.ld_scores, "LD score TSV (SNP, L2[, L2_REG]); omitted means no LD");
  sub->add_option("--intercept", in.intercept,
                  "free: estimate LD score intercepts; fixed: 1 per trait, 0 across traits")
      ->check(CLI::IsMember({"auto", "free", "fixed"}))
      ->capture_default_str();
  sub->add_option("--keep", in.keep, "file with one SNP id per line to restrict the analysis to");
  sub->add_flag("--exclude-mhc", in.exclude_mhc, "drop SNPs in chr6:25-34 Mb");
  sub->add_flag("--no-mr", in.no_mr, "skip the MR baselines");
  sub->add_option("--mr-threshold-p", in.mr_threshold_p, "instrument significance threshold")
      ->capture_default_str();
  sub->add_option("--prune-window-cm", in.prune_window_cm,
                  "prune MR instruments to one per window (cM); 0 disables")
      ->capture_default_str();
  sub->add_option("--jackknife-rho", in.jackknife_rho,
                  "joint: recompute rho in every jackknife block; fixed: reuse the full-data rho")
      ->check(CLI::IsMember({"joint", "fixed"}))
      ->capture_default_str();
  sub->add_flag("--no-orient", in.no_orient, "keep input trait order instead of putting the causal trait first");
}

inline std::optional<std::unordered_set<std::string>> read_keep_list(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  std::unordered_set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    lcv::detail::strip_cr(line);
    if (!line.empty()) out.insert(line);
  }
  return out;
}

inline SumstatsTable load_trait(const std::string& path, const InputOptions& in,
                                const std::optional<std::unordered_set<std::string>>& keep) {
  auto parsed = parse_sumstats(std::filesystem::path(path));
  std::vector<GenomicRegion> regions;
  if (in.exclude_mhc) regions.push_back(kMhcRegion);
  if (!keep && regions.empty()) return std::move(parsed.table);
  return filter_snps(parsed.table, keep, regions);
}

inline LdScoreTable load_ld(const InputOptions& in, const std::vector<SumstatsTable>& traits) {
  if (!in.ld_scores.empty()) return parse_ld_scores(std::filesystem::path(in.ld_scores));
  return unit_ld_scores(traits.front());
}

inline AnalysisOptions analysis_options(const GlobalOptions& g, const InputOptions& in) {
  AnalysisOptions opt;
  opt.blocks = g.blocks;
  opt.lcv.grid_step = g.grid_step;
  opt.lcv.jackknife_rho = in.jackknife_rho == "joint";
  const bool fixed = in.intercept == "fixed" || (in.intercept == "auto" && in.ld_scores.empty());
  opt.mode = fixed ? NormalizationMode::Analytic : NormalizationMode::Estimated;
  opt.run_mr = !in.no_mr;
  opt.mr_threshold_p = in.mr_threshold_p;
  if (in.prune_window_cm > 0.0) opt.prune_window_cm = in.prune_window_cm;
  opt.orient = !in.no_orient;
  return opt;
}

/// Writes to the file named by --output, or to `fallback` for "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(Errc::Io, "cannot write '" + path + "'");
      out_ = file_.get();
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

inline std::vector<BenchMethod> parse_methods(const std::vector<std::string>& names) {
  std::vector<BenchMethod> out;
  for (const auto& n : names) {
    if (n == "all") {
      return {BenchMethod::Lcv, BenchMethod::Mr, BenchMethod::Egger, BenchMethod::Bidir};
    }
    const auto m = parse_bench_method(n);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

/// Expands "table3" and "fig" prefixes to every matching preset.
inline std::vector<std::string> expand_scenarios(const std::vector<std::string>& names) {
  const auto presets = preset_scenarios();
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (presets.contains(n)) {
      out.push_back(n);
      continue;
    }
    bool any = false;
    for (const auto& [key, sc] : presets) {
      if (key.starts_with(n)) {
        out.push_back(key);
        any = true;
      }
    }
    if (!any) throw Error(Errc::UnknownScenario, "no preset named '" + n + "'");
  }
  return out;
}

}  // namespace detail

/// Parses and runs one command line. Normal output goes to `out`, messages
/// to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Latent causal variable analysis of GWAS summary statistics"};
  app.name("lcv");
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file setting any option; object keys name subcommands");

  GlobalOptions g;
  app.add_option("--seed", g.seed, "base random seed")->capture_default_str();
  app.add_option("--blocks", g.blocks, "jackknife blocks")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--grid-step", g.grid_step, "gcp grid spacing")
      ->check(CLI::Range(1e-4, 1.0))
      ->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  auto* json_flag = app.add_flag("--json", g.json, "write JSON");
  auto* tsv_flag = app.add_flag("--tsv", g.tsv, "write TSV");
  json_flag->excludes(tsv_flag);
  app.add_option("-o,--output", g.output, "output file, '-' for standard output")->capture_default_str();

  // analyze-pair
  auto* pair_cmd = app.add_subcommand("analyze-pair", "LCV (and MR baselines) for one trait pair");
  std::string pair_file1, pair_file2;
  bool with_grid = false;
  InputOptions pair_in;
  pair_cmd->add_option("sumstats1", pair_file1, "summary statistics of trait 1")->required()->check(CLI::ExistingFile);
  pair_cmd->add_option("sumstats2", pair_file2, "summary statistics of trait 2")->required()->check(CLI::ExistingFile);
  pair_cmd->add_flag("--with-grid", with_grid, "include the gcp grid in JSON output");
  detail::add_input_options(pair_cmd, pair_in);

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "all trait pairs with Benjamini-Hochberg control");
  std::vector<std::string> matrix_files;
  double prescreen_p = 0.05, fdr_level = 0.01;
  InputOptions matrix_in;
  matrix_cmd->add_option("sumstats", matrix_files, "summary statistics files")->required()->check(CLI::ExistingFile);
  matrix_cmd->add_option("--prescreen-p", prescreen_p, "genetic correlation p-value prescreen")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  matrix_cmd->add_option("--fdr", fdr_level, "false discovery rate level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  detail::add_input_options(matrix_cmd, matrix_in);

  // mr
  auto* mr_cmd = app.add_subcommand("mr", "MR baselines for an exposure and an outcome");
  std::string mr_exposure, mr_outcome;
  std::string mr_method = "all";
  InputOptions mr_in;
  mr_cmd->add_option("exposure", mr_exposure, "exposure summary statistics")->required()->check(CLI::ExistingFile);
  mr_cmd->add_option("outcome", mr_outcome, "outcome summary statistics")->required()->check(CLI::ExistingFile);
  mr_cmd->add_option("--method", mr_method, "MR, EGGER, BIDIR or all")->capture_default_str();
  mr_cmd->add_option("--threshold-p", mr_in.mr_threshold_p, "instrument significance threshold")
      ->capture_default_str();
  mr_cmd->add_option("--prune-window-cm", mr_in.prune_window_cm, "prune instruments; 0 disables")
      ->capture_default_str();
  mr_cmd->add_option("--keep", mr_in.keep, "file with SNP ids to keep");
  mr_cmd->add_flag("--exclude-mhc", mr_in.exclude_mhc, "drop SNPs in chr6:25-34 Mb");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "simulate summary statistics for a scenario");
  std::string sim_scenario = "fig2b", sim_scenario_file, sim_prefix;
  bool sim_list = false;
  sim_cmd->add_option("--scenario", sim_scenario, "preset name")->capture_default_str();
  sim_cmd->add_option("--scenario-file", sim_scenario_file, "JSON scenario overriding the preset")
      ->check(CLI::ExistingFile);
  sim_cmd->add_option("--out-prefix", sim_prefix, "writes PREFIX.trait1.tsv, PREFIX.trait2.tsv, PREFIX.l2.tsv, PREFIX.truth.json");
  sim_cmd->add_flag("--list", sim_list, "list preset scenarios");

  // build-ld
  auto* ld_cmd = app.add_subcommand("build-ld", "synthetic block LD and its LD scores");
  std::size_t ld_snps = kLdSnps;
  LdConfig ld_cfg;
  std::string ld_scenario;
  ld_cmd->add_option("--snps", ld_snps, "number of SNPs")->check(CLI::PositiveNumber)->capture_default_str();
  ld_cmd->add_option("--block-size", ld_cfg.block_size, "SNPs per block")->check(CLI::PositiveNumber)->capture_default_str();
  ld_cmd->add_option("--rho-ld", ld_cfg.rho_ld, "mean AR(1) correlation")->capture_default_str();
  ld_cmd->add_option("--rho-ld-spread", ld_cfg.rho_ld_spread, "per-block correlation spread")->capture_default_str();
  ld_cmd->add_option("--n-perturbed", ld_cfg.n_perturbed, "blocks pushed off the PSD cone")->capture_default_str();
  ld_cmd->add_option("--perturbation", ld_cfg.perturbation, "perturbation magnitude")->capture_default_str();
  ld_cmd->add_option("--ld-seed", ld_cfg.seed, "seed of the LD construction")->capture_default_str();
  ld_cmd->add_option("--scenario", ld_scenario, "take SNP count and LD settings from a preset");

  // benchmark
  auto* bench_cmd = app.add_subcommand("benchmark", "replicate simulations and summarize each method");
  std::vector<std::string> bench_scenarios;
  std::size_t bench_reps = 500;
  std::vector<std::string> bench_methods{"all"};
  bool bench_long = false;
  bench_cmd->add_option("--scenario", bench_scenarios, "preset names or prefixes (e.g. table3)")->required();
  bench_cmd->add_option("--reps", bench_reps, "replicates per scenario")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--methods", bench_methods, "LCV, MR, EGGER, BIDIR or all")->delimiter(',');
  bench_cmd->add_flag("--long", bench_long, "long TSV (scenario, method, metric, value)");

  // gcp-sweep
  auto* sweep_cmd = app.add_subcommand("gcp-sweep", "regress true on estimated gcp over random scenarios");
  SweepOptions sweep;
  std::string sweep_ld = "blocks";
  bool sweep_reps_out = false;
  sweep_cmd->add_option("--reps", sweep.n_reps, "replicates")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--ld-mode", sweep_ld, "blocks or none")
      ->check(CLI::IsMember({"blocks", "none"}))
      ->capture_default_str();
  sweep_cmd->add_option("--min-abs-rho", sweep.min_abs_rho, "rho is drawn from U(-1, 1) with |rho| above this")
      ->check(CLI::Range(0.0, 0.99))
      ->capture_default_str();
  sweep_cmd->add_flag("--with-replicates", sweep_reps_out, "include every replicate in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }

  try {
    detail::Sink sink(g.output, out);
    std::ostream& os = *sink;

    if (pair_cmd->parsed()) {
      const auto keep = detail::read_keep_list(pair_in.keep);
      std::vector<SumstatsTable> traits;
      traits.push_back(detail::load_trait(pair_file1, pair_in, keep));
      traits.push_back(detail::load_trait(pair_file2, pair_in, keep));
      const auto ld = detail::load_ld(pair_in, traits);
      const auto aligned = align_pair(traits[0], traits[1], ld);
      const auto report = analyze_pair(aligned, detail::analysis_options(g, pair_in));
      if (g.format(Format::Json) == Format::Json) {
        os << to_json(report, with_grid).dump(2) << '\n';
      } else {
        write_report_tsv(os, report_rows(report));
      }
      return kExitOk;
    }

    if (matrix_cmd->parsed()) {
      const auto keep = detail::read_keep_list(matrix_in.keep);
      std::vector<SumstatsTable> traits;
      for (const auto& f : matrix_files) traits.push_back(detail::load_trait(f, matrix_in, keep));
      const auto ld = detail::load_ld(matrix_in, traits);
      const auto res = analyze_matrix(std::move(traits), ld, detail::analysis_options(g, matrix_in),
                                      prescreen_p, fdr_level, g.workers);
      if (g.format(Format::Tsv) == Format::Json) {
        os << to_json(res).dump(2) << '\n';
      } else {
        os << "# FDR family: " << res.family_size << " pairs passing rho_p < " << format_double(prescreen_p)
           << "; q-values are not adjusted for the prescreen\n";
        write_report_tsv(os, matrix_rows(res));
      }
      for (const auto& e : res.entries) {
        if (e.error) err << e.trait1 << " / " << e.trait2 << ": " << e.error_message << '\n';
      }
      return kExitOk;
    }

    if (mr_cmd->parsed()) {
      const auto keep = detail::read_keep_list(mr_in.keep);
      std::vector<SumstatsTable> traits;
      traits.push_back(detail::load_trait(mr_exposure, mr_in, keep));
      traits.push_back(detail::load_trait(mr_outcome, mr_in, keep));
      const auto aligned = align_pair(traits[0], traits[1], unit_ld_scores(traits[0]));
      auto opt = detail::analysis_options(g, mr_in);
      const auto positions = lcv::detail::prune_positions(aligned);
      const auto outcomes = run_mr_suite(aligned.z1, aligned.n1, aligned.z2, aligned.n2, positions, opt);
      const auto wanted = detail::parse_methods({mr_method});
      PairReport rep;
      rep.trait1 = aligned.label1;
      rep.trait2 = aligned.label2;
      std::optional<Errc> failure;
      for (const auto& o : outcomes) {
        const auto m = parse_bench_method(mr_method_name(o.method));
        if (std::find(wanted.begin(), wanted.end(), m) == wanted.end()) continue;
        rep.mr.push_back(o);
        if (o.error && !failure) failure = o.error;
      }
      if (rep.mr.empty()) throw Error(Errc::InvalidArgument, "no MR method selected");
      if (g.format(Format::Tsv) == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& o : rep.mr) j.push_back(to_json(o));
        os << j.dump(2) << '\n';
      } else {
        auto rows = report_rows(rep);
        rows.erase(rows.begin());  // no LCV row
        write_report_tsv(os, rows);
      }
      // A single requested method that could not run is an inapplicable analysis.
      if (rep.mr.size() == 1 && failure) return exit_code_for(*failure);
      return kExitOk;
    }

    if (sim_cmd->parsed()) {
      if (sim_list) {
        for (const auto& [name, sc] : preset_scenarios()) {
          os << name << '\t' << ld_mode_name(sc.ld_mode) << '\t' << sc.m_snps << '\t'
             << (sc.true_gcp() ? format_double(*sc.true_gcp()) : "nan") << '\n';
        }
        return kExitOk;
      }
      auto sc = preset_scenario(sim_scenario);
      if (!sim_scenario_file.empty()) {
        std::ifstream in(sim_scenario_file);
        nlohmann::ordered_json j;
        try {
          in >> j;
        } catch (const nlohmann::json::exception& e) {
          throw Error(Errc::MalformedInput, std::string("scenario file: ") + e.what());
        }
        sc = scenario_from_json(j, sc);
      }
      sc.seed = g.seed;
      if (sim_prefix.empty()) throw Error(Errc::InvalidArgument, "--out-prefix is required");
      const auto sim = simulate(sc);
      write_sumstats(std::filesystem::path(sim_prefix + ".trait1.tsv"), sim.sumstats1);
      write_sumstats(std::filesystem::path(sim_prefix + ".trait2.tsv"), sim.sumstats2);
      {
        std::ofstream ld(sim_prefix + ".l2.tsv");
        if (!ld) throw Error(Errc::Io, "cannot write '" + sim_prefix + ".l2.tsv'");
        std::vector<std::string> ids;
        for (const auto& r : sim.sumstats1.records) ids.push_back(r.snp_id);
        write_ld_scores(ld, ids, sim.ld_scores);
      }
      nlohmann::ordered_json j = {{"scenario", to_json(sc)}, {"truth", to_json(sim.truth)}};
      {
        std::ofstream truth(sim_prefix + ".truth.json");
        if (!truth) throw Error(Errc::Io, "cannot write '" + sim_prefix + ".truth.json'");
        truth << j.dump(2) << '\n';
      }
      os << j.dump(2) << '\n';
      return kExitOk;
    }

    if (ld_cmd->parsed()) {
      if (!ld_scenario.empty()) {
        const auto sc = preset_scenario(ld_scenario);
        ld_snps = sc.m_snps;
        ld_cfg = sc.ld;
      }
      const auto layout = make_snp_layout(ld_snps);
      const auto blocks = build_ld_blocks(synthetic_ld_blocks(layout.chrom, ld_cfg));
      LdScoreTable table;
      for (std::size_t i = 0; i < layout.size(); ++i) {
        table.entries.emplace(layout.snp_ids[i], LdScore{blocks.ld_scores[i], blocks.ld_scores[i]});
      }
      if (g.format(Format::Tsv) == Format::Json) {
        double sum = 0.0;
        for (double l : blocks.ld_scores) sum += l;
        os << nlohmann::ordered_json{{"snps", ld_snps},
                                     {"blocks", blocks.ranges.size()},
                                     {"mean_ld_score", sum / static_cast<double>(ld_snps)}}
                  .dump(2)
           << '\n';
      } else {
        write_ld_scores(os, layout.snp_ids, table);
      }
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      const auto methods = detail::parse_methods(bench_methods);
      std::vector<BenchmarkSummary> rows;
      AnalysisOptions base;
      base.blocks = g.blocks;
      base.lcv.grid_step = g.grid_step;
      for (const auto& name : detail::expand_scenarios(bench_scenarios)) {
        const auto run = run_benchmark(preset_scenario(name), bench_reps, methods, g.seed, g.workers, base);
        rows.insert(rows.end(), run.summaries.begin(), run.summaries.end());
      }
      if (g.format(Format::Tsv) == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& s : rows) j.push_back(to_json(s));
        os << j.dump(2) << '\n';
      } else if (bench_long) {
        write_benchmark_long_tsv(os, rows);
      } else {
        write_benchmark_tsv(os, rows);
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      sweep.seed = g.seed;
      sweep.workers = g.workers;
      sweep.ld_mode = parse_ld_mode(sweep_ld);
      AnalysisOptions base;
      base.blocks = g.blocks;
      base.lcv.grid_step = g.grid_step;
      const auto res = run_gcp_sweep(sweep, base);
      if (g.format(Format::Json) == Format::Json) {
        os << to_json(res, sweep_reps_out).dump(2) << '\n';
      } else {
        write_sweep_tsv(os, res);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "error: no subcommand given\n";
  return kExitData;
}

}  // namespace lcv::cli
