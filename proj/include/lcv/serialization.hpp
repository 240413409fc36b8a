#pragma once

// JSON and TSV renderings of scenarios, pair reports, benchmark summaries and
// sweep results. Numbers are written in shortest round-trip form, so a report
// read back from TSV compares equal to the one written.

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lcv/core.hpp"
#include "lcv/data_io.hpp"
#include "lcv/error.hpp"
#include "lcv/ldsc.hpp"
#include "lcv/mr.hpp"
#include "lcv/pipeline.hpp"
#include "lcv/simulator.hpp"

namespace lcv {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Number formatting

/// Shortest decimal that parses back to the same double; "nan", "inf" and
/// "-inf" for non-finite values.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline double parse_report_double(std::string_view s) {
  if (s == "nan" || s == "NA" || s == ".") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw Error(Errc::MalformedInput, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

namespace detail {

/// JSON has no NaN or infinity; non-finite values become null.
inline json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Scenario

inline std::string_view ld_mode_name(LdMode m) noexcept { return m == LdMode::None ? "none" : "blocks"; }

inline LdMode parse_ld_mode(std::string_view s) {
  if (s == "none") return LdMode::None;
  if (s == "blocks") return LdMode::Blocks;
  throw Error(Errc::InvalidArgument, "unknown LD mode '" + std::string(s) + "'");
}

inline json to_json(const SimScenario& s) {
  json j;
  j["name"] = s.name;
  j["m_snps"] = s.m_snps;
  j["n1"] = s.n1;
  j["n2"] = s.n2;
  j["h2_1"] = s.h2_1;
  j["h2_2"] = s.h2_2;
  json q = json::array();
  for (const auto& i : s.intermediaries) q.push_back({{"q1", i.q1}, {"q2", i.q2}, {"p_pi", i.p_pi}});
  j["intermediaries"] = q;
  j["p_gamma1"] = s.p_gamma1;
  j["p_gamma2"] = s.p_gamma2;
  j["p_gamma_shared"] = s.p_gamma_shared;
  json mix = json::array();
  for (const auto& c : s.mixture) {
    mix.push_back({{"weight", c.weight}, {"var1", c.var1}, {"var2", c.var2}, {"cov", c.cov}});
  }
  j["mixture"] = mix;
  j["declared_gcp"] = s.declared_gcp ? json(*s.declared_gcp) : json(nullptr);
  j["ld_mode"] = ld_mode_name(s.ld_mode);
  j["ld"] = {{"block_size", s.ld.block_size},       {"rho_ld", s.ld.rho_ld},
             {"rho_ld_spread", s.ld.rho_ld_spread}, {"n_perturbed", s.ld.n_perturbed},
             {"perturbation", s.ld.perturbation},   {"seed", s.ld.seed}};
  j["n_shared"] = s.n_shared;
  j["rho_total"] = s.rho_total;
  j["noise_scale"] = s.noise_scale;
  j["seed"] = s.seed;
  return j;
}

/// Missing keys keep the values of `base`, so a file may override a preset.
inline SimScenario scenario_from_json(const json& j, SimScenario base = {}) {
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("name", base.name);
    get("m_snps", base.m_snps);
    get("n1", base.n1);
    get("n2", base.n2);
    get("h2_1", base.h2_1);
    get("h2_2", base.h2_2);
    if (j.contains("intermediaries")) {
      base.intermediaries.clear();
      for (const auto& q : j.at("intermediaries")) {
        base.intermediaries.push_back(
            {q.at("q1").get<double>(), q.at("q2").get<double>(), q.at("p_pi").get<double>()});
      }
    }
    get("p_gamma1", base.p_gamma1);
    get("p_gamma2", base.p_gamma2);
    get("p_gamma_shared", base.p_gamma_shared);
    if (j.contains("mixture")) {
      base.mixture.clear();
      for (const auto& c : j.at("mixture")) {
        base.mixture.push_back({c.at("weight").get<double>(), c.at("var1").get<double>(),
                                c.at("var2").get<double>(), c.at("cov").get<double>()});
      }
    }
    if (j.contains("declared_gcp")) {
      const auto& d = j.at("declared_gcp");
      base.declared_gcp = d.is_null() ? std::nullopt : std::optional<double>(d.get<double>());
    }
    if (j.contains("ld_mode")) base.ld_mode = parse_ld_mode(j.at("ld_mode").get<std::string>());
    if (j.contains("ld")) {
      const auto& l = j.at("ld");
      auto lget = [&](const char* key, auto& field) {
        if (l.contains(key)) field = l.at(key).get<std::decay_t<decltype(field)>>();
      };
      lget("block_size", base.ld.block_size);
      lget("rho_ld", base.ld.rho_ld);
      lget("rho_ld_spread", base.ld.rho_ld_spread);
      lget("n_perturbed", base.ld.n_perturbed);
      lget("perturbation", base.ld.perturbation);
      lget("seed", base.ld.seed);
    }
    get("n_shared", base.n_shared);
    get("rho_total", base.rho_total);
    get("noise_scale", base.noise_scale);
    get("seed", base.seed);
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedInput, std::string("scenario JSON: ") + e.what());
  }
  base.validate();
  return base;
}

inline json to_json(const SimTruth& t) {
  json kappa = json::array();
  for (double k : t.kappa_pi) kappa.push_back(detail::number(k));
  return {{"gcp", t.gcp ? detail::number(*t.gcp) : json(nullptr)},
          {"rho", t.rho},
          {"rho_realized", t.rho_realized},
          {"kappa_pi", kappa},
          {"h2_1", t.h2_1},
          {"h2_2", t.h2_2}};
}

// ---------------------------------------------------------------------------
// Analysis results

inline json to_json(const TraitNormalization& n) {
  return {{"s", n.s},
          {"s_se", n.s_se},
          {"intercept", n.intercept},
          {"intercept_fixed", n.intercept_fixed},
          {"slope", n.slope},
          {"h2", n.h2},
          {"h2_se", n.h2_se},
          {"z_h", detail::number(n.z_h)},
          {"weighted_mean_chi2", n.weighted_mean_chi2},
          {"excluded_count", n.excluded_count}};
}

inline json to_json(const CrossTraitFit& c) {
  return {{"rho_g", c.rho_g},
          {"rho_raw", c.rho_raw},
          {"rho_se", c.rho_se},
          {"rho_p", c.rho_p},
          {"intercept_12", c.intercept_12},
          {"excluded_count", c.excluded_count},
          {"clamped", c.clamped}};
}

inline json to_json(const LcvResult& r, bool with_grid = false) {
  json flags = json::array();
  for (auto f : LcvFlags::kAll) {
    if (r.flags.has(f)) flags.push_back(LcvFlags::name(f));
  }
  json j = {{"p_partial_causality", detail::number(r.p_partial_causality)},
            {"gcp_mean", detail::number(r.gcp_mean)},
            {"gcp_se", detail::number(r.gcp_se)},
            {"rho_g", r.rho_g},
            {"rho_se", r.rho_se},
            {"rho_p", r.rho_p},
            {"z_h1", detail::number(r.z_h1)},
            {"z_h2", detail::number(r.z_h2)},
            {"s0", detail::number(r.s0)},
            {"s0_se", detail::number(r.s0_se)},
            {"t0", detail::number(r.t0)},
            {"moments",
             {{"m31", r.moments.m31}, {"m13", r.moments.m13}, {"k1", r.moments.k1}, {"k2", r.moments.k2}}},
            {"flags", flags}};
  if (with_grid) {
    json g = json::array();
    for (std::size_t i = 0; i < r.grid.xs.size(); ++i) {
      g.push_back({{"x", r.grid.xs[i]},
                   {"s", detail::number(r.grid.s_values[i])},
                   {"se", detail::number(r.grid.s_ses[i])},
                   {"likelihood", r.grid.likelihood[i]}});
    }
    j["grid"] = g;
  }
  return j;
}

inline json to_json(const MrResult& r) {
  json j = {{"method", mr_method_name(r.method)},
            {"estimate", detail::number(r.estimate)},
            {"se", detail::number(r.se)},
            {"p", detail::number(r.p)},
            {"k_instruments", r.k_instruments}};
  if (r.method == MrMethod::Bidir) j["k_instruments_2"] = r.k_instruments_2;
  if (r.intercept) j["intercept"] = *r.intercept;
  return j;
}

inline json to_json(const MrOutcome& o) {
  if (o.result) return to_json(*o.result);
  return {{"method", mr_method_name(o.method)}, {"error", Error::qualified(*o.error)}};
}

inline json to_json(const PairReport& r, bool with_grid = false) {
  json mr = json::array();
  for (const auto& o : r.mr) mr.push_back(to_json(o));
  return {{"trait1", r.trait1},
          {"trait2", r.trait2},
          {"swapped", r.swapped},
          {"n_snps", r.n_snps},
          {"lcv", to_json(r.lcv, with_grid)},
          {"normalization", {{"trait1", to_json(r.norm1)}, {"trait2", to_json(r.norm2)}}},
          {"cross_trait", to_json(r.cross)},
          {"mr", mr},
          {"runtime_ms", r.runtime_ms}};
}

// ---------------------------------------------------------------------------
// Pair report TSV: one row per (pair, method)

/// One line of the pair report. LCV rows fill the gcp and correlation
/// columns; MR rows fill estimate, se and instrument counts. Unused
/// numeric fields are NaN and print as "nan".
struct ReportRow {
  std::string trait1, trait2, method;
  double p = std::numeric_limits<double>::quiet_NaN();
  double q_value = std::numeric_limits<double>::quiet_NaN();
  double gcp = std::numeric_limits<double>::quiet_NaN();
  double gcp_se = std::numeric_limits<double>::quiet_NaN();
  double rho_g = std::numeric_limits<double>::quiet_NaN();
  double rho_se = std::numeric_limits<double>::quiet_NaN();
  double zh1 = std::numeric_limits<double>::quiet_NaN();
  double zh2 = std::numeric_limits<double>::quiet_NaN();
  std::string flags = ".";
  double estimate = std::numeric_limits<double>::quiet_NaN();
  double se = std::numeric_limits<double>::quiet_NaN();
  std::size_t k_instruments = 0;
  double intercept = std::numeric_limits<double>::quiet_NaN();
};

inline constexpr std::array<std::string_view, 16> kReportColumns = {
    "trait1", "trait2", "method", "p",     "q_value",  "gcp", "gcp_se",        "rho_g",
    "rho_se", "zh1",    "zh2",    "flags", "estimate", "se",  "k_instruments", "intercept"};

/// Rows for one pair: the LCV row first, then one row per MR method that
/// produced a result. Errors appear in the flags column of the MR row.
inline std::vector<ReportRow> report_rows(const PairReport& r,
                                          std::optional<double> q_value = std::nullopt) {
  std::vector<ReportRow> out;
  ReportRow lcv;
  lcv.trait1 = r.trait1;
  lcv.trait2 = r.trait2;
  lcv.method = "LCV";
  lcv.p = r.lcv.p_partial_causality;
  if (q_value) lcv.q_value = *q_value;
  lcv.gcp = r.lcv.gcp_mean;
  lcv.gcp_se = r.lcv.gcp_se;
  lcv.rho_g = r.lcv.rho_g;
  lcv.rho_se = r.lcv.rho_se;
  lcv.zh1 = r.lcv.z_h1;
  lcv.zh2 = r.lcv.z_h2;
  lcv.flags = r.lcv.flags.to_string();
  out.push_back(lcv);
  for (const auto& o : r.mr) {
    ReportRow row;
    row.trait1 = r.trait1;
    row.trait2 = r.trait2;
    row.method = std::string(mr_method_name(o.method));
    if (o.result) {
      row.p = o.result->p;
      row.estimate = o.result->estimate;
      row.se = o.result->se;
      row.k_instruments = o.result->k_instruments;
      if (o.result->intercept) row.intercept = *o.result->intercept;
    } else {
      row.flags = Error::qualified(*o.error);
    }
    out.push_back(row);
  }
  return out;
}

inline void write_report_header(std::ostream& out) {
  for (std::size_t i = 0; i < kReportColumns.size(); ++i) {
    out << (i ? "\t" : "") << kReportColumns[i];
  }
  out << '\n';
}

inline void write_report_row(std::ostream& out, const ReportRow& r) {
  out << r.trait1 << '\t' << r.trait2 << '\t' << r.method << '\t' << format_double(r.p) << '\t'
      << format_double(r.q_value) << '\t' << format_double(r.gcp) << '\t' << format_double(r.gcp_se)
      << '\t' << format_double(r.rho_g) << '\t' << format_double(r.rho_se) << '\t'
      << format_double(r.zh1) << '\t' << format_double(r.zh2) << '\t' << r.flags << '\t'
      << format_double(r.estimate) << '\t' << format_double(r.se) << '\t' << r.k_instruments << '\t'
      << format_double(r.intercept) << '\n';
}

inline void write_report_tsv(std::ostream& out, std::span<const ReportRow> rows) {
  write_report_header(out);
  for (const auto& r : rows) write_report_row(out, r);
}

/// Lines starting with '#' before the header are comments.
inline std::vector<ReportRow> read_report_tsv(std::istream& in) {
  std::string line;
  do {
    if (!std::getline(in, line)) throw Error(Errc::EmptyTable, "report has no header");
    detail::strip_cr(line);
  } while (line.starts_with('#'));
  const auto header = detail::split_tabs(line);
  if (header.size() != kReportColumns.size() ||
      !std::equal(header.begin(), header.end(), kReportColumns.begin())) {
    throw Error(Errc::MissingColumn, "report header does not match the expected columns");
  }
  std::vector<ReportRow> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line.empty()) continue;
    const auto f = detail::split_tabs(line);
    if (f.size() != kReportColumns.size()) {
      throw Error(Errc::MalformedInput, "report line " + std::to_string(line_no) + " has " +
                                            std::to_string(f.size()) + " fields");
    }
    ReportRow r;
    r.trait1 = f[0];
    r.trait2 = f[1];
    r.method = f[2];
    r.p = parse_report_double(f[3]);
    r.q_value = parse_report_double(f[4]);
    r.gcp = parse_report_double(f[5]);
    r.gcp_se = parse_report_double(f[6]);
    r.rho_g = parse_report_double(f[7]);
    r.rho_se = parse_report_double(f[8]);
    r.zh1 = parse_report_double(f[9]);
    r.zh2 = parse_report_double(f[10]);
    r.flags = f[11];
    r.estimate = parse_report_double(f[12]);
    r.se = parse_report_double(f[13]);
    const auto k = detail::parse_int<std::size_t>(f[14]);
    if (!k) throw Error(Errc::MalformedInput, "bad k_instruments on line " + std::to_string(line_no));
    r.k_instruments = *k;
    r.intercept = parse_report_double(f[15]);
    out.push_back(std::move(r));
  }
  return out;
}

/// Field-wise equality with NaN == NaN.
inline bool same_row(const ReportRow& a, const ReportRow& b) {
  auto eq = [](double x, double y) { return (std::isnan(x) && std::isnan(y)) || x == y; };
  return a.trait1 == b.trait1 && a.trait2 == b.trait2 && a.method == b.method && eq(a.p, b.p) &&
         eq(a.q_value, b.q_value) && eq(a.gcp, b.gcp) && eq(a.gcp_se, b.gcp_se) &&
         eq(a.rho_g, b.rho_g) && eq(a.rho_se, b.rho_se) && eq(a.zh1, b.zh1) && eq(a.zh2, b.zh2) &&
         a.flags == b.flags && eq(a.estimate, b.estimate) && eq(a.se, b.se) &&
         a.k_instruments == b.k_instruments && eq(a.intercept, b.intercept);
}

// ---------------------------------------------------------------------------
// Matrix

inline std::vector<ReportRow> matrix_rows(const MatrixResult& m) {
  std::vector<ReportRow> out;
  for (const auto& e : m.entries) {
    if (!e.report) continue;
    auto rows = report_rows(*e.report, e.q_value);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

inline json to_json(const MatrixResult& m) {
  json pairs = json::array();
  for (const auto& e : m.entries) {
    json j = {{"trait1", e.trait1}, {"trait2", e.trait2}, {"prescreen_passed", e.prescreen_passed}};
    if (e.cross) j["cross_trait"] = to_json(*e.cross);
    if (e.report) {
      j["report"] = to_json(*e.report);
      j["q_value"] = e.q_value;
      j["rejected"] = e.rejected;
    }
    if (e.error) j["error"] = e.error_message;
    pairs.push_back(j);
  }
  return {{"prescreen_p", m.prescreen_p},
          {"fdr_level", m.fdr_level},
          {"family_size", m.family_size},
          {"note", "the FDR family contains only pairs passing the genetic-correlation prescreen"},
          {"pairs", pairs}};
}

// ---------------------------------------------------------------------------
// Benchmarks

inline json to_json(const BenchmarkSummary& s) {
  return {{"scenario", s.scenario},
          {"method", bench_method_name(s.method)},
          {"rho", s.rho},
          {"n_reps", s.n_reps},
          {"n_failed", s.n_failed},
          {"fpr_05", s.fpr_05},
          {"fpr_001", s.fpr_001},
          {"mean_chi2", s.mean_chi2},
          {"mean_gcp", s.mean_gcp},
          {"sd_gcp", s.sd_gcp},
          {"rms_se", s.rms_se},
          {"mean_zh1", s.mean_zh1}};
}

/// Wide layout mirroring the simulation tables: one row per scenario and method.
inline void write_benchmark_tsv(std::ostream& out, std::span<const BenchmarkSummary> rows) {
  out << "scenario\tmethod\trho\tp_lt_05\tp_lt_001\tmean_chi2\tmean_gcp\tsd_gcp\trms_se\tmean_zh1"
         "\tn_reps\tn_failed\n";
  for (const auto& s : rows) {
    out << s.scenario << '\t' << bench_method_name(s.method) << '\t' << format_double(s.rho) << '\t'
        << format_double(s.fpr_05) << '\t' << format_double(s.fpr_001) << '\t'
        << format_double(s.mean_chi2) << '\t' << format_double(s.mean_gcp) << '\t'
        << format_double(s.sd_gcp) << '\t' << format_double(s.rms_se) << '\t'
        << format_double(s.mean_zh1) << '\t' << s.n_reps << '\t' << s.n_failed << '\n';
  }
}

/// Long layout for plotting: scenario, method, metric, value.
inline void write_benchmark_long_tsv(std::ostream& out, std::span<const BenchmarkSummary> rows) {
  out << "scenario\tmethod\tmetric\tvalue\n";
  for (const auto& s : rows) {
    const std::pair<const char*, double> metrics[] = {
        {"p_lt_05", s.fpr_05},      {"p_lt_001", s.fpr_001}, {"mean_chi2", s.mean_chi2},
        {"mean_gcp", s.mean_gcp},   {"sd_gcp", s.sd_gcp},    {"rms_se", s.rms_se},
        {"mean_zh1", s.mean_zh1},   {"n_reps", static_cast<double>(s.n_reps)},
        {"n_failed", static_cast<double>(s.n_failed)}};
    for (const auto& [name, value] : metrics) {
      out << s.scenario << '\t' << bench_method_name(s.method) << '\t' << name << '\t'
          << format_double(value) << '\n';
    }
  }
}

inline json to_json(const SweepStats& s) {
  return {{"n", s.n},
          {"slope", s.slope},
          {"slope_se", s.slope_se},
          {"intercept", s.intercept},
          {"rmse", s.rmse},
          {"root_mean_posterior_variance", s.rmpv}};
}

inline json to_json(const SweepSummary& s, bool with_replicates = false) {
  json j = {{"all", to_json(s.all)}, {"ascertained", to_json(s.ascertained)}, {"n_failed", s.n_failed}};
  if (with_replicates) {
    json reps = json::array();
    for (const auto& r : s.replicates) {
      reps.push_back({{"true_gcp", r.true_gcp},
                      {"true_rho", r.true_rho},
                      {"ok", r.ok},
                      {"gcp", detail::number(r.gcp)},
                      {"gcp_se", detail::number(r.gcp_se)},
                      {"p", detail::number(r.p)},
                      {"rho_p", detail::number(r.rho_p)}});
    }
    j["replicates"] = reps;
  }
  return j;
}

inline void write_sweep_tsv(std::ostream& out, const SweepSummary& s) {
  out << "subset\tn\tslope\tslope_se\tintercept\trmse\troot_mean_posterior_variance\n";
  for (const auto& [name, st] : {std::pair<const char*, const SweepStats&>{"all", s.all},
                                 std::pair<const char*, const SweepStats&>{"ascertained", s.ascertained}}) {
    out << name << '\t' << st.n << '\t' << format_double(st.slope) << '\t' << format_double(st.slope_se)
        << '\t' << format_double(st.intercept) << '\t' << format_double(st.rmse) << '\t'
        << format_double(st.rmpv) << '\n';
  }
}

}  // namespace lcv
