#pragma once

// Named benchmark scenarios.
//
// LD-free scenarios use the reference size directly: M = 50 000 independent
// SNPs and the reference sample sizes. Scenarios with LD use M = 50 000 SNPs
// in synthetic blocks (about 20 000 effectively independent) with the
// reference sample sizes, which reproduces the reference heritability
// Z-scores. Fourth-moment precision under LD is limited by the number of
// causal SNPs, which is smaller than with a genome-wide panel.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "lcv/error.hpp"
#include "lcv/simulator.hpp"

namespace lcv {

inline constexpr std::size_t kNoLdSnps = 50'000;
inline constexpr std::size_t kLdSnps = 50'000;

namespace detail {

inline Intermediary symmetric_intermediary(double rho, double p_pi) {
  const double q = std::sqrt(std::abs(rho));
  return {q, rho < 0.0 ? -q : q, p_pi};
}

/// LD-free scenarios of the method comparison: N = 100k, h2 = 0.3, 1% of
/// SNPs on the intermediary, 4% with direct effects on each trait.
inline SimScenario no_ld_base(const std::string& name) {
  SimScenario s;
  s.name = name;
  s.m_snps = kNoLdSnps;
  s.n1 = s.n2 = 100'000.0;
  s.h2_1 = s.h2_2 = 0.3;
  s.p_gamma1 = s.p_gamma2 = 0.04;
  s.ld_mode = LdMode::None;
  return s;
}

/// Scenarios with LD and sample overlap: N = 100k, h2 = 0.3, 0.5% of SNPs
/// on the intermediary, 0.4% with direct effects on each trait, full sample
/// overlap with phenotypic correlation 0.2.
inline SimScenario ld_base(const std::string& name) {
  SimScenario s;
  s.name = name;
  s.m_snps = kLdSnps;
  s.ld_mode = LdMode::Blocks;
  s.h2_1 = s.h2_2 = 0.3;
  s.p_gamma1 = s.p_gamma2 = 0.004;
  s.rho_total = 0.2;
  return s;
}

inline void set_ld_sizes(SimScenario& s, double n1, double n2) {
  s.n1 = n1;
  s.n2 = n2;
  s.n_shared = std::min(s.n1, s.n2);
}

/// Two intermediaries with mirrored effects: L1 acts mostly on trait 1, L2
/// mostly on trait 2, each contributing half of rho = 0.2.
inline std::vector<Intermediary> mirrored_pair(double p1, double p2) {
  return {{0.5, 0.2, p1}, {0.2, 0.5, p2}};
}

}  // namespace detail

/// Relative noise of the mediated effect in the noisy causal mixture: the
/// trait-2 variance of the shared component is (1 + f) times the part
/// explained by the causal effect.
inline constexpr double kDefaultCausalNoiseFraction = 0.25;

inline SimScenario noisy_causal_mixture(double noise_fraction = kDefaultCausalNoiseFraction) {
  auto s = detail::no_ld_base("fig4f");
  s.n1 = s.n2 = 25'000.0;
  const double q = 0.2;
  const double p_shared = 0.01, p_only2 = 0.04;
  // Trait 1: all heritability on the shared component (variance 1 / p).
  const double v1 = 1.0 / p_shared;
  const double mediated = q * q * v1;
  const double v2_shared = mediated * (1.0 + noise_fraction);
  const double v2_only = (1.0 - p_shared * v2_shared) / p_only2;
  s.mixture = {{p_shared, v1, v2_shared, q * v1}, {p_only2, 0.0, v2_only, 0.0}};
  s.declared_gcp = 1.0;
  return s;
}

/// All named scenarios, keyed by name (fig2a-d, fig3a, fig4a-g, table3-a..bb).
inline std::map<std::string, SimScenario> preset_scenarios() {
  using detail::ld_base;
  using detail::no_ld_base;
  std::map<std::string, SimScenario> out;
  auto add = [&](SimScenario s) { out.emplace(s.name, std::move(s)); };

  // Null calibration without LD.
  {
    auto s = no_ld_base("fig2a");
    s.p_gamma_shared = 0.01;
    s.declared_gcp = 0.0;
    add(s);
  }
  const Intermediary null_shared = detail::symmetric_intermediary(0.2, 0.01);
  {
    auto s = no_ld_base("fig2b");
    s.intermediaries = {null_shared};
    add(s);
  }
  {
    auto s = no_ld_base("fig2c");
    s.intermediaries = {null_shared};
    s.p_gamma1 = 0.02;
    s.p_gamma2 = 0.08;
    add(s);
  }
  {
    auto s = no_ld_base("fig2d");
    s.intermediaries = {null_shared};
    s.n2 = s.n1 / 5.0;
    add(s);
  }
  // Power without LD: trait 1 fully causal, q2 = 0.2, N = 25k.
  {
    auto s = no_ld_base("fig3a");
    s.n1 = s.n2 = 25'000.0;
    s.intermediaries = {{1.0, 0.2, 0.01}};
    s.p_gamma1 = 0.0;
    add(s);
  }

  // Model violations without LD.
  {
    // Shared component with correlation 0.5 carrying 20% of each trait's
    // heritability; trait-specific components carry the rest.
    auto s = no_ld_base("fig4a");
    s.mixture = {{0.01, 20.0, 20.0, 10.0}, {0.04, 20.0, 0.0, 0.0}, {0.04, 0.0, 20.0, 0.0}};
    s.declared_gcp = 0.0;
    add(s);
  }
  {
    auto s = no_ld_base("fig4b");
    s.mixture = {{0.01, 20.0, 20.0, 10.0}, {0.02, 40.0, 0.0, 0.0}, {0.08, 0.0, 10.0, 0.0}};
    s.declared_gcp = 0.0;
    add(s);
  }
  {
    auto s = no_ld_base("fig4c");
    s.mixture = {{0.01, 20.0, 20.0, 10.0}, {0.04, 20.0, 0.0, 0.0}, {0.04, 0.0, 20.0, 0.0}};
    s.n2 = s.n1 / 5.0;
    s.declared_gcp = 0.0;
    add(s);
  }
  {
    auto s = no_ld_base("fig4d");
    s.intermediaries = detail::mirrored_pair(0.02, 0.02);
    s.declared_gcp = 0.0;
    add(s);
  }
  {
    auto s = no_ld_base("fig4e");
    s.intermediaries = detail::mirrored_pair(0.01, 0.08);
    s.declared_gcp = 0.0;
    add(s);
  }
  add(noisy_causal_mixture());
  {
    // Causal path plus a confounding intermediary carrying about a third of
    // the genetic correlation.
    auto s = no_ld_base("fig4g");
    s.n1 = s.n2 = 25'000.0;
    s.intermediaries = {{0.9, 0.2, 0.01}, {0.3, 0.3, 0.01}};
    s.declared_gcp = 1.0;
    add(s);
  }

  // Simulations with LD. Null rows a-s, causal rows t-bb.
  struct Row {
    const char* id;
    double rho;
    double p_gamma1, p_gamma2, p_gamma_shared;
    double n1, n2;
    double h2_1, h2_2;
    double rho_total;
  };
  const Row null_rows[] = {
      {"a", 0.0, 0.004, 0.004, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"b", 0.1, 0.004, 0.004, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"c", 0.2, 0.004, 0.004, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"d", 0.4, 0.004, 0.004, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"e", 0.8, 0.004, 0.004, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"f", 0.2, 0.004, 0.004, 0.003, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"g", 0.2, 0.002, 0.008, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"h", 0.2, 0.001, 0.016, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"i", 0.2, 0.004, 0.004, 0.0, 20e3, 100e3, 0.3, 0.3, 0.2},
      {"j", 0.2, 0.004, 0.004, 0.0, 4e3, 100e3, 0.3, 0.3, 0.2},
      {"k", 0.2, 0.004, 0.004, 0.0, 100e3, 100e3, 0.1, 0.5, 0.2},
      {"l", 0.2, 0.004, 0.004, 0.0, 100e3, 100e3, 0.3, 0.3, 0.4},
      {"m", 0.2, 0.004, 0.004, 0.0, 100e3, 100e3, 0.3, 0.3, 0.0},
      {"n", 0.0, 0.004, 0.004, 0.003, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"o", 0.0, 0.002, 0.008, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"p", 0.0, 0.001, 0.016, 0.0, 100e3, 100e3, 0.3, 0.3, 0.2},
      {"q", 0.0, 0.004, 0.004, 0.0, 20e3, 100e3, 0.3, 0.3, 0.2},
      {"r", 0.0, 0.004, 0.004, 0.0, 4e3, 100e3, 0.3, 0.3, 0.2},
      {"s", 0.0, 0.004, 0.004, 0.0, 100e3, 100e3, 0.1, 0.5, 0.2},
  };
  for (const auto& r : null_rows) {
    auto s = ld_base(std::string("table3-") + r.id);
    if (r.rho != 0.0) s.intermediaries = {detail::symmetric_intermediary(r.rho, 0.005)};
    s.p_gamma1 = r.p_gamma1;
    s.p_gamma2 = r.p_gamma2;
    s.p_gamma_shared = r.p_gamma_shared;
    s.h2_1 = r.h2_1;
    s.h2_2 = r.h2_2;
    s.rho_total = r.rho_total;
    s.declared_gcp = 0.0;
    detail::set_ld_sizes(s, r.n1, r.n2);
    add(s);
  }

  struct CausalRow {
    const char* id;
    double q1, q2, p_pi;
    double n1, n2;
  };
  // Partial causality at gcp = 0.5 with rho = 0.2: q1 = rho^(1/4), q2 = rho^(3/4).
  const double partial_q1 = std::pow(0.2, 0.25), partial_q2 = std::pow(0.2, 0.75);
  const CausalRow causal_rows[] = {
      {"t", 1.0, 0.25, 0.005, 100e3, 100e3},
      {"u", partial_q1, partial_q2, 0.005, 100e3, 100e3},
      {"v", 1.0, 0.25, 0.005, 20e3, 100e3},
      {"w", 1.0, 0.25, 0.005, 4e3, 100e3},
      {"x", 1.0, 0.25, 0.005, 100e3, 20e3},
      {"y", 1.0, 0.1, 0.005, 100e3, 100e3},
      {"z", 1.0, 0.25, 0.0005, 100e3, 100e3},
      {"aa", 1.0, 0.25, 0.05, 100e3, 100e3},
      {"bb", 1.0, 0.25, 1.0, 100e3, 100e3},
  };
  for (const auto& r : causal_rows) {
    auto s = ld_base(std::string("table3-") + r.id);
    s.intermediaries = {{r.q1, r.q2, r.p_pi}};
    if (r.q1 == 1.0) s.p_gamma1 = 0.0;
    detail::set_ld_sizes(s, r.n1, r.n2);
    add(s);
  }
  return out;
}

inline SimScenario preset_scenario(const std::string& name) {
  const auto all = preset_scenarios();
  auto it = all.find(name);
  if (it == all.end()) throw Error(Errc::UnknownScenario, "unknown scenario '" + name + "'");
  return it->second;
}

}  // namespace lcv
