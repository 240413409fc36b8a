#pragma once

// Small numerical helpers shared across modules: tail probabilities,
// weighted sums and a closed-form weighted simple regression.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace lcv::stats {

inline double normal_two_tailed_p(double z) {
  if (std::isnan(z)) return std::numeric_limits<double>::quiet_NaN();
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

inline double chi2_upper_p(double chi2, double df = 1.0) {
  if (std::isnan(chi2)) return std::numeric_limits<double>::quiet_NaN();
  if (chi2 <= 0.0) return 1.0;
  if (std::isinf(chi2)) return 0.0;
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, chi2));
}

inline double t_two_tailed_p(double t, double df) {
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

/// log density of Student's t with `df` degrees of freedom.
inline double t_log_pdf(double t, double df) {
  if (std::isinf(t)) return -std::numeric_limits<double>::infinity();
  return std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
         0.5 * std::log(df * M_PI) -
         0.5 * (df + 1.0) * std::log1p(t * t / df);
}

inline double weighted_mean(std::span<const double> x, std::span<const double> w) {
  double sw = 0.0, swx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    swx += w[i] * x[i];
  }
  return swx / sw;
}

inline double mean(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

/// Sample standard deviation (n - 1 denominator).
inline double sample_sd(std::span<const double> x) {
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

/// Sufficient statistics of a weighted simple regression y ~ a + b x.
/// Additive, so leave-one-block-out sums are `total - block`.
struct RegressionSums {
  double sw = 0.0, swx = 0.0, swxx = 0.0, swy = 0.0, swxy = 0.0;

  void add(double w, double x, double y) {
    sw += w;
    swx += w * x;
    swxx += w * x * x;
    swy += w * y;
    swxy += w * x * y;
  }
  RegressionSums& operator+=(const RegressionSums& o) {
    sw += o.sw; swx += o.swx; swxx += o.swxx; swy += o.swy; swxy += o.swxy;
    return *this;
  }
  RegressionSums& operator-=(const RegressionSums& o) {
    sw -= o.sw; swx -= o.swx; swxx -= o.swxx; swy -= o.swy; swxy -= o.swxy;
    return *this;
  }
  friend RegressionSums operator-(RegressionSums a, const RegressionSums& b) { return a -= b; }
  friend RegressionSums operator+(RegressionSums a, const RegressionSums& b) { return a += b; }
};

struct LineFit {
  double intercept;
  double slope;
};

/// Weighted least squares with free intercept. Returns NaNs when x has no
/// weighted spread (the caller decides whether that is an error).
inline LineFit fit_line(const RegressionSums& s) {
  const double sxx = s.swxx - s.swx * s.swx / s.sw;
  const double sxy = s.swxy - s.swx * s.swy / s.sw;
  const double scale = std::max(1.0, std::abs(s.swxx));
  if (!(s.sw > 0.0) || std::abs(sxx) <= 1e-12 * scale) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
  const double slope = sxy / sxx;
  return {(s.swy - slope * s.swx) / s.sw, slope};
}

/// Weighted least squares through a fixed intercept.
inline double fit_slope_fixed_intercept(const RegressionSums& s, double intercept) {
  return (s.swxy - intercept * s.swx) / s.swxx;
}

/// Ranks starting at 1, ties receive their average rank.
inline std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

inline double pearson(std::span<const double> x, std::span<const double> y) {
  const double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double spearman(std::span<const double> x, std::span<const double> y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

}  // namespace lcv::stats
