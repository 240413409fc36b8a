#pragma once

// Benjamini-Hochberg step-up procedure.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "lcv/error.hpp"

namespace lcv {

struct BhResult {
  std::vector<double> q_values;
  std::vector<bool> rejected;
  double level = 0.0;
};

/// Rejects the hypotheses with the i* smallest p-values, where i* is the
/// largest i with p_(i) <= i level / m. Adjusted values are
/// q_(i) = min_{j >= i} m p_(j) / j, capped at 1.
inline BhResult benjamini_hochberg(std::span<const double> p, double level) {
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(Errc::InvalidArgument, "p-values must lie in [0, 1]");
  }
  const std::size_t m = p.size();
  BhResult out;
  out.level = level;
  out.q_values.assign(m, 1.0);
  out.rejected.assign(m, false);
  if (m == 0) return out;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  double running = 1.0;
  for (std::size_t r = m; r-- > 0;) {
    const double scaled = p[order[r]] * static_cast<double>(m) / static_cast<double>(r + 1);
    running = std::min(running, scaled);
    out.q_values[order[r]] = std::min(1.0, running);
  }
  std::size_t cutoff = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (p[order[r]] <= static_cast<double>(r + 1) * level / static_cast<double>(m)) cutoff = r + 1;
  }
  for (std::size_t r = 0; r < cutoff; ++r) out.rejected[order[r]] = true;
  return out;
}

}  // namespace lcv
