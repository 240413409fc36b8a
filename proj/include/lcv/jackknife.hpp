#pragma once

// Delete-one-block jackknife over contiguous SNP blocks.

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lcv/error.hpp"

namespace lcv {

/// Half-open SNP index range [begin, end).
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
};

/// k contiguous blocks covering [0, n), sizes differing by at most one.
struct BlockPartition {
  std::vector<IndexRange> blocks;

  std::size_t count() const noexcept { return blocks.size(); }
  std::size_t n_snps() const noexcept { return blocks.empty() ? 0 : blocks.back().end; }

  static BlockPartition equal(std::size_t n_snps, std::size_t k) {
    if (k < 2) throw Error(Errc::DegenerateBlocks, "jackknife needs at least 2 blocks");
    if (n_snps < k) {
      throw Error(Errc::DegenerateBlocks,
                  std::to_string(n_snps) + " SNPs cannot fill " + std::to_string(k) + " blocks");
    }
    BlockPartition p;
    p.blocks.reserve(k);
    const std::size_t base = n_snps / k;
    const std::size_t extra = n_snps % k;
    std::size_t start = 0;
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t len = base + (b < extra ? 1 : 0);
      p.blocks.push_back({start, start + len});
      start += len;
    }
    return p;
  }

  void validate() const {
    if (blocks.size() < 2) throw Error(Errc::DegenerateBlocks, "jackknife needs at least 2 blocks");
    for (const auto& b : blocks) {
      if (b.size() == 0) throw Error(Errc::DegenerateBlocks, "empty jackknife block");
    }
  }
};

/// The SNPs retained when one block (or none) is left out.
class SnpSubset {
 public:
  SnpSubset(const BlockPartition& partition, std::optional<std::size_t> omitted)
      : partition_(&partition), omitted_(omitted) {}

  std::optional<std::size_t> omitted_block() const noexcept { return omitted_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < partition_->count(); ++b) {
      if (omitted_ && *omitted_ == b) continue;
      const auto& r = partition_->blocks[b];
      for (std::size_t i = r.begin; i < r.end; ++i) f(i);
    }
  }

  std::size_t size() const {
    std::size_t n = partition_->n_snps();
    if (omitted_) n -= partition_->blocks[*omitted_].size();
    return n;
  }

 private:
  const BlockPartition* partition_;
  std::optional<std::size_t> omitted_;
};

struct JackknifeEstimate {
  double estimate = 0.0;
  double se = 0.0;
  std::vector<double> leave_one_out;
};

/// Standard error from delete-one-block replicates:
/// se^2 = (k - 1) / k * sum_j (S_j - mean S)^2.
inline double jackknife_se(std::span<const double> leave_one_out) {
  const auto k = static_cast<double>(leave_one_out.size());
  double mean = 0.0;
  for (double v : leave_one_out) mean += v;
  mean /= k;
  double ss = 0.0;
  for (double v : leave_one_out) ss += (v - mean) * (v - mean);
  return std::sqrt((k - 1.0) / k * ss);
}

inline JackknifeEstimate jackknife_from_replicates(double full, std::vector<double> leave_one_out) {
  if (leave_one_out.size() < 2) throw Error(Errc::DegenerateBlocks, "jackknife needs at least 2 blocks");
  JackknifeEstimate out;
  out.estimate = full;
  out.se = jackknife_se(leave_one_out);
  out.leave_one_out = std::move(leave_one_out);
  return out;
}

/// Evaluates `statistic(const SnpSubset&)` on all SNPs and on each
/// leave-one-block-out subset, reducing in block order.
template <class Statistic>
JackknifeEstimate jackknife_scalar(Statistic&& statistic, const BlockPartition& blocks) {
  blocks.validate();
  const double full = statistic(SnpSubset(blocks, std::nullopt));
  std::vector<double> loo(blocks.count());
  for (std::size_t b = 0; b < blocks.count(); ++b) loo[b] = statistic(SnpSubset(blocks, b));
  return jackknife_from_replicates(full, std::move(loo));
}

}  // namespace lcv
