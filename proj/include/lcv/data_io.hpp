#pragma once

// Summary-statistic and LD score tables: parsing, validation, filtering and
// allele harmonization of two traits onto a common SNP set.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lcv/error.hpp"

namespace lcv {

struct SnpRecord {
  std::string snp_id;
  int chrom = 0;
  std::int64_t position_bp = 0;
  std::optional<double> position_cm;
  char allele_a1 = 'A';
  char allele_a2 = 'G';
  double z = 0.0;
  double n = 0.0;
};

struct SumstatsTable {
  std::string trait_label;
  std::vector<SnpRecord> records;

  std::size_t size() const noexcept { return records.size(); }
  bool empty() const noexcept { return records.empty(); }
  bool has_genetic_map() const noexcept {
    return !records.empty() &&
           std::all_of(records.begin(), records.end(),
                       [](const SnpRecord& r) { return r.position_cm.has_value(); });
  }
};

struct LdScore {
  double ell = 1.0;
  double ell_regression = 1.0;
};

struct LdScoreTable {
  std::unordered_map<std::string, LdScore> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const LdScore* find(const std::string& snp_id) const {
    auto it = entries.find(snp_id);
    return it == entries.end() ? nullptr : &it->second;
  }
};

/// Maps the canonical sumstats fields onto arbitrary header names.
struct ColumnMap {
  std::string snp = "SNP";
  std::string chrom = "CHR";
  std::string bp = "BP";
  std::string cm = "CM";
  std::string a1 = "A1";
  std::string a2 = "A2";
  std::string z = "Z";
  std::string n = "N";
};

/// Row-level validation outcome of a parse.
struct ParseReport {
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;
  std::size_t bad_field = 0;
  std::size_t nonpositive_n = 0;
  std::size_t nonfinite_z = 0;
  std::size_t bad_allele = 0;
  std::size_t duplicate_position = 0;

  std::size_t rows_rejected() const noexcept { return rows_read - rows_kept; }
};

struct ParsedSumstats {
  SumstatsTable table;
  ParseReport report;
};

/// Inclusive base-pair interval on one chromosome.
struct GenomicRegion {
  int chrom;
  std::int64_t bp_start;
  std::int64_t bp_end;
};

/// Extended MHC, GRCh37 coordinates.
inline constexpr GenomicRegion kMhcRegion{6, 25'000'000, 34'000'000};

struct AlignedPair {
  std::vector<std::string> snp_ids;
  std::vector<int> chrom;
  std::vector<std::optional<double>> position_cm;
  std::vector<double> z1, z2;
  std::vector<double> n1, n2;
  std::vector<LdScore> ld;
  std::vector<bool> flip_mask;
  std::size_t dropped_incompatible = 0;
  std::string label1, label2;

  std::size_t size() const noexcept { return snp_ids.size(); }
  std::size_t flip_count() const noexcept {
    return static_cast<std::size_t>(std::count(flip_mask.begin(), flip_mask.end(), true));
  }
  std::vector<double> ell() const {
    std::vector<double> out(ld.size());
    std::transform(ld.begin(), ld.end(), out.begin(), [](const LdScore& l) { return l.ell; });
    return out;
  }
  std::vector<double> ell_regression() const {
    std::vector<double> out(ld.size());
    std::transform(ld.begin(), ld.end(), out.begin(),
                   [](const LdScore& l) { return l.ell_regression; });
    return out;
  }
};

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<int> parse_chrom(std::string_view s) {
  if (s.size() > 3 && (s.substr(0, 3) == "chr" || s.substr(0, 3) == "CHR")) s.remove_prefix(3);
  if (s == "X" || s == "x") return 23;
  return parse_int<int>(s);
}

inline std::optional<char> parse_allele(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c != 'A' && c != 'C' && c != 'G' && c != 'T') return std::nullopt;
  return c;
}

inline char complement(char a) {
  switch (a) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
  }
  return 'N';
}

inline bool strand_ambiguous(char a1, char a2) { return complement(a1) == a2; }

inline std::size_t require_column(const std::vector<std::string_view>& header,
                                  const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(Errc::MissingColumn, "column '" + name + "' not in header");
  return static_cast<std::size_t>(it - header.begin());
}

inline std::optional<std::size_t> optional_column(const std::vector<std::string_view>& header,
                                                  const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace detail

/// Parses a tab-separated summary-statistics table. Rows failing validation
/// are dropped and counted; structural problems throw.
inline ParsedSumstats parse_sumstats(std::istream& in, const ColumnMap& columns,
                                     std::string trait_label) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::EmptyTable, "no header line");
  detail::strip_cr(line);
  const auto header = detail::split_tabs(line);
  const std::size_t c_snp = detail::require_column(header, columns.snp);
  const std::size_t c_chr = detail::require_column(header, columns.chrom);
  const std::size_t c_bp = detail::require_column(header, columns.bp);
  const auto c_cm = detail::optional_column(header, columns.cm);
  const std::size_t c_a1 = detail::require_column(header, columns.a1);
  const std::size_t c_a2 = detail::require_column(header, columns.a2);
  const std::size_t c_z = detail::require_column(header, columns.z);
  const std::size_t c_n = detail::require_column(header, columns.n);
  const std::size_t n_fields = header.size();

  ParsedSumstats out;
  out.table.trait_label = std::move(trait_label);
  ParseReport& rep = out.report;
  std::unordered_set<std::string> seen;

  while (std::getline(in, line)) {
    detail::strip_cr(line);
    if (line.empty()) continue;
    ++rep.rows_read;
    const auto f = detail::split_tabs(line);
    if (f.size() != n_fields) {
      ++rep.bad_field;
      continue;
    }
    SnpRecord r;
    r.snp_id = std::string(f[c_snp]);
    const auto chrom = detail::parse_chrom(f[c_chr]);
    const auto bp = detail::parse_int<std::int64_t>(f[c_bp]);
    const auto z = detail::parse_double(f[c_z]);
    const auto n = detail::parse_double(f[c_n]);
    if (r.snp_id.empty() || !chrom || !bp || !z || !n || *bp < 0) {
      ++rep.bad_field;
      continue;
    }
    if (c_cm) {
      const auto cm = detail::parse_double(f[*c_cm]);
      if (cm && std::isfinite(*cm)) r.position_cm = *cm;
      else if (f[*c_cm] != "NA" && !f[*c_cm].empty()) {
        ++rep.bad_field;
        continue;
      }
    }
    const auto a1 = detail::parse_allele(f[c_a1]);
    const auto a2 = detail::parse_allele(f[c_a2]);
    if (!a1 || !a2 || *a1 == *a2) {
      ++rep.bad_allele;
      continue;
    }
    if (!std::isfinite(*z)) {
      ++rep.nonfinite_z;
      continue;
    }
    if (!(*n > 0.0) || !std::isfinite(*n)) {
      ++rep.nonpositive_n;
      continue;
    }
    if (!seen.insert(r.snp_id).second) {
      throw Error(Errc::DuplicateSnpId, "snp_id '" + r.snp_id + "' appears more than once");
    }
    r.chrom = *chrom;
    r.position_bp = *bp;
    r.allele_a1 = *a1;
    r.allele_a2 = *a2;
    r.z = *z;
    r.n = *n;
    out.table.records.push_back(std::move(r));
  }

  auto& recs = out.table.records;
  std::stable_sort(recs.begin(), recs.end(), [](const SnpRecord& a, const SnpRecord& b) {
    return std::tie(a.chrom, a.position_bp) < std::tie(b.chrom, b.position_bp);
  });
  // Positions must be strictly increasing within a chromosome; later
  // duplicates (in input order) are dropped.
  auto last = std::unique(recs.begin(), recs.end(), [](const SnpRecord& a, const SnpRecord& b) {
    return a.chrom == b.chrom && a.position_bp == b.position_bp;
  });
  rep.duplicate_position = static_cast<std::size_t>(recs.end() - last);
  recs.erase(last, recs.end());
  rep.rows_kept = recs.size();

  if (recs.empty()) throw Error(Errc::EmptyTable, "no valid rows in '" + out.table.trait_label + "'");
  return out;
}

inline ParsedSumstats parse_sumstats(const std::filesystem::path& path,
                                     const ColumnMap& columns = {},
                                     std::string trait_label = {}) {
  auto in = detail::open_input(path);
  if (trait_label.empty()) trait_label = path.stem().string();
  return parse_sumstats(in, columns, std::move(trait_label));
}

inline void write_sumstats(std::ostream& out, const SumstatsTable& table) {
  // A partial genetic map is written with NA for the missing positions.
  const bool with_cm = std::any_of(table.records.begin(), table.records.end(),
                                   [](const SnpRecord& r) { return r.position_cm.has_value(); });
  out << "SNP\tCHR\tBP";
  if (with_cm) out << "\tCM";
  out << "\tA1\tA2\tZ\tN\n";
  out << std::setprecision(17);
  for (const auto& r : table.records) {
    out << r.snp_id << '\t' << r.chrom << '\t' << r.position_bp;
    if (with_cm) {
      out << '\t';
      if (r.position_cm) out << *r.position_cm;
      else out << "NA";
    }
    out << '\t' << r.allele_a1 << '\t' << r.allele_a2 << '\t' << r.z << '\t' << r.n << '\n';
  }
}

inline void write_sumstats(const std::filesystem::path& path, const SumstatsTable& table) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write '" + path.string() + "'");
  write_sumstats(out, table);
}

/// LD score TSV with columns SNP, L2 and optionally L2_REG (defaults to L2).
inline LdScoreTable parse_ld_scores(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::EmptyTable, "LD score file has no header");
  detail::strip_cr(line);
  const auto header = detail::split_tabs(line);
  const std::size_t c_snp = detail::require_column(header, "SNP");
  const std::size_t c_l2 = detail::require_column(header, "L2");
  const auto c_reg = detail::optional_column(header, "L2_REG");

  LdScoreTable table;
  while (std::getline(in, line)) {
    detail::strip_cr(line);
    if (line.empty()) continue;
    const auto f = detail::split_tabs(line);
    if (f.size() != header.size()) throw Error(Errc::MalformedInput, "ragged LD score row");
    const auto l2 = detail::parse_double(f[c_l2]);
    if (!l2 || !std::isfinite(*l2) || *l2 < 0.0) {
      throw Error(Errc::MalformedInput, "invalid L2 for '" + std::string(f[c_snp]) + "'");
    }
    LdScore score{*l2, *l2};
    if (c_reg) {
      const auto reg = detail::parse_double(f[*c_reg]);
      if (!reg || !std::isfinite(*reg) || *reg < 0.0) {
        throw Error(Errc::MalformedInput, "invalid L2_REG for '" + std::string(f[c_snp]) + "'");
      }
      score.ell_regression = *reg;
    }
    if (!table.entries.emplace(std::string(f[c_snp]), score).second) {
      throw Error(Errc::DuplicateSnpId, "LD score for '" + std::string(f[c_snp]) + "' repeated");
    }
  }
  if (table.entries.empty()) throw Error(Errc::EmptyTable, "LD score file has no rows");
  return table;
}

inline LdScoreTable parse_ld_scores(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return parse_ld_scores(in);
}

inline void write_ld_scores(std::ostream& out, std::span<const std::string> snp_ids,
                            const LdScoreTable& table) {
  out << "SNP\tL2\tL2_REG\n" << std::setprecision(17);
  for (const auto& id : snp_ids) {
    const LdScore* s = table.find(id);
    if (s == nullptr) continue;
    out << id << '\t' << s->ell << '\t' << s->ell_regression << '\n';
  }
}

/// LD scores of exactly one for every SNP in `table` (the no-LD setting).
inline LdScoreTable unit_ld_scores(const SumstatsTable& table) {
  LdScoreTable out;
  out.entries.reserve(table.size());
  for (const auto& r : table.records) out.entries.emplace(r.snp_id, LdScore{1.0, 1.0});
  return out;
}

inline SumstatsTable filter_snps(const SumstatsTable& table,
                                 const std::optional<std::unordered_set<std::string>>& keep_list,
                                 std::span<const GenomicRegion> exclude_regions) {
  for (const auto& reg : exclude_regions) {
    if (!(reg.bp_start < reg.bp_end)) {
      throw Error(Errc::InvalidArgument, "excluded region must satisfy start < end");
    }
  }
  SumstatsTable out;
  out.trait_label = table.trait_label;
  for (const auto& r : table.records) {
    if (keep_list && !keep_list->contains(r.snp_id)) continue;
    const bool excluded = std::any_of(exclude_regions.begin(), exclude_regions.end(),
                                      [&](const GenomicRegion& g) {
                                        return g.chrom == r.chrom && r.position_bp >= g.bp_start &&
                                               r.position_bp <= g.bp_end;
                                      });
    if (!excluded) out.records.push_back(r);
  }
  if (out.empty()) throw Error(Errc::EmptyTable, "no SNPs survive filtering");
  return out;
}

/// Intersects two traits and the LD score table, orienting trait 2 to trait
/// 1's alleles. Strand-ambiguous and allele-incompatible SNPs are dropped.
inline AlignedPair align_pair(const SumstatsTable& t1, const SumstatsTable& t2,
                              const LdScoreTable& ld) {
  if (t1.empty() || t2.empty()) throw Error(Errc::EmptyTable, "cannot align an empty table");
  std::unordered_map<std::string_view, const SnpRecord*> index2;
  index2.reserve(t2.size());
  for (const auto& r : t2.records) index2.emplace(r.snp_id, &r);

  AlignedPair out;
  out.label1 = t1.trait_label;
  out.label2 = t2.trait_label;
  for (const auto& r1 : t1.records) {
    auto it = index2.find(r1.snp_id);
    if (it == index2.end()) continue;
    const LdScore* score = ld.find(r1.snp_id);
    if (score == nullptr) continue;
    const SnpRecord& r2 = *it->second;

    bool flip = false;
    if (detail::strand_ambiguous(r1.allele_a1, r1.allele_a2) ||
        detail::strand_ambiguous(r2.allele_a1, r2.allele_a2)) {
      ++out.dropped_incompatible;
      continue;
    }
    if (r1.allele_a1 == r2.allele_a1 && r1.allele_a2 == r2.allele_a2) {
      flip = false;
    } else if (r1.allele_a1 == r2.allele_a2 && r1.allele_a2 == r2.allele_a1) {
      flip = true;
    } else {
      ++out.dropped_incompatible;
      continue;
    }
    out.snp_ids.push_back(r1.snp_id);
    out.chrom.push_back(r1.chrom);
    out.position_cm.push_back(r1.position_cm ? r1.position_cm : r2.position_cm);
    out.z1.push_back(r1.z);
    out.z2.push_back(flip ? -r2.z : r2.z);
    out.n1.push_back(r1.n);
    out.n2.push_back(r2.n);
    out.ld.push_back(*score);
    out.flip_mask.push_back(flip);
  }
  if (out.size() == 0) {
    throw Error(Errc::EmptyIntersection,
                "no compatible SNPs shared by '" + t1.trait_label + "' and '" + t2.trait_label + "'");
  }
  return out;
}

}  // namespace lcv
