#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emodyn/align.hpp"
#include "emodyn/stats.hpp"
#include "emodyn/ued.hpp"

namespace emodyn {

/// Tukey-style box summary. Quartiles use linear interpolation on the
/// sorted values at position p*(n-1); whiskers reach the most extreme data
/// points within 1.5*IQR of the quartiles; everything beyond is an outlier.
struct BoxplotSummary {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  double mean = 0.0;
  std::vector<double> outliers;
  int n = 0;
};

/// Throws Errc::EmptyInput for an empty sequence.
BoxplotSummary boxplot_summary(std::span<const double> values);

/// One per-dialogue UED measurement: the metric bundle for a (dialogue,
/// stream, dimension) triple. subset_idx is in-memory bookkeeping (-1 for
/// real dialogues, the sampled-subset index for synthetic ones, joined
/// from subsets.json); it is not part of the CSV format.
struct UedRecord {
  std::string dialogue_id;
  Who who = Who::Whole;
  Dimension dimension = Dimension::Valence;
  int subset_idx = -1;
  UedMetrics metrics;
};

/// CSV row model for similarity scores.
struct SimilarityRow {
  std::string real_id;
  std::string synth_id;
  Who role = Who::Whole;
  Dimension dimension = Dimension::Valence;
  std::optional<double> rho;
};

// --- CSV serialization (formats documented in the README) ----------------

std::string ued_csv_header();
std::string ued_csv_row(const UedRecord& r);
std::vector<UedRecord> read_ued_csv(const std::filesystem::path& path);

std::string similarity_csv_header();
std::string similarity_csv_row(const SimilarityRow& r);
std::vector<SimilarityRow> read_similarity_csv(const std::filesystem::path& path);

std::string comparisons_csv(std::span<const MetricComparison> comparisons);
std::string comparison_aggregate_csv(std::span<const MetricComparison> comparisons);

/// Mean of a metric over a group of records, averaging per-dialogue values
/// within each subset first and then across subsets (real records form a
/// single subset). Nulls are skipped; returns nullopt when nothing remains.
std::optional<double> group_metric_mean(std::span<const UedRecord> records, Who who,
                                        Dimension dim, std::string_view metric);

/// Writes ued_table_{valence,arousal,dominance}.csv, boxplots.json,
/// comparisons.csv, comparison_aggregate.csv and similarity.csv into
/// out_dir. Output bytes depend only on the inputs (4-decimal table cells,
/// shortest-round-trip floats elsewhere).
void emit_tables(std::span<const UedRecord> real_records,
                 std::span<const UedRecord> synth_records,
                 std::span<const MetricComparison> comparisons,
                 std::span<const SimilarityRow> similarities,
                 const std::filesystem::path& out_dir);

}  // namespace emodyn
