#include "emodyn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include <json.hpp>

#include "emodyn/util.hpp"

namespace emodyn {

namespace {

double quantile_linear(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = p * static_cast<double>(n - 1);
  const auto k = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(k);
  if (k + 1 >= n) return sorted[n - 1];
  return sorted[k] + frac * (sorted[k + 1] - sorted[k]);
}

std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

std::optional<double> parse_opt(const std::string& field) {
  if (field.empty()) return std::nullopt;
  return std::strtod(field.c_str(), nullptr);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  return split(read_file(path), '\n');
}

}  // namespace

BoxplotSummary boxplot_summary(std::span<const double> values) {
  if (values.empty()) fail(Errc::EmptyInput, "boxplot of empty sequence");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  BoxplotSummary box;
  box.n = static_cast<int>(sorted.size());
  box.q1 = quantile_linear(sorted, 0.25);
  box.median = quantile_linear(sorted, 0.50);
  box.q3 = quantile_linear(sorted, 0.75);
  box.mean = mean_of(sorted);

  const double iqr = box.q3 - box.q1;
  const double lo_fence = box.q1 - 1.5 * iqr;
  const double hi_fence = box.q3 + 1.5 * iqr;
  box.whisker_low = box.q1;
  box.whisker_high = box.q3;
  for (double v : sorted) {
    if (v >= lo_fence) {
      box.whisker_low = v;  // first value inside the fence
      break;
    }
  }
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    if (*it <= hi_fence) {
      box.whisker_high = *it;
      break;
    }
  }
  for (double v : sorted) {
    if (v < box.whisker_low || v > box.whisker_high) box.outliers.push_back(v);
  }
  return box;
}

std::string ued_csv_header() {
  std::vector<std::string> cols = {"dialogue_id", "who", "dimension"};
  for (auto name : kUedMetricNames) cols.emplace_back(name);
  return csv_join(cols);
}

std::string ued_csv_row(const UedRecord& r) {
  std::vector<std::string> cols = {r.dialogue_id, std::string(to_string(r.who)),
                                   std::string(to_string(r.dimension))};
  for (auto name : kUedMetricNames) cols.push_back(opt_field(ued_metric(r.metrics, name)));
  return csv_join(cols);
}

std::vector<UedRecord> read_ued_csv(const std::filesystem::path& path) {
  std::vector<UedRecord> out;
  const auto lines = read_lines(path);
  if (lines.empty() || trim(lines[0]) != ued_csv_header()) {
    fail(Errc::MalformedFile, "unexpected UED CSV header in " + path.string());
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    const auto f = csv_split(lines[li]);
    if (f.size() != 3 + kUedMetricNames.size()) {
      fail(Errc::MalformedFile, "bad UED CSV row in " + path.string() + " line " + std::to_string(li + 1));
    }
    UedRecord r;
    r.dialogue_id = f[0];
    r.who = parse_who(f[1]);
    r.dimension = parse_dimension(f[2]);
    UedMetrics& m = r.metrics;
    m.emo_mean = parse_opt(f[3]).value_or(0.0);
    m.emo_std = parse_opt(f[4]).value_or(0.0);
    m.avg_peak_dist = parse_opt(f[5]);
    m.avg_disp_length = parse_opt(f[6]);
    m.rise_rate = parse_opt(f[7]);
    m.recovery_rate = parse_opt(f[8]);
    m.low_peak_dist = parse_opt(f[9]);
    m.low_disp_length = parse_opt(f[10]);
    m.low_rise_rate = parse_opt(f[11]);
    m.low_recovery_rate = parse_opt(f[12]);
    m.high_peak_dist = parse_opt(f[13]);
    m.high_disp_length = parse_opt(f[14]);
    m.high_rise_rate = parse_opt(f[15]);
    m.high_recovery_rate = parse_opt(f[16]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string similarity_csv_header() { return "real_id,synth_id,role,dimension,rho"; }

std::string similarity_csv_row(const SimilarityRow& r) {
  std::vector<std::string> cols = {r.real_id, r.synth_id, std::string(to_string(r.role)),
                                   std::string(to_string(r.dimension)), opt_field(r.rho)};
  return csv_join(cols);
}

std::vector<SimilarityRow> read_similarity_csv(const std::filesystem::path& path) {
  std::vector<SimilarityRow> out;
  const auto lines = read_lines(path);
  if (lines.empty() || trim(lines[0]) != similarity_csv_header()) {
    fail(Errc::MalformedFile, "unexpected similarity CSV header in " + path.string());
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    const auto f = csv_split(lines[li]);
    if (f.size() != 5) {
      fail(Errc::MalformedFile, "bad similarity CSV row in " + path.string());
    }
    out.push_back(SimilarityRow{f[0], f[1], parse_who(f[2]), parse_dimension(f[3]), parse_opt(f[4])});
  }
  return out;
}

std::string comparisons_csv(std::span<const MetricComparison> comparisons) {
  std::string out = "metric,dimension,role,subset_idx,u,p,effect,significant\n";
  for (const MetricComparison& c : comparisons) {
    for (std::size_t i = 0; i < c.subsets.size(); ++i) {
      const SubsetOutcome& s = c.subsets[i];
      std::vector<std::string> cols = {
          c.metric,
          std::string(to_string(c.dimension)),
          std::string(to_string(c.role)),
          std::to_string(i),
          format_double(s.test.u),
          format_double(s.test.p),
          format_double(s.effect.rank_biserial),
          s.test.p < c.alpha ? "1" : "0",
      };
      out += csv_join(cols);
      out += '\n';
    }
  }
  return out;
}

std::string comparison_aggregate_csv(std::span<const MetricComparison> comparisons) {
  std::string out = "metric,dimension,role,n_subsets,significant_fraction,median_p,mean_abs_effect\n";
  for (const MetricComparison& c : comparisons) {
    std::vector<std::string> cols = {
        c.metric,
        std::string(to_string(c.dimension)),
        std::string(to_string(c.role)),
        std::to_string(c.subsets.size()),
        format_double(c.significant_fraction),
        format_double(c.median_p),
        format_double(c.mean_abs_effect),
    };
    out += csv_join(cols);
    out += '\n';
  }
  return out;
}

std::optional<double> group_metric_mean(std::span<const UedRecord> records, Who who,
                                        Dimension dim, std::string_view metric) {
  // subset -> values; real records (subset_idx -1) form one subset
  std::map<int, std::vector<double>> by_subset;
  for (const UedRecord& r : records) {
    if (r.who != who || r.dimension != dim) continue;
    if (auto v = ued_metric(r.metrics, metric)) by_subset[r.subset_idx].push_back(*v);
  }
  std::vector<double> subset_means;
  for (const auto& [idx, values] : by_subset) {
    if (!values.empty()) subset_means.push_back(mean_of(values));
  }
  if (subset_means.empty()) return std::nullopt;
  return mean_of(subset_means);
}

namespace {

nlohmann::ordered_json box_to_json(const BoxplotSummary& b) {
  nlohmann::ordered_json j;
  j["q1"] = b.q1;
  j["median"] = b.median;
  j["q3"] = b.q3;
  j["whisker_low"] = b.whisker_low;
  j["whisker_high"] = b.whisker_high;
  j["mean"] = b.mean;
  j["n"] = b.n;
  j["outliers"] = b.outliers;
  return j;
}

std::vector<double> collect_metric(std::span<const UedRecord> records, Who who, Dimension dim,
                                   std::string_view metric) {
  std::vector<double> out;
  for (const UedRecord& r : records) {
    if (r.who != who || r.dimension != dim) continue;
    if (auto v = ued_metric(r.metrics, metric)) out.push_back(*v);
  }
  return out;
}

}  // namespace

void emit_tables(std::span<const UedRecord> real_records,
                 std::span<const UedRecord> synth_records,
                 std::span<const MetricComparison> comparisons,
                 std::span<const SimilarityRow> similarities,
                 const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  // Per-dimension table mirrors: 14 metric rows x 6 speaker columns.
  for (Dimension dim : kAllDimensions) {
    std::string csv =
        "metric,real_dialogue,synthetic_dialogue,real_counselor,synthetic_counselor,"
        "real_client,synthetic_client\n";
    for (auto metric : kUedMetricNames) {
      std::vector<std::string> cols = {std::string(metric)};
      for (Who who : kAllWho) {
        auto real = group_metric_mean(real_records, who, dim, metric);
        auto synth = group_metric_mean(synth_records, who, dim, metric);
        cols.push_back(real ? format_fixed4(*real) : std::string{});
        cols.push_back(synth ? format_fixed4(*synth) : std::string{});
      }
      csv += csv_join(cols);
      csv += '\n';
    }
    write_file(out_dir / ("ued_table_" + std::string(to_string(dim)) + ".csv"), csv);
  }

  // Boxplot data for the mean/variability distributions per role/dimension.
  {
    nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
    for (Who who : kAllWho) {
      for (Dimension dim : kAllDimensions) {
        for (std::string_view metric : {std::string_view("emo_mean"), std::string_view("emo_std")}) {
          const auto real_vals = collect_metric(real_records, who, dim, metric);
          const auto synth_vals = collect_metric(synth_records, who, dim, metric);
          if (real_vals.empty() && synth_vals.empty()) continue;
          nlohmann::ordered_json entry;
          entry["role"] = to_string(who);
          entry["dimension"] = to_string(dim);
          entry["metric"] = metric;
          entry["real"] = real_vals.empty() ? nlohmann::ordered_json(nullptr)
                                            : box_to_json(boxplot_summary(real_vals));
          entry["synthetic"] = synth_vals.empty() ? nlohmann::ordered_json(nullptr)
                                                  : box_to_json(boxplot_summary(synth_vals));
          boxes.push_back(std::move(entry));
        }
      }
    }
    write_file(out_dir / "boxplots.json", boxes.dump(2) + "\n");
  }

  write_file(out_dir / "comparisons.csv", comparisons_csv(comparisons));
  write_file(out_dir / "comparison_aggregate.csv", comparison_aggregate_csv(comparisons));

  {
    std::string csv = similarity_csv_header() + "\n";
    for (const SimilarityRow& r : similarities) {
      csv += similarity_csv_row(r);
      csv += '\n';
    }
    write_file(out_dir / "similarity.csv", csv);
  }
}

}  // namespace emodyn
