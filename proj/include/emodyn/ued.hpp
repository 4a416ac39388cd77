#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "emodyn/arcs.hpp"

namespace emodyn {

/// Baseline band of an arc: [mean - k*sd, mean + k*sd] over the arc's own
/// samples (population standard deviation).
struct HomeBase {
  double mean = 0.0;
  double sd = 0.0;
  double k = 1.0;
  double low = 0.0;
  double high = 0.0;
};

enum class Direction { High, Low };

/// A maximal run of consecutive samples strictly outside the home base.
/// rise covers start..peak, recovery covers peak..re-entry; both step
/// counts include their boundary sample, so they are always >= 1.
struct Displacement {
  Direction direction = Direction::High;
  int start_idx = 0;
  int peak_idx = 0;
  int end_idx = 0;          // last sample of the run
  double peak_distance = 0.0;  // max |value - nearest band boundary|
  int length = 0;           // samples outside the band (end - start + 1)
  int rise_steps = 1;       // peak_idx - start_idx + 1
  int recovery_steps = 0;   // end_idx - peak_idx + 1; 0 when incomplete
  bool complete = false;    // false when the run is still open at arc end

  double rise_rate() const { return peak_distance / rise_steps; }
  double recovery_rate() const { return peak_distance / recovery_steps; }
};

/// One dimension's UED metric slice. Displacement-derived fields are means
/// over complete displacements and stay empty (never 0) when there are
/// none in scope.
struct UedMetrics {
  double emo_mean = 0.0;
  double emo_std = 0.0;
  std::optional<double> avg_peak_dist, avg_disp_length, rise_rate, recovery_rate;
  std::optional<double> low_peak_dist, low_disp_length, low_rise_rate, low_recovery_rate;
  std::optional<double> high_peak_dist, high_disp_length, high_rise_rate, high_recovery_rate;
  int low_count = 0;       // displacements below the band, incl. incomplete
  int high_count = 0;      // displacements above the band, incl. incomplete
  int low_complete = 0;
  int high_complete = 0;
};

/// Metric column names in the order used by the summary tables.
inline constexpr std::array<std::string_view, 14> kUedMetricNames = {
    "emo_mean",           "emo_std",
    "emo_avg_peak_dist",  "emo_avg_disp_length",
    "emo_rise_rate",      "emo_recovery_rate",
    "emo_low_peak_dist",  "emo_low_disp_length",
    "emo_low_rise_rate",  "emo_low_recovery_rate",
    "emo_high_peak_dist", "emo_high_disp_length",
    "emo_high_rise_rate", "emo_high_recovery_rate",
};

/// Reads a metric by its table column name.
std::optional<double> ued_metric(const UedMetrics& m, std::string_view name);

/// Throws Errc::TooFewSamples unless the arc has >= 2 samples.
HomeBase home_base(const EmotionArc& arc, double k = 1.0);

/// Segments the sample sequence into maximal out-of-band runs. Runs are
/// indexed over samples (skipped windows are simply absent). Peak ties
/// resolve to the earliest index.
std::vector<Displacement> segment_displacements(const EmotionArc& arc, const HomeBase& hb);

/// home_base + segment_displacements + aggregation in one step.
UedMetrics ued_summary(const EmotionArc& arc, double k = 1.0);

using UedSummary = std::map<Dimension, UedMetrics>;

/// Full metric bundle for one (dialogue, stream) pair.
UedSummary ued_for_dialogue(const Dialogue& d, const VadLexicon& lex, Who who,
                            int window = 10, int step = 1, double k = 1.0);

}  // namespace emodyn
