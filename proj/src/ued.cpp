#include "emodyn/ued.hpp"

#include <algorithm>
#include <cmath>

#include "emodyn/util.hpp"

namespace emodyn {

HomeBase home_base(const EmotionArc& arc, double k) {
  if (k <= 0.0) fail(Errc::ConfigError, "home-base k must be positive");
  if (arc.samples.size() < 2) {
    fail(Errc::TooFewSamples, "home base needs >= 2 arc samples, have " +
                                  std::to_string(arc.samples.size()));
  }
  const auto values = arc.values();
  HomeBase hb;
  hb.mean = mean_of(values);
  hb.sd = population_sd(values);
  hb.k = k;
  hb.low = hb.mean - k * hb.sd;
  hb.high = hb.mean + k * hb.sd;
  return hb;
}

std::vector<Displacement> segment_displacements(const EmotionArc& arc, const HomeBase& hb) {
  std::vector<Displacement> out;
  const auto& samples = arc.samples;
  const int n = static_cast<int>(samples.size());

  int i = 0;
  while (i < n) {
    const double v = samples[static_cast<std::size_t>(i)].value;
    Direction dir;
    if (v > hb.high) {
      dir = Direction::High;
    } else if (v < hb.low) {
      dir = Direction::Low;
    } else {
      ++i;
      continue;
    }
    const double boundary = dir == Direction::High ? hb.high : hb.low;
    Displacement d;
    d.direction = dir;
    d.start_idx = i;
    d.peak_idx = i;
    d.peak_distance = std::abs(v - boundary);
    int j = i;
    while (j < n) {
      const double w = samples[static_cast<std::size_t>(j)].value;
      const bool outside = dir == Direction::High ? w > hb.high : w < hb.low;
      if (!outside) break;
      const double dist = std::abs(w - boundary);
      if (dist > d.peak_distance) {  // strict: earliest index wins ties
        d.peak_distance = dist;
        d.peak_idx = j;
      }
      ++j;
    }
    d.end_idx = j - 1;
    d.length = d.end_idx - d.start_idx + 1;
    d.rise_steps = d.peak_idx - d.start_idx + 1;
    d.complete = j < n;  // re-entered the band before the arc ended
    d.recovery_steps = d.complete ? d.end_idx - d.peak_idx + 1 : 0;
    out.push_back(d);
    i = j;
  }
  return out;
}

namespace {

std::optional<double> mean_opt(const std::vector<double>& xs) {
  if (xs.empty()) return std::nullopt;
  return mean_of(xs);
}

}  // namespace

UedMetrics ued_summary(const EmotionArc& arc, double k) {
  const auto values = arc.values();
  if (values.size() < 2) {
    fail(Errc::TooFewSamples, "UED summary needs >= 2 arc samples, have " +
                                  std::to_string(values.size()));
  }
  UedMetrics m;
  m.emo_mean = mean_of(values);
  m.emo_std = population_sd(values);

  const HomeBase hb = home_base(arc, k);
  const auto displacements = segment_displacements(arc, hb);

  std::vector<double> peak[2], length[2], rise[2], recovery[2];
  std::vector<double> peak_all, length_all, rise_all, recovery_all;
  for (const Displacement& d : displacements) {
    const int side = d.direction == Direction::Low ? 0 : 1;
    (side == 0 ? m.low_count : m.high_count)++;
    if (!d.complete) continue;  // incomplete runs have undefined recovery
    (side == 0 ? m.low_complete : m.high_complete)++;
    peak[side].push_back(d.peak_distance);
    length[side].push_back(static_cast<double>(d.length));
    rise[side].push_back(d.rise_rate());
    recovery[side].push_back(d.recovery_rate());
    peak_all.push_back(d.peak_distance);
    length_all.push_back(static_cast<double>(d.length));
    rise_all.push_back(d.rise_rate());
    recovery_all.push_back(d.recovery_rate());
  }

  m.avg_peak_dist = mean_opt(peak_all);
  m.avg_disp_length = mean_opt(length_all);
  m.rise_rate = mean_opt(rise_all);
  m.recovery_rate = mean_opt(recovery_all);
  m.low_peak_dist = mean_opt(peak[0]);
  m.low_disp_length = mean_opt(length[0]);
  m.low_rise_rate = mean_opt(rise[0]);
  m.low_recovery_rate = mean_opt(recovery[0]);
  m.high_peak_dist = mean_opt(peak[1]);
  m.high_disp_length = mean_opt(length[1]);
  m.high_rise_rate = mean_opt(rise[1]);
  m.high_recovery_rate = mean_opt(recovery[1]);
  return m;
}

std::optional<double> ued_metric(const UedMetrics& m, std::string_view name) {
  if (name == "emo_mean") return m.emo_mean;
  if (name == "emo_std") return m.emo_std;
  if (name == "emo_avg_peak_dist") return m.avg_peak_dist;
  if (name == "emo_avg_disp_length") return m.avg_disp_length;
  if (name == "emo_rise_rate") return m.rise_rate;
  if (name == "emo_recovery_rate") return m.recovery_rate;
  if (name == "emo_low_peak_dist") return m.low_peak_dist;
  if (name == "emo_low_disp_length") return m.low_disp_length;
  if (name == "emo_low_rise_rate") return m.low_rise_rate;
  if (name == "emo_low_recovery_rate") return m.low_recovery_rate;
  if (name == "emo_high_peak_dist") return m.high_peak_dist;
  if (name == "emo_high_disp_length") return m.high_disp_length;
  if (name == "emo_high_rise_rate") return m.high_rise_rate;
  if (name == "emo_high_recovery_rate") return m.high_recovery_rate;
  fail(Errc::ConfigError, "unknown UED metric: " + std::string(name));
}

UedSummary ued_for_dialogue(const Dialogue& d, const VadLexicon& lex, Who who,
                            int window, int step, double k) {
  const auto arcs = arcs_for_dialogue(d, lex, who, window, step);
  UedSummary out;
  for (const auto& [dim, arc] : arcs) out.emplace(dim, ued_summary(arc, k));
  return out;
}

}  // namespace emodyn
