#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "emodyn/annotate.hpp"
#include "emodyn/corpus.hpp"
#include "emodyn/report.hpp"

namespace emodyn {

/// Every knob of the replication pipeline, serialized into
/// run_manifest.json. Defaults follow the study protocol: 10-word window
/// advancing one word at a time, mean +/- 1 sd home base, 100 resample
/// points, alpha 0.05, 10 matched subsets.
struct RunConfig {
  std::filesystem::path lexicon_path;
  std::filesystem::path stopwords_path;  // optional; empty = keep all tokens
  int window = 10;
  int step = 1;
  double home_base_k = 1.0;
  int resample_n = 100;
  double alpha = 0.05;
  int n_subsets = 10;
  std::uint64_t seed = 0;
  std::vector<std::string> problems = {
      "anxiety and fear",
      "self-esteem and confidence issues",
      "relationships",
  };
  std::map<std::string, int> problem_targets;  // empty -> derived from the real corpus
  enum class Pairing { AllPairs, OneToOne };
  Pairing pairing = Pairing::AllPairs;
  std::vector<Who> similarity_roles = {Who::Counselor, Who::Client};
  int jobs = 1;
  std::vector<HttpTaggerConfig> taggers;
  double audit_fraction = 0.3;

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  /// Returns every validation problem (empty = valid).
  std::vector<std::string> validate() const;
};

/// File-driven pipeline over one working directory. Each stage reads and
/// writes the documented artifacts, so stages are resumable and `run-all`
/// is exactly the stages run in order.
class Pipeline {
public:
  Pipeline(RunConfig config, std::filesystem::path workdir);

  const RunConfig& config() const { return config_; }
  const std::filesystem::path& workdir() const { return workdir_; }

  // Canonical artifact paths inside the workdir.
  std::filesystem::path real_bundle() const { return workdir_ / "corpus_real.json"; }
  std::filesystem::path synthetic_bundle() const { return workdir_ / "corpus_synthetic.json"; }
  std::filesystem::path filtered_real() const { return workdir_ / "filtered_real.json"; }
  std::filesystem::path sampled_synthetic() const { return workdir_ / "sampled_synthetic.json"; }
  std::filesystem::path subsets_file() const { return workdir_ / "subsets.json"; }
  std::filesystem::path arcs_csv(bool real) const {
    return workdir_ / (real ? "arcs_real.csv" : "arcs_synthetic.csv");
  }
  std::filesystem::path ued_csv(bool real) const {
    return workdir_ / (real ? "ued_real.csv" : "ued_synthetic.csv");
  }
  std::filesystem::path similarity_csv_path() const { return workdir_ / "similarity.csv"; }
  std::filesystem::path manifest_path() const { return workdir_ / "run_manifest.json"; }

  /// Normalizes any accepted corpus layout into the canonical bundle.
  LoadResult ingest(const std::filesystem::path& input, Source source,
                    const std::filesystem::path& output);

  /// Majority-vote annotation with the configured taggers.
  AnnotateReport annotate(const std::filesystem::path& input,
                          const std::filesystem::path& output);

  /// Filters the real corpus to the configured problems, derives targets,
  /// and draws the matched synthetic subsets. Writes filtered_real.json,
  /// sampled_synthetic.json and subsets.json.
  void sample();

  /// Arc CSV (dialogue_id,who,dimension,window_start,value) for one bundle.
  void arcs(const std::filesystem::path& bundle, const std::filesystem::path& out_csv);

  /// Per-dialogue UED metrics CSV for one bundle.
  void ued(const std::filesystem::path& bundle, const std::filesystem::path& out_csv);

  /// Convenience wrappers bound to the canonical paths.
  void arcs_stage(bool real);
  void ued_stage(bool real);

  /// Mann-Whitney comparisons per (metric, dimension, role) across subsets.
  std::vector<MetricComparison> compare();

  /// Arc similarity rows for matched real/synthetic pairs.
  void similarity();

  /// Table mirrors, boxplot data and the run manifest.
  void report();

  /// ingest(real) + ingest(synth) + sample + arcs + ued + compare +
  /// similarity + report.
  void run_all(const std::filesystem::path& real_input,
               const std::filesystem::path& synthetic_input);

  /// Subset mapping parsed from subsets.json.
  std::map<std::string, int> subset_assignment() const;

  void write_manifest() const;

private:
  std::vector<MetricComparison> compute_comparisons() const;
  std::vector<UedRecord> synth_records_with_subsets() const;

  RunConfig config_;
  std::filesystem::path workdir_;
};

}  // namespace emodyn
