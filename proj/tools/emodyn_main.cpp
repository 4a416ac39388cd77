// emodyn command-line interface: each pipeline stage is a subcommand, and
// run-all chains them end to end over one working directory.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emodyn/jsonio.hpp"
#include "emodyn/pipeline.hpp"
#include "emodyn/util.hpp"

namespace fs = std::filesystem;
using emodyn::RunConfig;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string workdir = "emodyn_out";
  std::optional<std::string> lexicon;
  std::optional<std::string> stopwords;
  std::optional<int> window, step, resample_n, n_subsets, jobs;
  std::optional<double> home_base_k, alpha, audit_fraction;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<std::string>> problems;
  std::optional<std::vector<std::string>> targets;  // label=count
  std::optional<std::string> pairing;
  std::optional<std::vector<std::string>> similarity_roles;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "JSON config file; flags override file values")
      ->check(CLI::ExistingFile);
  cmd->add_option("--workdir", o.workdir, "Working directory for pipeline artifacts");
  cmd->add_option("--lexicon", o.lexicon, "VAD lexicon TSV path");
  cmd->add_option("--stopwords", o.stopwords, "Stopword list (one word per line)");
  cmd->add_option("--window", o.window, "Rolling window size in words");
  cmd->add_option("--step", o.step, "Window advance in words");
  cmd->add_option("--home-base-k", o.home_base_k, "Home-base width multiplier");
  cmd->add_option("--resample-n", o.resample_n, "Resample points for arc similarity");
  cmd->add_option("--alpha", o.alpha, "Significance threshold");
  cmd->add_option("--n-subsets", o.n_subsets, "Number of matched synthetic subsets");
  cmd->add_option("--seed", o.seed, "RNG seed for sampling/pairing/audit");
  cmd->add_option("--jobs", o.jobs, "Worker threads for per-dialogue computation");
  cmd->add_option("--problems", o.problems, "Problem labels kept by filtering")
      ->delimiter(';');
  cmd->add_option("--targets", o.targets, "Per-problem subset counts as label=count")
      ->delimiter(';');
  cmd->add_option("--pairing", o.pairing, "Similarity pairing: all_pairs | one_to_one");
  cmd->add_option("--similarity-roles", o.similarity_roles,
                  "Roles scored by similarity (dialogue/counselor/client)")
      ->delimiter(',');
  cmd->add_option("--audit-fraction", o.audit_fraction, "Gold-audit sample fraction");
}

RunConfig build_config(const CommonOpts& o) {
  RunConfig cfg;
  if (!o.config_path.empty()) {
    cfg = RunConfig::from_json(nlohmann::json::parse(emodyn::read_file(o.config_path)));
  }
  if (o.lexicon) cfg.lexicon_path = *o.lexicon;
  if (o.stopwords) cfg.stopwords_path = *o.stopwords;
  if (o.window) cfg.window = *o.window;
  if (o.step) cfg.step = *o.step;
  if (o.home_base_k) cfg.home_base_k = *o.home_base_k;
  if (o.resample_n) cfg.resample_n = *o.resample_n;
  if (o.alpha) cfg.alpha = *o.alpha;
  if (o.n_subsets) cfg.n_subsets = *o.n_subsets;
  if (o.seed) cfg.seed = *o.seed;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.audit_fraction) cfg.audit_fraction = *o.audit_fraction;
  if (o.problems) cfg.problems = *o.problems;
  if (o.targets) {
    cfg.problem_targets.clear();
    for (const std::string& spec : *o.targets) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) {
        emodyn::fail(emodyn::Errc::ConfigError, "--targets entries must be label=count: " + spec);
      }
      cfg.problem_targets[spec.substr(0, eq)] = std::stoi(spec.substr(eq + 1));
    }
  }
  if (o.pairing) {
    cfg.pairing = *o.pairing == "one_to_one" ? RunConfig::Pairing::OneToOne
                                             : RunConfig::Pairing::AllPairs;
    if (*o.pairing != "one_to_one" && *o.pairing != "all_pairs") {
      emodyn::fail(emodyn::Errc::ConfigError, "unknown pairing mode: " + *o.pairing);
    }
  }
  if (o.similarity_roles) {
    cfg.similarity_roles.clear();
    for (const std::string& r : *o.similarity_roles) {
      cfg.similarity_roles.push_back(emodyn::parse_who(r));
    }
  }
  return cfg;
}

void print_issues(const emodyn::LoadResult& result) {
  for (const emodyn::ParseIssue& issue : result.issues) {
    std::cerr << "warning: " << emodyn::errc_name(issue.code) << " "
              << (issue.id.empty() ? issue.file : issue.id) << ": " << issue.reason << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emotion arcs and utterance emotion dynamics over dialogue corpora"};
  app.require_subcommand(1);

  CommonOpts opts;

  // ingest
  std::string in_path, in_source = "real", in_output;
  CLI::App* ingest = app.add_subcommand("ingest", "Normalize a corpus into the canonical bundle");
  add_common(ingest, opts);
  ingest->add_option("--input", in_path, "Bundle file, dialogue file, or directory")->required();
  ingest->add_option("--source", in_source, "real | synthetic")->check(CLI::IsMember({"real", "synthetic"}));
  ingest->add_option("--output", in_output, "Output bundle path (default: workdir canonical name)");

  // annotate
  std::string an_input, an_output, an_gold;
  CLI::App* annotate = app.add_subcommand("annotate", "Majority-vote metadata tagging via configured taggers");
  add_common(annotate, opts);
  annotate->add_option("--input", an_input, "Bundle to annotate (default: workdir corpus_real.json)");
  annotate->add_option("--output", an_output, "Annotated bundle (default: workdir corpus_annotated.json)");
  annotate->add_option("--gold", an_gold, "Gold metadata JSON for the audit")->check(CLI::ExistingFile);

  // sample
  CLI::App* sample = app.add_subcommand("sample", "Filter the real corpus and draw matched synthetic subsets");
  add_common(sample, opts);

  // arcs / ued
  std::string stage_input, stage_output, stage_group;
  CLI::App* arcs = app.add_subcommand("arcs", "Export rolling-window emotion arcs as CSV");
  add_common(arcs, opts);
  arcs->add_option("--input", stage_input, "Bundle to process (overrides --group)");
  arcs->add_option("--output", stage_output, "Output CSV (required with --input)");
  arcs->add_option("--group", stage_group, "real | synthetic | both (default both)");

  CLI::App* ued = app.add_subcommand("ued", "Export per-dialogue UED metrics as CSV");
  add_common(ued, opts);
  ued->add_option("--input", stage_input, "Bundle to process (overrides --group)");
  ued->add_option("--output", stage_output, "Output CSV (required with --input)");
  ued->add_option("--group", stage_group, "real | synthetic | both (default both)");

  // compare / similarity / report
  CLI::App* compare = app.add_subcommand("compare", "Mann-Whitney comparisons per metric/dimension/role");
  add_common(compare, opts);
  CLI::App* similarity = app.add_subcommand("similarity", "Spearman similarity of matched arc pairs");
  add_common(similarity, opts);
  CLI::App* report = app.add_subcommand("report", "Emit table mirrors, boxplot data and the run manifest");
  add_common(report, opts);

  // run-all
  std::string ra_real, ra_synth;
  CLI::App* run_all = app.add_subcommand("run-all", "Full pipeline: ingest, sample, arcs, ued, compare, similarity, report");
  add_common(run_all, opts);
  run_all->add_option("--real", ra_real, "Real corpus input")->required();
  run_all->add_option("--synthetic", ra_synth, "Synthetic corpus input")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = build_config(opts);
    emodyn::Pipeline pipeline(cfg, opts.workdir);

    if (ingest->parsed()) {
      const auto source = emodyn::parse_source(in_source);
      const fs::path out = in_output.empty()
                               ? (source == emodyn::Source::Real ? pipeline.real_bundle()
                                                                 : pipeline.synthetic_bundle())
                               : fs::path(in_output);
      const auto result = pipeline.ingest(in_path, source, out);
      print_issues(result);
      std::cout << "ingested " << result.corpus.dialogues.size() << " dialogues ("
                << result.issues.size() << " issues) -> " << out.string() << "\n";
    } else if (annotate->parsed()) {
      const fs::path in = an_input.empty() ? pipeline.real_bundle() : fs::path(an_input);
      const fs::path out = an_output.empty() ? pipeline.workdir() / "corpus_annotated.json"
                                             : fs::path(an_output);
      const auto rep = pipeline.annotate(in, out);
      std::cout << "annotated " << rep.log.size() << " dialogues; " << rep.tie_ids.size()
                << " ties; " << rep.tagger_failures << " tagger failures -> " << out.string()
                << "\n";
      if (!an_gold.empty()) {
        const auto gold_json = nlohmann::json::parse(emodyn::read_file(an_gold));
        std::map<std::string, emodyn::SessionMetadata> gold;
        for (const auto& [id, meta] : gold_json.items()) {
          gold[id] = emodyn::SessionMetadata{meta.value("problem", ""), meta.value("gender", ""),
                                             meta.value("attitude", "")};
        }
        const auto loaded = emodyn::load_corpus(out, emodyn::Source::Mixed);
        const auto accuracy = emodyn::audit_against_gold(loaded.corpus, gold,
                                                         cfg.audit_fraction, cfg.seed);
        for (const auto& [attr, acc] : accuracy) {
          std::cout << "audit " << attr << " accuracy: " << emodyn::format_double(acc) << "\n";
        }
      }
    } else if (sample->parsed()) {
      pipeline.sample();
      std::cout << "sampled " << cfg.n_subsets << " matched subsets -> "
                << pipeline.subsets_file().string() << "\n";
    } else if (arcs->parsed() || ued->parsed()) {
      const bool is_arcs = arcs->parsed();
      if (!stage_input.empty()) {
        if (stage_output.empty()) {
          emodyn::fail(emodyn::Errc::ConfigError, "--output is required with --input");
        }
        if (is_arcs) {
          pipeline.arcs(stage_input, stage_output);
        } else {
          pipeline.ued(stage_input, stage_output);
        }
      } else {
        const std::string group = stage_group.empty() ? "both" : stage_group;
        if (group == "real" || group == "both") {
          is_arcs ? pipeline.arcs_stage(true) : pipeline.ued_stage(true);
        }
        if (group == "synthetic" || group == "both") {
          is_arcs ? pipeline.arcs_stage(false) : pipeline.ued_stage(false);
        }
      }
      std::cout << (is_arcs ? "arcs" : "ued") << " stage complete\n";
    } else if (compare->parsed()) {
      const auto comparisons = pipeline.compare();
      std::cout << "compared " << comparisons.size() << " metric/dimension/role combinations\n";
    } else if (similarity->parsed()) {
      pipeline.similarity();
      std::cout << "similarity stage complete -> " << pipeline.similarity_csv_path().string()
                << "\n";
    } else if (report->parsed()) {
      pipeline.report();
      std::cout << "report written to " << pipeline.workdir().string() << "\n";
    } else if (run_all->parsed()) {
      pipeline.run_all(ra_real, ra_synth);
      std::cout << "run-all complete; outputs in " << pipeline.workdir().string() << "\n";
    }
    return 0;
  } catch (const emodyn::Error& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"code", emodyn::errc_name(e.code())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"code", "Unexpected"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
