#include "emodyn/pipeline.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_set>

#include "emodyn/align.hpp"
#include "emodyn/arcs.hpp"
#include "emodyn/jsonio.hpp"
#include "emodyn/lexicon.hpp"
#include "emodyn/ued.hpp"
#include "emodyn/util.hpp"

namespace emodyn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(RunConfig::Pairing p) {
  return p == RunConfig::Pairing::AllPairs ? "all_pairs" : "one_to_one";
}

RunConfig::Pairing parse_pairing(std::string_view s) {
  if (s == "all_pairs") return RunConfig::Pairing::AllPairs;
  if (s == "one_to_one") return RunConfig::Pairing::OneToOne;
  fail(Errc::ConfigError, "unknown pairing mode: " + std::string(s));
}

/// Tokens surviving the optional stopword filter, re-indexed 0..m-1 so the
/// window axis stays contiguous.
std::vector<Token> apply_stopwords(std::vector<Token> tokens,
                                   const std::unordered_set<std::string>* stopwords) {
  if (!stopwords || stopwords->empty()) return tokens;
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (Token& t : tokens) {
    if (!stopwords->contains(t.surface)) {
      t.position = static_cast<int>(kept.size());
      kept.push_back(std::move(t));
    }
  }
  return kept;
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  RunConfig cfg;
  if (!j.is_object()) fail(Errc::ConfigError, "config must be a JSON object");
  auto get_int = [&](const char* key, int& slot) {
    if (j.contains(key)) slot = j.at(key).get<int>();
  };
  auto get_double = [&](const char* key, double& slot) {
    if (j.contains(key)) slot = j.at(key).get<double>();
  };
  if (j.contains("lexicon")) cfg.lexicon_path = j.at("lexicon").get<std::string>();
  if (j.contains("stopwords")) cfg.stopwords_path = j.at("stopwords").get<std::string>();
  get_int("window", cfg.window);
  get_int("step", cfg.step);
  get_double("home_base_k", cfg.home_base_k);
  get_int("resample_n", cfg.resample_n);
  get_double("alpha", cfg.alpha);
  get_int("n_subsets", cfg.n_subsets);
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("problems")) cfg.problems = j.at("problems").get<std::vector<std::string>>();
  if (j.contains("problem_targets")) {
    cfg.problem_targets.clear();
    for (const auto& [label, count] : j.at("problem_targets").items()) {
      cfg.problem_targets[label] = count.get<int>();
    }
  }
  if (j.contains("pairing")) cfg.pairing = parse_pairing(j.at("pairing").get<std::string>());
  if (j.contains("similarity_roles")) {
    cfg.similarity_roles.clear();
    for (const auto& r : j.at("similarity_roles")) {
      cfg.similarity_roles.push_back(parse_who(r.get<std::string>()));
    }
  }
  get_int("jobs", cfg.jobs);
  get_double("audit_fraction", cfg.audit_fraction);
  if (j.contains("taggers")) {
    for (const auto& t : j.at("taggers")) {
      HttpTaggerConfig tc;
      tc.id = t.at("id").get<std::string>();
      tc.url = t.at("url").get<std::string>();
      if (t.contains("timeout_ms")) tc.timeout_ms = t.at("timeout_ms").get<int>();
      if (t.contains("retries")) tc.retries = t.at("retries").get<int>();
      if (t.contains("backoff_ms")) tc.backoff_ms = t.at("backoff_ms").get<int>();
      if (t.contains("secret_env")) tc.secret_env = t.at("secret_env").get<std::string>();
      cfg.taggers.push_back(std::move(tc));
    }
  }
  return cfg;
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["lexicon"] = lexicon_path.string();
  j["stopwords"] = stopwords_path.string();
  j["window"] = window;
  j["step"] = step;
  j["home_base_k"] = home_base_k;
  j["resample_n"] = resample_n;
  j["alpha"] = alpha;
  j["n_subsets"] = n_subsets;
  j["seed"] = seed;
  j["problems"] = problems;
  ordered_json targets = ordered_json::object();
  for (const auto& [label, count] : problem_targets) targets[label] = count;
  j["problem_targets"] = std::move(targets);
  j["pairing"] = to_string(pairing);
  ordered_json roles = ordered_json::array();
  for (Who who : similarity_roles) roles.push_back(emodyn::to_string(who));
  j["similarity_roles"] = std::move(roles);
  j["jobs"] = jobs;
  j["audit_fraction"] = audit_fraction;
  ordered_json taggers_json = ordered_json::array();
  for (const HttpTaggerConfig& t : taggers) {
    taggers_json.push_back(ordered_json{{"id", t.id},
                                        {"url", t.url},
                                        {"timeout_ms", t.timeout_ms},
                                        {"retries", t.retries},
                                        {"backoff_ms", t.backoff_ms},
                                        {"secret_env", t.secret_env}});
  }
  j["taggers"] = std::move(taggers_json);
  return j;
}

std::vector<std::string> RunConfig::validate() const {
  std::vector<std::string> problems_found;
  auto check = [&](bool ok, const std::string& msg) {
    if (!ok) problems_found.push_back(msg);
  };
  check(window >= 1, "window must be >= 1");
  check(step >= 1, "step must be >= 1");
  check(home_base_k > 0.0, "home_base_k must be > 0");
  check(resample_n >= 2, "resample_n must be >= 2");
  check(alpha > 0.0 && alpha < 1.0, "alpha must be in (0, 1)");
  check(n_subsets >= 1, "n_subsets must be >= 1");
  check(!problems.empty(), "problems list must not be empty");
  check(jobs >= 1, "jobs must be >= 1");
  check(audit_fraction > 0.0 && audit_fraction <= 1.0, "audit_fraction must be in (0, 1]");
  for (const auto& [label, count] : problem_targets) {
    check(count >= 0, "problem_targets['" + label + "'] must be >= 0");
    check(std::find(problems.begin(), problems.end(), label) != problems.end(),
          "problem_targets label '" + label + "' is not in problems");
  }
  for (const HttpTaggerConfig& t : taggers) {
    check(!t.id.empty(), "tagger with empty id");
    check(t.url.rfind("http://", 0) == 0, "tagger '" + t.id + "': url must start with http://");
    check(t.timeout_ms > 0, "tagger '" + t.id + "': timeout_ms must be > 0");
    check(t.retries >= 0, "tagger '" + t.id + "': retries must be >= 0");
    check(t.backoff_ms >= 0, "tagger '" + t.id + "': backoff_ms must be >= 0");
  }
  return problems_found;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

Pipeline::Pipeline(RunConfig config, std::filesystem::path workdir)
    : config_(std::move(config)), workdir_(std::move(workdir)) {
  const auto issues = config_.validate();
  if (!issues.empty()) {
    std::string all;
    for (const auto& p : issues) {
      if (!all.empty()) all += "; ";
      all += p;
    }
    fail(Errc::ConfigError, all);
  }
  std::filesystem::create_directories(workdir_);
}

LoadResult Pipeline::ingest(const std::filesystem::path& input, Source source,
                            const std::filesystem::path& output) {
  LoadResult result = load_corpus(input, source);
  save_corpus(result.corpus, output);
  write_manifest();
  return result;
}

AnnotateReport Pipeline::annotate(const std::filesystem::path& input,
                                  const std::filesystem::path& output) {
  LoadResult loaded = load_corpus(input, Source::Mixed);
  std::vector<std::unique_ptr<TaggerClient>> taggers;
  for (const HttpTaggerConfig& tc : config_.taggers) taggers.push_back(make_http_tagger(tc));
  if (taggers.empty()) fail(Errc::ConfigError, "annotate needs at least one configured tagger");
  if (taggers.size() < 3) {
    std::cerr << "warning: only " << taggers.size()
              << " tagger(s) configured; majority voting expects 3\n";
  }
  AnnotateReport report = annotate_corpus(loaded.corpus, taggers, default_vocabularies());
  save_corpus(loaded.corpus, output);

  ordered_json log;
  log["tagger_failures"] = report.tagger_failures;
  log["ties"] = report.tie_ids;
  ordered_json entries = ordered_json::array();
  for (const DialogueAnnotation& a : report.log) {
    ordered_json verdicts = ordered_json::array();
    for (const TaggerVerdict& v : a.verdicts) {
      ordered_json vj;
      vj["tagger_id"] = v.tagger_id;
      vj["problem"] = v.problem ? ordered_json(*v.problem) : ordered_json(nullptr);
      vj["gender"] = v.gender ? ordered_json(*v.gender) : ordered_json(nullptr);
      vj["attitude"] = v.attitude ? ordered_json(*v.attitude) : ordered_json(nullptr);
      verdicts.push_back(std::move(vj));
    }
    entries.push_back(ordered_json{{"dialogue_id", a.dialogue_id}, {"verdicts", std::move(verdicts)}});
  }
  log["dialogues"] = std::move(entries);
  write_file(workdir_ / "annotate_log.json", log.dump(2) + "\n");
  write_manifest();
  return report;
}

void Pipeline::sample() {
  LoadResult real = load_corpus(real_bundle(), Source::Real);
  std::vector<std::string> dropped;
  Corpus with_meta = drop_missing_metadata(real.corpus, &dropped);
  for (const std::string& id : dropped) {
    std::cerr << "warning: dialogue '" << id << "' has no metadata; excluded from filtering\n";
  }
  const std::set<std::string> allowed(config_.problems.begin(), config_.problems.end());
  Corpus filtered = filter_by_problem(with_meta, allowed);
  if (filtered.dialogues.empty()) {
    fail(Errc::EmptyCorpus, "no real dialogues left after problem filtering");
  }
  save_corpus(filtered, filtered_real());

  std::map<std::string, int> targets = config_.problem_targets;
  if (targets.empty()) targets = filtered.problem_counts();

  LoadResult synth = load_corpus(synthetic_bundle(), Source::Synthetic);
  std::vector<std::string> synth_dropped;
  Corpus pool = drop_missing_metadata(synth.corpus, &synth_dropped);
  for (const std::string& id : synth_dropped) {
    std::cerr << "warning: synthetic dialogue '" << id << "' has no metadata; excluded from sampling\n";
  }
  const auto subsets = sample_matched_subsets(pool, targets, config_.n_subsets, config_.seed);

  Corpus union_corpus;
  union_corpus.source = Source::Synthetic;
  ordered_json subs = ordered_json::array();
  for (const Corpus& s : subsets) {
    ordered_json ids = ordered_json::array();
    for (const Dialogue& d : s.dialogues) {
      ids.push_back(d.id);
      union_corpus.dialogues.push_back(d);
    }
    subs.push_back(std::move(ids));
  }
  save_corpus(union_corpus, sampled_synthetic());

  ordered_json out;
  out["seed"] = config_.seed;
  ordered_json targets_json = ordered_json::object();
  for (const auto& [label, count] : targets) targets_json[label] = count;
  out["targets"] = std::move(targets_json);
  out["subsets"] = std::move(subs);
  write_file(subsets_file(), out.dump(2) + "\n");
  write_manifest();
}

std::map<std::string, int> Pipeline::subset_assignment() const {
  const json j = json::parse(read_file(subsets_file()));
  std::map<std::string, int> out;
  int idx = 0;
  for (const auto& subset : j.at("subsets")) {
    for (const auto& id : subset) out[id.get<std::string>()] = idx;
    ++idx;
  }
  return out;
}

namespace {

struct StreamArcs {
  bool ok = false;
  std::map<Dimension, EmotionArc> arcs;
};

/// Arc computation shared by the arcs/ued/similarity stages; skips streams
/// that cannot produce an arc (absent role, no tokens) instead of failing
/// the whole run.
StreamArcs stream_arcs(const Dialogue& d, Who who, const VadLexicon& lex,
                       const std::unordered_set<std::string>* stopwords, int window, int step) {
  StreamArcs out;
  std::string stream;
  try {
    stream = role_stream(d, who);
  } catch (const Error&) {
    return out;  // RoleAbsent
  }
  auto tokens = apply_stopwords(tokenize(stream), stopwords);
  if (tokens.empty()) return out;
  const auto scored = score_tokens(tokens, lex);
  for (Dimension dim : kAllDimensions) {
    out.arcs.emplace(dim, compute_arc(scored, dim, window, step));
  }
  out.ok = true;
  return out;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const std::string& line : split(read_file(path), '\n')) {
    for (const Token& t : tokenize(line)) out.insert(t.surface);
  }
  return out;
}

VadLexicon load_lexicon_with_warnings(const std::filesystem::path& path) {
  VadLexicon lex = load_lexicon(path);
  if (lex.duplicate_count > 0) {
    std::cerr << "warning: lexicon '" << lex.name() << "': " << lex.duplicate_count
              << " duplicate term(s), last occurrence kept\n";
  }
  if (lex.multiword_count > 0) {
    std::cerr << "warning: lexicon '" << lex.name() << "': " << lex.multiword_count
              << " multi-word term(s) skipped\n";
  }
  return lex;
}

}  // namespace

void Pipeline::arcs(const std::filesystem::path& bundle, const std::filesystem::path& out_csv) {
  const VadLexicon lex = load_lexicon_with_warnings(config_.lexicon_path);
  std::unordered_set<std::string> stopwords;
  if (!config_.stopwords_path.empty()) stopwords = load_stopwords(config_.stopwords_path);
  LoadResult loaded = load_corpus(bundle, Source::Mixed);

  std::vector<std::string> chunks(loaded.corpus.dialogues.size());
  parallel_for_index(loaded.corpus.dialogues.size(), config_.jobs, [&](std::size_t i) {
    const Dialogue& d = loaded.corpus.dialogues[i];
    std::string& out = chunks[i];
    for (Who who : kAllWho) {
      const StreamArcs sa =
          stream_arcs(d, who, lex, stopwords.empty() ? nullptr : &stopwords, config_.window,
                      config_.step);
      if (!sa.ok) continue;
      for (Dimension dim : kAllDimensions) {
        for (const ArcSample& s : sa.arcs.at(dim).samples) {
          std::vector<std::string> cols = {d.id, std::string(emodyn::to_string(who)),
                                           std::string(emodyn::to_string(dim)),
                                           std::to_string(s.window_start), format_double(s.value)};
          out += csv_join(cols);
          out += '\n';
        }
      }
    }
  });

  std::string csv = "dialogue_id,who,dimension,window_start,value\n";
  for (const std::string& chunk : chunks) csv += chunk;
  write_file(out_csv, csv);
  write_manifest();
}

void Pipeline::ued(const std::filesystem::path& bundle, const std::filesystem::path& out_csv) {
  const VadLexicon lex = load_lexicon_with_warnings(config_.lexicon_path);
  std::unordered_set<std::string> stopwords;
  if (!config_.stopwords_path.empty()) stopwords = load_stopwords(config_.stopwords_path);
  LoadResult loaded = load_corpus(bundle, Source::Mixed);

  std::vector<std::string> chunks(loaded.corpus.dialogues.size());
  parallel_for_index(loaded.corpus.dialogues.size(), config_.jobs, [&](std::size_t i) {
    const Dialogue& d = loaded.corpus.dialogues[i];
    std::string& out = chunks[i];
    for (Who who : kAllWho) {
      const StreamArcs sa =
          stream_arcs(d, who, lex, stopwords.empty() ? nullptr : &stopwords, config_.window,
                      config_.step);
      if (!sa.ok) continue;
      for (Dimension dim : kAllDimensions) {
        const EmotionArc& arc = sa.arcs.at(dim);
        if (arc.samples.size() < 2) {
          std::cerr << "warning: dialogue '" << d.id << "' " << emodyn::to_string(who) << " "
                    << emodyn::to_string(dim) << ": arc too short for UED metrics; skipped\n";
          continue;
        }
        UedRecord rec;
        rec.dialogue_id = d.id;
        rec.who = who;
        rec.dimension = dim;
        rec.metrics = ued_summary(arc, config_.home_base_k);
        out += ued_csv_row(rec);
        out += '\n';
      }
    }
  });

  std::string csv = ued_csv_header() + "\n";
  for (const std::string& chunk : chunks) csv += chunk;
  write_file(out_csv, csv);
  write_manifest();
}

void Pipeline::arcs_stage(bool real) {
  arcs(real ? filtered_real() : sampled_synthetic(), arcs_csv(real));
}

void Pipeline::ued_stage(bool real) {
  ued(real ? filtered_real() : sampled_synthetic(), ued_csv(real));
}

/// Joins the sampled-subset index onto synthetic records.
std::vector<UedRecord> Pipeline::synth_records_with_subsets() const {
  auto records = read_ued_csv(ued_csv(false));
  const auto subset_of = subset_assignment();
  for (UedRecord& r : records) {
    auto it = subset_of.find(r.dialogue_id);
    r.subset_idx = it == subset_of.end() ? -1 : it->second;
  }
  return records;
}

std::vector<MetricComparison> Pipeline::compute_comparisons() const {
  const auto real_records = read_ued_csv(ued_csv(true));
  const auto synth_records = synth_records_with_subsets();

  int max_subset = -1;
  for (const UedRecord& r : synth_records) max_subset = std::max(max_subset, r.subset_idx);

  std::vector<MetricComparison> out;
  for (auto metric : kUedMetricNames) {
    for (Dimension dim : kAllDimensions) {
      for (Who who : kAllWho) {
        std::vector<double> real_values;
        for (const UedRecord& r : real_records) {
          if (r.who != who || r.dimension != dim) continue;
          if (auto v = ued_metric(r.metrics, metric)) real_values.push_back(*v);
        }
        std::vector<std::vector<double>> subsets(static_cast<std::size_t>(max_subset) + 1);
        for (const UedRecord& r : synth_records) {
          if (r.who != who || r.dimension != dim || r.subset_idx < 0) continue;
          if (auto v = ued_metric(r.metrics, metric)) {
            subsets[static_cast<std::size_t>(r.subset_idx)].push_back(*v);
          }
        }
        const bool all_nonempty =
            !real_values.empty() && !subsets.empty() &&
            std::all_of(subsets.begin(), subsets.end(),
                        [](const std::vector<double>& s) { return !s.empty(); });
        if (!all_nonempty) continue;  // metric absent for a whole group
        out.push_back(compare_groups(std::string(metric), dim, who, real_values, subsets,
                                     config_.alpha));
      }
    }
  }
  return out;
}

std::vector<MetricComparison> Pipeline::compare() {
  auto comparisons = compute_comparisons();
  write_file(workdir_ / "comparisons.csv", comparisons_csv(comparisons));
  write_file(workdir_ / "comparison_aggregate.csv", comparison_aggregate_csv(comparisons));
  write_manifest();
  return comparisons;
}

void Pipeline::similarity() {
  const VadLexicon lex = load_lexicon_with_warnings(config_.lexicon_path);
  std::unordered_set<std::string> stopwords;
  if (!config_.stopwords_path.empty()) stopwords = load_stopwords(config_.stopwords_path);
  const std::unordered_set<std::string>* stop = stopwords.empty() ? nullptr : &stopwords;

  LoadResult real = load_corpus(filtered_real(), Source::Real);
  LoadResult synth = load_corpus(sampled_synthetic(), Source::Synthetic);
  const auto subset_of = subset_assignment();

  // Resampled arcs per (dialogue, role, dimension); nullopt when the arc is
  // too short to resample.
  struct Resampled {
    std::array<std::optional<std::vector<double>>, 3> per_dim;
  };
  auto resample_all = [&](const Corpus& corpus) {
    std::map<std::string, std::map<Who, Resampled>> out;
    std::vector<std::map<Who, Resampled>> slots(corpus.dialogues.size());
    parallel_for_index(corpus.dialogues.size(), config_.jobs, [&](std::size_t i) {
      const Dialogue& d = corpus.dialogues[i];
      for (Who who : config_.similarity_roles) {
        const StreamArcs sa = stream_arcs(d, who, lex, stop, config_.window, config_.step);
        Resampled r;
        if (sa.ok) {
          for (Dimension dim : kAllDimensions) {
            const EmotionArc& arc = sa.arcs.at(dim);
            if (arc.samples.size() >= 2) {
              r.per_dim[static_cast<std::size_t>(dim)] = resample(arc, config_.resample_n);
            }
          }
        }
        slots[i].emplace(who, std::move(r));
      }
    });
    for (std::size_t i = 0; i < corpus.dialogues.size(); ++i) {
      out.emplace(corpus.dialogues[i].id, std::move(slots[i]));
    }
    return out;
  };
  const auto real_arcs = resample_all(real.corpus);
  const auto synth_arcs = resample_all(synth.corpus);

  // Matched pairs: same problem label, within each sampled subset.
  std::vector<std::pair<const Dialogue*, const Dialogue*>> pairs;
  const int n_subsets = config_.n_subsets;
  for (int k = 0; k < n_subsets; ++k) {
    std::map<std::string, std::vector<const Dialogue*>> synth_by_problem;
    for (const Dialogue& d : synth.corpus.dialogues) {
      auto it = subset_of.find(d.id);
      if (it == subset_of.end() || it->second != k || !d.metadata) continue;
      synth_by_problem[d.metadata->problem].push_back(&d);
    }
    if (config_.pairing == RunConfig::Pairing::AllPairs) {
      for (const Dialogue& r : real.corpus.dialogues) {
        if (!r.metadata) continue;
        auto it = synth_by_problem.find(r.metadata->problem);
        if (it == synth_by_problem.end()) continue;
        for (const Dialogue* s : it->second) pairs.emplace_back(&r, s);
      }
    } else {
      std::map<std::string, std::vector<const Dialogue*>> real_by_problem;
      for (const Dialogue& r : real.corpus.dialogues) {
        if (r.metadata) real_by_problem[r.metadata->problem].push_back(&r);
      }
      for (auto& [label, synths] : synth_by_problem) {
        auto it = real_by_problem.find(label);
        if (it == real_by_problem.end()) continue;
        std::mt19937_64 rng(
            mix_seed(config_.seed, "pairing:" + std::to_string(k) + ":" + label));
        det_shuffle(synths, rng);
        const std::size_t n = std::min(it->second.size(), synths.size());
        for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(it->second[i], synths[i]);
      }
    }
  }

  std::vector<SimilarityRow> rows;
  for (const auto& [r, s] : pairs) {
    for (Who who : config_.similarity_roles) {
      const Resampled& ra = real_arcs.at(r->id).at(who);
      const Resampled& sa = synth_arcs.at(s->id).at(who);
      for (Dimension dim : kAllDimensions) {
        const auto& a = ra.per_dim[static_cast<std::size_t>(dim)];
        const auto& b = sa.per_dim[static_cast<std::size_t>(dim)];
        SimilarityRow row;
        row.real_id = r->id;
        row.synth_id = s->id;
        row.role = who;
        row.dimension = dim;
        if (a && b) row.rho = spearman(*a, *b);
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SimilarityRow& a, const SimilarityRow& b) {
    return std::tie(a.real_id, a.synth_id, a.role, a.dimension) <
           std::tie(b.real_id, b.synth_id, b.role, b.dimension);
  });

  std::string csv = similarity_csv_header() + "\n";
  for (const SimilarityRow& row : rows) {
    csv += similarity_csv_row(row);
    csv += '\n';
  }
  write_file(similarity_csv_path(), csv);
  write_manifest();
}

void Pipeline::report() {
  const auto real_records = read_ued_csv(ued_csv(true));
  const auto synth_records = synth_records_with_subsets();
  const auto comparisons = compute_comparisons();
  std::vector<SimilarityRow> similarities;
  if (std::filesystem::exists(similarity_csv_path())) {
    similarities = read_similarity_csv(similarity_csv_path());
  }
  emit_tables(real_records, synth_records, comparisons, similarities, workdir_);
  write_manifest();
}

void Pipeline::run_all(const std::filesystem::path& real_input,
                       const std::filesystem::path& synthetic_input) {
  ingest(real_input, Source::Real, real_bundle());
  ingest(synthetic_input, Source::Synthetic, synthetic_bundle());
  sample();
  arcs_stage(true);
  arcs_stage(false);
  ued_stage(true);
  ued_stage(false);
  compare();
  similarity();
  report();
}

void Pipeline::write_manifest() const {
  ordered_json manifest;
  manifest["seed"] = config_.seed;
  ordered_json cfg_json = config_.to_json();
  cfg_json.erase("jobs");  // execution knob; outputs do not depend on it
  manifest["config"] = std::move(cfg_json);
  ordered_json inputs = ordered_json::object();
  auto add_input = [&](const std::string& key, const std::filesystem::path& path) {
    if (!path.empty() && std::filesystem::exists(path)) {
      inputs[key] = file_fingerprint(path);
    }
  };
  add_input("corpus_real.json", real_bundle());
  add_input("corpus_synthetic.json", synthetic_bundle());
  add_input("lexicon", config_.lexicon_path);
  add_input("stopwords", config_.stopwords_path);
  manifest["inputs"] = std::move(inputs);
  write_file(manifest_path(), manifest.dump(2) + "\n");
}

}  // namespace emodyn
