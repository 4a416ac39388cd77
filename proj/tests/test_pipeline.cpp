#include <doctest.h>

#include <filesystem>
#include <set>

#include <json.hpp>

#include "emodyn/pipeline.hpp"
#include "emodyn/util.hpp"
#include "support/fixtures.hpp"
#include "support/gen_corpus.hpp"

using namespace emodyn;
namespace fs = std::filesystem;

namespace {

struct PipelineFixture {
  fixtures::TempDir inputs{"pipe_in"};
  fs::path real_path, synth_path, lexicon_path;

  PipelineFixture() {
    const std::map<std::string, int> real_counts = {{"anxiety and fear", 3},
                                                    {"self-esteem and confidence issues", 2},
                                                    {"relationships", 2}};
    const std::map<std::string, int> synth_counts = {{"anxiety and fear", 7},
                                                     {"self-esteem and confidence issues", 5},
                                                     {"relationships", 5}};
    real_path = inputs.path() / "real.json";
    synth_path = inputs.path() / "synthetic.json";
    lexicon_path = inputs.path() / "vad.tsv";
    save_corpus(gen::fixture_corpus(Source::Real, real_counts, 11), real_path);
    save_corpus(gen::fixture_corpus(Source::Synthetic, synth_counts, 22), synth_path);
    write_file(lexicon_path, gen::fixture_lexicon_tsv());
  }

  RunConfig config(std::uint64_t seed = 7) const {
    RunConfig cfg;
    cfg.lexicon_path = lexicon_path;
    cfg.seed = seed;
    cfg.n_subsets = 2;
    cfg.window = 10;
    cfg.resample_n = 40;
    return cfg;
  }
};

const std::vector<std::string> kFinalArtifacts = {
    "corpus_real.json",    "corpus_synthetic.json",   "filtered_real.json",
    "sampled_synthetic.json", "subsets.json",         "arcs_real.csv",
    "arcs_synthetic.csv",  "ued_real.csv",            "ued_synthetic.csv",
    "comparisons.csv",     "comparison_aggregate.csv", "similarity.csv",
    "ued_table_valence.csv", "ued_table_arousal.csv", "ued_table_dominance.csv",
    "boxplots.json",       "run_manifest.json",
};

void check_same_outputs(const fs::path& a, const fs::path& b) {
  for (const std::string& name : kFinalArtifacts) {
    INFO("artifact: " << name);
    REQUIRE(fs::exists(a / name));
    REQUIRE(fs::exists(b / name));
    CHECK(read_file(a / name) == read_file(b / name));
  }
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("run-all produces the full artifact set deterministically") {
  PipelineFixture fx;
  fixtures::TempDir w1("pipe_w1"), w2("pipe_w2");

  Pipeline p1(fx.config(), w1.path());
  p1.run_all(fx.real_path, fx.synth_path);
  for (const std::string& name : kFinalArtifacts) {
    INFO("artifact: " << name);
    CHECK(fs::exists(w1.path() / name));
  }

  Pipeline p2(fx.config(), w2.path());
  p2.run_all(fx.real_path, fx.synth_path);
  check_same_outputs(w1.path(), w2.path());

  SUBCASE("different seed changes the sampling") {
    fixtures::TempDir w3("pipe_w3");
    Pipeline p3(fx.config(99), w3.path());
    p3.run_all(fx.real_path, fx.synth_path);
    CHECK(read_file(w1.path() / "subsets.json") != read_file(w3.path() / "subsets.json"));
  }
}

TEST_CASE("stage-by-stage composition equals run-all") {
  PipelineFixture fx;
  fixtures::TempDir all("pipe_all"), staged("pipe_staged");

  Pipeline pa(fx.config(), all.path());
  pa.run_all(fx.real_path, fx.synth_path);

  Pipeline ps(fx.config(), staged.path());
  ps.ingest(fx.real_path, Source::Real, ps.real_bundle());
  ps.ingest(fx.synth_path, Source::Synthetic, ps.synthetic_bundle());
  ps.sample();
  ps.arcs_stage(true);
  ps.arcs_stage(false);
  ps.ued_stage(true);
  ps.ued_stage(false);
  ps.compare();
  ps.similarity();
  ps.report();

  check_same_outputs(all.path(), staged.path());
}

TEST_CASE("parallel jobs do not change any output byte") {
  PipelineFixture fx;
  fixtures::TempDir serial("pipe_serial"), parallel("pipe_parallel");

  Pipeline p1(fx.config(), serial.path());
  p1.run_all(fx.real_path, fx.synth_path);

  RunConfig cfg = fx.config();
  cfg.jobs = 4;
  Pipeline p4(cfg, parallel.path());
  p4.run_all(fx.real_path, fx.synth_path);

  check_same_outputs(serial.path(), parallel.path());
}

TEST_CASE("subsets are disjoint and exactly stratified on disk") {
  PipelineFixture fx;
  fixtures::TempDir w("pipe_subsets");
  Pipeline p(fx.config(), w.path());
  p.ingest(fx.real_path, Source::Real, p.real_bundle());
  p.ingest(fx.synth_path, Source::Synthetic, p.synthetic_bundle());
  p.sample();

  const auto j = nlohmann::json::parse(read_file(p.subsets_file()));
  REQUIRE(j.at("subsets").size() == 2);
  std::set<std::string> seen;
  for (const auto& subset : j.at("subsets")) {
    CHECK(subset.size() == 7);  // 3 + 2 + 2 matching the real distribution
    for (const auto& id : subset) {
      CHECK(!seen.contains(id.get<std::string>()));
      seen.insert(id.get<std::string>());
    }
  }
  CHECK(j.at("targets").at("anxiety and fear") == 3);
}

TEST_CASE("insufficient synthetic pool fails with InsufficientPool") {
  PipelineFixture fx;
  fixtures::TempDir w("pipe_insufficient");
  RunConfig cfg = fx.config();
  cfg.n_subsets = 10;  // needs 30 anxiety dialogues, pool has 7
  Pipeline p(cfg, w.path());
  p.ingest(fx.real_path, Source::Real, p.real_bundle());
  p.ingest(fx.synth_path, Source::Synthetic, p.synthetic_bundle());
  try {
    p.sample();
    FAIL("expected InsufficientPool");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsufficientPool);
  }
}

TEST_CASE("config validation lists every problem at once") {
  RunConfig cfg;
  cfg.window = 0;
  cfg.alpha = 2.0;
  cfg.n_subsets = 0;
  const auto problems = cfg.validate();
  CHECK(problems.size() >= 3);
  fixtures::TempDir w("pipe_badcfg");
  try {
    Pipeline p(cfg, w.path());
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConfigError);
    const std::string what = e.what();
    CHECK(what.find("window") != std::string::npos);
    CHECK(what.find("alpha") != std::string::npos);
    CHECK(what.find("n_subsets") != std::string::npos);
  }
}

TEST_CASE("RunConfig round-trips through JSON") {
  RunConfig cfg;
  cfg.lexicon_path = "lex.tsv";
  cfg.window = 12;
  cfg.seed = 42;
  cfg.problem_targets = {{"anxiety and fear", 25}};
  cfg.pairing = RunConfig::Pairing::OneToOne;
  cfg.similarity_roles = {Who::Client};
  HttpTaggerConfig t;
  t.id = "t1";
  t.url = "http://localhost:9000/tag";
  cfg.taggers.push_back(t);

  const RunConfig back = RunConfig::from_json(nlohmann::json::parse(cfg.to_json().dump()));
  CHECK(back.lexicon_path == cfg.lexicon_path);
  CHECK(back.window == cfg.window);
  CHECK(back.seed == cfg.seed);
  CHECK(back.problem_targets == cfg.problem_targets);
  CHECK(back.pairing == cfg.pairing);
  CHECK(back.similarity_roles == cfg.similarity_roles);
  REQUIRE(back.taggers.size() == 1);
  CHECK(back.taggers[0].url == t.url);
}

TEST_CASE("similarity rows are sorted and rho values lie in [-1, 1]") {
  PipelineFixture fx;
  fixtures::TempDir w("pipe_sim");
  Pipeline p(fx.config(), w.path());
  p.run_all(fx.real_path, fx.synth_path);

  const auto rows = read_similarity_csv(p.similarity_csv_path());
  REQUIRE(!rows.empty());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto key = [](const SimilarityRow& r) {
      return std::tie(r.real_id, r.synth_id, r.role, r.dimension);
    };
    CHECK(key(rows[i - 1]) <= key(rows[i]));
  }
  for (const auto& r : rows) {
    if (r.rho) {
      CHECK(*r.rho >= -1.0);
      CHECK(*r.rho <= 1.0);
    }
  }
  // all-pairs within problem: every row pairs same-problem dialogues
  const auto real = load_corpus(p.filtered_real(), Source::Real).corpus;
  const auto synth = load_corpus(p.sampled_synthetic(), Source::Synthetic).corpus;
  for (const auto& r : rows) {
    const Dialogue* a = real.find(r.real_id);
    const Dialogue* b = synth.find(r.synth_id);
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(a->metadata->problem == b->metadata->problem);
  }
}

TEST_CASE("one-to-one pairing yields one synthetic partner per real dialogue per subset") {
  PipelineFixture fx;
  fixtures::TempDir w("pipe_one2one");
  RunConfig cfg = fx.config();
  cfg.pairing = RunConfig::Pairing::OneToOne;
  Pipeline p(cfg, w.path());
  p.run_all(fx.real_path, fx.synth_path);
  const auto rows = read_similarity_csv(p.similarity_csv_path());
  // 7 real dialogues x 2 subsets x 2 roles x 3 dims
  CHECK(rows.size() == 7 * 2 * 2 * 3);
}

TEST_CASE("stopword filtering changes the token stream") {
  PipelineFixture fx;
  fixtures::TempDir w1("pipe_stop1"), w2("pipe_stop2");
  const fs::path stop_path = fx.inputs.path() / "stop.txt";
  write_file(stop_path, "okay\nyeah\num\nuh\nmmm\nright\n");

  Pipeline plain(fx.config(), w1.path());
  plain.ingest(fx.real_path, Source::Real, plain.real_bundle());
  save_corpus(load_corpus(plain.real_bundle(), Source::Real).corpus, plain.filtered_real());
  plain.arcs_stage(true);

  RunConfig cfg = fx.config();
  cfg.stopwords_path = stop_path;
  Pipeline filtered(cfg, w2.path());
  filtered.ingest(fx.real_path, Source::Real, filtered.real_bundle());
  save_corpus(load_corpus(filtered.real_bundle(), Source::Real).corpus, filtered.filtered_real());
  filtered.arcs_stage(true);

  CHECK(read_file(w1.path() / "arcs_real.csv") != read_file(w2.path() / "arcs_real.csv"));
}

TEST_CASE("manifest captures seed, config, and input fingerprints") {
  PipelineFixture fx;
  fixtures::TempDir w("pipe_manifest");
  Pipeline p(fx.config(123), w.path());
  p.run_all(fx.real_path, fx.synth_path);
  const auto manifest = nlohmann::json::parse(read_file(p.manifest_path()));
  CHECK(manifest.at("seed") == 123);
  CHECK(manifest.at("config").at("window") == 10);
  CHECK(manifest.at("inputs").contains("corpus_real.json"));
  CHECK(manifest.at("inputs").contains("corpus_synthetic.json"));
  CHECK(manifest.at("inputs").contains("lexicon"));
  const std::string fp = manifest.at("inputs").at("lexicon");
  CHECK(fp == file_fingerprint(fx.lexicon_path));
}

}  // TEST_SUITE
