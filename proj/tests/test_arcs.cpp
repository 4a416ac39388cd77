#include <doctest.h>

#include <random>

#include "emodyn/arcs.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace emodyn;
using fixtures::scored_stream;

namespace {

/// Random stream of optional scores with the given hit probability.
std::vector<std::optional<double>> random_scores(std::mt19937_64& rng, int n, double hit_prob) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::optional<double>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (coin(rng) < hit_prob) {
      out.emplace_back(value(rng));
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("arcs") {

TEST_CASE("constant window mean") {
  std::vector<std::optional<double>> scores(10, 0.4);
  const EmotionArc arc = compute_arc(scored_stream(scores), Dimension::Valence);
  REQUIRE(arc.samples.size() == 1);
  CHECK(arc.samples[0].window_start == 0);
  CHECK(arc.samples[0].value == doctest::Approx(0.4));
  CHECK(arc.covered_window_count == 1);
  CHECK(arc.skipped_window_count == 0);
}

TEST_CASE("11 tokens with one late spike") {
  // hand-computed window means: window 0 averages ten zeros; window 1
  // averages nine zeros and the 1.0 at position 10
  std::vector<std::optional<double>> scores(11, 0.0);
  scores[10] = 1.0;
  const EmotionArc arc = compute_arc(scored_stream(scores), Dimension::Valence);
  REQUIRE(arc.samples.size() == 2);
  CHECK(arc.samples[0].window_start == 0);
  CHECK(arc.samples[0].value == doctest::Approx(0.0));
  CHECK(arc.samples[1].window_start == 1);
  CHECK(arc.samples[1].value == doctest::Approx(0.1));
}

TEST_CASE("zero-hit stream yields no samples") {
  std::vector<std::optional<double>> scores(10, std::nullopt);
  const EmotionArc arc = compute_arc(scored_stream(scores), Dimension::Valence);
  CHECK(arc.samples.empty());
  CHECK(arc.covered_window_count == 0);
  CHECK(arc.skipped_window_count == 1);
}

TEST_CASE("short streams collapse to a single window") {
  std::vector<std::optional<double>> scores = {0.2, std::nullopt, 0.6};
  const EmotionArc arc = compute_arc(scored_stream(scores), Dimension::Valence, 10);
  REQUIRE(arc.samples.size() == 1);
  CHECK(arc.samples[0].value == doctest::Approx(0.4));
}

TEST_CASE("empty stream throws") {
  CHECK_THROWS_AS(compute_arc(std::vector<ScoredToken>{}, Dimension::Valence), Error);
}

TEST_CASE("matches the nested-loop oracle on random streams") {
  std::mt19937_64 rng(20240905);
  std::uniform_int_distribution<int> len(1, 500);
  std::uniform_int_distribution<int> window(1, 20);
  std::uniform_int_distribution<int> step(1, 3);
  std::uniform_real_distribution<double> hit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = len(rng);
    const int w = window(rng);
    const int s = step(rng);
    const auto scores = random_scores(rng, n, hit(rng));
    const EmotionArc arc = compute_arc(scored_stream(scores), Dimension::Valence, w, s);
    const auto expected = oracle::window_means(scores, w, s);
    REQUIRE(arc.samples.size() == expected.samples.size());
    for (std::size_t i = 0; i < expected.samples.size(); ++i) {
      CHECK(arc.samples[i].window_start == expected.samples[i].start);
      CHECK(arc.samples[i].value == doctest::Approx(expected.samples[i].value).epsilon(1e-12));
    }
    CHECK(arc.covered_window_count == expected.covered);
    CHECK(arc.skipped_window_count == expected.skipped);
  }
}

TEST_CASE("window count bookkeeping: covered + skipped = max(1, n - w + 1)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(1, 120);
  std::uniform_real_distribution<double> hit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = len(rng);
    const auto scores = random_scores(rng, n, hit(rng));
    const EmotionArc arc = compute_arc(scored_stream(scores), Dimension::Valence, 10, 1);
    CHECK(arc.covered_window_count + arc.skipped_window_count == std::max(1, n - 10 + 1));
  }
}

TEST_CASE("scores outside a window never change its sample") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    auto scores = random_scores(rng, 60, 0.8);
    scores[0] = 0.25;  // guarantee the first window has a hit
    const EmotionArc before = compute_arc(scored_stream(scores), Dimension::Valence, 10, 1);
    // rewrite everything outside the first window
    for (int i = 10; i < 60; ++i) {
      scores[static_cast<std::size_t>(i)] = (i % 3 == 0) ? std::optional<double>(-0.5) : std::nullopt;
    }
    const EmotionArc after = compute_arc(scored_stream(scores), Dimension::Valence, 10, 1);
    REQUIRE(!before.samples.empty());
    REQUIRE(!after.samples.empty());
    REQUIRE(before.samples[0].window_start == 0);
    REQUIRE(after.samples[0].window_start == 0);
    CHECK(after.samples[0].value == before.samples[0].value);
  }
}

TEST_CASE("sample values stay inside the window's score hull") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 50; ++trial) {
    const auto scores = random_scores(rng, 80, 0.6);
    const EmotionArc arc = compute_arc(scored_stream(scores), Dimension::Valence, 10, 1);
    for (const ArcSample& s : arc.samples) {
      double lo = 1.0, hi = -1.0;
      for (int i = s.window_start; i < s.window_start + 10; ++i) {
        if (scores[static_cast<std::size_t>(i)]) {
          lo = std::min(lo, *scores[static_cast<std::size_t>(i)]);
          hi = std::max(hi, *scores[static_cast<std::size_t>(i)]);
        }
      }
      CHECK(s.value >= lo - 1e-12);
      CHECK(s.value <= hi + 1e-12);
    }
  }
}

TEST_CASE("arcs_for_dialogue shares one token sequence across dimensions") {
  const auto lex = fixtures::make_lexicon({
      {"calm", {0.3, -0.6, 0.2}},
      {"anxious", {-0.7, 0.8, -0.4}},
      {"fine", {0.5, -0.1, 0.3}},
  });
  const Dialogue d = fixtures::make_dialogue(
      "arc", Source::Real,
      {{SpeakerRole::Counselor, "calm calm anxious fine calm anxious"},
       {SpeakerRole::Client, "anxious fine calm calm fine anxious calm"}});

  SUBCASE("whole dialogue: equal sample counts across dimensions") {
    const auto arcs = arcs_for_dialogue(d, lex, Who::Whole, 5, 1);
    const auto& v = arcs.at(Dimension::Valence);
    const auto& a = arcs.at(Dimension::Arousal);
    const auto& dom = arcs.at(Dimension::Dominance);
    CHECK(v.samples.size() == a.samples.size());
    CHECK(v.samples.size() == dom.samples.size());
    CHECK(!v.samples.empty());
  }
  SUBCASE("client-only arcs use client tokens only") {
    const auto arcs = arcs_for_dialogue(d, lex, Who::Client, 5, 1);
    // 7 client tokens -> 3 windows of width 5
    CHECK(arcs.at(Dimension::Valence).covered_window_count +
              arcs.at(Dimension::Valence).skipped_window_count ==
          3);
  }
  SUBCASE("200-token fixture equals the oracle for all three dimensions") {
    std::mt19937_64 rng(2024);
    std::vector<std::string> vocab = {"calm", "anxious", "fine", "zzz", "qqq"};
    std::string counselor_text, client_text;
    for (int i = 0; i < 100; ++i) {
      counselor_text += vocab[rng() % vocab.size()] + " ";
      client_text += vocab[rng() % vocab.size()] + " ";
    }
    const Dialogue big = fixtures::make_dialogue(
        "big", Source::Real,
        {{SpeakerRole::Counselor, counselor_text}, {SpeakerRole::Client, client_text}});
    const auto arcs = arcs_for_dialogue(big, lex, Who::Whole, 10, 1);
    const auto tokens = tokenize(role_stream(big, Who::Whole));
    REQUIRE(tokens.size() == 200);
    const auto scored = score_tokens(tokens, lex);
    for (Dimension dim : kAllDimensions) {
      std::vector<std::optional<double>> per_dim;
      for (const auto& st : scored) {
        per_dim.push_back(st.score ? std::optional<double>(st.score->get(dim)) : std::nullopt);
      }
      const auto expected = oracle::window_means(per_dim, 10, 1);
      const EmotionArc& arc = arcs.at(dim);
      REQUIRE(arc.samples.size() == expected.samples.size());
      for (std::size_t i = 0; i < expected.samples.size(); ++i) {
        CHECK(arc.samples[i].value == doctest::Approx(expected.samples[i].value).epsilon(1e-12));
      }
    }
  }
}

}  // TEST_SUITE
