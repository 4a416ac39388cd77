#include <doctest.h>

#include <fstream>

#include "emodyn/lexicon.hpp"
#include "emodyn/util.hpp"
#include "support/fixtures.hpp"

using namespace emodyn;

TEST_SUITE("lexicon") {

TEST_CASE("load_lexicon parses rows and detects headers") {
  fixtures::TempDir dir("lex");
  const auto path = dir.path() / "vad.tsv";
  write_file(path,
             "term\tvalence\tarousal\tdominance\n"
             "calm\t0.3\t-0.6\t0.2\n"
             "angry\t-0.8\t0.9\t0.4\n");
  const VadLexicon lex = load_lexicon(path);
  CHECK(lex.size() == 2);
  const VadScore* calm = lex.lookup("calm");
  REQUIRE(calm != nullptr);
  CHECK(calm->valence == doctest::Approx(0.3));
  CHECK(calm->arousal == doctest::Approx(-0.6));
  CHECK(calm->dominance == doctest::Approx(0.2));
}

TEST_CASE("load_lexicon works without header") {
  fixtures::TempDir dir("lex");
  const auto path = dir.path() / "vad.tsv";
  write_file(path, "calm\t0.3\t-0.6\t0.2\n");
  CHECK(load_lexicon(path).size() == 1);
}

TEST_CASE("out-of-range score fails") {
  fixtures::TempDir dir("lex");
  const auto path = dir.path() / "vad.tsv";
  write_file(path, "hot\t1.5\t0.0\t0.0\n");
  try {
    load_lexicon(path);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfRange);
    CHECK(std::string(e.what()).find("valence") != std::string::npos);
  }
}

TEST_CASE("malformed rows fail with the line number") {
  fixtures::TempDir dir("lex");
  const auto path = dir.path() / "vad.tsv";
  write_file(path, "calm\t0.3\t-0.6\n");
  try {
    load_lexicon(path);
    FAIL("expected MalformedRow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedRow);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("five-row fixture with one duplicate keeps 4 entries") {
  fixtures::TempDir dir("lex");
  const auto path = dir.path() / "vad.tsv";
  // hand-enumerated fixture: calm appears twice, last row wins
  write_file(path,
             "calm\t0.3\t-0.6\t0.2\n"
             "sad\t-0.7\t-0.2\t-0.3\n"
             "glad\t0.8\t0.4\t0.5\n"
             "tense\t-0.2\t0.7\t-0.1\n"
             "calm\t0.4\t-0.5\t0.1\n");
  const VadLexicon lex = load_lexicon(path);
  CHECK(lex.size() == 4);
  CHECK(lex.duplicate_count == 1);
  CHECK(lex.lookup("calm")->valence == doctest::Approx(0.4));
}

TEST_CASE("multi-word entries are skipped with a count") {
  fixtures::TempDir dir("lex");
  const auto path = dir.path() / "vad.tsv";
  write_file(path,
             "calm\t0.3\t-0.6\t0.2\n"
             "at ease\t0.5\t-0.4\t0.3\n");
  const VadLexicon lex = load_lexicon(path);
  CHECK(lex.size() == 1);
  CHECK(lex.multiword_count == 1);
}

TEST_CASE("tokenize applies the word rules") {
  SUBCASE("apostrophes inside words survive") {
    const auto tokens = tokenize("I can't, stop!");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].surface == "i");
    CHECK(tokens[1].surface == "can't");
    CHECK(tokens[2].surface == "stop");
    CHECK(tokens[0].position == 0);
    CHECK(tokens[1].position == 1);
    CHECK(tokens[2].position == 2);
  }
  SUBCASE("empty input") { CHECK(tokenize("").empty()); }
  SUBCASE("case folding") {
    const auto tokens = tokenize("Hello HELLO hello");
    REQUIRE(tokens.size() == 3);
    for (const Token& t : tokens) CHECK(t.surface == "hello");
  }
  SUBCASE("digits and symbols separate") {
    const auto tokens = tokenize("well2well 3.5% a-b");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].surface == "well");
    CHECK(tokens[1].surface == "well");
    CHECK(tokens[2].surface == "a");
    CHECK(tokens[3].surface == "b");
  }
  SUBCASE("leading and trailing apostrophes are separators") {
    const auto tokens = tokenize("'tis said 'n' done'");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].surface == "tis");
    CHECK(tokens[2].surface == "n");
    CHECK(tokens[3].surface == "done");
  }
  SUBCASE("curly apostrophes normalize to straight") {
    const auto tokens = tokenize("don’t");
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].surface == "don't");
  }
  SUBCASE("accented letters are word characters") {
    const auto tokens = tokenize("José was naïve; Müller agreed");
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[0].surface == "josé");
    CHECK(tokens[2].surface == "naïve");
    CHECK(tokens[3].surface == "müller");
  }
}

TEST_CASE("tokenize is idempotent on its own joined output") {
  std::mt19937_64 rng(41);
  const std::vector<std::string> chunks = {"Hello!",  "can't",   "Ötzi",  "42",
                                           "(well)",  "déjà-vu", "what?", "O'Brien's",
                                           "...",     "naïve",   "a",     "I'm"};
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    for (int i = 0; i < 20; ++i) {
      text += chunks[rng() % chunks.size()];
      text += (rng() % 4 == 0) ? "  " : " ";
    }
    const auto tokens = tokenize(text);
    std::string joined;
    for (const Token& t : tokens) {
      if (!joined.empty()) joined += ' ';
      joined += t.surface;
    }
    const auto again = tokenize(joined);
    REQUIRE(again.size() == tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      CHECK(again[i].surface == tokens[i].surface);
      CHECK(again[i].position == tokens[i].position);
    }
  }
}

TEST_CASE("score_tokens preserves order and positions") {
  const auto lex = fixtures::make_lexicon({{"calm", {0.3, -0.6, 0.2}}});
  SUBCASE("hit") {
    const auto tokens = tokenize("calm");
    const auto scored = score_tokens(tokens, lex);
    REQUIRE(scored.size() == 1);
    CHECK(scored[0].position == 0);
    REQUIRE(scored[0].score.has_value());
    CHECK(scored[0].score->valence == doctest::Approx(0.3));
  }
  SUBCASE("miss") {
    const auto tokens = tokenize("zzz");
    const auto scored = score_tokens(tokens, lex);
    REQUIRE(scored.size() == 1);
    CHECK(!scored[0].score.has_value());
  }
  SUBCASE("mixed stream keeps alignment") {
    const auto lex2 = fixtures::make_lexicon({{"calm", {0.3, -0.6, 0.2}}, {"sad", {-0.7, 0, 0}}});
    const auto tokens = tokenize("calm zzz sad");
    const auto scored = score_tokens(tokens, lex2);
    REQUIRE(scored.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(scored[i].position == tokens[i].position);
    CHECK(scored[0].score.has_value());
    CHECK(!scored[1].score.has_value());
    CHECK(scored[2].score.has_value());
    CHECK(coverage(tokens, lex2) == doctest::Approx(2.0 / 3.0));
  }
}

TEST_CASE("coverage conventions") {
  const auto lex = fixtures::make_lexicon({{"calm", {0.3, -0.6, 0.2}}});
  CHECK(coverage({}, lex) == 0.0);
  const auto all_hit = tokenize("calm calm");
  CHECK(coverage(all_hit, lex) == 1.0);
}

}  // TEST_SUITE
