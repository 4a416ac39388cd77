#pragma once

// Shared builders for in-memory test data and temp directories.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "emodyn/arcs.hpp"
#include "emodyn/corpus.hpp"
#include "emodyn/lexicon.hpp"

namespace fixtures {

using emodyn::Dialogue;
using emodyn::SessionMetadata;
using emodyn::Source;
using emodyn::SpeakerRole;
using emodyn::Turn;

inline Dialogue make_dialogue(std::string id, Source source,
                              std::vector<std::pair<SpeakerRole, std::string>> turns,
                              std::optional<SessionMetadata> metadata = std::nullopt) {
  Dialogue d;
  d.id = std::move(id);
  d.source = source;
  d.metadata = std::move(metadata);
  int idx = 0;
  for (auto& [role, text] : turns) {
    d.turns.push_back(Turn{idx++, role, std::move(text)});
  }
  return d;
}

inline Dialogue two_turn_dialogue(std::string id, Source source, std::string problem) {
  return make_dialogue(std::move(id), source,
                       {{SpeakerRole::Counselor, "how are you feeling today"},
                        {SpeakerRole::Client, "i feel rather anxious about work"}},
                       SessionMetadata{std::move(problem), "female", "positive"});
}

inline emodyn::VadLexicon make_lexicon(
    std::vector<std::pair<std::string, emodyn::VadScore>> entries, std::string name = "test") {
  emodyn::VadLexicon::EntryMap map;
  for (auto& [term, score] : entries) map.emplace(std::move(term), score);
  return emodyn::VadLexicon(std::move(name), std::move(map));
}

/// Scored token stream with the given per-dimension value (hit positions
/// get the value; others stay unscored).
inline std::vector<emodyn::ScoredToken> scored_stream(const std::vector<std::optional<double>>& v,
                                                      emodyn::Dimension dim = emodyn::Dimension::Valence) {
  std::vector<emodyn::ScoredToken> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    emodyn::ScoredToken t;
    t.position = static_cast<int>(i);
    if (v[i]) {
      emodyn::VadScore s{};
      switch (dim) {
        case emodyn::Dimension::Valence: s.valence = *v[i]; break;
        case emodyn::Dimension::Arousal: s.arousal = *v[i]; break;
        case emodyn::Dimension::Dominance: s.dominance = *v[i]; break;
      }
      t.score = s;
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Arc assembled directly from values (window/step metadata only nominal).
inline emodyn::EmotionArc arc_from_values(const std::vector<double>& values) {
  emodyn::EmotionArc arc;
  arc.dimension = emodyn::Dimension::Valence;
  for (std::size_t i = 0; i < values.size(); ++i) {
    arc.samples.push_back(emodyn::ArcSample{static_cast<int>(i), values[i]});
  }
  arc.covered_window_count = static_cast<int>(values.size());
  return arc;
}

/// Unique temp directory, removed on destruction.
class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("emodyn_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
};

}  // namespace fixtures
