#pragma once

#include <map>
#include <span>
#include <vector>

#include "emodyn/corpus.hpp"
#include "emodyn/lexicon.hpp"

namespace emodyn {

struct ArcSample {
  int window_start = 0;  // word position of the window's first token
  double value = 0.0;    // mean score of the window's lexicon-hit tokens

  bool operator==(const ArcSample&) const = default;
};

/// Rolling-window emotion time series for one dimension of one token
/// stream. Windows advance over all tokens; the mean is taken over the
/// lexicon hits inside each window, and zero-hit windows are skipped (they
/// only bump skipped_window_count).
struct EmotionArc {
  Dimension dimension = Dimension::Valence;
  int window = 10;
  int step = 1;
  std::vector<ArcSample> samples;
  int covered_window_count = 0;
  int skipped_window_count = 0;

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const ArcSample& s : samples) out.push_back(s.value);
    return out;
  }
};

/// Computes the arc over a pre-scored token stream. Streams shorter than
/// `window` collapse to a single window spanning all tokens. Throws
/// Errc::EmptyStream when the stream is empty.
EmotionArc compute_arc(std::span<const ScoredToken> tokens, Dimension dim,
                       int window = 10, int step = 1);

/// Convenience overload: scores `tokens` against `lex` first.
EmotionArc compute_arc(std::span<const Token> tokens, const VadLexicon& lex,
                       Dimension dim, int window = 10, int step = 1);

/// Tokenizes role_stream(d, who) once and computes all three dimension arcs
/// over the identical token sequence.
std::map<Dimension, EmotionArc> arcs_for_dialogue(const Dialogue& d, const VadLexicon& lex,
                                                  Who who, int window = 10, int step = 1);

}  // namespace emodyn
