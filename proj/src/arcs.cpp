#include "emodyn/arcs.hpp"

#include <algorithm>

#include "emodyn/error.hpp"

namespace emodyn {

EmotionArc compute_arc(std::span<const ScoredToken> tokens, Dimension dim,
                       int window, int step) {
  if (window < 1 || step < 1) fail(Errc::ConfigError, "window and step must be >= 1");
  const int n = static_cast<int>(tokens.size());
  if (n == 0) fail(Errc::EmptyStream, "cannot compute an arc over zero tokens");

  EmotionArc arc;
  arc.dimension = dim;
  arc.window = window;
  arc.step = step;

  const int effective_window = std::min(window, n);  // short-text fallback
  for (int start = 0; start + effective_window <= n; start += step) {
    double sum = 0.0;
    int hits = 0;
    for (int i = start; i < start + effective_window; ++i) {
      if (tokens[static_cast<std::size_t>(i)].score) {
        sum += tokens[static_cast<std::size_t>(i)].score->get(dim);
        ++hits;
      }
    }
    if (hits > 0) {
      arc.samples.push_back(ArcSample{start, sum / hits});
      ++arc.covered_window_count;
    } else {
      ++arc.skipped_window_count;
    }
  }
  return arc;
}

EmotionArc compute_arc(std::span<const Token> tokens, const VadLexicon& lex,
                       Dimension dim, int window, int step) {
  const auto scored = score_tokens(tokens, lex);
  return compute_arc(scored, dim, window, step);
}

std::map<Dimension, EmotionArc> arcs_for_dialogue(const Dialogue& d, const VadLexicon& lex,
                                                  Who who, int window, int step) {
  const std::string stream = role_stream(d, who);
  const auto tokens = tokenize(stream);
  const auto scored = score_tokens(tokens, lex);
  std::map<Dimension, EmotionArc> out;
  for (Dimension dim : kAllDimensions) {
    out.emplace(dim, compute_arc(scored, dim, window, step));
  }
  return out;
}

}  // namespace emodyn
