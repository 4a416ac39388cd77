#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emodyn/arcs.hpp"

namespace emodyn {

/// Linear interpolation of a sample sequence onto n equally spaced points
/// over [0, len-1]. Endpoints are preserved exactly. Requires >= 2 input
/// samples and n >= 2 (Errc::TooFewSamples).
std::vector<double> resample(std::span<const double> values, int n);
std::vector<double> resample(const EmotionArc& arc, int n);

/// Midranks: average rank (1-based) per element, ties share the mean rank.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation: Pearson correlation of midranks. Returns
/// nullopt when either input is constant (undefined rank correlation).
/// Throws Errc::LengthMismatch on unequal lengths and Errc::TooFewSamples
/// for lengths < 2.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

struct SimilarityResult {
  std::string real_id;
  std::string synth_id;
  Who role = Who::Whole;
  // indexed by Dimension order: valence, arousal, dominance
  std::array<std::optional<double>, 3> rho;

  std::optional<double> rho_for(Dimension dim) const {
    return rho[static_cast<std::size_t>(dim)];
  }
};

/// Temporal alignment + Spearman scoring of two dialogues' arcs for one
/// role: both arcs are resampled to n points, then correlated per
/// dimension. Constant arcs yield a null rho for that dimension.
SimilarityResult arc_similarity(const Dialogue& real, const Dialogue& synth, Who who,
                                const VadLexicon& lex, int n = 100, int window = 10,
                                int step = 1);

}  // namespace emodyn
