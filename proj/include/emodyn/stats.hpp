#pragma once

#include <span>
#include <string>
#include <vector>

#include "emodyn/corpus.hpp"
#include "emodyn/lexicon.hpp"

namespace emodyn {

enum class PMethod { Exact, NormalApprox };

struct TestResult {
  double u = 0.0;      // U statistic for the first sample; 0 <= U <= n1*n2
  double p = 0.0;      // two-sided p-value in (0, 1]
  PMethod method = PMethod::NormalApprox;
  int n1 = 0;
  int n2 = 0;
};

struct EffectSize {
  double rank_biserial = 0.0;  // 1 - 2U/(n1*n2), in [-1, 1]
};

/// Two-sided Mann-Whitney U test. U comes from rank sums with midranks for
/// ties. The p-value is exact (full null distribution) when n1, n2 <= 8
/// and the combined sample has no ties; otherwise a normal approximation
/// with tie correction and a 0.5 continuity correction is used. Throws
/// Errc::EmptySample when either sample is empty.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

EffectSize rank_biserial(const TestResult& t);

/// Exact two-sided p for a given U under the tie-free null distribution
/// (exposed for the cross-method agreement checks).
double exact_p_two_sided(double u, int n1, int n2);

struct SubsetOutcome {
  TestResult test;
  EffectSize effect;
};

/// Aggregation of one metric's real-vs-synthetic tests across subsets.
struct MetricComparison {
  std::string metric;
  Dimension dimension = Dimension::Valence;
  Who role = Who::Whole;
  double alpha = 0.05;
  std::vector<SubsetOutcome> subsets;
  double significant_fraction = 0.0;  // share of subsets with p < alpha
  double median_p = 1.0;
  double mean_abs_effect = 0.0;
};

/// Runs one U test per synthetic subset against the real values and
/// aggregates. Throws Errc::EmptySample via mann_whitney_u and
/// Errc::EmptyInput when no subsets are given.
MetricComparison compare_groups(std::string metric, Dimension dimension, Who role,
                                std::span<const double> real_values,
                                const std::vector<std::vector<double>>& synth_subsets,
                                double alpha = 0.05);

}  // namespace emodyn
