#include "emodyn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "emodyn/align.hpp"
#include "emodyn/util.hpp"

namespace emodyn {

namespace {

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

constexpr int kExactLimit = 8;  // per-sample size bound for the exact path

/// Null distribution of the rank sum of the first sample: counts[s] = number
/// of n1-subsets of ranks {1..N} with sum s. Sizes are tiny (n1, n2 <= 8),
/// so exact 64-bit counting is plenty.
std::vector<double> rank_sum_counts(int n1, int n) {
  const int max_sum = n1 * (2 * n - n1 + 1) / 2;
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(n1) + 1,
                                      std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
  dp[0][0] = 1.0;
  for (int rank = 1; rank <= n; ++rank) {
    for (int j = std::min(rank, n1); j >= 1; --j) {
      for (int s = max_sum; s >= rank; --s) {
        dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] +=
            dp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s - rank)];
      }
    }
  }
  return dp[static_cast<std::size_t>(n1)];
}

bool has_ties(std::span<const double> a, std::span<const double> b) {
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) != all.end();
}

}  // namespace

double exact_p_two_sided(double u, int n1, int n2) {
  const int n = n1 + n2;
  const auto counts = rank_sum_counts(n1, n);
  const int min_sum = n1 * (n1 + 1) / 2;
  double total = 0.0, le = 0.0, ge = 0.0;
  for (int s = min_sum; s < static_cast<int>(counts.size()); ++s) {
    const double c = counts[static_cast<std::size_t>(s)];
    const double u_of_s = s - min_sum;  // U = R1 - n1(n1+1)/2
    total += c;
    if (u_of_s <= u) le += c;
    if (u_of_s >= u) ge += c;
  }
  const double p = 2.0 * std::min(le, ge) / total;
  return std::min(p, 1.0);
}

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  const int n1 = static_cast<int>(a.size());
  const int n2 = static_cast<int>(b.size());
  if (n1 == 0 || n2 == 0) fail(Errc::EmptySample, "Mann-Whitney needs non-empty samples");

  std::vector<double> combined(a.begin(), a.end());
  combined.insert(combined.end(), b.begin(), b.end());
  const auto ranks = average_ranks(combined);

  double r1 = 0.0;
  for (int i = 0; i < n1; ++i) r1 += ranks[static_cast<std::size_t>(i)];
  const double u = r1 - static_cast<double>(n1) * (n1 + 1) / 2.0;

  TestResult t;
  t.u = u;
  t.n1 = n1;
  t.n2 = n2;

  const bool tied = has_ties(a, b);
  if (n1 <= kExactLimit && n2 <= kExactLimit && !tied) {
    t.method = PMethod::Exact;
    t.p = exact_p_two_sided(u, n1, n2);
    return t;
  }

  // Normal approximation with tie correction and 0.5 continuity correction.
  t.method = PMethod::NormalApprox;
  const double n = n1 + n2;
  const double mu = static_cast<double>(n1) * n2 / 2.0;
  double tie_sum = 0.0;  // sum of t^3 - t over tie groups
  {
    std::vector<double> sorted = combined;
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
      const double g = static_cast<double>(j - i + 1);
      tie_sum += g * g * g - g;
      i = j + 1;
    }
  }
  double var = static_cast<double>(n1) * n2 / 12.0 * ((n + 1.0) - tie_sum / (n * (n - 1.0)));
  if (var <= 0.0) {
    t.p = 1.0;  // all values identical
    return t;
  }
  const double diff = std::max(std::abs(u - mu) - 0.5, 0.0);
  const double z = diff / std::sqrt(var);
  t.p = std::clamp(2.0 * normal_sf(z), std::numeric_limits<double>::min(), 1.0);
  return t;
}

EffectSize rank_biserial(const TestResult& t) {
  return EffectSize{1.0 - 2.0 * t.u / (static_cast<double>(t.n1) * t.n2)};
}

MetricComparison compare_groups(std::string metric, Dimension dimension, Who role,
                                std::span<const double> real_values,
                                const std::vector<std::vector<double>>& synth_subsets,
                                double alpha) {
  if (synth_subsets.empty()) fail(Errc::EmptyInput, "compare_groups needs >= 1 subset");

  MetricComparison cmp;
  cmp.metric = std::move(metric);
  cmp.dimension = dimension;
  cmp.role = role;
  cmp.alpha = alpha;

  std::vector<double> ps;
  int significant = 0;
  double abs_effect_sum = 0.0;
  for (const auto& subset : synth_subsets) {
    SubsetOutcome out;
    out.test = mann_whitney_u(real_values, subset);
    out.effect = rank_biserial(out.test);
    ps.push_back(out.test.p);
    if (out.test.p < alpha) ++significant;
    abs_effect_sum += std::abs(out.effect.rank_biserial);
    cmp.subsets.push_back(out);
  }
  cmp.significant_fraction = static_cast<double>(significant) / static_cast<double>(synth_subsets.size());
  cmp.median_p = median_of(ps);
  cmp.mean_abs_effect = abs_effect_sum / static_cast<double>(synth_subsets.size());
  return cmp;
}

}  // namespace emodyn
