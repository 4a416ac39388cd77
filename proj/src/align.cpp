#include "emodyn/align.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "emodyn/error.hpp"

namespace emodyn {

std::vector<double> resample(std::span<const double> values, int n) {
  const int len = static_cast<int>(values.size());
  if (len < 2) fail(Errc::TooFewSamples, "resample needs >= 2 samples");
  if (n < 2) fail(Errc::TooFewSamples, "resample target n must be >= 2");

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * (len - 1) / (n - 1);
    const int k = std::min(static_cast<int>(t), len - 2);
    const double frac = t - k;
    const double a = values[static_cast<std::size_t>(k)];
    const double b = values[static_cast<std::size_t>(k) + 1];
    double v;
    if (frac == 0.0) {
      v = a;  // grid points (and the endpoints) are reproduced exactly
    } else if (frac == 1.0) {
      v = b;
    } else {
      v = std::clamp(a + frac * (b - a), std::min(a, b), std::max(a, b));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> resample(const EmotionArc& arc, int n) {
  const auto values = arc.values();
  return resample(values, n);
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share the mean of ranks i+1..j+1
    const double shared = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

namespace {

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    fail(Errc::LengthMismatch, "spearman inputs differ in length: " +
                                   std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (x.size() < 2) fail(Errc::TooFewSamples, "spearman needs >= 2 points");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

SimilarityResult arc_similarity(const Dialogue& real, const Dialogue& synth, Who who,
                                const VadLexicon& lex, int n, int window, int step) {
  SimilarityResult result;
  result.real_id = real.id;
  result.synth_id = synth.id;
  result.role = who;

  const auto real_arcs = arcs_for_dialogue(real, lex, who, window, step);
  const auto synth_arcs = arcs_for_dialogue(synth, lex, who, window, step);
  for (Dimension dim : kAllDimensions) {
    const auto a = resample(real_arcs.at(dim), n);
    const auto b = resample(synth_arcs.at(dim), n);
    result.rho[static_cast<std::size_t>(dim)] = spearman(a, b);
  }
  return result;
}

}  // namespace emodyn
