#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emodyn {

// ---------------------------------------------------------------------------
// Deterministic randomness.
//
// std::shuffle and std::uniform_int_distribution are implementation-defined,
// so seeded runs would not be byte-identical across standard libraries. All
// randomized pipeline steps go through these helpers instead.
// ---------------------------------------------------------------------------

/// Uniform draw from [0, bound) via rejection sampling; bound >= 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void det_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

/// Derives a stream-specific seed so independent stages never share state.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream);

// ---------------------------------------------------------------------------
// Hashing / formatting
// ---------------------------------------------------------------------------

/// FNV-1a 64-bit content fingerprint (not cryptographic).
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// Fingerprint of a file's raw bytes.
std::string file_fingerprint(const std::filesystem::path& path);

/// Shortest stable decimal representation that round-trips the double.
std::string format_double(double v);
/// Fixed 4-decimal formatting used for table mirrors.
std::string format_fixed4(double v);

// ---------------------------------------------------------------------------
// Strings / CSV
// ---------------------------------------------------------------------------

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string ascii_lower(std::string_view s);

/// RFC-4180 style escaping: quotes a field when it contains , " or newline.
std::string csv_escape(std::string_view field);
std::string csv_join(std::span<const std::string> fields);
/// Parses one CSV record (no embedded newlines in quoted fields).
std::vector<std::string> csv_split(std::string_view line);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// ---------------------------------------------------------------------------
// Concurrency
// ---------------------------------------------------------------------------

/// Runs fn(i) for every i in [0, n) on up to `jobs` threads. fn must write
/// only to its own output slot; with that discipline, results are identical
/// regardless of scheduling. Worker exceptions are rethrown on the caller.
void parallel_for_index(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// ---------------------------------------------------------------------------
// Basic statistics shared by several modules
// ---------------------------------------------------------------------------

double mean_of(std::span<const double> values);
/// Population standard deviation (divides by n, not n-1).
double population_sd(std::span<const double> values);
double median_of(std::vector<double> values);  // takes a copy; sorts

}  // namespace emodyn
