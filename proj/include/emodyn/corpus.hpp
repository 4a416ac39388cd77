#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "emodyn/error.hpp"

namespace emodyn {

enum class SpeakerRole { Counselor, Client };
enum class Source { Real, Synthetic, Mixed };
enum class Who { Whole, Counselor, Client };

std::string_view to_string(SpeakerRole role);
std::string_view to_string(Source source);
std::string_view to_string(Who who);
SpeakerRole parse_role(std::string_view s);
Source parse_source(std::string_view s);
Who parse_who(std::string_view s);

struct Turn {
  int index = 0;
  SpeakerRole role = SpeakerRole::Counselor;
  std::string text;

  bool operator==(const Turn&) const = default;
};

struct SessionMetadata {
  std::string problem;
  std::string gender;
  std::string attitude;  // positive | neutral | negative

  bool operator==(const SessionMetadata&) const = default;
};

/// One counseling session. Valid dialogues have >= 2 turns, at least one
/// turn per role, strictly increasing turn indices from 0, and non-empty
/// turn text.
struct Dialogue {
  std::string id;
  Source source = Source::Real;
  std::optional<SessionMetadata> metadata;
  std::vector<Turn> turns;

  bool operator==(const Dialogue&) const = default;
};

struct Corpus {
  Source source = Source::Mixed;
  std::vector<Dialogue> dialogues;

  const Dialogue* find(std::string_view id) const;
  std::map<std::string, int> problem_counts() const;

  bool operator==(const Corpus&) const = default;
};

/// A non-fatal problem encountered while loading.
struct ParseIssue {
  Errc code = Errc::MalformedFile;
  std::string file;    // file the dialogue came from ("" for in-memory)
  std::string id;      // dialogue id when known
  std::string reason;
};

struct LoadResult {
  Corpus corpus;
  std::vector<ParseIssue> issues;
};

/// Loads a corpus from a bundle file or a directory of dialogue files.
/// Accepted inputs per file: the canonical JSON bundle, a single-dialogue
/// JSON object, a generic dialogue-list JSON (CACTUS-style field aliases),
/// or a "Speaker: text" plain-text transcript (.txt). `declared` is the
/// corpus-level source; dialogues without an explicit source inherit it.
/// Per-file/dialogue failures are collected as issues, not thrown; throws
/// Errc::EmptyCorpus when nothing parseable was found.
LoadResult load_corpus(const std::filesystem::path& path, Source declared);

/// Writes the canonical bundle format (UTF-8 JSON).
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// Concatenates turn texts (single space between turns) for the requested
/// stream. Throws Errc::RoleAbsent when the selected role has no turns.
std::string role_stream(const Dialogue& d, Who who);

inline constexpr Who kAllWho[] = {Who::Whole, Who::Counselor, Who::Client};

/// Keeps dialogues whose problem label is in `allowed`, preserving order.
/// Throws Errc::MissingMetadata when a dialogue has no metadata.
Corpus filter_by_problem(const Corpus& corpus, const std::set<std::string>& allowed);

/// Splits off dialogues lacking metadata (CLI-level policy: warn, don't fail).
Corpus drop_missing_metadata(const Corpus& corpus, std::vector<std::string>* dropped_ids);

/// Draws `n_subsets` pairwise-disjoint corpora from `pool`, each matching
/// `target` (problem label -> count) exactly. Sampling shuffles each label
/// stratum with a seeded deterministic shuffle, so results depend only on
/// (pool order, seed). Throws Errc::InsufficientPool when a stratum cannot
/// supply n_subsets * count dialogues.
std::vector<Corpus> sample_matched_subsets(const Corpus& pool,
                                           const std::map<std::string, int>& target,
                                           int n_subsets, std::uint64_t seed);

}  // namespace emodyn
