#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emodyn/corpus.hpp"

namespace emodyn {

/// Closed label sets the taggers must choose from.
struct Vocabularies {
  std::vector<std::string> problem;
  std::vector<std::string> gender;
  std::vector<std::string> attitude;

  bool operator==(const Vocabularies&) const = default;
};

/// Defaults mirroring the session-metadata categories of the real corpus.
Vocabularies default_vocabularies();

/// One tagger's answer for one dialogue; attributes the tagger failed to
/// produce (or produced outside the vocabulary) stay empty.
struct TaggerVerdict {
  std::string tagger_id;
  std::optional<std::string> problem;
  std::optional<std::string> gender;
  std::optional<std::string> attitude;
};

enum class VoteStatus { Won, Tie, NoVotes };

struct AttributeVote {
  VoteStatus status = VoteStatus::NoVotes;
  std::string winner;                 // set only when status == Won
  std::map<std::string, int> counts;  // label -> votes
};

struct VoteOutcome {
  AttributeVote problem;
  AttributeVote gender;
  AttributeVote attitude;
};

/// Per attribute, the label with a strict maximum vote count wins; equal
/// top counts surface as Tie (never auto-broken). Missing verdicts are
/// excluded from that attribute's count. Throws Errc::NoVerdicts for an
/// empty verdict list.
VoteOutcome majority_vote(const std::vector<TaggerVerdict>& verdicts);

/// Abstraction over one metadata tagger; tests plug in deterministic stubs.
class TaggerClient {
public:
  virtual ~TaggerClient() = default;
  virtual std::string id() const = 0;
  /// Returns nullopt when the tagger is unreachable after retries.
  virtual std::optional<TaggerVerdict> tag(const Dialogue& dialogue,
                                           const Vocabularies& vocab) = 0;
};

struct HttpTaggerConfig {
  std::string id;
  std::string url;          // http://host:port/path
  int timeout_ms = 10000;
  int retries = 2;          // additional attempts after the first
  int backoff_ms = 250;     // doubled per retry
  std::string secret_env;   // env var holding a bearer token, optional
};

/// POSTs {dialogue_id, text, vocabularies} as JSON and expects
/// {problem, gender, attitude} back. Out-of-vocabulary answers are dropped
/// per attribute.
std::unique_ptr<TaggerClient> make_http_tagger(HttpTaggerConfig config);

struct DialogueAnnotation {
  std::string dialogue_id;
  std::vector<TaggerVerdict> verdicts;
  VoteOutcome outcome;
};

struct AnnotateReport {
  std::vector<DialogueAnnotation> log;  // raw verdicts, persisted by the CLI
  std::vector<std::string> tie_ids;     // dialogues needing manual resolution
  int tagger_failures = 0;              // unreachable tagger calls
};

/// Runs every tagger on every dialogue and applies majority voting.
/// Dialogues gain metadata only for attributes with a winner; ties are
/// surfaced in the report. Warns (via the report) rather than failing when
/// fewer than 3 taggers are supplied.
AnnotateReport annotate_corpus(Corpus& corpus,
                               const std::vector<std::unique_ptr<TaggerClient>>& taggers,
                               const Vocabularies& vocab);

/// Exact-match accuracy per attribute ("problem", "gender", "attitude")
/// over a seeded random sample of ceil(fraction * n) dialogues. Throws
/// Errc::MissingGold when the gold map lacks a sampled id.
std::map<std::string, double> audit_against_gold(
    const Corpus& annotated, const std::map<std::string, SessionMetadata>& gold,
    double sample_fraction, std::uint64_t seed);

}  // namespace emodyn
