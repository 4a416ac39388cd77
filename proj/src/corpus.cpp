#include "emodyn/corpus.hpp"

#include <algorithm>

#include "emodyn/util.hpp"

namespace emodyn {

std::string_view to_string(SpeakerRole role) {
  return role == SpeakerRole::Counselor ? "counselor" : "client";
}

std::string_view to_string(Source source) {
  switch (source) {
    case Source::Real: return "real";
    case Source::Synthetic: return "synthetic";
    case Source::Mixed: return "mixed";
  }
  return "mixed";
}

std::string_view to_string(Who who) {
  switch (who) {
    case Who::Whole: return "dialogue";
    case Who::Counselor: return "counselor";
    case Who::Client: return "client";
  }
  return "dialogue";
}

SpeakerRole parse_role(std::string_view s) {
  if (s == "counselor") return SpeakerRole::Counselor;
  if (s == "client") return SpeakerRole::Client;
  fail(Errc::MalformedFile, "unknown speaker role: " + std::string(s));
}

Source parse_source(std::string_view s) {
  if (s == "real") return Source::Real;
  if (s == "synthetic") return Source::Synthetic;
  if (s == "mixed") return Source::Mixed;
  fail(Errc::MalformedFile, "unknown source: " + std::string(s));
}

Who parse_who(std::string_view s) {
  if (s == "dialogue" || s == "whole") return Who::Whole;
  if (s == "counselor") return Who::Counselor;
  if (s == "client") return Who::Client;
  fail(Errc::ConfigError, "unknown speaker selector: " + std::string(s));
}

const Dialogue* Corpus::find(std::string_view id) const {
  for (const Dialogue& d : dialogues) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

std::map<std::string, int> Corpus::problem_counts() const {
  std::map<std::string, int> counts;
  for (const Dialogue& d : dialogues) {
    if (d.metadata) ++counts[d.metadata->problem];
  }
  return counts;
}

std::string role_stream(const Dialogue& d, Who who) {
  std::string out;
  int selected = 0;
  for (const Turn& t : d.turns) {
    const bool take = who == Who::Whole ||
                      (who == Who::Counselor && t.role == SpeakerRole::Counselor) ||
                      (who == Who::Client && t.role == SpeakerRole::Client);
    if (!take) continue;
    if (selected++) out += ' ';
    out += t.text;
  }
  if (selected == 0 && who != Who::Whole) {
    fail(Errc::RoleAbsent, "dialogue '" + d.id + "' has no " +
                               std::string(to_string(who)) + " turns");
  }
  return out;
}

Corpus filter_by_problem(const Corpus& corpus, const std::set<std::string>& allowed) {
  Corpus out;
  out.source = corpus.source;
  for (const Dialogue& d : corpus.dialogues) {
    if (!d.metadata) {
      fail(Errc::MissingMetadata, "dialogue '" + d.id + "' has no metadata");
    }
    if (allowed.contains(d.metadata->problem)) out.dialogues.push_back(d);
  }
  return out;
}

Corpus drop_missing_metadata(const Corpus& corpus, std::vector<std::string>* dropped_ids) {
  Corpus out;
  out.source = corpus.source;
  for (const Dialogue& d : corpus.dialogues) {
    if (d.metadata) {
      out.dialogues.push_back(d);
    } else if (dropped_ids) {
      dropped_ids->push_back(d.id);
    }
  }
  return out;
}

std::vector<Corpus> sample_matched_subsets(const Corpus& pool,
                                           const std::map<std::string, int>& target,
                                           int n_subsets, std::uint64_t seed) {
  if (n_subsets < 1) fail(Errc::ConfigError, "n_subsets must be >= 1");

  std::vector<Corpus> subsets(static_cast<std::size_t>(n_subsets));
  for (Corpus& s : subsets) s.source = pool.source;

  for (const auto& [label, count] : target) {
    if (count < 0) fail(Errc::ConfigError, "negative target count for '" + label + "'");
    std::vector<std::size_t> stratum;  // indices into pool, pool order
    for (std::size_t i = 0; i < pool.dialogues.size(); ++i) {
      const Dialogue& d = pool.dialogues[i];
      if (d.metadata && d.metadata->problem == label) stratum.push_back(i);
    }
    const std::size_t needed = static_cast<std::size_t>(count) * static_cast<std::size_t>(n_subsets);
    if (stratum.size() < needed) {
      fail(Errc::InsufficientPool, "label '" + label + "': need " + std::to_string(needed) +
                                       ", pool has " + std::to_string(stratum.size()));
    }
    // Per-label RNG stream: adding a label never disturbs another label's draw.
    std::mt19937_64 rng(mix_seed(seed, "sample:" + label));
    det_shuffle(stratum, rng);
    for (int k = 0; k < n_subsets; ++k) {
      for (int j = 0; j < count; ++j) {
        const std::size_t idx = stratum[static_cast<std::size_t>(k) * count + j];
        subsets[static_cast<std::size_t>(k)].dialogues.push_back(pool.dialogues[idx]);
      }
    }
  }
  return subsets;
}

}  // namespace emodyn
