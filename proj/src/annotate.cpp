#include "emodyn/annotate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "emodyn/util.hpp"

namespace emodyn {

namespace {

using nlohmann::json;

AttributeVote vote_attribute(const std::vector<TaggerVerdict>& verdicts,
                             std::optional<std::string> TaggerVerdict::*attr) {
  AttributeVote vote;
  for (const TaggerVerdict& v : verdicts) {
    if (v.*attr) ++vote.counts[*(v.*attr)];
  }
  if (vote.counts.empty()) {
    vote.status = VoteStatus::NoVotes;
    return vote;
  }
  int best = 0;
  for (const auto& [label, n] : vote.counts) best = std::max(best, n);
  std::vector<std::string> leaders;
  for (const auto& [label, n] : vote.counts) {
    if (n == best) leaders.push_back(label);
  }
  if (leaders.size() == 1) {
    vote.status = VoteStatus::Won;
    vote.winner = leaders.front();
  } else {
    vote.status = VoteStatus::Tie;
  }
  return vote;
}

bool in_vocab(const std::vector<std::string>& vocab, const std::string& label) {
  return std::find(vocab.begin(), vocab.end(), label) != vocab.end();
}

}  // namespace

Vocabularies default_vocabularies() {
  return Vocabularies{
      {
          "anxiety and fear",
          "self-esteem and confidence issues",
          "relationships",
          "career and work-related concerns",
          "health-related worries",
          "academic and educational concerns",
          "financial concerns",
          "other miscellaneous concerns",
      },
      {"female", "male"},
      {"positive", "neutral", "negative"},
  };
}

VoteOutcome majority_vote(const std::vector<TaggerVerdict>& verdicts) {
  if (verdicts.empty()) fail(Errc::NoVerdicts, "majority vote over zero verdicts");
  VoteOutcome out;
  out.problem = vote_attribute(verdicts, &TaggerVerdict::problem);
  out.gender = vote_attribute(verdicts, &TaggerVerdict::gender);
  out.attitude = vote_attribute(verdicts, &TaggerVerdict::attitude);
  return out;
}

namespace {

class HttpTagger final : public TaggerClient {
public:
  explicit HttpTagger(HttpTaggerConfig config) : config_(std::move(config)) {
    const std::string& url = config_.url;
    const std::string prefix = "http://";
    if (url.rfind(prefix, 0) != 0) {
      fail(Errc::ConfigError, "tagger '" + config_.id + "': only http:// endpoints supported, got " + url);
    }
    const std::string rest = url.substr(prefix.size());
    const std::size_t slash = rest.find('/');
    host_ = slash == std::string::npos ? rest : rest.substr(0, slash);
    path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  }

  std::string id() const override { return config_.id; }

  std::optional<TaggerVerdict> tag(const Dialogue& dialogue, const Vocabularies& vocab) override {
    json body;
    body["dialogue_id"] = dialogue.id;
    body["text"] = role_stream(dialogue, Who::Whole);
    body["vocabularies"] = {
        {"problem", vocab.problem}, {"gender", vocab.gender}, {"attitude", vocab.attitude}};
    const std::string payload = body.dump();

    for (int attempt = 0; attempt <= config_.retries; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(
            std::chrono::milliseconds(config_.backoff_ms * (1 << (attempt - 1))));
      }
      httplib::Client client(host_);
      client.set_connection_timeout(0, config_.timeout_ms * 1000);
      client.set_read_timeout(0, config_.timeout_ms * 1000);
      httplib::Headers headers;
      if (!config_.secret_env.empty()) {
        if (const char* secret = std::getenv(config_.secret_env.c_str())) {
          headers.emplace("Authorization", std::string("Bearer ") + secret);
        }
      }
      auto res = client.Post(path_, headers, payload, "application/json");
      if (!res || res->status != 200) continue;
      json reply = json::parse(res->body, nullptr, false);
      if (reply.is_discarded() || !reply.is_object()) continue;

      TaggerVerdict verdict;
      verdict.tagger_id = config_.id;
      auto take = [&](const char* key, const std::vector<std::string>& labels,
                      std::optional<std::string>& slot) {
        auto it = reply.find(key);
        if (it != reply.end() && it->is_string()) {
          std::string label = ascii_lower(std::string(trim(it->get<std::string>())));
          if (in_vocab(labels, label)) slot = std::move(label);
        }
      };
      take("problem", vocab.problem, verdict.problem);
      take("gender", vocab.gender, verdict.gender);
      take("attitude", vocab.attitude, verdict.attitude);
      return verdict;
    }
    return std::nullopt;  // unreachable after bounded retries
  }

private:
  HttpTaggerConfig config_;
  std::string host_;
  std::string path_;
};

}  // namespace

std::unique_ptr<TaggerClient> make_http_tagger(HttpTaggerConfig config) {
  return std::make_unique<HttpTagger>(std::move(config));
}

AnnotateReport annotate_corpus(Corpus& corpus,
                               const std::vector<std::unique_ptr<TaggerClient>>& taggers,
                               const Vocabularies& vocab) {
  AnnotateReport report;
  for (Dialogue& d : corpus.dialogues) {
    DialogueAnnotation entry;
    entry.dialogue_id = d.id;
    for (const auto& tagger : taggers) {
      if (auto verdict = tagger->tag(d, vocab)) {
        entry.verdicts.push_back(std::move(*verdict));
      } else {
        ++report.tagger_failures;
      }
    }
    if (!entry.verdicts.empty()) {
      entry.outcome = majority_vote(entry.verdicts);
      const bool any_tie = entry.outcome.problem.status == VoteStatus::Tie ||
                           entry.outcome.gender.status == VoteStatus::Tie ||
                           entry.outcome.attitude.status == VoteStatus::Tie;
      if (any_tie) report.tie_ids.push_back(d.id);
      if (entry.outcome.problem.status == VoteStatus::Won ||
          entry.outcome.gender.status == VoteStatus::Won ||
          entry.outcome.attitude.status == VoteStatus::Won) {
        SessionMetadata meta = d.metadata.value_or(SessionMetadata{});
        if (entry.outcome.problem.status == VoteStatus::Won) meta.problem = entry.outcome.problem.winner;
        if (entry.outcome.gender.status == VoteStatus::Won) meta.gender = entry.outcome.gender.winner;
        if (entry.outcome.attitude.status == VoteStatus::Won) meta.attitude = entry.outcome.attitude.winner;
        d.metadata = std::move(meta);
      }
    }
    report.log.push_back(std::move(entry));
  }
  return report;
}

std::map<std::string, double> audit_against_gold(
    const Corpus& annotated, const std::map<std::string, SessionMetadata>& gold,
    double sample_fraction, std::uint64_t seed) {
  if (sample_fraction <= 0.0 || sample_fraction > 1.0) {
    fail(Errc::ConfigError, "sample_fraction must be in (0, 1]");
  }
  std::vector<std::size_t> order(annotated.dialogues.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(mix_seed(seed, "audit"));
  det_shuffle(order, rng);
  const auto take = static_cast<std::size_t>(
      std::ceil(sample_fraction * static_cast<double>(order.size())));

  int n = 0, ok_problem = 0, ok_gender = 0, ok_attitude = 0;
  for (std::size_t i = 0; i < take && i < order.size(); ++i) {
    const Dialogue& d = annotated.dialogues[order[i]];
    auto it = gold.find(d.id);
    if (it == gold.end()) fail(Errc::MissingGold, "no gold metadata for dialogue '" + d.id + "'");
    const SessionMetadata got = d.metadata.value_or(SessionMetadata{});
    ++n;
    if (got.problem == it->second.problem) ++ok_problem;
    if (got.gender == it->second.gender) ++ok_gender;
    if (got.attitude == it->second.attitude) ++ok_attitude;
  }
  if (n == 0) fail(Errc::EmptyInput, "audit sample is empty");
  return {
      {"problem", static_cast<double>(ok_problem) / n},
      {"gender", static_cast<double>(ok_gender) / n},
      {"attitude", static_cast<double>(ok_attitude) / n},
  };
}

}  // namespace emodyn
