#include <algorithm>
#include <fstream>

#include "emodyn/jsonio.hpp"
#include "emodyn/util.hpp"

namespace emodyn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void validate_dialogue(const Dialogue& d) {
  if (d.id.empty()) fail(Errc::MalformedFile, "dialogue without id");
  if (d.source == Source::Mixed) {
    fail(Errc::MalformedFile, "dialogue '" + d.id + "': source must be real or synthetic");
  }
  if (d.turns.size() < 2) {
    fail(Errc::MalformedFile, "dialogue '" + d.id + "': needs at least 2 turns, has " +
                                  std::to_string(d.turns.size()));
  }
  bool has_counselor = false, has_client = false;
  for (std::size_t i = 0; i < d.turns.size(); ++i) {
    const Turn& t = d.turns[i];
    if (t.index != static_cast<int>(i)) {
      fail(Errc::MalformedFile, "dialogue '" + d.id + "': turn indices not 0..n-1");
    }
    if (trim(t.text).empty()) {
      fail(Errc::MalformedFile,
           "dialogue '" + d.id + "': turn " + std::to_string(i) + " has empty text");
    }
    (t.role == SpeakerRole::Counselor ? has_counselor : has_client) = true;
  }
  if (!has_counselor || !has_client) {
    fail(Errc::MalformedFile, "dialogue '" + d.id + "': missing " +
                                  (has_counselor ? "client" : "counselor") + " turns");
  }
}

std::optional<std::string> pick_string(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = j.find(k);
    if (it != j.end()) {
      if (it->is_string()) return it->get<std::string>();
      if (it->is_number_integer()) return std::to_string(it->get<long long>());
    }
  }
  return std::nullopt;
}

/// Maps assorted speaker spellings onto the two analysis roles; anything
/// else (intake, system, narrator) is dropped by the converter.
std::optional<SpeakerRole> convert_role(std::string_view raw) {
  const std::string s = ascii_lower(trim(raw));
  if (s == "counselor" || s == "counsellor" || s == "therapist") return SpeakerRole::Counselor;
  if (s == "client" || s == "patient" || s == "user" || s == "seeker") return SpeakerRole::Client;
  return std::nullopt;
}

void append_turn(Dialogue& d, SpeakerRole role, std::string text) {
  const std::string_view t = trim(text);
  if (t.empty()) return;
  d.turns.push_back(Turn{static_cast<int>(d.turns.size()), role, std::string(t)});
}

/// "Counselor: hello" -> (role, text); also accepts alias speaker names.
bool split_prefixed_line(std::string_view line, std::optional<SpeakerRole>& role,
                         std::string_view& text) {
  const std::size_t colon = line.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 24) return false;
  auto mapped = convert_role(line.substr(0, colon));
  if (!mapped) return false;
  role = mapped;
  text = trim(line.substr(colon + 1));
  return true;
}

Dialogue dialogue_from_transcript(const std::string& content, const std::string& stem,
                                  Source declared) {
  if (declared == Source::Mixed) {
    fail(Errc::MalformedFile, "transcript '" + stem + "': declared source must be real or synthetic");
  }
  Dialogue d;
  d.id = stem;
  d.source = declared;
  std::optional<SpeakerRole> current;
  std::string pending;
  auto flush = [&] {
    if (current) append_turn(d, *current, pending);
    pending.clear();
  };
  for (const std::string& raw : split(content, '\n')) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    std::optional<SpeakerRole> role;
    std::string_view text;
    if (split_prefixed_line(line, role, text)) {
      flush();
      current = role;
      pending = std::string(text);
    } else if (current) {
      if (!pending.empty()) pending += ' ';
      pending += std::string(line);
    }
    // lines before the first speaker prefix (titles, narration) are dropped
  }
  flush();
  validate_dialogue(d);
  return d;
}

std::optional<SessionMetadata> metadata_from_json(const json& j) {
  const json* src = &j;
  json meta;
  auto it = j.find("metadata");
  if (it != j.end()) {
    if (it->is_null()) return std::nullopt;
    if (it->is_object()) {
      meta = *it;
      src = &meta;
    }
  }
  auto problem = pick_string(*src, {"problem", "client_problem", "types_of_problem", "problem_type"});
  auto gender = pick_string(*src, {"gender", "client_gender"});
  auto attitude = pick_string(*src, {"attitude", "client_attitude", "attitude_toward_session"});
  if (!problem && !gender && !attitude) return std::nullopt;
  SessionMetadata m;
  m.problem = ascii_lower(trim(problem.value_or("")));
  m.gender = ascii_lower(trim(gender.value_or("")));
  m.attitude = ascii_lower(trim(attitude.value_or("")));
  return m;
}

void parse_turns(const json& turns, Dialogue& d) {
  for (const json& t : turns) {
    if (t.is_string()) {
      // "Counselor: hello" style entries
      std::optional<SpeakerRole> role;
      std::string_view text;
      const std::string line = t.get<std::string>();
      if (split_prefixed_line(trim(line), role, text)) append_turn(d, *role, std::string(text));
      continue;
    }
    if (!t.is_object()) {
      fail(Errc::MalformedFile, "dialogue '" + d.id + "': turn entry is neither object nor string");
    }
    auto role_str = pick_string(t, {"role", "speaker"});
    if (!role_str) {
      fail(Errc::MalformedFile, "dialogue '" + d.id + "': turn missing role/speaker");
    }
    auto text = pick_string(t, {"text", "utterance", "message", "content"});
    if (!text) {
      fail(Errc::MalformedFile, "dialogue '" + d.id + "': turn missing text");
    }
    if (auto role = convert_role(*role_str)) append_turn(d, *role, *text);
    // non-dialogue roles (system/intake) are dropped
  }
}

}  // namespace

Dialogue dialogue_from_json(const json& j, Source declared) {
  if (!j.is_object()) fail(Errc::MalformedFile, "dialogue entry is not a JSON object");
  Dialogue d;
  d.id = pick_string(j, {"id", "idx", "dialogue_id", "session_id"}).value_or("");
  if (auto s = pick_string(j, {"source"})) {
    d.source = parse_source(ascii_lower(*s));
  } else if (declared != Source::Mixed) {
    d.source = declared;
  } else {
    fail(Errc::MalformedFile, "dialogue '" + d.id + "': source required in a mixed corpus");
  }
  if (declared != Source::Mixed && d.source != declared) {
    fail(Errc::MalformedFile, "dialogue '" + d.id + "': source '" +
                                  std::string(to_string(d.source)) + "' conflicts with declared '" +
                                  std::string(to_string(declared)) + "'");
  }
  d.metadata = metadata_from_json(j);
  const json* turns = nullptr;
  for (const char* key : {"turns", "dialog", "dialogue", "messages", "utterances"}) {
    auto it = j.find(key);
    if (it != j.end() && it->is_array()) {
      turns = &*it;
      break;
    }
  }
  if (!turns) fail(Errc::MalformedFile, "dialogue '" + d.id + "': no turn list found");
  parse_turns(*turns, d);
  validate_dialogue(d);
  return d;
}

Corpus corpus_from_json(const json& j, Source declared, std::vector<ParseIssue>* issues,
                        const std::string& file) {
  Corpus corpus;
  corpus.source = declared;
  const json* list = nullptr;
  if (j.is_array()) {
    list = &j;
  } else if (j.is_object()) {
    auto it = j.find("dialogues");
    if (it != j.end() && it->is_array()) list = &*it;
  }

  auto report = [&](Errc code, const std::string& id, const std::string& reason) {
    if (issues) issues->push_back(ParseIssue{code, file, id, reason});
  };

  auto add = [&](const json& entry, const std::string& fallback_id) {
    std::string id = pick_string(entry, {"id", "idx", "dialogue_id", "session_id"}).value_or(fallback_id);
    try {
      json patched = entry;
      if (!patched.contains("id") && !id.empty()) patched["id"] = id;
      Dialogue d = dialogue_from_json(patched, declared);
      if (corpus.find(d.id)) {
        report(Errc::DuplicateId, d.id, "duplicate dialogue id");
        return;
      }
      corpus.dialogues.push_back(std::move(d));
    } catch (const Error& e) {
      report(e.code(), id, e.what());
    }
  };

  if (list) {
    int n = 0;
    for (const json& entry : *list) {
      add(entry, "dlg" + std::to_string(n));
      ++n;
    }
  } else if (j.is_object()) {
    add(j, "");  // single-dialogue file
  } else {
    report(Errc::MalformedFile, "", "not a dialogue bundle");
  }
  return corpus;
}

LoadResult load_corpus(const std::filesystem::path& path, Source declared) {
  namespace fs = std::filesystem;
  LoadResult result;
  result.corpus.source = declared;

  auto load_one_file = [&](const fs::path& file) {
    const std::string name = file.string();
    std::string content;
    try {
      content = read_file(file);
    } catch (const Error& e) {
      result.issues.push_back(ParseIssue{Errc::IoError, name, "", e.what()});
      return;
    }
    const std::string ext = ascii_lower(file.extension().string());
    if (ext == ".txt") {
      try {
        Dialogue d = dialogue_from_transcript(content, file.stem().string(), declared);
        if (result.corpus.find(d.id)) {
          result.issues.push_back(ParseIssue{Errc::DuplicateId, name, d.id, "duplicate dialogue id"});
        } else {
          result.corpus.dialogues.push_back(std::move(d));
        }
      } catch (const Error& e) {
        result.issues.push_back(ParseIssue{e.code(), name, file.stem().string(), e.what()});
      }
      return;
    }
    json j;
    if (ext == ".jsonl") {
      // one dialogue object per line
      j = json::array();
      int line_no = 0;
      for (const std::string& line : split(content, '\n')) {
        ++line_no;
        if (trim(line).empty()) continue;
        json entry = json::parse(line, nullptr, false);
        if (entry.is_discarded()) {
          result.issues.push_back(ParseIssue{Errc::MalformedFile, name, "",
                                             "invalid JSON on line " + std::to_string(line_no)});
          continue;
        }
        j.push_back(std::move(entry));
      }
    } else {
      j = json::parse(content, nullptr, false);
      if (j.is_discarded()) {
        result.issues.push_back(ParseIssue{Errc::MalformedFile, name, "", "invalid JSON"});
        return;
      }
    }
    Corpus part = corpus_from_json(j, declared, &result.issues, name);
    for (Dialogue& d : part.dialogues) {
      if (result.corpus.find(d.id)) {
        result.issues.push_back(ParseIssue{Errc::DuplicateId, name, d.id, "duplicate dialogue id"});
      } else {
        result.corpus.dialogues.push_back(std::move(d));
      }
    }
  };

  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = ascii_lower(entry.path().extension().string());
      if (ext == ".json" || ext == ".jsonl" || ext == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) load_one_file(f);
  } else if (fs::exists(path)) {
    load_one_file(path);
  } else {
    fail(Errc::IoError, "no such file or directory: " + path.string());
  }

  if (result.corpus.dialogues.empty()) {
    std::string detail = result.issues.empty() ? "no dialogues found"
                                               : "first issue: " + result.issues.front().reason;
    fail(Errc::EmptyCorpus, "no parseable dialogues in " + path.string() + " (" + detail + ")");
  }
  return result;
}

ordered_json turn_to_json(const Turn& t) {
  return ordered_json{{"role", to_string(t.role)}, {"text", t.text}};
}

ordered_json dialogue_to_json(const Dialogue& d) {
  ordered_json j;
  j["id"] = d.id;
  j["source"] = to_string(d.source);
  if (d.metadata) {
    j["metadata"] = ordered_json{{"problem", d.metadata->problem},
                                 {"gender", d.metadata->gender},
                                 {"attitude", d.metadata->attitude}};
  } else {
    j["metadata"] = nullptr;
  }
  ordered_json turns = ordered_json::array();
  for (const Turn& t : d.turns) turns.push_back(turn_to_json(t));
  j["turns"] = std::move(turns);
  return j;
}

ordered_json corpus_to_json(const Corpus& c) {
  ordered_json list = ordered_json::array();
  for (const Dialogue& d : c.dialogues) list.push_back(dialogue_to_json(d));
  return ordered_json{{"dialogues", std::move(list)}};
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  write_file(path, corpus_to_json(corpus).dump(2) + "\n");
}

}  // namespace emodyn
