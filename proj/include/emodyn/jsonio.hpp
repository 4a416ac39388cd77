#pragma once

// JSON (de)serialization for the corpus data model, kept out of corpus.hpp
// so most translation units don't pull in the json header.

#include <json.hpp>

#include "emodyn/corpus.hpp"

namespace emodyn {

nlohmann::ordered_json turn_to_json(const Turn& t);
nlohmann::ordered_json dialogue_to_json(const Dialogue& d);
nlohmann::ordered_json corpus_to_json(const Corpus& c);

/// Parses one dialogue in canonical form. Throws Error on violations.
Dialogue dialogue_from_json(const nlohmann::json& j, Source declared);

/// Parses a canonical bundle {"dialogues": [...]}; invalid dialogues are
/// reported in `issues` and skipped.
Corpus corpus_from_json(const nlohmann::json& j, Source declared,
                        std::vector<ParseIssue>* issues, const std::string& file);

}  // namespace emodyn
