#include "emodyn/lexicon.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "emodyn/error.hpp"
#include "emodyn/util.hpp"
#include "unicode.hpp"

namespace emodyn {

namespace {

constexpr char32_t kApostrophe = 0x27;
constexpr char32_t kRightSingleQuote = 0x2019;

bool parse_score(std::string_view field, double& out) {
  const std::string s{trim(field)};
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && !std::isnan(out);
}

std::string normalize_term(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    char32_t cp = unicode::decode(raw, i);
    if (cp == unicode::kInvalid) return {};
    if (cp == kRightSingleQuote) cp = kApostrophe;
    unicode::append_utf8(out, unicode::to_lower(cp));
  }
  return out;
}

}  // namespace

std::string_view to_string(Dimension dim) {
  switch (dim) {
    case Dimension::Valence: return "valence";
    case Dimension::Arousal: return "arousal";
    case Dimension::Dominance: return "dominance";
  }
  return "valence";
}

Dimension parse_dimension(std::string_view name) {
  if (name == "valence") return Dimension::Valence;
  if (name == "arousal") return Dimension::Arousal;
  if (name == "dominance") return Dimension::Dominance;
  fail(Errc::ConfigError, "unknown dimension: " + std::string(name));
}

VadLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open lexicon: " + path.string());

  VadLexicon::EntryMap entries;
  int duplicates = 0;
  int multiword = 0;
  std::string line;
  int line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split(line, '\t');
    double unused;
    if (first && fields.size() >= 2 && !parse_score(fields[1], unused)) {
      first = false;  // header row
      continue;
    }
    first = false;
    if (fields.size() != 4) {
      fail(Errc::MalformedRow,
           "lexicon line " + std::to_string(line_no) + ": expected 4 tab-separated fields, got " +
               std::to_string(fields.size()));
    }
    double v, a, d;
    if (!parse_score(fields[1], v) || !parse_score(fields[2], a) || !parse_score(fields[3], d)) {
      fail(Errc::MalformedRow, "lexicon line " + std::to_string(line_no) + ": non-numeric score");
    }
    const std::string raw_term{trim(fields[0])};
    if (raw_term.empty()) {
      fail(Errc::MalformedRow, "lexicon line " + std::to_string(line_no) + ": empty term");
    }
    const VadScore score{v, a, d};
    const std::pair<Dimension, double> raw[] = {
        {Dimension::Valence, v}, {Dimension::Arousal, a}, {Dimension::Dominance, d}};
    for (const auto& [dim, x] : raw) {
      if (std::abs(x) > 1.0) {
        fail(Errc::OutOfRange, "lexicon term '" + raw_term + "': " + std::string(to_string(dim)) +
                                   " " + format_double(x) + " outside [-1, 1]");
      }
    }
    if (raw_term.find_first_of(" \t") != std::string::npos) {
      ++multiword;  // windowing is single-word; skip phrases
      continue;
    }
    std::string term = normalize_term(raw_term);
    if (term.empty()) {
      fail(Errc::MalformedRow, "lexicon line " + std::to_string(line_no) + ": invalid UTF-8 term");
    }
    auto [it, inserted] = entries.insert_or_assign(std::move(term), score);
    (void)it;
    if (!inserted) ++duplicates;
  }

  VadLexicon lex(path.filename().string(), std::move(entries));
  lex.duplicate_count = duplicates;
  lex.multiword_count = multiword;
  return lex;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string current;
  int next_position = 0;

  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(Token{std::move(current), next_position++});
      current = {};
    }
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = unicode::decode(text, i);
    if (cp != unicode::kInvalid && unicode::is_letter(cp)) {
      unicode::append_utf8(current, unicode::to_lower(cp));
      continue;
    }
    if ((cp == kApostrophe || cp == kRightSingleQuote) && !current.empty()) {
      // keep the apostrophe only when a letter follows immediately
      std::size_t peek = i;
      if (peek < text.size()) {
        char32_t next = unicode::decode(text, peek);
        if (next != unicode::kInvalid && unicode::is_letter(next)) {
          current += static_cast<char>(kApostrophe);
          unicode::append_utf8(current, unicode::to_lower(next));
          i = peek;
          continue;
        }
      }
    }
    flush();
  }
  flush();
  return tokens;
}

std::vector<ScoredToken> score_tokens(std::span<const Token> tokens, const VadLexicon& lex) {
  std::vector<ScoredToken> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    const VadScore* hit = lex.lookup(t.surface);
    out.push_back(ScoredToken{t.position, hit ? std::optional<VadScore>(*hit) : std::nullopt});
  }
  return out;
}

double coverage(std::span<const Token> tokens, const VadLexicon& lex) {
  if (tokens.empty()) return 0.0;
  std::size_t hits = 0;
  for (const Token& t : tokens) {
    if (lex.lookup(t.surface)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

}  // namespace emodyn
