#pragma once

#include <cassert>
#include <cmath>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace emodyn {

/// The three affective dimensions scored by a VAD lexicon.
enum class Dimension { Valence, Arousal, Dominance };

inline constexpr Dimension kAllDimensions[] = {
    Dimension::Valence, Dimension::Arousal, Dimension::Dominance};

std::string_view to_string(Dimension dim);
Dimension parse_dimension(std::string_view name);

struct VadScore {
  double valence = 0.0;
  double arousal = 0.0;
  double dominance = 0.0;

  double get(Dimension dim) const {
    assert(std::abs(valence) <= 1.0 && std::abs(arousal) <= 1.0 && std::abs(dominance) <= 1.0);
    switch (dim) {
      case Dimension::Valence: return valence;
      case Dimension::Arousal: return arousal;
      case Dimension::Dominance: return dominance;
    }
    return 0.0;
  }

  bool operator==(const VadScore&) const = default;
};

struct Token {
  std::string surface;  // lowercased, apostrophes normalized to '
  int position = 0;     // word index within the stream

  bool operator==(const Token&) const = default;
};

struct ScoredToken {
  int position = 0;
  std::optional<VadScore> score;
};

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};
struct StringEq {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return a == b;
  }
};
}  // namespace detail

/// Word -> VAD scores, each component in [-1, 1]. Lookup is exact match
/// against the normalized (lowercase) token surface; no stemming.
class VadLexicon {
public:
  using EntryMap =
      std::unordered_map<std::string, VadScore, detail::StringHash, detail::StringEq>;

  VadLexicon() = default;
  VadLexicon(std::string name, EntryMap entries)
      : name_(std::move(name)), entries_(std::move(entries)) {}

  const VadScore* lookup(std::string_view term) const {
    auto it = entries_.find(term);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }
  const std::string& name() const { return name_; }
  const EntryMap& entries() const { return entries_; }

  /// Load-time diagnostics.
  int duplicate_count = 0;   // rows that overwrote an earlier term
  int multiword_count = 0;   // entries skipped because the term contains spaces

private:
  std::string name_;
  EntryMap entries_;
};

/// Reads a tab-separated lexicon (term, valence, arousal, dominance). A
/// header line is detected by a non-numeric second field and skipped.
/// Duplicate terms resolve last-wins; multi-word terms are skipped. Throws
/// Errc::OutOfRange when |score| > 1 and Errc::MalformedRow on bad rows.
VadLexicon load_lexicon(const std::filesystem::path& path);

/// Splits text into lowercased word tokens. A token is a maximal run of
/// letters, with apostrophes kept when they sit between two letters
/// ("don't" stays one token). Digits, punctuation and symbols separate
/// tokens. Letter classification and lowercasing cover ASCII plus the
/// Latin-1/Latin-Extended-A, Greek, and Cyrillic ranges.
std::vector<Token> tokenize(std::string_view text);

/// Maps each token to its lexicon score (or nullopt); order and positions
/// are preserved.
std::vector<ScoredToken> score_tokens(std::span<const Token> tokens,
                                      const VadLexicon& lex);

/// Fraction of tokens with a lexicon hit; 0.0 for an empty stream.
double coverage(std::span<const Token> tokens, const VadLexicon& lex);

}  // namespace emodyn
