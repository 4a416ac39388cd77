#pragma once

// Minimal UTF-8 handling for the tokenizer. Transcripts are mostly English
// with occasional accented names, so letter classification and lowercasing
// cover ASCII, Latin-1 Supplement, Latin Extended-A, Greek, and Cyrillic.
// Anything else (and any invalid byte sequence) acts as a token separator.

#include <cstdint>
#include <string>
#include <string_view>

namespace emodyn::unicode {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

/// Decodes one UTF-8 codepoint starting at s[i]; advances i past it.
/// Returns kInvalid for malformed sequences (i still advances by one byte).
inline char32_t decode(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kInvalid;
  }
  if (i + static_cast<std::size_t>(len) > s.size()) {
    ++i;
    return kInvalid;
  }
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += static_cast<std::size_t>(len);
  // reject overlong encodings and surrogates
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return kInvalid;
  }
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0x00C0 && cp <= 0x02AF) return cp != 0x00D7 && cp != 0x00F7;
  if (cp >= 0x0386 && cp <= 0x03FF) return cp != 0x0387;  // Greek
  if (cp >= 0x0400 && cp <= 0x04FF) return true;          // Cyrillic
  return false;
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  if (cp >= 0x0100 && cp <= 0x017F) {
    if (cp == 0x0130) return U'i';    // Latin capital I with dot
    if (cp == 0x0178) return 0x00FF;  // Y with diaeresis
    if (cp == 0x017F) return cp;      // long s, already lowercase
    // Upper/lower pairs alternate, with the parity flipping at 0x0139-0x0148
    // (and 0x0138 kra / 0x0149 'n / 0x017F long s having no uppercase).
    if (cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    return (cp % 2 == 1) ? cp + 1 : cp;  // 0x0179-0x017E
  }
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;  // Greek
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;                  // Cyrillic
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

}  // namespace emodyn::unicode
