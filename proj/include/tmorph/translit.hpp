// Copyright 2026 The tmorph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Arabic script <-> Latin transliteration.
//
// The Latin side is the canonical alphabet every other module works on:
// one symbol per consonant, a/i/u for short vowels, A/U/I for long vowels,
// gemination written as a doubled consonant and tanween as un/an/in.

#ifndef TMORPH_TRANSLIT_HPP_
#define TMORPH_TRANSLIT_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmorph {

class TranslitError : public std::runtime_error {
 public:
  enum class Kind { kUnknownCharacter, kUnknownSymbol };

  TranslitError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  // Codepoint index for to_latin, byte index for to_arabic.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

namespace translit {

// Consonant codes. 'e' is hamza, '~' is tha, '^' is shin, 'v' is dhal.
inline constexpr std::string_view kConsonants = "bt~jHxdvrzs^SDTZcgfqklmnhwye";
inline constexpr std::string_view kShortVowels = "aiu";
inline constexpr std::string_view kLongVowels = "AUI";

inline bool is_consonant(char c) { return kConsonants.find(c) != std::string_view::npos; }
inline bool is_short_vowel(char c) { return kShortVowels.find(c) != std::string_view::npos; }
inline bool is_long_vowel(char c) { return kLongVowels.find(c) != std::string_view::npos; }
inline bool is_symbol(char c) { return is_consonant(c) || is_short_vowel(c) || is_long_vowel(c); }

// ASCII punctuation that is not itself a transliteration symbol.
inline bool is_latin_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && !is_symbol(c) && (std::ispunct(u) != 0);
}
inline bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v';
}

namespace detail {

// Decodes one UTF-8 sequence at `pos`, advancing it. Invalid bytes decode to
// U+FFFD so that the caller reports them as unknown characters.
inline char32_t next_codepoint(std::string_view s, std::size_t& pos) {
  unsigned char b0 = static_cast<unsigned char>(s[pos]);
  int len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || pos + len > s.size()) {
    ++pos;
    return 0xFFFD;
  }
  char32_t cp = len == 1 ? b0 : len == 2 ? (b0 & 0x1F) : len == 3 ? (b0 & 0x0F) : (b0 & 0x07);
  for (int i = 1; i < len; ++i) {
    unsigned char b = static_cast<unsigned char>(s[pos + i]);
    if ((b >> 6) != 0x2) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += len;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline constexpr char32_t kFathatan = 0x064B, kDammatan = 0x064C, kKasratan = 0x064D;
inline constexpr char32_t kFatha = 0x064E, kDamma = 0x064F, kKasra = 0x0650;
inline constexpr char32_t kShadda = 0x0651, kSukun = 0x0652, kTatweel = 0x0640;
inline constexpr char32_t kAlif = 0x0627, kAlifMaqsura = 0x0649, kAlifMadda = 0x0622;
inline constexpr char32_t kWaw = 0x0648, kYa = 0x064A, kTaMarbuta = 0x0629;
inline constexpr char32_t kHamza = 0x0621, kHamzaAboveAlif = 0x0623, kHamzaBelowAlif = 0x0625;
inline constexpr char32_t kHamzaWaw = 0x0624, kHamzaYa = 0x0626, kLam = 0x0644;

// Plain consonant letters; alif, waw, ya and hamza carriers are handled
// separately because their reading depends on context.
inline std::optional<char> consonant_of(char32_t cp) {
  switch (cp) {
    case 0x0628: return 'b';
    case 0x062A: return 't';
    case 0x062B: return '~';
    case 0x062C: return 'j';
    case 0x062D: return 'H';
    case 0x062E: return 'x';
    case 0x062F: return 'd';
    case 0x0630: return 'v';
    case 0x0631: return 'r';
    case 0x0632: return 'z';
    case 0x0633: return 's';
    case 0x0634: return '^';
    case 0x0635: return 'S';
    case 0x0636: return 'D';
    case 0x0637: return 'T';
    case 0x0638: return 'Z';
    case 0x0639: return 'c';
    case 0x063A: return 'g';
    case 0x0641: return 'f';
    case 0x0642: return 'q';
    case 0x0643: return 'k';
    case 0x0644: return 'l';
    case 0x0645: return 'm';
    case 0x0646: return 'n';
    case 0x0647: return 'h';
    case kTaMarbuta: return 't';
    case kHamza:
    case kHamzaAboveAlif:
    case kHamzaBelowAlif:
    case kHamzaWaw:
    case kHamzaYa: return 'e';
    default: return std::nullopt;
  }
}

inline char32_t letter_of(char c) {
  switch (c) {
    case 'b': return 0x0628;
    case 't': return 0x062A;
    case '~': return 0x062B;
    case 'j': return 0x062C;
    case 'H': return 0x062D;
    case 'x': return 0x062E;
    case 'd': return 0x062F;
    case 'v': return 0x0630;
    case 'r': return 0x0631;
    case 'z': return 0x0632;
    case 's': return 0x0633;
    case '^': return 0x0634;
    case 'S': return 0x0635;
    case 'D': return 0x0636;
    case 'T': return 0x0637;
    case 'Z': return 0x0638;
    case 'c': return 0x0639;
    case 'g': return 0x063A;
    case 'f': return 0x0641;
    case 'q': return 0x0642;
    case 'k': return 0x0643;
    case 'l': return 0x0644;
    case 'm': return 0x0645;
    case 'n': return 0x0646;
    case 'h': return 0x0647;
    case 'w': return kWaw;
    case 'y': return kYa;
    case 'e': return kHamza;
    default: return 0;
  }
}

inline bool is_mark(char32_t cp) { return cp >= kFathatan && cp <= kSukun; }

inline bool is_arabic_punct(char32_t cp) {
  return cp == 0x060C || cp == 0x061B || cp == 0x061F || (cp >= 0x066A && cp <= 0x066D);
}

inline bool is_letter(char32_t cp) {
  return consonant_of(cp).has_value() || cp == kAlif || cp == kAlifMaqsura || cp == kAlifMadda ||
         cp == kWaw || cp == kYa;
}

struct Marks {
  bool shadda = false;
  bool any = false;
  std::string_view vowel;  // "", "a", "u", "i", "an", "un", "in"
};

}  // namespace detail

// True if `text` contains at least one codepoint from the Arabic block.
inline bool contains_arabic(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = detail::next_codepoint(text, pos);
    if (cp >= 0x0600 && cp <= 0x06FF) return true;
  }
  return false;
}

}  // namespace translit

// Arabic script to canonical Latin. Whitespace and punctuation pass through.
inline std::string to_latin(std::string_view text) {
  using namespace translit::detail;
  std::string out;
  std::size_t pos = 0;
  std::size_t index = 0;       // codepoint index, for error reporting
  bool word_start = true;
  bool last_vowel_short = false;  // out.back() is a short vowel written by a mark
  bool last_tanween_fatha = false;

  while (pos < text.size()) {
    std::size_t at = index;
    char32_t cp = next_codepoint(text, pos);
    ++index;

    if (cp < 0x80 && (translit::is_space(cp) || translit::is_latin_punct(static_cast<char>(cp)))) {
      out += static_cast<char>(cp);
      word_start = true;
      last_vowel_short = last_tanween_fatha = false;
      continue;
    }
    if (is_arabic_punct(cp)) {
      append_utf8(out, cp);
      word_start = true;
      last_vowel_short = last_tanween_fatha = false;
      continue;
    }
    if (cp == kTatweel) continue;
    if (!is_letter(cp)) {
      throw TranslitError(TranslitError::Kind::kUnknownCharacter, at,
                          "unknown character at position " + std::to_string(at));
    }

    Marks marks;
    std::size_t peek = pos;
    while (peek < text.size()) {
      std::size_t save = peek;
      char32_t m = next_codepoint(text, peek);
      if (!is_mark(m)) {
        peek = save;
        break;
      }
      ++index;
      marks.any = true;
      switch (m) {
        case kShadda: marks.shadda = true; break;
        case kFatha: marks.vowel = "a"; break;
        case kDamma: marks.vowel = "u"; break;
        case kKasra: marks.vowel = "i"; break;
        case kFathatan: marks.vowel = "an"; break;
        case kDammatan: marks.vowel = "un"; break;
        case kKasratan: marks.vowel = "in"; break;
        default: break;  // sukun
      }
    }
    pos = peek;

    // Next letter, for the definite-article reading of a bare initial alif.
    char32_t next_letter = 0;
    if (pos < text.size()) {
      std::size_t p = pos;
      next_letter = next_codepoint(text, p);
    }

    bool was_short = last_vowel_short;
    bool after_tanween_fatha = last_tanween_fatha;
    last_vowel_short = last_tanween_fatha = false;
    char prev = out.empty() ? '\0' : out.back();

    if (cp == kAlif || cp == kAlifMaqsura) {
      if (word_start && cp == kAlif) {
        out += 'e';
        if (!marks.vowel.empty()) {
          out += marks.vowel;
        } else {
          out += next_letter == kLam ? 'a' : 'i';
        }
      } else if (!marks.any && was_short && prev == 'a') {
        out.back() = 'A';
      } else if (!marks.any && after_tanween_fatha) {
        // Orthographic carrier of tanween fatha.
      } else {
        out += 'A';
        out += marks.vowel;
      }
    } else if (cp == kAlifMadda) {
      out += "eA";
    } else if ((cp == kWaw || cp == kYa) && !marks.any && was_short &&
               prev == (cp == kWaw ? 'u' : 'i')) {
      out.back() = cp == kWaw ? 'U' : 'I';
    } else {
      char c = cp == kWaw ? 'w' : cp == kYa ? 'y' : *consonant_of(cp);
      out += c;
      if (marks.shadda) out += c;
      out += marks.vowel;
      if (cp == kHamzaBelowAlif && marks.vowel.empty()) out += 'i';
    }
    if (marks.vowel.size() == 1) last_vowel_short = true;
    if (marks.vowel == "an") last_tanween_fatha = true;
    word_start = false;
  }
  return out;
}

// Canonical Latin back to Arabic script. Latin "A" always becomes alif, never
// alif maqsura. Words containing a short vowel are written fully vocalized
// (every vowel-less consonant gets a sukun); words without one are written as
// bare letters.
inline std::string to_arabic(std::string_view latin) {
  using namespace translit::detail;
  std::string out;
  std::size_t i = 0;
  while (i < latin.size()) {
    char c = latin[i];
    if (!translit::is_symbol(c)) {
      if (translit::is_space(static_cast<unsigned char>(c)) || translit::is_latin_punct(c)) {
        out += c;
        ++i;
        continue;
      }
      throw TranslitError(TranslitError::Kind::kUnknownSymbol, i,
                          "unknown symbol at position " + std::to_string(i));
    }
    std::size_t end = i;
    while (end < latin.size() && translit::is_symbol(latin[end])) ++end;
    std::string_view word = latin.substr(i, end - i);
    bool vocalized = word.find_first_of(translit::kShortVowels) != std::string_view::npos;

    for (std::size_t k = 0; k < word.size();) {
      char s = word[k];
      if (translit::is_short_vowel(s)) {
        // A vowel with no consonant before it has no carrier; write it on a
        // bare alif.
        append_utf8(out, kAlif);
        append_utf8(out, s == 'a' ? kFatha : s == 'u' ? kDamma : kKasra);
        ++k;
        continue;
      }
      if (translit::is_long_vowel(s)) {
        append_utf8(out, s == 'A' ? kAlif : s == 'U' ? kWaw : kYa);
        ++k;
        continue;
      }
      // Consonant.
      char32_t letter = letter_of(s);
      std::size_t n = k + 1;
      if (s == 'e') {
        char v = n < word.size() ? word[n] : '\0';
        if (k == 0) letter = v == 'i' ? kHamzaBelowAlif : kHamzaAboveAlif;
      }
      append_utf8(out, letter);
      if (n < word.size() && word[n] == s) {
        append_utf8(out, kShadda);
        ++n;
      }
      char v = n < word.size() ? word[n] : '\0';
      bool final_n = n + 2 == word.size() && word[n + 1] == 'n';
      if (translit::is_short_vowel(v) && final_n) {
        append_utf8(out, v == 'a' ? kFathatan : v == 'u' ? kDammatan : kKasratan);
        n += 2;
      } else if (translit::is_short_vowel(v)) {
        append_utf8(out, v == 'a' ? kFatha : v == 'u' ? kDamma : kKasra);
        ++n;
      } else if (translit::is_long_vowel(v)) {
        if (vocalized) append_utf8(out, v == 'A' ? kFatha : v == 'U' ? kDamma : kKasra);
        append_utf8(out, v == 'A' ? kAlif : v == 'U' ? kWaw : kYa);
        ++n;
      } else if (vocalized) {
        append_utf8(out, kSukun);
      }
      k = n;
    }
    i = end;
  }
  return out;
}

// Throws TranslitError if `s` has a character outside the canonical alphabet,
// whitespace and ASCII punctuation.
inline void check_canonical(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!translit::is_symbol(c) && !translit::is_space(static_cast<unsigned char>(c)) &&
        !translit::is_latin_punct(c)) {
      throw TranslitError(TranslitError::Kind::kUnknownSymbol, i,
                          "unknown symbol at position " + std::to_string(i));
    }
  }
}

}  // namespace tmorph

#endif  // TMORPH_TRANSLIT_HPP_
