#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lingloop {

enum class Normalization { CanonicalComposed };

// What counts as a letter. Alphabetic code points always count; hyphens and
// spaces can be opted in to probe alternative tallies. Digits and remaining
// punctuation never count. A plain value, compared and passed by value.
struct LetterCountPolicy {
  Normalization normalization = Normalization::CanonicalComposed;
  bool count_hyphens = false;
  bool count_spaces = false;

  friend bool operator==(const LetterCountPolicy&, const LetterCountPolicy&) = default;
};

// Canonically composed (NFC), case-folded copy of `word`. Idempotent.
// Throws Utf8Error carrying the byte offset of the first bad sequence.
std::string normalize(std::string_view word);

// Number of counted code points of `word` under `policy`. Normalizes
// internally, so callers may pass raw text. Total on valid UTF-8.
int count_letters(std::string_view word, const LetterCountPolicy& policy = {});

namespace unicode {

std::vector<char32_t> decode_utf8(std::string_view text);
std::string encode_utf8(const std::vector<char32_t>& cps);

bool is_alphabetic(char32_t cp);
bool is_whitespace(char32_t cp);
bool is_hyphen(char32_t cp);
int combining_class(char32_t cp);
char32_t fold_case(char32_t cp);

// Canonical decomposition + ordering + composition (NFC) of a decoded string.
std::vector<char32_t> compose_canonical(const std::vector<char32_t>& cps);

// NFC with a case fold applied on the decomposed form; idempotent.
std::vector<char32_t> fold_compose_canonical(const std::vector<char32_t>& cps);

}  // namespace unicode

}  // namespace lingloop
