#include "lingloop/letters.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>

#include "lingloop/errors.hpp"

namespace lingloop {
namespace unicode {
namespace {

struct CpRange {
  char32_t lo;
  char32_t hi;
};
struct CpPair {
  char32_t cp;
  char32_t mapped;
};
struct CpClass {
  char32_t cp;
  std::uint8_t ccc;
};
struct DecompEntry {
  char32_t cp;
  std::uint32_t offset;
  std::uint8_t length;
};
struct ComposePair {
  char32_t first;
  char32_t second;
  char32_t composed;
};

#include "unicode_data.inc"

// Hangul syllable arithmetic (UAX #15 section 3.12).
constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

bool decompose_hangul(char32_t cp, std::vector<char32_t>& out) {
  const int s = static_cast<int>(cp) - static_cast<int>(kHangulSBase);
  if (s < 0 || s >= kHangulSCount) return false;
  out.push_back(kHangulLBase + s / kHangulNCount);
  out.push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
  if (s % kHangulTCount != 0) out.push_back(kHangulTBase + s % kHangulTCount);
  return true;
}

std::optional<char32_t> compose_hangul(char32_t a, char32_t b) {
  const int l = static_cast<int>(a) - static_cast<int>(kHangulLBase);
  const int v = static_cast<int>(b) - static_cast<int>(kHangulVBase);
  if (l >= 0 && l < kHangulLCount && v >= 0 && v < kHangulVCount)
    return kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
  const int s = static_cast<int>(a) - static_cast<int>(kHangulSBase);
  const int t = static_cast<int>(b) - static_cast<int>(kHangulTBase);
  if (s >= 0 && s < kHangulSCount && s % kHangulTCount == 0 && t > 0 && t < kHangulTCount)
    return a + t;
  return std::nullopt;
}

std::optional<char32_t> compose_pair(char32_t a, char32_t b) {
  if (auto h = compose_hangul(a, b)) return h;
  auto it = std::lower_bound(std::begin(kComposePairs), std::end(kComposePairs),
                             std::pair<char32_t, char32_t>{a, b},
                             [](const ComposePair& p, const std::pair<char32_t, char32_t>& key) {
                               return std::pair{p.first, p.second} < key;
                             });
  if (it != std::end(kComposePairs) && it->first == a && it->second == b) return it->composed;
  return std::nullopt;
}

void decompose_full(char32_t cp, std::vector<char32_t>& out) {
  if (decompose_hangul(cp, out)) return;
  auto it = std::lower_bound(std::begin(kDecompIndex), std::end(kDecompIndex), cp,
                             [](const DecompEntry& e, char32_t key) { return e.cp < key; });
  if (it != std::end(kDecompIndex) && it->cp == cp) {
    // Pool entries are stored fully expanded, no recursion needed here.
    for (std::uint32_t i = 0; i < it->length; ++i) out.push_back(kDecompPool[it->offset + i]);
    return;
  }
  out.push_back(cp);
}

}  // namespace

bool is_alphabetic(char32_t cp) {
  auto it = std::upper_bound(std::begin(kAlphabeticRanges), std::end(kAlphabeticRanges), cp,
                             [](char32_t key, const CpRange& r) { return key < r.lo; });
  return it != std::begin(kAlphabeticRanges) && cp <= std::prev(it)->hi;
}

bool is_whitespace(char32_t cp) {
  return std::binary_search(std::begin(kWhitespace), std::end(kWhitespace), cp);
}

bool is_hyphen(char32_t cp) {
  return cp == 0x2D || cp == 0x2010 || cp == 0x2011;
}

int combining_class(char32_t cp) {
  auto it = std::lower_bound(std::begin(kCombiningClasses), std::end(kCombiningClasses), cp,
                             [](const CpClass& c, char32_t key) { return c.cp < key; });
  return (it != std::end(kCombiningClasses) && it->cp == cp) ? it->ccc : 0;
}

char32_t fold_case(char32_t cp) {
  auto it = std::lower_bound(std::begin(kFoldPairs), std::end(kFoldPairs), cp,
                             [](const CpPair& p, char32_t key) { return p.cp < key; });
  return (it != std::end(kFoldPairs) && it->cp == cp) ? it->mapped : cp;
}

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    const auto b0 = static_cast<std::uint8_t>(text[i++]);
    if (b0 < 0x80) {
      out.push_back(b0);
      continue;
    }
    int extra;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      extra = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3;
      cp = b0 & 0x07;
    } else {
      throw Utf8Error(start);
    }
    for (int k = 0; k < extra; ++k) {
      if (i >= text.size()) throw Utf8Error(start);
      const auto b = static_cast<std::uint8_t>(text[i]);
      if ((b & 0xC0) != 0x80) throw Utf8Error(start);
      cp = (cp << 6) | (b & 0x3F);
      ++i;
    }
    static constexpr char32_t kMinByLength[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinByLength[extra]) throw Utf8Error(start);  // overlong form
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) throw Utf8Error(start);
    out.push_back(cp);
  }
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

namespace {

std::vector<char32_t> decompose_all(const std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) decompose_full(cp, out);
  return out;
}

// Canonical ordering: stable-sort runs of nonzero combining classes.
void order_canonical(std::vector<char32_t>& cps) {
  for (std::size_t i = 1; i < cps.size(); ++i) {
    const int ccc = combining_class(cps[i]);
    if (ccc == 0) continue;
    std::size_t j = i;
    while (j > 0 && combining_class(cps[j - 1]) > ccc) {
      std::swap(cps[j - 1], cps[j]);
      --j;
    }
  }
}

// Canonical composition (UAX #15 D117, streaming form); input must be fully
// decomposed and canonically ordered.
std::vector<char32_t> compose_ordered(const std::vector<char32_t>& decomposed) {
  std::vector<char32_t> out;
  out.reserve(decomposed.size());
  int last_starter = -1;  // index into out
  int last_ccc = 0;       // ccc of the previous uncomposed code point
  for (char32_t cp : decomposed) {
    const int ccc = combining_class(cp);
    if (last_starter >= 0) {
      const bool directly_follows = static_cast<int>(out.size()) - 1 == last_starter;
      if (directly_follows || last_ccc < ccc) {
        if (auto p = compose_pair(out[static_cast<std::size_t>(last_starter)], cp)) {
          out[static_cast<std::size_t>(last_starter)] = *p;
          continue;
        }
      }
    }
    if (ccc == 0) last_starter = static_cast<int>(out.size());
    last_ccc = ccc;
    out.push_back(cp);
  }
  return out;
}

}  // namespace

std::vector<char32_t> compose_canonical(const std::vector<char32_t>& cps) {
  auto decomposed = decompose_all(cps);
  order_canonical(decomposed);
  return compose_ordered(decomposed);
}

// Case-folded NFC. The fold runs on the decomposed form: decomposition can
// expose an uppercase base (U+0130 contains a capital I) which a fold on the
// composed text would miss, and recomposing that would mint fresh uppercase,
// breaking idempotency.
std::vector<char32_t> fold_compose_canonical(const std::vector<char32_t>& cps) {
  auto decomposed = decompose_all(cps);
  for (char32_t& cp : decomposed) cp = fold_case(cp);
  order_canonical(decomposed);
  return compose_ordered(decomposed);
}

}  // namespace unicode

std::string normalize(std::string_view word) {
  return unicode::encode_utf8(unicode::fold_compose_canonical(unicode::decode_utf8(word)));
}

int count_letters(std::string_view word, const LetterCountPolicy& policy) {
  int count = 0;
  for (char32_t cp : unicode::fold_compose_canonical(unicode::decode_utf8(word))) {
    if (unicode::is_alphabetic(cp) || (policy.count_hyphens && unicode::is_hyphen(cp)) ||
        (policy.count_spaces && unicode::is_whitespace(cp)))
      ++count;
  }
  return count;
}

}  // namespace lingloop
