#include "lingloop/numerals.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace lingloop {
namespace {

std::string closure_message(const ClosureReport& report, int nmax) {
  std::ostringstream os;
  os << "closure violation:";
  bool first = true;
  for (const auto& v : report.violations) {
    os << (first ? " " : "; ") << "n=" << v.n << " \"" << v.spelling << "\" has "
       << v.letter_count << " letters outside [1, " << nmax << "]";
    first = false;
  }
  return os.str();
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

NumeralTable::NumeralTable(std::string language, std::vector<std::string> spellings)
    : language_(std::move(language)), spellings_(std::move(spellings)) {
  if (spellings_.empty()) throw ValidationError("empty table");
  for (std::size_t i = 0; i < spellings_.size(); ++i)
    if (spellings_[i].empty())
      throw ValidationError("empty spelling at n=" + std::to_string(i + 1));
}

const std::string& NumeralTable::spelling(int n) const {
  if (n < 1 || n > nmax())
    throw ValidationError("n out of domain [1, " + std::to_string(nmax()) +
                          "]: " + std::to_string(n));
  return spellings_[static_cast<std::size_t>(n - 1)];
}

ClosureError::ClosureError(ClosureReport report, int nmax)
    : ValidationError(closure_message(report, nmax)), report_(std::move(report)) {}

NumeralTable load_table(std::string_view source, const LetterCountPolicy& policy,
                        std::string language) {
  if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);
  unicode::decode_utf8(source);  // whole-file encoding check, offsets are global

  std::map<int, std::string> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    const std::size_t eol = std::min(source.find('\n', pos), source.size());
    std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (is_blank(line) || line.starts_with('#')) continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected '<n><TAB><spelling>'");
    int n = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, n);
    if (ec != std::errc{} || ptr != line.data() + tab)
      throw ValidationError("line " + std::to_string(line_no) + ": bad numeral key");
    if (n < 1)
      throw ValidationError("line " + std::to_string(line_no) + ": n must be >= 1");

    std::string spelling(line.substr(tab + 1));
    if (is_blank(spelling))
      throw ValidationError("empty spelling at n=" + std::to_string(n));
    if (!entries.emplace(n, std::move(spelling)).second)
      throw ValidationError("duplicate n=" + std::to_string(n));
  }
  if (entries.empty()) throw ValidationError("empty table");

  const int nmax = entries.rbegin()->first;
  std::vector<std::string> spellings;
  spellings.reserve(static_cast<std::size_t>(nmax));
  for (int n = 1; n <= nmax; ++n) {
    auto it = entries.find(n);
    if (it == entries.end()) throw ValidationError("gap at n=" + std::to_string(n));
    spellings.push_back(std::move(it->second));
  }

  NumeralTable table(std::move(language), std::move(spellings));
  if (auto report = validate_closure(table, policy); !report.valid)
    throw ClosureError(std::move(report), table.nmax());
  return table;
}

std::string serialize_table(const NumeralTable& table) {
  std::string out;
  for (int n = 1; n <= table.nmax(); ++n) {
    out += std::to_string(n);
    out += '\t';
    out += table.spelling(n);
    out += '\n';
  }
  return out;
}

std::string spell_english(int n) {
  if (n < 1 || n > 999)
    throw ValidationError("spell_english: n out of range [1, 999]: " + std::to_string(n));
  static constexpr const char* kUnits[] = {"one", "two",   "three", "four", "five",
                                           "six", "seven", "eight", "nine"};
  static constexpr const char* kTeens[] = {"ten",     "eleven",  "twelve",    "thirteen",
                                           "fourteen", "fifteen", "sixteen",  "seventeen",
                                           "eighteen", "nineteen"};
  static constexpr const char* kTens[] = {"twenty", "thirty", "forty",  "fifty",
                                          "sixty",  "seventy", "eighty", "ninety"};
  if (n >= 100) {
    std::string out = std::string(kUnits[n / 100 - 1]) + " hundred";
    if (n % 100 != 0) out += " " + spell_english(n % 100);
    return out;
  }
  if (n >= 20) {
    std::string out = kTens[n / 10 - 2];
    if (n % 10 != 0) out += std::string("-") + kUnits[n % 10 - 1];
    return out;
  }
  if (n >= 10) return kTeens[n - 10];
  return kUnits[n - 1];
}

NumeralTable build_english_table(int nmax, const LetterCountPolicy& policy) {
  if (nmax < 1 || nmax > 999)
    throw ValidationError("build_english_table: nmax out of range [1, 999]: " +
                          std::to_string(nmax));
  std::vector<std::string> spellings;
  spellings.reserve(static_cast<std::size_t>(nmax));
  for (int n = 1; n <= nmax; ++n) spellings.push_back(spell_english(n));
  NumeralTable table("en", std::move(spellings));
  if (auto report = validate_closure(table, policy); !report.valid)
    throw ClosureError(std::move(report), table.nmax());
  return table;
}

ClosureReport validate_closure(const NumeralTable& table, const LetterCountPolicy& policy) {
  ClosureReport report;
  for (int n = 1; n <= table.nmax(); ++n) {
    const std::string& spelling = table.spelling(n);
    const int count = count_letters(spelling, policy);
    if (count < 1 || count > table.nmax())
      report.violations.push_back({n, spelling, count});
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace lingloop
