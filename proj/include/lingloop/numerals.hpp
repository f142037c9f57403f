#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lingloop/errors.hpp"
#include "lingloop/letters.hpp"

namespace lingloop {

// One language's numeral spellings for 1..nmax, immutable after construction.
// Spellings are kept as written in the source file; counting normalizes.
class NumeralTable {
 public:
  NumeralTable(std::string language, std::vector<std::string> spellings);

  const std::string& language() const { return language_; }
  int nmax() const { return static_cast<int>(spellings_.size()); }
  const std::string& spelling(int n) const;

  friend bool operator==(const NumeralTable&, const NumeralTable&) = default;

 private:
  std::string language_;
  std::vector<std::string> spellings_;  // index 0 holds the spelling of 1
};

struct ClosureViolation {
  int n;
  std::string spelling;
  int letter_count;
  friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

// Result of checking that every spelling's letter count maps back into
// [1, nmax], which is what keeps the step map total.
struct ClosureReport {
  bool valid = true;
  std::vector<ClosureViolation> violations;
};

class ClosureError : public ValidationError {
 public:
  ClosureError(ClosureReport report, int nmax);
  const ClosureReport& report() const { return report_; }

 private:
  ClosureReport report_;
};

// Parses the TSV table format: one "<n>\t<spelling>" entry per line, `#`
// comment lines, blank lines ignored, a leading BOM tolerated. Validates
// contiguity of 1..nmax, nonempty spellings, and closure.
NumeralTable load_table(std::string_view source, const LetterCountPolicy& policy,
                        std::string language);

std::string serialize_table(const NumeralTable& table);

// Standard English cardinal for 1..999: tens-units hyphenated, "hundred"
// joined with a space, no "and".
std::string spell_english(int n);

NumeralTable build_english_table(int nmax, const LetterCountPolicy& policy = {});

ClosureReport validate_closure(const NumeralTable& table, const LetterCountPolicy& policy);

}  // namespace lingloop
