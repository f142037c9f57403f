#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingloop/dynamics.hpp"

namespace lingloop {

// Word-length histogram at one iteration. Counts are exact integers; the
// proportion view divides only at output time, so mass bookkeeping is exact.
struct LengthDistribution {
  int iteration = 0;
  std::map<int, std::uint64_t> counts;  // length -> word count; zero entries absent
  std::uint64_t total_words = 0;

  double proportion(int length) const;
  std::vector<int> support() const;

  friend bool operator==(const LengthDistribution&, const LengthDistribution&) = default;
};

struct CorpusReport {
  std::string language;
  int rounds = 0;
  std::vector<LengthDistribution> series;  // iterations 0..rounds
  // First iteration whose support consists of fixed points only; from there
  // the distribution never changes. Never set while a cycle holds mass.
  std::optional<int> converged_at;
};

struct WordEntry {
  std::string word;  // normalized
  int length = 0;
  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

// One word per line, `#` comments, blank lines ignored, BOM tolerated.
// Words come back normalized with their letter counts; duplicates retained.
std::vector<WordEntry> load_wordlist(std::string_view source, const LetterCountPolicy& policy);

LengthDistribution initial_distribution(const std::vector<WordEntry>& words);

// Pushes the distribution through the step map `rounds` times. Requires the
// support to lie within [1, table.nmax()].
CorpusReport iterate_distribution(const LengthDistribution& dist, const NumeralTable& table,
                                  const LetterCountPolicy& policy, int rounds);

// series of proportions at `target`, one value per iteration 0..rounds.
std::vector<double> convergence_metrics(const CorpusReport& report, int target);

}  // namespace lingloop
