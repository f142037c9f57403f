#include "lingloop/corpus.hpp"

#include <algorithm>

namespace lingloop {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double LengthDistribution::proportion(int length) const {
  const auto it = counts.find(length);
  if (it == counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total_words);
}

std::vector<int> LengthDistribution::support() const {
  std::vector<int> out;
  out.reserve(counts.size());
  for (const auto& [length, count] : counts) out.push_back(length);
  return out;
}

std::vector<WordEntry> load_wordlist(std::string_view source, const LetterCountPolicy& policy) {
  if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);
  unicode::decode_utf8(source);  // whole-file encoding check, offsets are global

  std::vector<WordEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    const std::size_t eol = std::min(source.find('\n', pos), source.size());
    std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    line = trim(line);
    if (line.empty() || line.starts_with('#')) continue;

    std::string word = normalize(line);
    const int length = count_letters(word, policy);
    if (length == 0)
      throw ValidationError("zero letters at line " + std::to_string(line_no));
    out.push_back({std::move(word), length});
  }
  if (out.empty()) throw ValidationError("empty wordlist");
  return out;
}

LengthDistribution initial_distribution(const std::vector<WordEntry>& words) {
  if (words.empty()) throw ValidationError("empty wordlist");
  LengthDistribution dist;
  dist.iteration = 0;
  dist.total_words = words.size();
  for (const auto& entry : words) ++dist.counts[entry.length];
  return dist;
}

CorpusReport iterate_distribution(const LengthDistribution& dist, const NumeralTable& table,
                                  const LetterCountPolicy& policy, int rounds) {
  if (rounds < 0) throw ValidationError("rounds must be >= 0");
  const int nmax = table.nmax();
  for (const auto& [length, count] : dist.counts)
    if (length < 1 || length > nmax)
      throw ValidationError("length " + std::to_string(length) +
                            " exceeds table domain [1, " + std::to_string(nmax) + "]");

  const auto steps = step_table(table, policy);
  const auto fixed_points = find_fixed_points(table, policy);
  const auto is_fixed = [&](int length) {
    return std::binary_search(fixed_points.begin(), fixed_points.end(), length);
  };

  CorpusReport report;
  report.language = table.language();
  report.rounds = rounds;
  report.series.reserve(static_cast<std::size_t>(rounds) + 1);

  LengthDistribution current = dist;
  current.iteration = 0;
  for (int i = 0;; ++i) {
    if (!report.converged_at &&
        std::all_of(current.counts.begin(), current.counts.end(),
                    [&](const auto& kv) { return is_fixed(kv.first); }))
      report.converged_at = i;
    report.series.push_back(current);
    if (i == rounds) break;

    LengthDistribution next;
    next.iteration = i + 1;
    next.total_words = current.total_words;
    for (const auto& [length, count] : current.counts)
      next.counts[steps[static_cast<std::size_t>(length - 1)]] += count;
    current = std::move(next);
  }
  return report;
}

std::vector<double> convergence_metrics(const CorpusReport& report, int target) {
  std::vector<double> out;
  out.reserve(report.series.size());
  for (const auto& dist : report.series) out.push_back(dist.proportion(target));
  return out;
}

}  // namespace lingloop
