#pragma once

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lingloop/numerals.hpp"

namespace lingloop {

// A cycle of length >= 2 in the step-map graph, stored canonically: rotated
// so the minimum state comes first.
struct Cycle {
  std::vector<int> states;
  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

Cycle canonical_cycle(std::vector<int> states);

// Where a trajectory ends up: a fixed point k (step(k) == k) or a cycle.
struct Attractor {
  std::variant<int, Cycle> value;

  bool is_fixed_point() const { return std::holds_alternative<int>(value); }
  int fixed_point() const { return std::get<int>(value); }
  const Cycle& cycle() const { return std::get<Cycle>(value); }
  std::vector<int> states() const;

  friend bool operator==(const Attractor&, const Attractor&) = default;
  friend auto operator<=>(const Attractor&, const Attractor&) = default;
};

// One orbit of the step map: states[0] is the start, the walk stops at (and
// includes) the first repeated state. states[tail_index..] walks the
// periodic part.
struct Trajectory {
  int start = 0;
  std::vector<int> states;
  int tail_index = 0;
  Attractor attractor;
};

enum class LabelKind { Positive, BiPositive, TriPositive, MultiPositive, Negative };

// Full verdict for one table: attractor inventory, basin sizes, and the
// classification label. Any cycle makes the language Negative even when
// fixed points coexist.
struct Classification {
  std::vector<int> fixed_points;                       // sorted ascending
  std::vector<Cycle> cycles;                           // canonical, sorted
  std::vector<std::pair<Attractor, int>> basin_sizes;  // fixed points first, then cycles
  LabelKind label = LabelKind::Negative;
  std::vector<int> constants;  // LL constants; empty when Negative

  std::string label_text() const;  // "Positive(4)", "Negative; cycles: (4 5)"
};

int step(int n, const NumeralTable& table, const LetterCountPolicy& policy);

// Letter counts of all spellings, index n-1; the step map as a dense vector.
std::vector<int> step_table(const NumeralTable& table, const LetterCountPolicy& policy);

Trajectory trajectory(int n, const NumeralTable& table, const LetterCountPolicy& policy);

std::vector<int> find_fixed_points(const NumeralTable& table, const LetterCountPolicy& policy);

std::vector<Cycle> find_cycles(const NumeralTable& table, const LetterCountPolicy& policy);

// All starts in 1..nmax whose trajectory reaches `attractor`, sorted.
// Throws ValidationError if the attractor does not occur in this table.
std::vector<int> basin(const NumeralTable& table, const LetterCountPolicy& policy,
                       const Attractor& attractor);

Classification classify(const NumeralTable& table, const LetterCountPolicy& policy);

}  // namespace lingloop
