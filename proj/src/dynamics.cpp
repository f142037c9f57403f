#include "lingloop/dynamics.hpp"

#include <algorithm>
#include <sstream>

namespace lingloop {
namespace {

void check_domain(int n, int nmax) {
  if (n < 1 || n > nmax)
    throw ValidationError("n out of domain [1, " + std::to_string(nmax) +
                          "]: " + std::to_string(n));
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

// Maps every state to its attractor; shared by basin() and classify().
struct GraphAnalysis {
  std::vector<Attractor> attractors;   // discovery order
  std::vector<int> attractor_of;       // state -> index into attractors (1-based states)

  GraphAnalysis(const std::vector<int>& steps, int nmax) : attractor_of(nmax + 1, -1) {
    std::vector<int> flag(static_cast<std::size_t>(nmax) + 1, 0);  // 0 new, 1 on path, 2 done
    std::vector<int> path;
    for (int start = 1; start <= nmax; ++start) {
      if (flag[start] != 0) continue;
      path.clear();
      int x = start;
      while (flag[x] == 0) {
        flag[x] = 1;
        path.push_back(x);
        x = steps[static_cast<std::size_t>(x - 1)];
        check_domain(x, nmax);  // untrusted tables may escape closure
      }
      int idx;
      if (flag[x] == 1) {
        // x closes a new lasso: everything from its first occurrence is periodic
        const auto cycle_begin =
            std::find(path.begin(), path.end(), x) - path.begin();
        std::vector<int> cycle_states(path.begin() + cycle_begin, path.end());
        idx = static_cast<int>(attractors.size());
        if (cycle_states.size() == 1)
          attractors.push_back(Attractor{cycle_states.front()});
        else
          attractors.push_back(Attractor{canonical_cycle(std::move(cycle_states))});
      } else {
        idx = attractor_of[x];
      }
      for (int s : path) {
        attractor_of[s] = idx;
        flag[s] = 2;
      }
    }
  }
};

}  // namespace

Cycle canonical_cycle(std::vector<int> states) {
  if (states.size() < 2) throw ValidationError("cycle must have length >= 2");
  const auto min_it = std::min_element(states.begin(), states.end());
  std::rotate(states.begin(), min_it, states.end());
  return Cycle{std::move(states)};
}

std::vector<int> Attractor::states() const {
  if (is_fixed_point()) return {fixed_point()};
  return cycle().states;
}

std::string Classification::label_text() const {
  switch (label) {
    case LabelKind::Positive:
      return "Positive(" + join(constants, ",") + ")";
    case LabelKind::BiPositive:
      return "BiPositive(" + join(constants, ",") + ")";
    case LabelKind::TriPositive:
      return "TriPositive(" + join(constants, ",") + ")";
    case LabelKind::MultiPositive:
      return "MultiPositive(" + join(constants, ",") + ")";
    case LabelKind::Negative: {
      std::string out = "Negative; cycles:";
      for (std::size_t i = 0; i < cycles.size(); ++i)
        out += (i ? ", (" : " (") + join(cycles[i].states, " ") + ")";
      return out;
    }
  }
  return {};
}

int step(int n, const NumeralTable& table, const LetterCountPolicy& policy) {
  check_domain(n, table.nmax());
  return count_letters(table.spelling(n), policy);
}

std::vector<int> step_table(const NumeralTable& table, const LetterCountPolicy& policy) {
  std::vector<int> steps;
  steps.reserve(static_cast<std::size_t>(table.nmax()));
  for (int n = 1; n <= table.nmax(); ++n)
    steps.push_back(count_letters(table.spelling(n), policy));
  return steps;
}

Trajectory trajectory(int n, const NumeralTable& table, const LetterCountPolicy& policy) {
  const int nmax = table.nmax();
  check_domain(n, nmax);
  const auto steps = step_table(table, policy);

  Trajectory t;
  t.start = n;
  std::vector<int> first_seen(static_cast<std::size_t>(nmax) + 1, -1);
  int x = n;
  while (first_seen[x] < 0) {
    first_seen[x] = static_cast<int>(t.states.size());
    t.states.push_back(x);
    x = steps[static_cast<std::size_t>(x - 1)];
    check_domain(x, nmax);
  }
  t.states.push_back(x);  // the first repeated state closes the orbit
  t.tail_index = first_seen[x];

  std::vector<int> periodic(t.states.begin() + t.tail_index, t.states.end() - 1);
  if (periodic.size() == 1)
    t.attractor = Attractor{periodic.front()};
  else
    t.attractor = Attractor{canonical_cycle(std::move(periodic))};
  return t;
}

std::vector<int> find_fixed_points(const NumeralTable& table, const LetterCountPolicy& policy) {
  const auto steps = step_table(table, policy);
  std::vector<int> out;
  for (int n = 1; n <= table.nmax(); ++n)
    if (steps[static_cast<std::size_t>(n - 1)] == n) out.push_back(n);
  return out;
}

std::vector<Cycle> find_cycles(const NumeralTable& table, const LetterCountPolicy& policy) {
  const GraphAnalysis analysis(step_table(table, policy), table.nmax());
  std::vector<Cycle> out;
  for (const auto& a : analysis.attractors)
    if (!a.is_fixed_point()) out.push_back(a.cycle());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> basin(const NumeralTable& table, const LetterCountPolicy& policy,
                       const Attractor& attractor) {
  const GraphAnalysis analysis(step_table(table, policy), table.nmax());
  const auto it = std::find(analysis.attractors.begin(), analysis.attractors.end(), attractor);
  if (it == analysis.attractors.end())
    throw ValidationError("unknown attractor for this table");
  const int idx = static_cast<int>(it - analysis.attractors.begin());
  std::vector<int> out;
  for (int n = 1; n <= table.nmax(); ++n)
    if (analysis.attractor_of[static_cast<std::size_t>(n)] == idx) out.push_back(n);
  return out;
}

Classification classify(const NumeralTable& table, const LetterCountPolicy& policy) {
  const int nmax = table.nmax();
  const auto steps = step_table(table, policy);
  const GraphAnalysis analysis(steps, nmax);

  Classification c;
  for (int n = 1; n <= nmax; ++n)
    if (steps[static_cast<std::size_t>(n - 1)] == n) c.fixed_points.push_back(n);
  for (const auto& a : analysis.attractors)
    if (!a.is_fixed_point()) c.cycles.push_back(a.cycle());
  std::sort(c.cycles.begin(), c.cycles.end());

  // Basin sizes keyed by attractor, fixed points in ascending order first.
  std::vector<Attractor> ordered;
  for (int k : c.fixed_points) ordered.push_back(Attractor{k});
  for (const Cycle& cy : c.cycles) ordered.push_back(Attractor{cy});
  for (const Attractor& a : ordered) {
    const auto it = std::find(analysis.attractors.begin(), analysis.attractors.end(), a);
    const int idx = static_cast<int>(it - analysis.attractors.begin());
    int size = 0;
    for (int n = 1; n <= nmax; ++n)
      if (analysis.attractor_of[static_cast<std::size_t>(n)] == idx) ++size;
    c.basin_sizes.emplace_back(a, size);
  }

  if (!c.cycles.empty()) {
    c.label = LabelKind::Negative;
  } else {
    c.constants = c.fixed_points;
    switch (c.fixed_points.size()) {
      case 1:
        c.label = LabelKind::Positive;
        break;
      case 2:
        c.label = LabelKind::BiPositive;
        break;
      case 3:
        c.label = LabelKind::TriPositive;
        break;
      default:
        c.label = LabelKind::MultiPositive;
        break;
    }
  }
  return c;
}

}  // namespace lingloop
