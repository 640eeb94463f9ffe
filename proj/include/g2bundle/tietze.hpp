#pragma once

// Greedy Tietze generator elimination.
//
// Repeatedly pick a relator in which some generator occurs exactly once,
// solve that relator for the generator, substitute the solution into every
// other relator, and drop the generator together with the solved relator.
// Relators are kept cyclically reduced throughout.
//
// Choice rule: the generator latest in the generator order wins; among
// relators offering it, the shortest, then the lowest index. On a bundle
// presentation this removes a4, a3, a2 in turn and keeps {a1, t} whenever
// the twist word allows it.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2bundle/group_word.hpp"
#include "g2bundle/presentation.hpp"

namespace g2bundle {

struct TietzeBudget {
  std::size_t max_total_length = 1'000'000;  // letters summed over all relators
  std::size_t max_steps = 1'000;
};

struct TietzeStep {
  int eliminated = 0;             // generator index in the initial presentation
  std::size_t relator_index = 0;  // index into the relator list current at that step
  GroupWord substitution;         // over initial generator indices, excludes `eliminated`

  bool operator==(const TietzeStep&) const = default;
};

struct SimplificationTrace {
  std::vector<TietzeStep> steps;
  Presentation final;
  std::vector<int> surviving;  // final generator i is initial generator surviving[i]
  bool truncated = false;
};

namespace detail {

struct EliminationState {
  std::vector<bool> alive;
  std::vector<GroupWord> relators;  // over initial generator indices

  explicit EliminationState(const Presentation& p)
      : alive(static_cast<std::size_t>(p.generator_count()), true) {
    for (const auto& r : p.relators()) {
      GroupWord c = cyclic_reduce(r);
      if (!c.empty()) relators.push_back(std::move(c));
    }
  }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }

  /// Solves relator `ri` for its unique occurrence of `g`.
  GroupWord solve(std::size_t ri, int g) const {
    const GroupWord& r = relators[ri];
    std::size_t pos = 0;
    while (r[pos].generator() != g) ++pos;
    // r = u g^e v with r = 1, so g = u^-1 v^-1 (e = 1) or g = v u (e = -1).
    GroupWord u(std::vector<Letter>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos)));
    GroupWord v(std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end()));
    if (r[pos].exponent() > 0) return multiply(inverse(u), inverse(v));
    return multiply(v, u);
  }

  /// Length the relators would have after eliminating `g` by `s` (saturating).
  std::size_t projected_length(std::size_t ri, int g, const GroupWord& s) const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < relators.size(); ++k) {
      if (k == ri) continue;
      n += relators[k].size() + occurrences(relators[k], g) * s.size();
    }
    return n;
  }

  void eliminate(std::size_t ri, int g, const GroupWord& s) {
    std::vector<GroupWord> next;
    next.reserve(relators.size());
    for (std::size_t k = 0; k < relators.size(); ++k) {
      if (k == ri) continue;
      GroupWord c = contains_generator(relators[k], g)
                        ? cyclic_reduce(substitute_one(relators[k], g, s))
                        : relators[k];
      if (!c.empty()) next.push_back(std::move(c));
    }
    relators = std::move(next);
    alive[static_cast<std::size_t>(g)] = false;
  }

  /// Next (relator, generator) pair by the choice rule, if any.
  std::optional<std::pair<std::size_t, int>> choose() const {
    const int n = static_cast<int>(alive.size());
    std::vector<std::size_t> counts(alive.size());
    int best_gen = -1;
    std::size_t best_rel = 0, best_len = std::numeric_limits<std::size_t>::max();
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Letter l : relators[ri]) ++counts[static_cast<std::size_t>(l.generator())];
      for (int g = n - 1; g >= 0 && g >= best_gen; --g) {
        if (counts[static_cast<std::size_t>(g)] != 1) continue;
        const std::size_t len = relators[ri].size();
        if (g > best_gen || len < best_len) {
          best_gen = g;
          best_rel = ri;
          best_len = len;
        }
        break;
      }
    }
    if (best_gen < 0) return std::nullopt;
    return std::make_pair(best_rel, best_gen);
  }

  Presentation to_presentation(const std::vector<std::string>& names,
                               std::vector<int>& surviving) const {
    std::vector<int> remap(alive.size(), -1);
    std::vector<std::string> out_names;
    surviving.clear();
    for (std::size_t g = 0; g < alive.size(); ++g)
      if (alive[g]) {
        remap[g] = static_cast<int>(out_names.size());
        out_names.push_back(names[g]);
        surviving.push_back(static_cast<int>(g));
      }
    std::vector<GroupWord> rels;
    for (const auto& r : relators) {
      GroupWord m;
      for (Letter l : r) m.push_back(Letter(remap[static_cast<std::size_t>(l.generator())], l.exponent()));
      rels.push_back(std::move(m));
    }
    return Presentation(std::move(out_names), std::move(rels));
  }
};

}  // namespace detail

inline SimplificationTrace tietze_eliminate(const Presentation& p, const TietzeBudget& budget = {}) {
  detail::EliminationState state(p);
  SimplificationTrace trace;
  for (;;) {
    const auto choice = state.choose();
    if (!choice) break;
    if (trace.steps.size() >= budget.max_steps) {
      trace.truncated = true;
      break;
    }
    const auto [ri, g] = *choice;
    GroupWord s = state.solve(ri, g);
    if (state.projected_length(ri, g, s) > budget.max_total_length) {
      trace.truncated = true;
      break;
    }
    state.eliminate(ri, g, s);
    trace.steps.push_back({g, ri, std::move(s)});
  }
  trace.final = state.to_presentation(p.generators(), trace.surviving);
  return trace;
}

/// Re-applies recorded steps to `initial`, checking each is a legal
/// elimination. Returns nullopt if any step does not apply.
inline std::optional<Presentation> replay(const Presentation& initial,
                                          const std::vector<TietzeStep>& steps) {
  detail::EliminationState state(initial);
  for (const TietzeStep& step : steps) {
    if (step.relator_index >= state.relators.size()) return std::nullopt;
    if (step.eliminated < 0 || step.eliminated >= initial.generator_count() ||
        !state.alive[static_cast<std::size_t>(step.eliminated)])
      return std::nullopt;
    if (occurrences(state.relators[step.relator_index], step.eliminated) != 1) return std::nullopt;
    if (state.solve(step.relator_index, step.eliminated) != step.substitution) return std::nullopt;
    state.eliminate(step.relator_index, step.eliminated, step.substitution);
  }
  std::vector<int> surviving;
  return state.to_presentation(initial.generators(), surviving);
}

inline nlohmann::json to_json(const SimplificationTrace& trace, const Presentation& initial) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"eliminated", initial.generators()[static_cast<std::size_t>(s.eliminated)]},
                     {"relator_index", s.relator_index},
                     {"substitution", word_to_json(s.substitution, initial.generators())}});
  return {{"steps", std::move(steps)}, {"final", to_json(trace.final)}, {"truncated", trace.truncated}};
}

}  // namespace g2bundle
