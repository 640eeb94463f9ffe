#pragma once

// Rank bounds for finitely presented groups.
//
// Upper bounds come from presentations: greedy Tietze elimination, then,
// if more than two generators survive, a search for a generating pair
// (u, v) among short words. A pair is accepted only when coset enumeration
// of <u, v> closes with index 1; the tracked subgroup words then rewrite the
// presentation onto two generators.
//
// Lower bounds come from H_1 (its minimal generator count) and from a
// nonabelian permutation quotient (symmetric, then affine), which rules out
// cyclic groups.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2bundle/coset_enumeration.hpp"
#include "g2bundle/homology.hpp"
#include "g2bundle/presentation.hpp"
#include "g2bundle/symmetric_quotient.hpp"
#include "g2bundle/tietze.hpp"

namespace g2bundle {

struct RankBudget {
  TietzeBudget tietze;
  bool pair_search = true;
  std::size_t pair_word_length = 2;     // candidate words u, v have at most this many letters
  std::size_t max_pair_candidates = 64;  // pairs tried by coset enumeration
  CosetLimits cosets;
  int max_symmetric_degree = 5;
  int max_affine_prime = 13;  // fallback AGL(1, q) search; below 7 disables it
  std::size_t witness_node_budget = 2'000'000;
};

enum class RankStatus { exact, bounded, unknown };

inline std::string_view to_string(RankStatus s) {
  switch (s) {
    case RankStatus::exact: return "exact";
    case RankStatus::bounded: return "bounded";
    case RankStatus::unknown: return "unknown";
  }
  return "unknown";
}

/// Generators u, v (words over the presentation they were found in) with,
/// for every generator g of that presentation, a word in u, v equal to g.
struct GeneratingPair {
  GroupWord u, v;
  std::vector<GroupWord> expressions;  // over symbols 0 (u) and 1 (v)
};

struct UpperBound {
  int upper = 0;
  Presentation witness;  // presentation with `upper` generators
  SimplificationTrace trace;
  std::optional<GeneratingPair> pair;  // over trace.final's generators
  bool truncated = false;
};

namespace detail {

/// Rows of `base` plus extra exponent vectors span Z^n.
inline bool spans_abelianization(const IntMatrix& base, const std::vector<std::vector<long long>>& extra) {
  const std::size_t n = base.cols();
  IntMatrix m(base.rows() + extra.size(), n);
  for (std::size_t r = 0; r < base.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = base(r, c);
  for (std::size_t k = 0; k < extra.size(); ++k)
    for (std::size_t c = 0; c < n; ++c) m(base.rows() + k, c) = extra[k][c];
  if (m.rows() < n) return false;
  for (const BigInt& d : smith_normal_form(std::move(m)))
    if (d != 1) return false;
  return true;
}

/// Candidate words: single generators, then longer freely reduced words,
/// one of each inverse pair, in shortlex order of letter codes.
inline std::vector<GroupWord> candidate_words(int generators, std::size_t max_length) {
  std::vector<GroupWord> out;
  std::vector<GroupWord> layer{GroupWord{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : layer)
      for (int g = 0; g < generators; ++g)
        for (int e : {1, -1}) {
          const Letter l(g, e);
          if (!w.empty() && w[w.size() - 1].cancels(l)) continue;
          GroupWord x = w;
          x.push_back(l);
          next.push_back(x);
        }
    for (const auto& w : next) {
      const GroupWord winv = inverse(w);
      if (len == 1 ? w[0].exponent() > 0 : !(winv < w)) out.push_back(w);
    }
    layer = std::move(next);
  }
  return out;
}

inline Presentation rewrite_on_pair(const Presentation& p, const GeneratingPair& pair) {
  std::vector<GroupWord> relators;
  for (const auto& r : p.relators()) relators.push_back(cyclic_reduce(substitute(r, pair.expressions)));
  relators.push_back(cyclic_reduce(multiply(GroupWord{Letter(0, -1)}, substitute(pair.u, pair.expressions))));
  relators.push_back(cyclic_reduce(multiply(GroupWord{Letter(1, -1)}, substitute(pair.v, pair.expressions))));
  return Presentation({"y1", "y2"}, std::move(relators));
}

}  // namespace detail

/// Searches for two words generating the group of `p`. Candidate pairs must
/// first generate H_1; survivors are tested by coset enumeration.
inline std::optional<GeneratingPair> find_generating_pair(const Presentation& p, const RankBudget& budget) {
  const int n = p.generator_count();
  if (n < 2) return std::nullopt;
  const IntMatrix base = abelianize(p);
  const auto words = detail::candidate_words(n, budget.pair_word_length);
  std::vector<std::vector<long long>> vectors;
  for (const auto& w : words) {
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    for (Letter l : w) v[static_cast<std::size_t>(l.generator())] += l.exponent();
    vectors.push_back(std::move(v));
  }
  std::size_t tried = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (!detail::spans_abelianization(base, {vectors[i], vectors[j]})) continue;
      if (++tried > budget.max_pair_candidates) return std::nullopt;
      const std::vector<GroupWord> subgroup{words[i], words[j]};
      const auto quick = enumerate_cosets(p, subgroup, false, budget.cosets);
      if (!quick.complete || quick.index != 1) continue;
      const auto tracked = enumerate_cosets(p, subgroup, true, budget.cosets);
      if (!tracked.complete || tracked.index != 1) continue;
      return GeneratingPair{words[i], words[j], tracked.generator_words};
    }
  return std::nullopt;
}

inline UpperBound rank_upper_bound_with_witness(const Presentation& p, const RankBudget& budget = {},
                                                long long homology_rank = 0) {
  UpperBound out;
  out.trace = tietze_eliminate(p, budget.tietze);
  out.truncated = out.trace.truncated;
  out.witness = out.trace.final;
  out.upper = out.witness.generator_count();
  if (budget.pair_search && out.upper > 2 && homology_rank <= 2) {
    if (auto pair = find_generating_pair(out.trace.final, budget)) {
      out.witness = detail::rewrite_on_pair(out.trace.final, *pair);
      out.upper = 2;
      out.pair = std::move(pair);
    }
  }
  return out;
}

/// Number of generators of the smallest presentation found.
inline int rank_upper_bound(const Presentation& p, const RankBudget& budget = {}) {
  return rank_upper_bound_with_witness(p, budget, homology_of(p).rank()).upper;
}

struct RankCertificate {
  int upper = 0;
  int lower = 0;
  RankStatus status = RankStatus::unknown;
  Presentation witness_presentation;
  std::optional<QuotientWitness> witness_quotient;  // images of the input's generators
  std::optional<GeneratingPair> generating_pair;    // over the Tietze-reduced presentation
  bool truncated = false;
};

namespace detail {

/// Pulls a witness on the reduced presentation back to the generators of
/// the original one, using the recorded substitutions.
inline QuotientWitness lift_witness(const QuotientWitness& reduced, const UpperBound& ub,
                                    int original_generators) {
  std::vector<Permutation> on_final = reduced.images;
  if (ub.pair) {
    on_final.clear();
    for (const auto& e : ub.pair->expressions) on_final.push_back(evaluate_permutation(e, reduced.images, reduced.degree));
  }
  std::vector<Permutation> images(static_cast<std::size_t>(original_generators));
  for (std::size_t i = 0; i < ub.trace.surviving.size(); ++i)
    images[static_cast<std::size_t>(ub.trace.surviving[i])] = on_final[i];
  for (auto it = ub.trace.steps.rbegin(); it != ub.trace.steps.rend(); ++it)
    images[static_cast<std::size_t>(it->eliminated)] = evaluate_permutation(it->substitution, images, reduced.degree);
  return {reduced.degree, std::move(images), reduced.group};
}

}  // namespace detail

inline RankCertificate certify_rank(const Presentation& p, const RankBudget& budget = {}) {
  RankCertificate cert;
  const HomologySummary h = homology_of(p);
  UpperBound ub = rank_upper_bound_with_witness(p, budget, h.rank());
  cert.upper = ub.upper;
  cert.truncated = ub.truncated;

  long long lower = h.rank();
  if (h.betti_1 > 0) lower = std::max(lower, 1LL);
  if (lower < 2 && cert.upper >= 2) {
    auto search = nonabelian_witness_search(ub.witness, budget.max_symmetric_degree, budget.witness_node_budget);
    if (!search.witness && budget.max_affine_prime >= 7)
      search = affine_witness_search(ub.witness, budget.max_affine_prime, budget.witness_node_budget);
    if (search.witness) {
      QuotientWitness lifted = detail::lift_witness(*search.witness, ub, p.generator_count());
      if (is_nonabelian_witness(p, lifted)) {
        cert.witness_quotient = std::move(lifted);
        lower = 2;
      }
    }
  }
  cert.lower = static_cast<int>(lower);
  cert.witness_presentation = std::move(ub.witness);
  cert.generating_pair = std::move(ub.pair);
  if (cert.lower == cert.upper)
    cert.status = RankStatus::exact;
  else
    cert.status = cert.truncated ? RankStatus::unknown : RankStatus::bounded;
  return cert;
}

inline nlohmann::json to_json(const RankCertificate& c) {
  nlohmann::json j{{"upper", c.upper},
                   {"lower", c.lower},
                   {"status", std::string(to_string(c.status))},
                   {"truncated", c.truncated},
                   {"witness_presentation", to_json(c.witness_presentation)}};
  if (c.witness_quotient) {
    nlohmann::json images = nlohmann::json::array();
    for (const auto& p : c.witness_quotient->images) images.push_back(format_cycles(p));
    j["witness_quotient"] = {{"group", c.witness_quotient->group},
                             {"degree", c.witness_quotient->degree},
                             {"images", std::move(images)}};
  }
  return j;
}

}  // namespace g2bundle
