#pragma once

// Exhaustive search for homomorphisms onto nonabelian subgroups of small
// symmetric groups and of the affine groups AGL(1, q). A nonabelian image
// certifies the group is not cyclic, hence needs at least two generators.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2bundle/errors.hpp"
#include "g2bundle/group_word.hpp"
#include "g2bundle/presentation.hpp"

namespace g2bundle {

inline constexpr int kMaxSymmetricDegree = 6;
inline constexpr int kMaxAffinePrime = 31;

/// Permutation of {0, ..., n-1} in one-line notation: p[k] is the image of k.
using Permutation = std::vector<std::uint8_t>;

/// Cycle notation with points numbered from 1, e.g. "(1 2)(3 4 5)"; "()" for
/// the identity.
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    out += '(';
    std::size_t k = s;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      if (!first) out += ' ';
      out += std::to_string(k + 1);
      first = false;
      k = p[k];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

struct QuotientWitness {
  int degree = 0;
  std::vector<Permutation> images;  // one per generator of the presentation searched
  std::string group;                // "S<n>" or "AGL(1,<p>)"

  bool operator==(const QuotientWitness&) const = default;
};

/// A finite permutation group given by its element list, sorted
/// lexicographically (so the identity comes first), with product tables.
/// Products act left to right: (x * y)(k) = y(x(k)).
class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<Permutation> elements, std::string name)
      : degree_(degree), elements_(std::move(elements)), name_(std::move(name)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const std::size_t n = elements_.size();
    std::map<Permutation, std::uint16_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(elements_[i], static_cast<std::uint16_t>(i));
    product_.resize(n * n);
    inverse_.resize(n);
    Permutation q(static_cast<std::size_t>(degree));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < q.size(); ++k) q[k] = elements_[j][elements_[i][k]];
        product_[i * n + j] = index.at(q);
      }
      for (std::size_t k = 0; k < q.size(); ++k) q[elements_[i][k]] = static_cast<std::uint8_t>(k);
      inverse_[i] = index.at(q);
    }
  }

  static PermutationGroup symmetric(int degree) {
    std::vector<Permutation> all;
    Permutation p(static_cast<std::size_t>(degree));
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return {degree, std::move(all), "S" + std::to_string(degree)};
  }

  /// Maps x -> a x + b on Z/p, a != 0.
  static PermutationGroup affine(int prime) {
    std::vector<Permutation> all;
    const std::size_t p = static_cast<std::size_t>(prime);
    for (std::size_t a = 1; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) {
        Permutation x(p);
        for (std::size_t k = 0; k < p; ++k) x[k] = static_cast<std::uint8_t>((a * k + b) % p);
        all.push_back(std::move(x));
      }
    return {prime, std::move(all), "AGL(1," + std::to_string(prime) + ")"};
  }

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::uint16_t multiply(std::size_t i, std::size_t j) const { return product_[i * elements_.size() + j]; }
  std::uint16_t inverse_of(std::size_t i) const { return inverse_[i]; }

  /// Image of `w` given generator images (as element indices).
  std::uint16_t evaluate(const GroupWord& w, const std::vector<std::uint16_t>& images) const {
    std::uint16_t acc = 0;
    for (Letter l : w) {
      const std::uint16_t g = images[static_cast<std::size_t>(l.generator())];
      acc = multiply(acc, l.exponent() > 0 ? g : inverse_of(g));
    }
    return acc;
  }

private:
  int degree_;
  std::vector<Permutation> elements_;
  std::string name_;
  std::vector<std::uint16_t> product_;
  std::vector<std::uint16_t> inverse_;
};

/// Evaluates `w` under explicit permutation images (left-to-right action).
inline Permutation evaluate_permutation(const GroupWord& w, const std::vector<Permutation>& images,
                                        int degree) {
  Permutation acc(static_cast<std::size_t>(degree));
  std::iota(acc.begin(), acc.end(), std::uint8_t{0});
  Permutation next(acc.size());
  for (Letter l : w) {
    const Permutation& g = images[static_cast<std::size_t>(l.generator())];
    if (l.exponent() > 0) {
      for (std::size_t k = 0; k < acc.size(); ++k) next[k] = g[acc[k]];
    } else {
      Permutation ginv(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) ginv[g[k]] = static_cast<std::uint8_t>(k);
      for (std::size_t k = 0; k < acc.size(); ++k) next[k] = ginv[acc[k]];
    }
    acc.swap(next);
  }
  return acc;
}

inline bool is_identity(const Permutation& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != k) return false;
  return true;
}

/// Every relator of `p` maps to the identity and some pair of images fails
/// to commute.
inline bool is_nonabelian_witness(const Presentation& p, const QuotientWitness& w) {
  if (w.images.size() != static_cast<std::size_t>(p.generator_count())) return false;
  for (const auto& r : p.relators())
    if (!is_identity(evaluate_permutation(r, w.images, w.degree))) return false;
  for (std::size_t i = 0; i < w.images.size(); ++i)
    for (std::size_t j = i + 1; j < w.images.size(); ++j) {
      GroupWord c{Letter(static_cast<int>(i), 1), Letter(static_cast<int>(j), 1),
                  Letter(static_cast<int>(i), -1), Letter(static_cast<int>(j), -1)};
      if (!is_identity(evaluate_permutation(c, w.images, w.degree))) return true;
    }
  return false;
}

struct WitnessSearch {
  std::optional<QuotientWitness> witness;
  bool exhausted = true;  // false when the node budget cut the search short
};

namespace detail {

/// First nonabelian assignment of generator images in `group`, visiting
/// image tuples in lexicographic order. Relators are checked as soon as all
/// their generators have images. `nodes` accumulates across calls.
inline WitnessSearch search_group(const Presentation& p, const PermutationGroup& group, std::size_t& nodes,
                                  std::size_t node_budget) {
  WitnessSearch result;
  const std::size_t m = static_cast<std::size_t>(p.generator_count());
  if (m < 2) return result;
  std::vector<std::vector<const GroupWord*>> checks(m);
  for (const auto& r : p.relators()) {
    int hi = 0;
    for (Letter l : r) hi = std::max(hi, l.generator());
    checks[static_cast<std::size_t>(hi)].push_back(&r);
  }
  const std::size_t order = group.order();
  std::vector<std::uint16_t> images(m, 0);
  std::vector<std::size_t> cursor(m, 0);
  std::size_t depth = 0;
  while (true) {
    if (cursor[depth] == order) {
      if (depth == 0) break;
      --depth;
      ++cursor[depth];
      continue;
    }
    if (++nodes > node_budget) {
      result.exhausted = false;
      return result;
    }
    images[depth] = static_cast<std::uint16_t>(cursor[depth]);
    bool ok = true;
    for (const GroupWord* r : checks[depth])
      if (group.evaluate(*r, images) != 0) {
        ok = false;
        break;
      }
    if (!ok) {
      ++cursor[depth];
      continue;
    }
    if (depth + 1 < m) {
      cursor[++depth] = 0;
      continue;
    }
    bool nonabelian = false;
    for (std::size_t i = 0; i < m && !nonabelian; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (group.multiply(images[i], images[j]) != group.multiply(images[j], images[i])) {
          nonabelian = true;
          break;
        }
    if (nonabelian) {
      QuotientWitness w;
      w.degree = group.degree();
      w.group = group.name();
      for (auto idx : images) w.images.push_back(group.element(idx));
      result.witness = std::move(w);
      return result;
    }
    ++cursor[depth];
  }
  return result;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Tries S_3..S_max_degree in turn and returns the first nonabelian
/// assignment found in lexicographic order of the generator images.
inline WitnessSearch nonabelian_witness_search(const Presentation& p, int max_degree,
                                               std::size_t node_budget = 50'000'000) {
  if (max_degree > kMaxSymmetricDegree)
    throw InputError("symmetric degree cap is " + std::to_string(kMaxSymmetricDegree));
  WitnessSearch result;
  std::size_t nodes = 0;
  for (int degree = 3; degree <= max_degree; ++degree) {
    result = detail::search_group(p, PermutationGroup::symmetric(degree), nodes, node_budget);
    if (result.witness || !result.exhausted) return result;
  }
  return result;
}

inline std::optional<QuotientWitness> nonabelian_witness(const Presentation& p, int max_degree) {
  return nonabelian_witness_search(p, max_degree).witness;
}

/// Same search over the affine groups AGL(1, q) for primes 7 <= q <= max_prime.
/// Smaller primes give subgroups of S_5.
inline WitnessSearch affine_witness_search(const Presentation& p, int max_prime,
                                           std::size_t node_budget = 50'000'000) {
  if (max_prime > kMaxAffinePrime) throw InputError("affine prime cap is " + std::to_string(kMaxAffinePrime));
  WitnessSearch result;
  std::size_t nodes = 0;
  for (int q = 7; q <= max_prime; ++q) {
    if (!detail::is_prime(q)) continue;
    result = detail::search_group(p, PermutationGroup::affine(q), nodes, node_budget);
    if (result.witness || !result.exhausted) return result;
  }
  return result;
}

}  // namespace g2bundle
