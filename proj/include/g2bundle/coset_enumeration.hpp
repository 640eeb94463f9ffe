#pragma once

// Coset enumeration (HLT strategy) for a subgroup H = <h_1, ..., h_k> of a
// finitely presented group, optionally tracking subgroup words.
//
// With tracking on, every table entry c --x--> d carries a word lambda over
// the symbols y_1..y_k (y_j standing for h_j) such that
//     rep(c) * x = lambda * rep(d)
// holds in the group. When the enumeration closes with index 1, the entry
// for generator g at the single coset expresses g as a word in the h_j.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "g2bundle/group_word.hpp"
#include "g2bundle/presentation.hpp"

namespace g2bundle {

struct CosetLimits {
  std::size_t max_cosets = 1'000;          // cosets ever defined
  std::size_t max_label_length = 200'000;  // per-label cap when tracking words
};

struct CosetEnumerationResult {
  bool complete = false;      // false when a limit stopped the enumeration
  std::size_t index = 0;      // number of live cosets, valid when complete
  // For index 1 with tracking: word over y_1..y_k for each group generator.
  std::vector<GroupWord> generator_words;
};

namespace detail {

class CosetTable {
public:
  CosetTable(const Presentation& p, std::span<const GroupWord> subgroup, bool track,
             const CosetLimits& limits)
      : ngen_(static_cast<std::size_t>(p.generator_count())),
        track_(track),
        limits_(limits),
        relators_(p.relators()),
        subgroup_(subgroup.begin(), subgroup.end()) {
    for (auto& r : relators_) r = cyclic_reduce(r);
    new_coset();
  }

  CosetEnumerationResult run() {
    CosetEnumerationResult result;
    for (std::size_t j = 0; j < subgroup_.size() && !failed_; ++j) {
      auto [end, label] = scan(0, subgroup_[j]);
      // h_j = label * rep(end) and rep(0) = 1, so rep(0) = y_j^-1 label rep(end).
      GroupWord mu;
      if (track_) mu = multiply(GroupWord{Letter(static_cast<int>(j), -1)}, label);
      coincidence(0, end, std::move(mu));
    }
    for (std::size_t c = 0; c < parent_.size() && !failed_; ++c) {
      for (const auto& r : relators_) {
        if (failed_ || !live(c)) break;
        auto [end, label] = scan(c, r);
        coincidence(c, end, std::move(label));
      }
      for (std::size_t col = 0; col < 2 * ngen_ && !failed_; ++col) {
        if (!live(c)) break;
        if (next_[c * 2 * ngen_ + col] < 0) define(c, col);
      }
    }
    if (failed_) return result;
    result.complete = true;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(c)) ++result.index;
    if (result.index == 1 && track_) {
      for (std::size_t g = 0; g < ngen_; ++g)
        result.generator_words.push_back(label_[g * 2]);
    }
    return result;
  }

private:
  static std::size_t column(Letter l) {
    return static_cast<std::size_t>(l.generator()) * 2 + (l.exponent() > 0 ? 0 : 1);
  }
  static std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

  bool live(std::size_t c) const { return parent_[c] < 0; }

  std::int32_t new_coset() {
    if (parent_.size() >= limits_.max_cosets) {
      failed_ = true;
      return 0;
    }
    parent_.push_back(-1);
    parent_label_.emplace_back();
    next_.resize(next_.size() + 2 * ngen_, -1);
    label_.resize(label_.size() + 2 * ngen_);
    return static_cast<std::int32_t>(parent_.size() - 1);
  }

  void set_entry(std::size_t c, std::size_t col, std::size_t d, GroupWord lambda) {
    if (track_) {
      label_[d * 2 * ngen_ + inverse_column(col)] = inverse(lambda);
      label_[c * 2 * ngen_ + col] = std::move(lambda);
    }
    next_[c * 2 * ngen_ + col] = static_cast<std::int32_t>(d);
    next_[d * 2 * ngen_ + inverse_column(col)] = static_cast<std::int32_t>(c);
  }

  std::size_t define(std::size_t c, std::size_t col) {
    const std::int32_t n = new_coset();
    if (failed_) return c;
    set_entry(c, col, static_cast<std::size_t>(n), {});
    return static_cast<std::size_t>(n);
  }

  /// Walks `w` from `c`, defining cosets as needed. Returns the end coset and
  /// label L with rep(c) * w = L * rep(end).
  std::pair<std::size_t, GroupWord> scan(std::size_t c, const GroupWord& w) {
    std::size_t cur = c;
    std::vector<Letter> label;
    for (Letter l : w) {
      const std::size_t col = column(l);
      if (next_[cur * 2 * ngen_ + col] < 0) {
        cur = define(cur, col);
        if (failed_) return {c, {}};
        continue;
      }
      if (track_)
        for (Letter m : label_[cur * 2 * ngen_ + col]) push_reduced(label, m);
      cur = static_cast<std::size_t>(next_[cur * 2 * ngen_ + col]);
    }
    if (label.size() > limits_.max_label_length) failed_ = true;
    return {cur, GroupWord(std::move(label))};
  }

  /// Root of `c` and M with rep(c) = M * rep(root); compresses the path.
  std::pair<std::size_t, GroupWord> find(std::size_t c) {
    std::vector<std::size_t> path;
    while (!live(c)) {
      path.push_back(c);
      c = static_cast<std::size_t>(parent_[c]);
    }
    const std::size_t root = c;
    GroupWord acc;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (track_) acc = multiply(parent_label_[*it], acc);
      parent_[*it] = static_cast<std::int32_t>(root);
      if (track_) parent_label_[*it] = acc;
    }
    if (path.empty()) return {root, {}};
    return {root, track_ ? parent_label_[path.front()] : GroupWord{}};
  }

  /// Records rep(a) = mu * rep(b) and merges until the table is consistent.
  void coincidence(std::size_t a, std::size_t b, GroupWord mu) {
    std::vector<std::tuple<std::size_t, std::size_t, GroupWord>> queue;
    queue.emplace_back(a, b, std::move(mu));
    while (!queue.empty() && !failed_) {
      auto [x, y, m] = std::move(queue.back());
      queue.pop_back();
      auto [rx, mx] = find(x);
      auto [ry, my] = find(y);
      if (rx == ry) continue;
      // rep(rx) = nu * rep(ry)
      GroupWord nu;
      if (track_) nu = multiply(multiply(inverse(mx), m), my);
      if (rx > ry) {
        std::swap(rx, ry);
        if (track_) nu = inverse(nu);
      }
      if (nu.size() > limits_.max_label_length) {
        failed_ = true;
        return;
      }
      // Kill ry: rep(ry) = nu^-1 * rep(rx).
      parent_[ry] = static_cast<std::int32_t>(rx);
      if (track_) parent_label_[ry] = inverse(nu);

      const std::size_t width = 2 * ngen_;
      std::vector<std::pair<std::size_t, std::pair<std::int32_t, GroupWord>>> moved;
      for (std::size_t col = 0; col < width; ++col) {
        const std::int32_t d = next_[ry * width + col];
        if (d < 0) continue;
        moved.push_back({col, {d, track_ ? std::move(label_[ry * width + col]) : GroupWord{}}});
        next_[ry * width + col] = -1;
        const std::size_t back = static_cast<std::size_t>(d) * width + inverse_column(col);
        if (static_cast<std::size_t>(d) != ry && next_[back] == static_cast<std::int32_t>(ry))
          next_[back] = -1;
      }
      for (auto& [col, entry] : moved) {
        auto& [d, lambda] = entry;
        auto [d2, md] = find(static_cast<std::size_t>(d));
        // rep(rx) * x = (nu * lambda * md) * rep(d2)
        GroupWord lab;
        if (track_) lab = multiply(multiply(nu, lambda), md);
        const std::int32_t fwd = next_[rx * width + col];
        if (fwd >= 0) {
          GroupWord k;
          if (track_) k = multiply(inverse(label_[rx * width + col]), lab);
          queue.emplace_back(static_cast<std::size_t>(fwd), d2, std::move(k));
          continue;
        }
        const std::int32_t bwd = next_[d2 * width + inverse_column(col)];
        if (bwd >= 0) {
          GroupWord k;
          if (track_) k = multiply(lab, label_[d2 * width + inverse_column(col)]);
          queue.emplace_back(rx, static_cast<std::size_t>(bwd), std::move(k));
          continue;
        }
        set_entry(rx, col, d2, std::move(lab));
      }
    }
  }

  std::size_t ngen_;
  bool track_;
  CosetLimits limits_;
  std::vector<GroupWord> relators_;
  std::vector<GroupWord> subgroup_;
  std::vector<std::int32_t> next_;
  std::vector<GroupWord> label_;
  std::vector<std::int32_t> parent_;
  std::vector<GroupWord> parent_label_;
  bool failed_ = false;
};

}  // namespace detail

/// Enumerates cosets of <subgroup> in the group of `p`. Subgroup words are
/// over the generators of `p`.
inline CosetEnumerationResult enumerate_cosets(const Presentation& p,
                                               std::span<const GroupWord> subgroup,
                                               bool track_words, const CosetLimits& limits = {}) {
  detail::CosetTable table(p, subgroup, track_words, limits);
  return table.run();
}

}  // namespace g2bundle
