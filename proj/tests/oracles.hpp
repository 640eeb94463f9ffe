#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with include/g2bundle beyond the value types.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;

// Words as signed ints: +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

/// Every maximal sequence of adjacent cancellations, in every order; returns
/// the set of irreducible end results (a singleton when reduction is
/// confluent, which it always is in a free group).
inline std::set<Word> all_reductions(const Word& w) {
  std::set<Word> seen{w}, results;
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    bool reducible = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] != -cur[i + 1]) continue;
      reducible = true;
      Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i + 2), cur.end());
      if (seen.insert(next).second) queue.push_back(next);
    }
    if (!reducible) results.insert(cur);
  }
  return results;
}

// ---- determinant divisors ------------------------------------------------

inline cpp_int determinant(std::vector<std::vector<cpp_int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  cpp_int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<cpp_int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<cpp_int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const cpp_int term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : cpp_int(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from d_k = gcd of all k x k minors: s_k = d_k / d_(k-1),
/// listed for k = 1..min(rows, cols), zero once d_k vanishes.
inline std::vector<cpp_int> invariant_factors(const std::vector<std::vector<long long>>& a, std::size_t cols) {
  const std::size_t rows = a.size();
  const std::size_t n = std::min(rows, cols);
  std::vector<cpp_int> out;
  cpp_int prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> tmp;
    subsets(rows, k, 0, tmp, rs);
    subsets(cols, k, 0, tmp, cs);
    cpp_int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<cpp_int>> m(k, std::vector<cpp_int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
        cpp_int d = determinant(m);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
      }
    if (g == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// ---- census orbit ----------------------------------------------------------

// Twist letters: +i for D_i, -i for D_i^-1.

inline int letter_rank(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

inline bool shortlex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](int x, int y) { return letter_rank(x) < letter_rank(y); });
}

/// All words one move away from `w`, treating `w` as a cyclic word.
inline std::vector<Word> neighbours(const Word& w) {
  std::vector<Word> out;
  const std::size_t n = w.size();
  if (n == 0) return out;
  for (std::size_t k = 1; k < n; ++k) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(r);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i] == -w[i + 1]) {
      Word c = w;
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(i), c.begin() + static_cast<std::ptrdiff_t>(i + 2));
      out.push_back(c);
    }
    if (std::abs(std::abs(w[i]) - std::abs(w[i + 1])) >= 2) {
      Word s = w;
      std::swap(s[i], s[i + 1]);
      out.push_back(s);
    }
  }
  if (n >= 2 && w.front() == -w.back()) out.emplace_back(w.begin() + 1, w.end() - 1);
  Word f = w;
  for (int& l : f) l = l > 0 ? 6 - l : -(6 + l);
  out.push_back(f);
  Word inv(w.rbegin(), w.rend());
  for (int& l : inv) l = -l;
  out.push_back(inv);
  return out;
}

inline Word orbit_minimum(const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  Word best = w;
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    if (shortlex(cur, best)) best = cur;
    for (auto& next : neighbours(cur))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return best;
}

// ---- random helpers --------------------------------------------------------

inline Word random_twist_letters(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = 1 + rng() % max_len;
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % 5);
    w.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

}  // namespace oracle
