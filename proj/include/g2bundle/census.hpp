#pragma once

// Census of genus-two bundles by monodromy word.
//
// Words are identified under the equivalence generated by
//   (a) free cancellation D_i D_i^-1,
//   (b) cyclic rotation (conjugation by a generator),
//   (c) commutation D_i D_j = D_j D_i when |i - j| >= 2,
//   (d) the chain flip D_i -> D_(6-i),
//   (e) reversal with every exponent negated (the inverse monodromy).
// This is coarser than conjugacy in the mapping class group: equivalent
// words always give homeomorphic bundles, but conjugate monodromies may
// still land in different classes (the braid relation is not used).
//
// The canonical form of a word is the shortlex-least letter sequence in its
// class, letters ordered D1 < D1^-1 < D2 < D2^-1 < ... < D5^-1.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "g2bundle/errors.hpp"
#include "g2bundle/homology.hpp"
#include "g2bundle/presentation.hpp"
#include "g2bundle/rank.hpp"
#include "g2bundle/twist_word.hpp"

namespace g2bundle {

inline constexpr int kDefaultEnumerationCap = 8;
inline constexpr std::size_t kDefaultOrbitCap = 100'000;

struct CanonicalForm {
  TwistWord word;
  bool canonical = true;  // false when the orbit cap was hit

  bool operator==(const CanonicalForm&) const = default;
};

namespace detail {

// Letters are signed chars: +i for D_i, -i for D_i^-1.
using Letters = std::string;

inline int letter_key(char l) { return 2 * ((l > 0 ? l : -l) - 1) + (l < 0 ? 1 : 0); }

inline bool shortlex_less(const Letters& a, const Letters& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ka = letter_key(a[i]), kb = letter_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

inline Letters cyclic_cancel(const Letters& s) {
  Letters st;
  st.reserve(s.size());
  for (char l : s) {
    if (!st.empty() && st.back() == -l)
      st.pop_back();
    else
      st.push_back(l);
  }
  std::size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && st[lo] == -st[hi - 1]) {
    ++lo;
    --hi;
  }
  return st.substr(lo, hi - lo);
}

inline Letters flip(const Letters& s) {
  Letters out = s;
  for (char& l : out) l = static_cast<char>(l > 0 ? 6 - l : -(6 + l));
  return out;
}

inline Letters invert(const Letters& s) {
  Letters out(s.rbegin(), s.rend());
  for (char& l : out) l = static_cast<char>(-l);
  return out;
}

inline bool far_commute(char x, char y) {
  const int i = x > 0 ? x : -x, j = y > 0 ? y : -y;
  return i - j >= 2 || j - i >= 2;
}

inline Letters to_letters(const TwistWord& w) {
  Letters out;
  for (int l : w.letters()) out.push_back(static_cast<char>(l));
  return out;
}

inline TwistWord from_letters(const Letters& s) {
  std::vector<int> v(s.begin(), s.end());
  return TwistWord::from_letters(v);
}

/// True when no rotation of s, flip(s), invert(s) or flip(invert(s)) is
/// shortlex-smaller than s. Necessary for s to be canonical.
inline bool least_under_symmetries(const Letters& s) {
  const std::size_t n = s.size();
  const Letters f = flip(s), i = invert(s), fi = flip(i);
  for (const Letters* v : {&s, &f, &i, &fi})
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t m = 0; m < n; ++m) {
        const int a = letter_key((*v)[(k + m) % n]), b = letter_key(s[m]);
        if (a < b) return false;
        if (a > b) break;
      }
    }
  return true;
}

/// Shortlex-least rotation of the cyclically cancelled word or of its
/// inverse. Conjugate and inverse words share this representative.
inline Letters cyclic_representative(const Letters& s) {
  const Letters c = cyclic_cancel(s);
  Letters best = c;
  for (const Letters& v : {c, invert(c)})
    for (std::size_t k = 0; k < v.size(); ++k) {
      Letters r = v.substr(k) + v.substr(0, k);
      if (shortlex_less(r, best)) best = std::move(r);
    }
  return best;
}

inline std::pair<Letters, bool> orbit_minimum(const Letters& start_raw, std::size_t cap) {
  const Letters start = cyclic_cancel(start_raw);
  Letters best = start;
  std::unordered_set<Letters> seen{start};
  std::vector<Letters> frontier{start};
  auto visit = [&](Letters s) {
    s = cyclic_cancel(s);
    if (seen.insert(s).second) {
      if (shortlex_less(s, best)) best = s;
      frontier.push_back(std::move(s));
    }
  };
  while (!frontier.empty()) {
    if (seen.size() > cap) return {start, false};
    Letters s = std::move(frontier.back());
    frontier.pop_back();
    const std::size_t n = s.size();
    if (n == 0) continue;
    visit(s.substr(1) + s.substr(0, 1));
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (far_commute(s[k], s[k + 1])) {
        Letters t = s;
        std::swap(t[k], t[k + 1]);
        visit(std::move(t));
      }
    visit(flip(s));
    visit(invert(s));
  }
  return {best, true};
}

}  // namespace detail

inline CanonicalForm canonicalize(const TwistWord& w, std::size_t orbit_cap = kDefaultOrbitCap) {
  auto [letters, ok] = detail::orbit_minimum(detail::to_letters(w), orbit_cap);
  return {detail::from_letters(letters), ok};
}

/// Canonical forms of all nonempty words of length <= max_len, deduplicated
/// and sorted shortlex.
inline std::vector<TwistWord> enumerate_words(int max_len, int cap = kDefaultEnumerationCap,
                                              std::size_t orbit_cap = kDefaultOrbitCap) {
  if (max_len < 1) throw InputError("max_len must be at least 1");
  if (max_len > cap)
    throw InputError("max_len " + std::to_string(max_len) + " exceeds the enumeration cap " +
                     std::to_string(cap));
  std::vector<detail::Letters> found;
  // A canonical word starts with D_m, where m is the least min(i, 6-i) over
  // its letters, and only uses letters whose class is >= m.
  for (int m = 1; m <= 3; ++m) {
    std::vector<char> alphabet;
    for (int i = 1; i <= kTwistCount; ++i)
      if (std::min(i, 6 - i) >= m) {
        alphabet.push_back(static_cast<char>(i));
        alphabet.push_back(static_cast<char>(-i));
      }
    detail::Letters s(1, static_cast<char>(m));
    std::function<void()> extend = [&] {
      const bool cyclically_reduced = s.size() < 2 || s.front() != -s.back();
      if (cyclically_reduced && detail::least_under_symmetries(s)) {
        auto [least, ok] = detail::orbit_minimum(s, orbit_cap);
        if (ok && least == s) found.push_back(s);
      }
      if (static_cast<int>(s.size()) == max_len) return;
      for (char l : alphabet) {
        if (l == -s.back()) continue;
        s.push_back(l);
        extend();
        s.pop_back();
      }
    };
    extend();
  }
  std::sort(found.begin(), found.end(), detail::shortlex_less);
  std::vector<TwistWord> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(detail::from_letters(s));
  return out;
}

/// Shortlex comparison of twist words by their letter sequences.
inline bool word_less(const TwistWord& a, const TwistWord& b) {
  return detail::shortlex_less(detail::to_letters(a), detail::to_letters(b));
}

struct CensusRecord {
  TwistWord word;
  FiberType fiber = FiberType::closed;
  long long betti_1 = 0;
  std::vector<BigInt> torsion;
  int rank_lower = 0;
  int rank_upper = 0;
  RankStatus rank_status = RankStatus::unknown;

  bool operator==(const CensusRecord&) const = default;
};

/// Invariants of the bundle. They are computed on the cyclic representative
/// of `w`, so conjugate and inverse monodromies get identical records apart
/// from the word itself.
inline CensusRecord classify(const TwistWord& w, FiberType fiber, const RankBudget& budget = {}) {
  const Presentation p =
      bundle_presentation(detail::from_letters(detail::cyclic_representative(detail::to_letters(w))), fiber);
  const HomologySummary h = homology_of(p);
  const RankCertificate cert = certify_rank(p, budget);
  return {w, fiber, h.betti_1, h.torsion, cert.lower, cert.upper, cert.status};
}

/// Applies `fn` to every item on `jobs` threads; results keep input order.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, unsigned jobs, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  if (jobs <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned k = 0; k < jobs; ++k)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < items.size(); i = next++) out[i] = fn(items[i]);
    });
  workers.clear();
  return out;
}

/// Uniform integer in [0, n) by rejection, independent of the standard
/// library's distribution implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

/// `count` words: a length uniform in [1, max_len], then that many letters
/// drawn uniformly from the ten D_i^(+-1), then normalized.
inline std::vector<TwistWord> random_words(std::size_t count, int max_len, std::uint64_t seed) {
  if (max_len < 1) throw InputError("max_len must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<TwistWord> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto len = 1 + uniform_below(rng, static_cast<std::uint64_t>(max_len));
    std::vector<int> letters;
    for (std::uint64_t i = 0; i < len; ++i) {
      const auto c = static_cast<int>(uniform_below(rng, 10));
      letters.push_back(c % 2 == 0 ? c / 2 + 1 : -(c / 2 + 1));
    }
    out.push_back(TwistWord::from_letters(letters));
  }
  return out;
}

inline std::vector<CensusRecord> random_search(std::size_t count, int max_len, std::uint64_t seed,
                                               FiberType fiber = FiberType::closed,
                                               const RankBudget& budget = {}, unsigned jobs = 1) {
  return parallel_map(random_words(count, max_len, seed), jobs,
                      [&](const TwistWord& w) { return classify(w, fiber, budget); });
}

/// Exhaustive census in canonical-word order.
inline std::vector<CensusRecord> exhaustive_census(int max_len, FiberType fiber = FiberType::closed,
                                                   const RankBudget& budget = {}, unsigned jobs = 1,
                                                   int cap = kDefaultEnumerationCap) {
  return parallel_map(enumerate_words(max_len, cap), jobs,
                      [&](const TwistWord& w) { return classify(w, fiber, budget); });
}

// Output: CSV with header word,fiber,beta1,torsion,rank_lower,rank_upper,rank_status
// (torsion ';'-joined), or JSON lines with the same field names.

inline const char* census_csv_header() {
  return "word,fiber,beta1,torsion,rank_lower,rank_upper,rank_status";
}

inline std::string to_csv_row(const CensusRecord& r) {
  return to_string(r.word) + ',' + std::string(to_string(r.fiber)) + ',' + std::to_string(r.betti_1) +
         ',' + format_torsion(r.torsion) + ',' + std::to_string(r.rank_lower) + ',' +
         std::to_string(r.rank_upper) + ',' + std::string(to_string(r.rank_status));
}

inline nlohmann::json to_json(const CensusRecord& r) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const BigInt& d : r.torsion) torsion.push_back(nlohmann::json::parse(d.str()));
  return {{"word", to_string(r.word)},         {"fiber", std::string(to_string(r.fiber))},
          {"beta1", r.betti_1},                {"torsion", std::move(torsion)},
          {"rank_lower", r.rank_lower},        {"rank_upper", r.rank_upper},
          {"rank_status", std::string(to_string(r.rank_status))}};
}

enum class CensusFormat { csv, jsonl };

inline void write_census(std::ostream& out, const std::vector<CensusRecord>& records, CensusFormat format) {
  if (format == CensusFormat::csv) {
    out << census_csv_header() << '\n';
    for (const auto& r : records) out << to_csv_row(r) << '\n';
  } else {
    for (const auto& r : records) out << to_json(r).dump() << '\n';
  }
}

}  // namespace g2bundle
