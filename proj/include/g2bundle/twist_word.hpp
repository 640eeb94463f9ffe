#pragma once

// Words in the five chain twists D1..D5 of the genus-two surface.
//
// Text grammar: whitespace-separated syllables `D<i>` or `D<i>^<k>` with
// i in 1..5 and k a nonzero decimal integer, e.g. "D1^2 D2^-1 D3".
// In a word the leftmost syllable is outermost: "D2 D1" means D2 o D1, so
// D1 acts first on the fiber group.

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "g2bundle/errors.hpp"

namespace g2bundle {

inline constexpr int kTwistCount = 5;

struct Syllable {
  int generator = 1;        // 1..5
  long long exponent = 1;   // nonzero

  bool operator==(const Syllable&) const = default;
};

/// Run-length normal form: adjacent syllables use distinct generators and no
/// exponent is zero. Every constructor normalizes.
class TwistWord {
public:
  TwistWord() = default;
  explicit TwistWord(const std::vector<Syllable>& raw) {
    for (const Syllable& s : raw) append(s);
  }

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  /// Sum of |exponent| over syllables.
  long long length() const {
    long long n = 0;
    for (const Syllable& s : syllables_) n += std::llabs(s.exponent);
    return n;
  }

  /// Appends a syllable, merging with the tail and cascading cancellations.
  void append(Syllable s) {
    if (s.generator < 1 || s.generator > kTwistCount)
      throw InputError("twist generator index out of range: " + std::to_string(s.generator));
    if (s.exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
      syllables_.back().exponent += s.exponent;
      if (syllables_.back().exponent == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(s);
    }
  }

  /// Concatenation `*this` then `other` (as written, left to right).
  TwistWord operator*(const TwistWord& other) const {
    TwistWord out = *this;
    for (const Syllable& s : other.syllables_) out.append(s);
    return out;
  }

  TwistWord inverse() const {
    TwistWord out;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
      out.append({it->generator, -it->exponent});
    return out;
  }

  /// One signed entry per unit twist: +i for D_i, -i for D_i^-1.
  std::vector<int> letters() const {
    std::vector<int> out;
    for (const Syllable& s : syllables_)
      for (long long k = 0; k < std::llabs(s.exponent); ++k)
        out.push_back(s.exponent > 0 ? s.generator : -s.generator);
    return out;
  }

  static TwistWord from_letters(const std::vector<int>& letters) {
    TwistWord w;
    for (int l : letters) w.append({l > 0 ? l : -l, l > 0 ? 1 : -1});
    return w;
  }

  bool operator==(const TwistWord&) const = default;

private:
  std::vector<Syllable> syllables_;
};

inline std::string to_string(const TwistWord& w) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 'D';
    out += std::to_string(s.generator);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

namespace detail {

inline bool parse_int(std::string_view text, long long& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last && first != last;
}

}  // namespace detail

inline Syllable parse_syllable(std::string_view token) {
  const std::string tok(token);
  if (token.size() < 2 || token[0] != 'D')
    throw ParseError("malformed twist syllable '" + tok + "'", tok);
  const auto caret = token.find('^');
  const std::string_view index_text = token.substr(1, caret == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : caret - 1);
  long long index = 0;
  if (index_text.empty() || index_text[0] == '+' || index_text[0] == '-' ||
      !detail::parse_int(index_text, index))
    throw ParseError("malformed twist syllable '" + tok + "'", tok);
  if (index < 1 || index > kTwistCount)
    throw ParseError("twist index out of range in '" + tok + "' (expected D1..D5)", tok);
  long long exponent = 1;
  if (caret != std::string_view::npos) {
    if (!detail::parse_int(token.substr(caret + 1), exponent))
      throw ParseError("malformed exponent in '" + tok + "'", tok);
    if (exponent == 0) throw ParseError("zero exponent in '" + tok + "'", tok);
  }
  return {static_cast<int>(index), exponent};
}

inline TwistWord parse_twist_word(std::string_view text) {
  std::vector<Syllable> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) raw.push_back(parse_syllable(token));
  return TwistWord(raw);
}

}  // namespace g2bundle
