#pragma once

// Words in a free group on a finite, indexed generator set.
//
// A letter is a generator index together with an exponent of +1 or -1.
// Words are stored letter by letter (never run-length encoded) so that
// free reduction is one linear stack pass.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace g2bundle {

class Letter {
public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int exponent)
      : code_(exponent > 0 ? generator + 1 : -(generator + 1)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int generator() const { return (code_ > 0 ? code_ : -code_) - 1; }
  constexpr int exponent() const { return code_ > 0 ? 1 : -1; }
  constexpr std::int32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr bool cancels(Letter other) const { return code_ == -other.code_; }

  constexpr auto operator<=>(const Letter&) const = default;

private:
  std::int32_t code_ = 1;
};

class GroupWord {
public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  GroupWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// Single generator raised to an integer power.
  static GroupWord power(int generator, long long exponent) {
    GroupWord w;
    const int sign = exponent >= 0 ? 1 : -1;
    for (long long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
      w.letters_.emplace_back(generator, sign);
    return w;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }
  std::vector<Letter>& mutable_letters() { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const GroupWord& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  bool operator==(const GroupWord&) const = default;
  auto operator<=>(const GroupWord&) const = default;

private:
  std::vector<Letter> letters_;
};

inline GroupWord inverse(const GroupWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return GroupWord(std::move(out));
}

/// Appends `l` to a reduced word kept in `stack`, cancelling if possible.
inline void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().cancels(l))
    stack.pop_back();
  else
    stack.push_back(l);
}

inline GroupWord free_reduce(const GroupWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) push_reduced(stack, l);
  return GroupWord(std::move(stack));
}

inline bool is_freely_reduced(const GroupWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].cancels(w[i])) return false;
  return true;
}

/// Product u*v, freely reduced (inputs need not be reduced).
inline GroupWord multiply(const GroupWord& u, const GroupWord& v) {
  std::vector<Letter> stack;
  stack.reserve(u.size() + v.size());
  for (Letter l : u) push_reduced(stack, l);
  for (Letter l : v) push_reduced(stack, l);
  return GroupWord(std::move(stack));
}

/// Free reduction followed by stripping matching first/last letters, so the
/// result is the shortest word in the conjugacy class reachable by rotation.
inline GroupWord cyclic_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].cancels(r[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo == 0) return r;
  return GroupWord(std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(lo),
                                       r.begin() + static_cast<std::ptrdiff_t>(hi)));
}

inline GroupWord rotate(const GroupWord& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return GroupWord(std::move(out));
}

/// True when cyclically reduced `a` and `b` are cyclic rotations of one
/// another, i.e. the reduced words are conjugate in the free group.
inline bool are_conjugate(const GroupWord& a, const GroupWord& b) {
  const GroupWord ca = cyclic_reduce(a), cb = cyclic_reduce(b);
  if (ca.size() != cb.size()) return false;
  if (ca.empty()) return true;
  // Search cb inside ca+ca.
  std::vector<Letter> doubled(ca.begin(), ca.end());
  doubled.insert(doubled.end(), ca.begin(), ca.end());
  const auto n = cb.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = doubled[k + i] == cb[i];
    if (ok) return true;
  }
  return false;
}

inline long long exponent_sum(const GroupWord& w, int generator) {
  long long s = 0;
  for (Letter l : w)
    if (l.generator() == generator) s += l.exponent();
  return s;
}

inline std::size_t occurrences(const GroupWord& w, int generator) {
  std::size_t n = 0;
  for (Letter l : w)
    if (l.generator() == generator) ++n;
  return n;
}

inline bool contains_generator(const GroupWord& w, int generator) {
  for (Letter l : w)
    if (l.generator() == generator) return true;
  return false;
}

/// Replaces every occurrence of each generator g by images[g] (and g^-1 by
/// its inverse), then freely reduces. `images` must cover every generator
/// present in `w`.
inline GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    const GroupWord& img = images[static_cast<std::size_t>(l.generator())];
    if (l.exponent() > 0) {
      for (Letter m : img) push_reduced(stack, m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        push_reduced(stack, it->inverse());
    }
  }
  return GroupWord(std::move(stack));
}

/// Replaces a single generator by `replacement`, leaving all others intact.
inline GroupWord substitute_one(const GroupWord& w, int generator, const GroupWord& replacement) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (l.generator() != generator) {
      push_reduced(stack, l);
    } else if (l.exponent() > 0) {
      for (Letter m : replacement) push_reduced(stack, m);
    } else {
      for (auto it = replacement.letters().rbegin(); it != replacement.letters().rend(); ++it)
        push_reduced(stack, it->inverse());
    }
  }
  return GroupWord(std::move(stack));
}

/// Renders `w` as space-separated tokens `name` / `name^-1`.
inline std::string format_word(const GroupWord& w, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names[static_cast<std::size_t>(w[i].generator())];
    if (w[i].exponent() < 0) out += "^-1";
  }
  return out;
}

}  // namespace g2bundle
