#pragma once

#include <random>
#include <sstream>
#include <string>

#include "g2bundle/g2bundle.hpp"
#include "oracles.hpp"

namespace testing_support {

/// Parses "a1 a2^-1 t" into a word over a1..a4, t.
inline g2bundle::GroupWord gw(const std::string& text) {
  g2bundle::GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const bool inv = tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1";
    const std::string name = inv ? tok.substr(0, tok.size() - 3) : tok;
    const int g = name == "t" ? g2bundle::t_gen : name[1] - '1';
    w.push_back(g2bundle::Letter(g, inv ? -1 : 1));
  }
  return w;
}

inline g2bundle::TwistWord random_twist_word(std::mt19937_64& rng, std::size_t max_len) {
  return g2bundle::TwistWord::from_letters(oracle::random_twist_letters(rng, max_len));
}

inline std::array<int, 4> eps_from_mask(int mask) {
  std::array<int, 4> eps;
  for (int i = 0; i < 4; ++i) eps[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
  return eps;
}

}  // namespace testing_support
