#pragma once

// Action of the chain twists D1..D5 on pi_1 of the genus-two fiber.
//
// The fiber group is generated by the loops a1..a4 (generator indices
// 0..3); index 4 is reserved for the stable letter t of bundle
// presentations. The action of a single twist D_i^e (e = +1 or -1) is the
// table below; every generator not listed is fixed.
//
//   D1: a2 -> a2 a1^e
//   D2: a1 -> a1 a2^-e
//   D3: a2 -> (a3^-1 a1)^e a2,   a4 -> (a3^-1 a1)^e a4
//   D4: a3 -> a3 a4^e
//   D5: a4 -> a4 a3^-e
//
// A positive exponent is, by definition, the e = +1 row; the table fixes
// the handedness convention.

#include <array>
#include <span>
#include <string>

#include "g2bundle/errors.hpp"
#include "g2bundle/group_word.hpp"
#include "g2bundle/twist_word.hpp"

namespace g2bundle {

inline constexpr int kFiberRank = 4;
inline constexpr int a1 = 0, a2 = 1, a3 = 2, a4 = 3, t_gen = 4;

inline const std::array<std::string, 5>& bundle_generator_names() {
  static const std::array<std::string, 5> names{"a1", "a2", "a3", "a4", "t"};
  return names;
}

inline std::string format_fiber_word(const GroupWord& w) {
  return format_word(w, bundle_generator_names());
}

/// [a1,a2][a3,a4]^-1 with [x,y] = x y x^-1 y^-1.
inline GroupWord surface_relator() {
  return GroupWord{{a1, 1}, {a2, 1}, {a1, -1}, {a2, -1}, {a4, 1}, {a3, 1}, {a4, -1}, {a3, -1}};
}

/// Image of fiber generator `g` under D_i^e.
inline GroupWord apply_twist(int i, int e, int g) {
  if (i < 1 || i > kTwistCount) throw InputError("twist index must be in 1..5");
  if (e != 1 && e != -1) throw InputError("twist exponent must be +1 or -1");
  if (g < 0 || g >= kFiberRank) throw InputError("fiber generator must be one of a1..a4");
  switch (i) {
    case 1:
      if (g == a2) return GroupWord{{a2, 1}, {a1, e}};
      break;
    case 2:
      if (g == a1) return GroupWord{{a1, 1}, {a2, -e}};
      break;
    case 3:
      if (g == a2 || g == a4) {
        if (e > 0) return GroupWord{{a3, -1}, {a1, 1}, {g, 1}};
        return GroupWord{{a1, -1}, {a3, 1}, {g, 1}};
      }
      break;
    case 4:
      if (g == a3) return GroupWord{{a3, 1}, {a4, e}};
      break;
    case 5:
      if (g == a4) return GroupWord{{a4, 1}, {a3, -e}};
      break;
  }
  return GroupWord{{g, 1}};
}

/// An endomorphism of the free group on a1..a4 (an automorphism of pi_1 of
/// the fiber when it comes from a twist word), stored as the images of the
/// four generators, each freely reduced and free of t.
struct SurfaceAutomorphism {
  std::array<GroupWord, kFiberRank> images;

  static SurfaceAutomorphism identity() {
    SurfaceAutomorphism phi;
    for (int g = 0; g < kFiberRank; ++g) phi.images[static_cast<std::size_t>(g)] = GroupWord{{g, 1}};
    return phi;
  }

  bool operator==(const SurfaceAutomorphism&) const = default;
};

inline GroupWord apply_automorphism(const SurfaceAutomorphism& phi, const GroupWord& w) {
  for (Letter l : w)
    if (l.generator() >= kFiberRank)
      throw InputError("automorphism applied to a word containing t");
  return substitute(w, std::span<const GroupWord>(phi.images));
}

/// (outer o inner): apply `inner` first.
inline SurfaceAutomorphism compose(const SurfaceAutomorphism& outer,
                                   const SurfaceAutomorphism& inner) {
  SurfaceAutomorphism out;
  for (std::size_t g = 0; g < kFiberRank; ++g)
    out.images[g] = apply_automorphism(outer, inner.images[g]);
  return out;
}

/// The automorphism D_i^e, e = +1 or -1.
inline SurfaceAutomorphism single_twist(int i, int e) {
  SurfaceAutomorphism phi;
  for (int g = 0; g < kFiberRank; ++g) phi.images[static_cast<std::size_t>(g)] = apply_twist(i, e, g);
  return phi;
}

/// The automorphism induced by a twist word; the rightmost syllable acts
/// first.
inline SurfaceAutomorphism automorphism_of(const TwistWord& w) {
  static const auto twists = [] {
    std::array<std::array<SurfaceAutomorphism, 2>, kTwistCount> t;
    for (int i = 1; i <= kTwistCount; ++i) {
      t[static_cast<std::size_t>(i - 1)][0] = single_twist(i, 1);
      t[static_cast<std::size_t>(i - 1)][1] = single_twist(i, -1);
    }
    return t;
  }();
  SurfaceAutomorphism phi = SurfaceAutomorphism::identity();
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    const auto& step = twists[static_cast<std::size_t>(it->generator - 1)][it->exponent > 0 ? 0 : 1];
    const long long reps = it->exponent > 0 ? it->exponent : -it->exponent;
    for (long long r = 0; r < reps; ++r) phi = compose(step, phi);
  }
  return phi;
}

/// D2^e2 D1^e1 D3^e3 D4^e4 D5^n, where eps = (e1, e2, e3, e4).
inline TwistWord family_word(const std::array<int, 4>& eps, long long n) {
  for (int e : eps)
    if (e != 1 && e != -1) throw InputError("family signs must be +1 or -1");
  return TwistWord({{2, eps[1]}, {1, eps[0]}, {3, eps[2]}, {4, eps[3]}, {5, n}});
}

/// phi(R) is conjugate to R in the free group (or to R^-1 when
/// `allow_inverse`).
inline bool preserves_surface_relator(const SurfaceAutomorphism& phi, bool allow_inverse = false) {
  const GroupWord r = surface_relator();
  const GroupWord image = apply_automorphism(phi, r);
  return are_conjugate(image, r) || (allow_inverse && are_conjugate(image, inverse(r)));
}

}  // namespace g2bundle
