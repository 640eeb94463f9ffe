#pragma once

// Finite group presentations and the mapping-torus presentation of a
// genus-two surface bundle:
//
//   < a1..a4, t | t^-1 a_i t = phi(a_i) (i = 1..4), [a1,a2] = [a3,a4] >
//
// The closed fiber keeps the surface relation; the once-punctured fiber has
// a free fundamental group of rank four and drops it.

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "g2bundle/errors.hpp"
#include "g2bundle/group_word.hpp"
#include "g2bundle/mcg_action.hpp"
#include "g2bundle/twist_word.hpp"

namespace g2bundle {

enum class FiberType { closed, once_punctured };

inline std::string_view to_string(FiberType f) {
  return f == FiberType::closed ? "closed" : "punctured";
}

inline FiberType parse_fiber(std::string_view s) {
  if (s == "closed") return FiberType::closed;
  if (s == "punctured" || s == "once_punctured" || s == "once-punctured")
    return FiberType::once_punctured;
  throw InputError("unknown fiber type '" + std::string(s) + "' (expected closed or punctured)");
}

class Presentation {
public:
  Presentation() = default;

  /// Freely reduces every relator and drops empty ones. Throws if a relator
  /// mentions a generator index outside the generator list.
  Presentation(std::vector<std::string> generators, std::vector<GroupWord> relators)
      : generators_(std::move(generators)) {
    for (auto& r : relators) add_relator(std::move(r));
  }

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<GroupWord>& relators() const { return relators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }

  void add_relator(GroupWord r) {
    for (Letter l : r)
      if (l.generator() < 0 || l.generator() >= generator_count())
        throw InputError("relator letter names an unknown generator");
    r = free_reduce(r);
    if (!r.empty()) relators_.push_back(std::move(r));
  }

  std::string format_relator(std::size_t i) const { return format_word(relators_[i], generators_); }

  bool operator==(const Presentation&) const = default;

private:
  std::vector<std::string> generators_;
  std::vector<GroupWord> relators_;
};

/// Relators t^-1 a_i t phi(a_i)^-1 for i = 1..4, then the surface relator for
/// a closed fiber. The once-punctured fiber uses the same twist action.
inline Presentation bundle_presentation(const TwistWord& w, FiberType fiber) {
  const SurfaceAutomorphism phi = automorphism_of(w);
  const auto& names = bundle_generator_names();
  std::vector<GroupWord> relators;
  for (int g = 0; g < kFiberRank; ++g) {
    GroupWord r{{t_gen, -1}, {g, 1}, {t_gen, 1}};
    r.append(inverse(phi.images[static_cast<std::size_t>(g)]));
    relators.push_back(std::move(r));
  }
  if (fiber == FiberType::closed) relators.push_back(surface_relator());
  return Presentation({names.begin(), names.end()}, std::move(relators));
}

// JSON: {"generators": ["a1", ..., "t"], "relators": [["t^-1", "a1", ...], ...]}

inline nlohmann::json word_to_json(const GroupWord& w, const std::vector<std::string>& names) {
  nlohmann::json out = nlohmann::json::array();
  for (Letter l : w) {
    std::string tok = names[static_cast<std::size_t>(l.generator())];
    if (l.exponent() < 0) tok += "^-1";
    out.push_back(std::move(tok));
  }
  return out;
}

inline nlohmann::json to_json(const Presentation& p) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : p.relators()) rel.push_back(word_to_json(r, p.generators()));
  return {{"generators", p.generators()}, {"relators", std::move(rel)}};
}

inline GroupWord word_from_json(const nlohmann::json& j, const std::vector<std::string>& names) {
  GroupWord w;
  for (const auto& tok_json : j) {
    std::string tok = tok_json.get<std::string>();
    int exponent = 1;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      tok.resize(tok.size() - 3);
      exponent = -1;
    }
    int index = -1;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == tok) index = static_cast<int>(i);
    if (index < 0) throw InputError("unknown generator token '" + tok + "'");
    w.push_back(Letter(index, exponent));
  }
  return w;
}

inline Presentation presentation_from_json(const nlohmann::json& j) {
  auto names = j.at("generators").get<std::vector<std::string>>();
  std::vector<GroupWord> relators;
  for (const auto& r : j.at("relators")) relators.push_back(word_from_json(r, names));
  return Presentation(std::move(names), std::move(relators));
}

}  // namespace g2bundle
