#include "fitchkit/forbidden.hpp"

namespace fitchkit {

namespace {

struct Pattern {
  ForbiddenCondition condition;
  LeafIndex a, b, c, d;
  ColorIndex m, m2;
};

bool holds(const FitchMap& e, const Pattern& p) {
  const auto [cond, a, b, c, d, m, m2] = p;
  if (!e.contains(c, b, m) || e.contains(a, b, m)) return false;
  switch (cond) {
    case ForbiddenCondition::kC1:
      return !e.contains(c, a, m);
    case ForbiddenCondition::kC2a:
      return !e.contains(a, c, m2) && e.contains(b, c, m2);
    case ForbiddenCondition::kC2b:
      return e.contains(a, c, m2) && !e.contains(b, c, m2);
    case ForbiddenCondition::kC3:
      return m != m2 && !e.contains(c, b, m2) && e.contains(a, b, m2);
    case ForbiddenCondition::kC4:
      return m != m2 && !e.contains(b, d, m2) && !e.contains(c, d, m2) && e.contains(a, d, m2);
  }
  return false;
}

ForbiddenWitness named(const FitchMap& e, const Pattern& p) {
  ForbiddenWitness w;
  w.condition = p.condition;
  const auto& L = e.leaves();
  w.leaves = {L.name(p.a), L.name(p.b), L.name(p.c)};
  if (p.condition == ForbiddenCondition::kC4) w.leaves.push_back(L.name(p.d));
  w.m = e.colors().name(p.m);
  w.m_prime = e.colors().name(p.m2);
  return w;
}

}  // namespace

const char* to_string(ForbiddenCondition c) {
  switch (c) {
    case ForbiddenCondition::kC1: return "C1";
    case ForbiddenCondition::kC2a: return "C2a";
    case ForbiddenCondition::kC2b: return "C2b";
    case ForbiddenCondition::kC3: return "C3";
    case ForbiddenCondition::kC4: return "C4";
  }
  return "?";
}

std::string to_string(const ForbiddenWitness& w) {
  std::string out = to_string(w.condition);
  for (const auto& x : w.leaves) out += " " + x;
  return out + " " + w.m + " " + w.m_prime;
}

std::optional<ForbiddenWitness> find_forbidden_witness(const FitchMap& map) {
  const auto n = static_cast<LeafIndex>(map.num_leaves());
  const auto k = static_cast<ColorIndex>(map.num_colors());
  using C = ForbiddenCondition;

  for (C cond : {C::kC1, C::kC2a, C::kC2b, C::kC3, C::kC4}) {
    const bool four = cond == C::kC4;
    const bool two_colors = cond != C::kC1;
    for (LeafIndex a = 0; a < n; ++a)
      for (LeafIndex b = 0; b < n; ++b) {
        if (b == a) continue;
        for (LeafIndex c = 0; c < n; ++c) {
          if (c == a || c == b) continue;
          for (LeafIndex d = 0; d < (four ? n : 1); ++d) {
            if (four && (d == a || d == b || d == c)) continue;
            for (ColorIndex m = 0; m < k; ++m) {
              if (!map.contains(c, b, m) || map.contains(a, b, m)) continue;
              for (ColorIndex m2 = two_colors ? 0 : m; m2 < (two_colors ? k : m + 1); ++m2) {
                const Pattern p{cond, a, b, c, d, m, m2};
                if (holds(map, p)) return named(map, p);
              }
            }
          }
        }
      }
  }
  return std::nullopt;
}

bool verify_witness(const FitchMap& map, const ForbiddenWitness& w) {
  const bool four = w.condition == ForbiddenCondition::kC4;
  if (w.leaves.size() != (four ? 4U : 3U))
    throw Error(ErrorKind::kInvalidArgument, "witness has the wrong number of leaves");
  Pattern p{w.condition, map.leaves().at(w.leaves[0]), map.leaves().at(w.leaves[1]),
            map.leaves().at(w.leaves[2]), four ? map.leaves().at(w.leaves[3]) : 0,
            map.colors().at(w.m), map.colors().at(w.m_prime)};
  if (p.a == p.b || p.a == p.c || p.b == p.c) return false;
  if (four && (p.d == p.a || p.d == p.b || p.d == p.c)) return false;
  if (w.condition == ForbiddenCondition::kC1 && p.m != p.m2) return false;
  return holds(map, p);
}

FitchMap restrict_map(const FitchMap& map, const std::vector<std::string>& leaves,
                      const std::vector<std::string>& colors) {
  FitchMap out(leaves, colors);
  std::vector<LeafIndex> li;
  for (const auto& x : leaves) li.push_back(map.leaves().at(x));
  std::vector<ColorIndex> ci;
  for (const auto& m : colors) ci.push_back(map.colors().at(m));
  for (LeafIndex x = 0; x < li.size(); ++x)
    for (LeafIndex y = 0; y < li.size(); ++y) {
      if (x == y) continue;
      for (ColorIndex m = 0; m < ci.size(); ++m)
        if (map.contains(li[x], li[y], ci[m])) out.add(x, y, m);
    }
  return out;
}

FitchMap restrict_map(const FitchMap& map, const std::vector<std::string>& leaves) {
  return restrict_map(map, leaves, map.colors().names());
}

}  // namespace fitchkit
