#pragma once

// Non-Fitch certificates: small (not necessarily induced) submaps that no
// explaining tree can realize. All patterns share the base
// m ∈ ε(c,b), m ∉ ε(a,b).

#include <optional>
#include <string>
#include <vector>

#include "fitchkit/core.hpp"

namespace fitchkit {

enum class ForbiddenCondition {
  kC1,   // m ∉ ε(c,a)
  kC2a,  // m' ∉ ε(a,c), m' ∈ ε(b,c)
  kC2b,  // m' ∈ ε(a,c), m' ∉ ε(b,c)
  kC3,   // m != m', m' ∉ ε(c,b), m' ∈ ε(a,b)
  kC4,   // m != m', fourth leaf d: m' ∉ ε(b,d) ∪ ε(c,d), m' ∈ ε(a,d)
};

const char* to_string(ForbiddenCondition c);

struct ForbiddenWitness {
  ForbiddenCondition condition = ForbiddenCondition::kC1;
  std::vector<std::string> leaves;  // a, b, c (and d for C4)
  std::string m;
  std::string m_prime;  // equals m for C1

  bool operator==(const ForbiddenWitness&) const = default;
};

// "C1 a b c m m'" (C4 lists four leaves).
std::string to_string(const ForbiddenWitness& w);

// First witness in condition order, then by leaf and color indices.
std::optional<ForbiddenWitness> find_forbidden_witness(const FitchMap& map);

// Throws UnknownLeaf / UnknownColor.
bool verify_witness(const FitchMap& map, const ForbiddenWitness& w);

// ε'(x,y) = ε(x,y) ∩ colors on the given leaves. Names must exist in the map.
FitchMap restrict_map(const FitchMap& map, const std::vector<std::string>& leaves,
                      const std::vector<std::string>& colors);
// Induced submap: all colors kept.
FitchMap restrict_map(const FitchMap& map, const std::vector<std::string>& leaves);

}  // namespace fitchkit
