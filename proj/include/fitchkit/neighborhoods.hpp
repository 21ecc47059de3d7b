#pragma once

// Complementary neighborhoods N[m,y] = {y} ∪ {x : m not in ε(x,y)} and the
// map-level conditions built on them.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fitchkit/core.hpp"
#include "fitchkit/hierarchy.hpp"

namespace fitchkit {

LeafSet neighborhood(const FitchMap& map, ColorIndex m, LeafIndex y);
// Names of the neighborhood, in leaf-index order.
std::vector<std::string> neighborhood(const FitchMap& map, std::string_view m,
                                      std::string_view y);

struct NeighborhoodIndex {
  SetFamily system;                                     // distinct neighborhoods
  std::vector<std::pair<ColorIndex, LeafIndex>> witness;  // first (m, y) realizing each member
  std::vector<ColorSet> label_sets;                     // all m realizing each member
  std::vector<std::size_t> count_by_size;               // indexed by cardinality, 0..|X|
  std::vector<std::uint32_t> member_of;                 // [m * |X| + y] -> member

  std::size_t num_leaves() const { return system.universe().size(); }
  std::uint32_t member(ColorIndex m, LeafIndex y) const {
    return member_of[static_cast<std::size_t>(m) * num_leaves() + y];
  }
};

// Returned instead of an index when the system is provably not hierarchy-like:
// too many members overall, or `count` members of size `cardinality` whose
// total size exceeds |X|.
struct FailFast {
  std::size_t system_size = 0;
  std::size_t cardinality = 0;
  std::size_t count = 0;
};

std::variant<NeighborhoodIndex, FailFast> build_index(const FitchMap& map);

// Same system without the early-exit guards (always succeeds).
NeighborhoodIndex neighborhood_system(const FitchMap& map);

HierarchyVerdict check_hlc(const NeighborhoodIndex& index);

struct IcViolation {
  ColorIndex color = 0;
  LeafIndex y = 0;
  LeafIndex y_prime = 0;  // in N[color,y] but with a larger neighborhood
};

struct IcVerdict {
  bool ok = true;
  std::optional<IcViolation> violation;
};

// First violation in (color, y, y') index order.
IcVerdict check_ic(const FitchMap& map, const NeighborhoodIndex& index);

struct KElcVerdict {
  bool ok = true;
  std::optional<std::size_t> member;  // index into index.system
  std::size_t colors = 0;             // |label_sets[member]|
};

KElcVerdict check_k_elc(const NeighborhoodIndex& index, std::size_t k);

}  // namespace fitchkit
