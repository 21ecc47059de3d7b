#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fitchkit/core.hpp"

namespace fitchkit {

enum class HierarchyMode {
  kSinglePass,  // cardinality sort + last-seen index per element, O(|C||X|)
  kAllPairs,    // every pair intersected; reference oracle
};

struct HierarchyVerdict {
  bool is_hierarchy_like = true;
  // Member indices (i < j) whose intersection is neither empty nor one of them.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

// Throws EmptyMember if a member is empty.
HierarchyVerdict is_hierarchy_like(const SetFamily& family,
                                   HierarchyMode mode = HierarchyMode::kSinglePass);

// Hierarchy-like, contains the universe and every singleton.
bool is_hierarchy(const SetFamily& family);

// The unique phylogenetic tree whose cluster set is `family`; all labels
// empty over `colors`. Throws NotAHierarchy.
EdgeLabeledTree tree_from_hierarchy(const SetFamily& family, const Colors& colors = Colors{});

// As above, but also returns, for every tree vertex, the index of the
// family member it was built from.
std::pair<EdgeLabeledTree, std::vector<std::size_t>> tree_from_hierarchy_indexed(
    const SetFamily& family, const Colors& colors = Colors{});

// Every hierarchy on `leaves` (equivalently every phylogenetic tree shape).
// Intended for small universes; throws InstanceTooLarge above 7 leaves.
std::vector<SetFamily> all_hierarchies(const Leaves& leaves);

}  // namespace fitchkit
