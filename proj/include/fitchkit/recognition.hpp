#pragma once

// Fitch map recognition and construction of the least-resolved explaining
// tree, plus the coarse-graining order on edge-labeled trees.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fitchkit/core.hpp"
#include "fitchkit/neighborhoods.hpp"

namespace fitchkit {

enum class Verdict { kFitch, kNotFitch };

struct GuardExceeded {
  FailFast guard;
};
struct HlcViolation {
  LeafSet first;
  LeafSet second;
};

using NotFitchReason = std::variant<GuardExceeded, HlcViolation, IcViolation>;

struct RecognitionResult {
  Verdict verdict = Verdict::kNotFitch;
  std::optional<EdgeLabeledTree> tree;  // present iff Fitch
  std::optional<NotFitchReason> reason;  // present iff NotFitch

  bool is_fitch() const { return verdict == Verdict::kFitch; }
};

// Checks the size guards, then hierarchy-likeness, then the inequality
// condition, and builds the tree on N ∪ {X} ∪ singletons.
RecognitionResult recognize(const FitchMap& map);

// One line: "GUARD size=<n> cardinality=<s> count=<c>", "HLC {..} {..}" or
// "IC <m> <y> <y'>".
std::string describe(const NotFitchReason& reason, const FitchMap& map);

// clusters(coarse) ⊆ clusters(fine) and, on shared clusters, coarse labels
// are subsets of fine labels. Compared by names. Throws UniverseMismatch.
bool is_coarse_graining(const EdgeLabeledTree& fine, const EdgeLabeledTree& coarse);
bool is_isomorphic(const EdgeLabeledTree& a, const EdgeLabeledTree& b);

// Every inner edge (u,v) has a nonempty label and each of its colors m
// reaches some leaf below v without another m-edge. Throws
// TreeDoesNotExplainMap if the tree does not explain the map.
bool is_least_resolved(const EdgeLabeledTree& tree, const FitchMap& map);

// Fitch and at most k colors realize every neighborhood other than X.
bool is_k_restricted(const FitchMap& map, std::size_t k);

// Every (topology, labeling) explaining the map, by exhaustive search.
// Requires |X| <= min(max_leaves, 6) and |M| <= 3, else InstanceTooLarge.
std::vector<EdgeLabeledTree> enumerate_explaining_trees(const FitchMap& map,
                                                        std::size_t max_leaves = 6);

}  // namespace fitchkit
