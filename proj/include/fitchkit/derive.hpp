#pragma once

#include <set>
#include <string>
#include <vector>

#include "fitchkit/core.hpp"

namespace fitchkit {

enum class DeriveMode {
  kFast,   // lowest m-edge above every leaf + subtree test, O(|X|^2 |M|)
  kNaive,  // union of labels along every lca(x,y) -> y path
};

// The map explained by `tree`: m in ε(x,y) iff an m-edge lies on the path
// from lca(x,y) to y.
FitchMap map_of_tree(const EdgeLabeledTree& tree, DeriveMode mode = DeriveMode::kFast);

// A collection of color subsets. Part i becomes output color output_colors[i].
struct RecoloringScheme {
  std::vector<std::vector<std::string>> parts;
  std::vector<std::string> output_colors;  // empty: "1".."k"
  bool partition = false;                  // require disjoint parts covering M

  static RecoloringScheme singletons(const Colors& colors);
};

// Color set of every part over `colors`, plus the output universe.
// Throws PartNotSubsetOfM, or InvalidArgument for malformed schemes.
struct ResolvedScheme {
  std::vector<ColorSet> parts;
  Colors output;
};
ResolvedScheme resolve(const RecoloringScheme& scheme, const Colors& colors);

FitchMap recolor_map(const FitchMap& map, const RecoloringScheme& scheme);
EdgeLabeledTree recolor_tree(const EdgeLabeledTree& tree, const RecoloringScheme& scheme);

// ab|c for a, b in some neighborhood N and c outside N. Throws TooFewLeaves.
std::set<RootedTriple> triples_of_map(const FitchMap& map);

}  // namespace fitchkit
