#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fitchkit/core.hpp"

namespace fitchkit {

// mt19937_64 with distribution code of our own, so a seed gives the same
// stream with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Leaves "x1".."xn" when names are not given.
std::vector<std::string> default_leaf_names(std::size_t n);
std::vector<std::string> default_color_names(std::size_t k);

// Random phylogenetic tree: repeatedly merges 2 or more random forest roots
// under a new vertex. Every (edge, color) is labeled with probability p.
EdgeLabeledTree random_tree(std::size_t n_leaves, const Colors& colors, double p,
                            std::uint64_t seed);
EdgeLabeledTree random_tree(std::size_t n_leaves, std::size_t n_colors, double p,
                            std::uint64_t seed);

// Every map on leaves a,b,c (first n) and colors 1,2 (first k), n <= 3 and
// k <= 2, in lexicographic order of entry codes over pairs (x,y) in index
// order. Throws InstanceTooLarge.
std::vector<FitchMap> enumerate_maps(std::size_t n_leaves, std::size_t n_colors);

// Arbitrary (usually non-Fitch) map: each (pair, color) with probability p.
FitchMap random_map(std::size_t n_leaves, std::size_t n_colors, double p, std::uint64_t seed);

// Distinct nonempty subsets of a universe "u0".."u{n-1}"; about half of the
// members are drawn inside an earlier member so laminar families are common.
// May return fewer members when the universe is too small.
SetFamily random_set_family(std::size_t universe, std::size_t members, std::uint64_t seed);

}  // namespace fitchkit
