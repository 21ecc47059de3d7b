#pragma once

// Hand-built fixtures shared by the unit tests and the acceptance runner.

#include <string>
#include <vector>

#include "fitchkit/core.hpp"
#include "fitchkit/io.hpp"

namespace fixtures {

using fitchkit::Colors;
using fitchkit::EdgeLabeledTree;
using fitchkit::FitchMap;

inline EdgeLabeledTree tree(const std::string& text, std::vector<std::string> colors) {
  return fitchkit::parse_tree(text, Colors(std::move(colors)));
}

// rho -> v {1}, v -> a {2}, v -> b {}, rho -> c {1,3}; M = {1,2,3,4}.
inline EdgeLabeledTree four_color_tree() {
  return tree("((a:{2},b:{}):{1},c:{1,3});", {"1", "2", "3", "4"});
}

// T: inner edge to {a,b} carries {1,2}, extra cluster {c,d} with empty edge.
inline EdgeLabeledTree redundant_tree() {
  return tree("((a:{1},b:{1}):{1,2},(c:{2},d:{}):{});", {"1", "2"});
}
// T': the {c,d} cluster contracted and color 1 removed from the {a,b} edge.
inline EdgeLabeledTree contracted_tree() {
  return tree("((a:{1},b:{1}):{2},c:{2},d:{});", {"1", "2"});
}

// Inner clusters {a,b,c} and {a,b}.
inline EdgeLabeledTree nested_tree() { return tree("(((a:{},b:{}):{},c:{}):{},d:{});", {}); }

// Map on {a,b,d}, M = {1,2}, with ε(d,a) = ε(d,b) = {1,2}.
inline FitchMap two_color_cherry_map() {
  FitchMap map(std::vector<std::string>{"a", "b", "d"}, std::vector<std::string>{"1", "2"});
  for (const char* y : {"a", "b"})
    for (const char* m : {"1", "2"}) map.add("d", y, m);
  return map;
}
// Four-leaf tree with singleton labels whose induced submap on {a,b,d} is
// two_color_cherry_map().
inline EdgeLabeledTree two_color_parent_tree() {
  return tree("(((a:{},b:{}):{2},c:{}):{1},d:{});", {"1", "2"});
}

// X = {a,b,c}, M = {m}, only ε(c,b) = {m}.
inline FitchMap lone_entry_map() {
  FitchMap map(std::vector<std::string>{"a", "b", "c"}, std::vector<std::string>{"m"});
  map.add("c", "b", "m");
  return map;
}

inline FitchMap empty_map(std::vector<std::string> leaves, std::vector<std::string> colors) {
  return FitchMap(std::move(leaves), std::move(colors));
}

}  // namespace fixtures
