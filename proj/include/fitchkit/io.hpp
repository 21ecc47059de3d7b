#pragma once

// Text formats: labeled-Newick trees and JSON map / set-family / scheme
// documents. See README for the grammars.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fitchkit/core.hpp"
#include "fitchkit/derive.hpp"

namespace fitchkit {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Leaves are ordered by name. Without `colors`, the color universe is the
// set of names occurring in labels, ordered by name; with it, labels must
// use those names (UnknownColor otherwise).
EdgeLabeledTree parse_tree(std::string_view text,
                           const std::optional<Colors>& colors = std::nullopt);
// Canonical single line ending in ';' (no newline).
std::string print_tree(const EdgeLabeledTree& tree);

// Leaves and colors are ordered by name.
FitchMap parse_map(std::string_view doc);
// Canonical document: names sorted, empty entries omitted, trailing newline.
std::string print_map(const FitchMap& map);

// {"universe": [...], "sets": [[...], ...]}; member order is kept.
SetFamily parse_sets(std::string_view doc);
// {"parts": [[...], ...], "output_colors": [...]?, "partition": bool?}
RecoloringScheme parse_scheme(std::string_view doc);

}  // namespace fitchkit
