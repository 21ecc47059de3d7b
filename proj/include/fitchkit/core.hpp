#pragma once

// Shared vocabulary: leaf/color universes, maps on ordered leaf pairs,
// edge-labeled rooted trees, set families and rooted triples.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fitchkit/bitset.hpp"
#include "fitchkit/error.hpp"

namespace fitchkit {

using LeafIndex = std::uint32_t;
using ColorIndex = std::uint32_t;
using LeafSet = std::vector<LeafIndex>;  // sorted, duplicate-free

// A name token: nonempty, no whitespace, none of `( ) { } , : ;`.
bool is_valid_token(std::string_view name);

// Ordered set of names. The position of a name is its index everywhere in
// the library; only names are externally meaningful.
template <class Tag>
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::uint32_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::uint32_t> find(std::string_view name) const;
  std::uint32_t at(std::string_view name) const;  // throws Unknown{Leaf,Color}

  // Same names, possibly in a different order.
  bool same_elements(const Universe& other) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

struct LeafTag {};
struct ColorTag {};
using Leaves = Universe<LeafTag>;
using Colors = Universe<ColorTag>;

extern template class Universe<LeafTag>;
extern template class Universe<ColorTag>;

// The map ε: every ordered pair (x, y), x != y, gets a subset of the colors.
// Absent pairs are empty.
class FitchMap {
 public:
  FitchMap(Leaves leaves, Colors colors);
  FitchMap(std::vector<std::string> leaves, std::vector<std::string> colors)
      : FitchMap(Leaves(std::move(leaves)), Colors(std::move(colors))) {}

  const Leaves& leaves() const { return leaves_; }
  const Colors& colors() const { return colors_; }
  std::size_t num_leaves() const { return leaves_.size(); }
  std::size_t num_colors() const { return colors_.size(); }

  bool contains(LeafIndex x, LeafIndex y, ColorIndex m) const {
    return (bits_[word_index(x, y) + m / Bitset::kWordBits] >>
            (m % Bitset::kWordBits)) & 1U;
  }
  ColorSet entry(LeafIndex x, LeafIndex y) const;
  bool empty_entry(LeafIndex x, LeafIndex y) const;

  void add(LeafIndex x, LeafIndex y, ColorIndex m);
  void set_entry(LeafIndex x, LeafIndex y, const ColorSet& colors);

  // Name-based helpers; throw UnknownLeaf / UnknownColor / SelfPair.
  void add(std::string_view x, std::string_view y, std::string_view m);
  bool contains(std::string_view x, std::string_view y, std::string_view m) const;

  // Words of the entry toward y from x; width words_per_entry().
  std::span<const Bitset::Word> raw_entry(LeafIndex x, LeafIndex y) const {
    return {bits_.data() + word_index(x, y), words_per_entry_};
  }
  std::size_t words_per_entry() const { return words_per_entry_; }

  // Equality by names: same leaf and color sets (any order) and equal
  // entries for every named pair.
  friend bool operator==(const FitchMap& a, const FitchMap& b);

 private:
  std::size_t word_index(LeafIndex x, LeafIndex y) const {
    // Entries toward the same target y are contiguous.
    return (static_cast<std::size_t>(y) * leaves_.size() + x) * words_per_entry_;
  }
  void check_pair(LeafIndex x, LeafIndex y) const;

  Leaves leaves_;
  Colors colors_;
  std::size_t words_per_entry_ = 0;
  std::vector<Bitset::Word> bits_;
};

// Rooted phylogenetic tree with a color subset on every edge. The label of
// the edge (par(v), v) is stored at v; the root's slot is always empty.
// Vertices are renumbered into canonical preorder on construction: children
// are ordered by the smallest leaf name in their cluster.
class EdgeLabeledTree {
 public:
  using Vertex = std::uint32_t;
  static constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

  // `parent[v] == kNoVertex` marks the root; `leaf_at[v]` names the leaf
  // carried by v (inner vertices must carry none). Throws InvalidTree or
  // DegreeViolation.
  static EdgeLabeledTree build(Leaves leaves, Colors colors,
                               std::span<const Vertex> parent,
                               std::span<const std::optional<LeafIndex>> leaf_at,
                               std::vector<ColorSet> labels,
                               std::vector<Vertex>* renumbering = nullptr);

  // Same topology, new labels indexed by this tree's vertices.
  EdgeLabeledTree with_labels(Colors colors, std::vector<ColorSet> labels) const;

  const Leaves& leaves() const { return leaves_; }
  const Colors& colors() const { return colors_; }
  std::size_t num_vertices() const { return parent_.size(); }
  std::size_t num_edges() const { return parent_.size() - 1; }
  Vertex root() const { return 0; }

  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_begin_[v],
            child_begin_[v + 1] - child_begin_[v]};
  }
  bool is_leaf(Vertex v) const { return children(v).empty(); }
  LeafIndex leaf_of(Vertex v) const { return leaf_of_[v]; }
  Vertex vertex_of(LeafIndex x) const { return vertex_of_[x]; }
  const ColorSet& label(Vertex v) const { return labels_[v]; }
  const std::vector<ColorSet>& labels() const { return labels_; }
  std::size_t depth(Vertex v) const { return depth_[v]; }

  // u is an ancestor of v or u == v.
  bool is_ancestor_or_self(Vertex u, Vertex v) const {
    return u <= v && v < u + subtree_size_[u];
  }
  // Descendant leaves of v, sorted by leaf index.
  LeafSet cluster(Vertex v) const;

 private:
  EdgeLabeledTree() = default;

  Leaves leaves_;
  Colors colors_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> child_begin_;
  std::vector<Vertex> child_list_;
  std::vector<LeafIndex> leaf_of_;
  std::vector<Vertex> vertex_of_;
  std::vector<ColorSet> labels_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> subtree_size_;
};

// Set system on a leaf universe. Members are distinct sorted index lists.
class SetFamily {
 public:
  SetFamily(Leaves universe, std::vector<LeafSet> members);
  static SetFamily from_names(std::vector<std::string> universe,
                              const std::vector<std::vector<std::string>>& members);

  const Leaves& universe() const { return universe_; }
  const std::vector<LeafSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const LeafSet& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const LeafSet& s) const;
  std::vector<std::string> names_of(std::size_t i) const;

  // Equality as sets of name-sets.
  friend bool operator==(const SetFamily& a, const SetFamily& b);

 private:
  Leaves universe_;
  std::vector<LeafSet> members_;
};

// ab|c with a < b by name.
struct RootedTriple {
  std::string a;
  std::string b;
  std::string c;

  static RootedTriple make(std::string x, std::string y, std::string outgroup);
  auto operator<=>(const RootedTriple&) const = default;
};

std::string to_string(const RootedTriple& t);

SetFamily tree_clusters(const EdgeLabeledTree& tree);
std::set<RootedTriple> displayed_triples(const EdgeLabeledTree& tree);

EdgeLabeledTree::Vertex lca(const EdgeLabeledTree& tree,
                            EdgeLabeledTree::Vertex u, EdgeLabeledTree::Vertex v);
EdgeLabeledTree::Vertex lca(const EdgeLabeledTree& tree, std::span<const LeafIndex> leaves);
EdgeLabeledTree::Vertex lca(const EdgeLabeledTree& tree,
                            const std::vector<std::string>& leaves);

// "{a,b,c}" with names in the given order.
std::string format_set(const Leaves& universe, const LeafSet& s);

}  // namespace fitchkit
