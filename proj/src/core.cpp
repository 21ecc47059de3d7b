#include "fitchkit/core.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

namespace fitchkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidName: return "InvalidName";
    case ErrorKind::kDuplicateName: return "DuplicateName";
    case ErrorKind::kUnknownLeaf: return "UnknownLeaf";
    case ErrorKind::kUnknownColor: return "UnknownColor";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kSelfPair: return "SelfPair";
    case ErrorKind::kDuplicateEntry: return "DuplicateEntry";
    case ErrorKind::kInvalidTree: return "InvalidTree";
    case ErrorKind::kDegreeViolation: return "DegreeViolation";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kEmptyMember: return "EmptyMember";
    case ErrorKind::kDuplicateMember: return "DuplicateMember";
    case ErrorKind::kNotSubsetOfUniverse: return "NotSubsetOfUniverse";
    case ErrorKind::kNotAHierarchy: return "NotAHierarchy";
    case ErrorKind::kTooFewLeaves: return "TooFewLeaves";
    case ErrorKind::kUniverseMismatch: return "UniverseMismatch";
    case ErrorKind::kTreeDoesNotExplainMap: return "TreeDoesNotExplainMap";
    case ErrorKind::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::kPartNotSubsetOfM: return "PartNotSubsetOfM";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_valid_token(std::string_view name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (c <= 0x20 || c == 0x7f) return false;
    switch (c) {
      case '(': case ')': case '{': case '}': case ',': case ':': case ';':
        return false;
      default:
        break;
    }
  }
  return true;
}

// ---------------------------------------------------------------- Universe

template <class Tag>
Universe<Tag>::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_token(names_[i]))
      throw Error(ErrorKind::kInvalidName, "invalid name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw Error(ErrorKind::kDuplicateName, "duplicate name '" + names_[i] + "'");
  }
}

template <class Tag>
std::optional<std::uint32_t> Universe<Tag>::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class Tag>
std::uint32_t Universe<Tag>::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  if constexpr (std::is_same_v<Tag, LeafTag>)
    throw Error(ErrorKind::kUnknownLeaf, "unknown leaf '" + std::string(name) + "'");
  else
    throw Error(ErrorKind::kUnknownColor, "unknown color '" + std::string(name) + "'");
}

template <class Tag>
bool Universe<Tag>::same_elements(const Universe& other) const {
  if (size() != other.size()) return false;
  for (const auto& n : names_)
    if (!other.find(n)) return false;
  return true;
}

template class Universe<LeafTag>;
template class Universe<ColorTag>;

// ---------------------------------------------------------------- FitchMap

FitchMap::FitchMap(Leaves leaves, Colors colors)
    : leaves_(std::move(leaves)),
      colors_(std::move(colors)),
      words_per_entry_(Bitset::words_for(colors_.size())),
      bits_(leaves_.size() * leaves_.size() * words_per_entry_, 0) {
  if (leaves_.empty())
    throw Error(ErrorKind::kInvalidArgument, "a map needs at least one leaf");
}

void FitchMap::check_pair(LeafIndex x, LeafIndex y) const {
  if (x >= num_leaves() || y >= num_leaves())
    throw Error(ErrorKind::kUnknownLeaf, "leaf index out of range");
  if (x == y)
    throw Error(ErrorKind::kSelfPair, "pair (" + leaves_.name(x) + "," +
                                          leaves_.name(x) + ") is not in the domain");
}

ColorSet FitchMap::entry(LeafIndex x, LeafIndex y) const {
  ColorSet out(num_colors());
  auto src = raw_entry(x, y);
  std::copy(src.begin(), src.end(), out.words().begin());
  return out;
}

bool FitchMap::empty_entry(LeafIndex x, LeafIndex y) const {
  for (auto w : raw_entry(x, y))
    if (w != 0) return false;
  return true;
}

void FitchMap::add(LeafIndex x, LeafIndex y, ColorIndex m) {
  check_pair(x, y);
  if (m >= num_colors()) throw Error(ErrorKind::kUnknownColor, "color index out of range");
  bits_[word_index(x, y) + m / Bitset::kWordBits] |= Bitset::Word{1} << (m % Bitset::kWordBits);
}

void FitchMap::set_entry(LeafIndex x, LeafIndex y, const ColorSet& colors) {
  check_pair(x, y);
  if (colors.size() != num_colors())
    throw Error(ErrorKind::kInvalidArgument, "color set width does not match the map");
  std::copy(colors.words().begin(), colors.words().end(), bits_.begin() + word_index(x, y));
}

void FitchMap::add(std::string_view x, std::string_view y, std::string_view m) {
  add(leaves_.at(x), leaves_.at(y), colors_.at(m));
}

bool FitchMap::contains(std::string_view x, std::string_view y, std::string_view m) const {
  const LeafIndex xi = leaves_.at(x);
  const LeafIndex yi = leaves_.at(y);
  check_pair(xi, yi);
  return contains(xi, yi, colors_.at(m));
}

bool operator==(const FitchMap& a, const FitchMap& b) {
  if (a.leaves_ == b.leaves_ && a.colors_ == b.colors_) return a.bits_ == b.bits_;
  if (!a.leaves_.same_elements(b.leaves_) || !a.colors_.same_elements(b.colors_))
    return false;
  const std::size_t n = a.num_leaves();
  std::vector<LeafIndex> leaf_map(n);
  for (LeafIndex i = 0; i < n; ++i) leaf_map[i] = b.leaves_.at(a.leaves_.name(i));
  std::vector<ColorIndex> color_map(a.num_colors());
  for (ColorIndex i = 0; i < a.num_colors(); ++i) color_map[i] = b.colors_.at(a.colors_.name(i));
  for (LeafIndex x = 0; x < n; ++x)
    for (LeafIndex y = 0; y < n; ++y) {
      if (x == y) continue;
      for (ColorIndex m = 0; m < a.num_colors(); ++m)
        if (a.contains(x, y, m) != b.contains(leaf_map[x], leaf_map[y], color_map[m]))
          return false;
    }
  return true;
}

// --------------------------------------------------------- EdgeLabeledTree

EdgeLabeledTree EdgeLabeledTree::build(Leaves leaves, Colors colors,
                                       std::span<const Vertex> parent,
                                       std::span<const std::optional<LeafIndex>> leaf_at,
                                       std::vector<ColorSet> labels,
                                       std::vector<Vertex>* renumbering) {
  const std::size_t n = parent.size();
  if (n == 0) throw Error(ErrorKind::kInvalidTree, "tree has no vertices");
  if (leaf_at.size() != n || labels.size() != n)
    throw Error(ErrorKind::kInvalidTree, "vertex arrays have inconsistent lengths");

  Vertex root = kNoVertex;
  std::vector<std::vector<Vertex>> kids(n);
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] == kNoVertex) {
      if (root != kNoVertex) throw Error(ErrorKind::kInvalidTree, "tree has more than one root");
      root = v;
    } else {
      if (parent[v] >= n || parent[v] == v)
        throw Error(ErrorKind::kInvalidTree, "invalid parent reference");
      kids[parent[v]].push_back(v);
    }
  }
  if (root == kNoVertex) throw Error(ErrorKind::kInvalidTree, "tree has no root");

  // Reachability from the root (rules out cycles among non-root vertices).
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex c : kids[order[i]]) order.push_back(c);
  if (order.size() != n) throw Error(ErrorKind::kInvalidTree, "tree is not connected");

  std::vector<Vertex> vertex_of(leaves.size(), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    const bool leaf = kids[v].empty();
    if (leaf != leaf_at[v].has_value())
      throw Error(ErrorKind::kInvalidTree,
                  leaf ? "leaf vertex without a leaf name" : "inner vertex carries a leaf name");
    if (leaf) {
      const LeafIndex x = *leaf_at[v];
      if (x >= leaves.size()) throw Error(ErrorKind::kUnknownLeaf, "leaf index out of range");
      if (vertex_of[x] != kNoVertex)
        throw Error(ErrorKind::kDuplicateName, "leaf '" + leaves.name(x) + "' occurs twice");
      vertex_of[x] = v;
    }
  }
  for (LeafIndex x = 0; x < leaves.size(); ++x)
    if (vertex_of[x] == kNoVertex)
      throw Error(ErrorKind::kInvalidTree, "leaf '" + leaves.name(x) + "' is missing from the tree");

  for (Vertex v = 0; v < n; ++v) {
    if (labels[v].size() != colors.size())
      throw Error(ErrorKind::kInvalidTree, "edge label width does not match the colors");
  }
  if (labels[root].any()) throw Error(ErrorKind::kInvalidTree, "the root carries no edge label");

  // Smallest leaf name below each vertex, as a rank in name order.
  std::vector<LeafIndex> by_name(leaves.size());
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(),
            [&](LeafIndex a, LeafIndex b) { return leaves.name(a) < leaves.name(b); });
  std::vector<std::size_t> name_rank(leaves.size());
  for (std::size_t r = 0; r < by_name.size(); ++r) name_rank[by_name[r]] = r;

  std::vector<std::size_t> min_rank(n, static_cast<std::size_t>(-1));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (kids[v].empty()) min_rank[v] = name_rank[*leaf_at[v]];
    if (parent[v] != kNoVertex) min_rank[parent[v]] = std::min(min_rank[parent[v]], min_rank[v]);
  }

  if (n > 1) {
    for (Vertex v = 0; v < n; ++v) {
      if (kids[v].empty()) continue;
      if (kids[v].size() >= 2) continue;
      LeafSet below;
      std::vector<Vertex> todo{v};
      while (!todo.empty()) {
        const Vertex u = todo.back();
        todo.pop_back();
        if (kids[u].empty()) below.push_back(*leaf_at[u]);
        todo.insert(todo.end(), kids[u].begin(), kids[u].end());
      }
      std::sort(below.begin(), below.end());
      throw Error(ErrorKind::kDegreeViolation,
                  std::string(v == root ? "root" : "inner vertex") + " with cluster " +
                      format_set(leaves, below) + " has a single child");
    }
  } else if (leaves.size() != 1) {
    throw Error(ErrorKind::kInvalidTree, "single-vertex tree must have exactly one leaf");
  }

  for (auto& k : kids)
    std::sort(k.begin(), k.end(), [&](Vertex a, Vertex b) { return min_rank[a] < min_rank[b]; });

  // Canonical preorder renumbering.
  std::vector<Vertex> new_id(n);
  std::vector<Vertex> pre;
  pre.reserve(n);
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    new_id[v] = static_cast<Vertex>(pre.size());
    pre.push_back(v);
    for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
  }

  EdgeLabeledTree t;
  t.leaves_ = std::move(leaves);
  t.colors_ = std::move(colors);
  t.parent_.resize(n);
  t.leaf_of_.assign(n, static_cast<LeafIndex>(-1));
  t.vertex_of_.assign(t.leaves_.size(), kNoVertex);
  t.labels_.resize(n);
  t.depth_.assign(n, 0);
  t.subtree_size_.assign(n, 1);
  t.child_begin_.assign(n + 1, 0);
  t.child_list_.reserve(n);
  for (Vertex nv = 0; nv < n; ++nv) {
    const Vertex old = pre[nv];
    t.parent_[nv] = parent[old] == kNoVertex ? kNoVertex : new_id[parent[old]];
    t.labels_[nv] = std::move(labels[old]);
    if (leaf_at[old]) {
      t.leaf_of_[nv] = *leaf_at[old];
      t.vertex_of_[*leaf_at[old]] = nv;
    }
    t.child_begin_[nv] = t.child_list_.size();
    for (Vertex c : kids[old]) t.child_list_.push_back(new_id[c]);
    if (nv > 0) t.depth_[nv] = t.depth_[t.parent_[nv]] + 1;
  }
  t.child_begin_[n] = t.child_list_.size();
  if (renumbering) *renumbering = new_id;
  for (Vertex nv = static_cast<Vertex>(n); nv-- > 1;) t.subtree_size_[t.parent_[nv]] += t.subtree_size_[nv];
  return t;
}

EdgeLabeledTree EdgeLabeledTree::with_labels(Colors colors, std::vector<ColorSet> labels) const {
  if (labels.size() != num_vertices())
    throw Error(ErrorKind::kInvalidTree, "one label per vertex required");
  for (const auto& l : labels)
    if (l.size() != colors.size())
      throw Error(ErrorKind::kInvalidTree, "edge label width does not match the colors");
  if (labels[root()].any()) throw Error(ErrorKind::kInvalidTree, "the root carries no edge label");
  EdgeLabeledTree t = *this;
  t.colors_ = std::move(colors);
  t.labels_ = std::move(labels);
  return t;
}

LeafSet EdgeLabeledTree::cluster(Vertex v) const {
  LeafSet out;
  for (Vertex u = v; u < v + subtree_size_[v]; ++u)
    if (is_leaf(u)) out.push_back(leaf_of_[u]);
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------- SetFamily

SetFamily::SetFamily(Leaves universe, std::vector<LeafSet> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  for (auto& m : members_) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (!m.empty() && m.back() >= universe_.size())
      throw Error(ErrorKind::kNotSubsetOfUniverse, "member is not a subset of the universe");
  }
  std::vector<const LeafSet*> sorted;
  sorted.reserve(members_.size());
  for (const auto& m : members_) sorted.push_back(&m);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (*sorted[i] == *sorted[i - 1])
      throw Error(ErrorKind::kDuplicateMember,
                  "duplicate member " + format_set(universe_, *sorted[i]));
}

SetFamily SetFamily::from_names(std::vector<std::string> universe,
                                const std::vector<std::vector<std::string>>& members) {
  Leaves u(std::move(universe));
  std::vector<LeafSet> ms;
  ms.reserve(members.size());
  for (const auto& m : members) {
    LeafSet s;
    for (const auto& name : m) {
      auto i = u.find(name);
      if (!i)
        throw Error(ErrorKind::kNotSubsetOfUniverse, "'" + name + "' is not in the universe");
      s.push_back(*i);
    }
    ms.push_back(std::move(s));
  }
  return SetFamily(std::move(u), std::move(ms));
}

bool SetFamily::contains(const LeafSet& s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

std::vector<std::string> SetFamily::names_of(std::size_t i) const {
  std::vector<std::string> out;
  for (LeafIndex x : members_.at(i)) out.push_back(universe_.name(x));
  return out;
}

bool operator==(const SetFamily& a, const SetFamily& b) {
  if (!a.universe_.same_elements(b.universe_) || a.size() != b.size()) return false;
  auto canon = [](const SetFamily& f) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto names = f.names_of(i);
      std::sort(names.begin(), names.end());
      out.push_back(std::move(names));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(a) == canon(b);
}

std::string format_set(const Leaves& universe, const LeafSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += universe.name(s[i]);
  }
  return out + "}";
}

// ------------------------------------------------------------------ Triples

RootedTriple RootedTriple::make(std::string x, std::string y, std::string outgroup) {
  if (x == y || x == outgroup || y == outgroup)
    throw Error(ErrorKind::kInvalidArgument, "triple leaves must be pairwise distinct");
  if (y < x) std::swap(x, y);
  return RootedTriple{std::move(x), std::move(y), std::move(outgroup)};
}

std::string to_string(const RootedTriple& t) { return t.a + "," + t.b + "|" + t.c; }

SetFamily tree_clusters(const EdgeLabeledTree& tree) {
  std::vector<LeafSet> members;
  members.reserve(tree.num_vertices());
  for (EdgeLabeledTree::Vertex v = 0; v < tree.num_vertices(); ++v)
    members.push_back(tree.cluster(v));
  return SetFamily(tree.leaves(), std::move(members));
}

EdgeLabeledTree::Vertex lca(const EdgeLabeledTree& tree, EdgeLabeledTree::Vertex u,
                            EdgeLabeledTree::Vertex v) {
  while (tree.depth(u) > tree.depth(v)) u = tree.parent(u);
  while (tree.depth(v) > tree.depth(u)) v = tree.parent(v);
  while (u != v) {
    u = tree.parent(u);
    v = tree.parent(v);
  }
  return u;
}

EdgeLabeledTree::Vertex lca(const EdgeLabeledTree& tree, std::span<const LeafIndex> leaves) {
  if (leaves.empty()) throw Error(ErrorKind::kInvalidArgument, "lca of an empty leaf set");
  for (LeafIndex x : leaves)
    if (x >= tree.leaves().size()) throw Error(ErrorKind::kUnknownLeaf, "leaf index out of range");
  EdgeLabeledTree::Vertex acc = tree.vertex_of(leaves.front());
  for (LeafIndex x : leaves.subspan(1)) acc = lca(tree, acc, tree.vertex_of(x));
  return acc;
}

EdgeLabeledTree::Vertex lca(const EdgeLabeledTree& tree, const std::vector<std::string>& leaves) {
  LeafSet idx;
  for (const auto& name : leaves) idx.push_back(tree.leaves().at(name));
  return lca(tree, idx);
}

std::set<RootedTriple> displayed_triples(const EdgeLabeledTree& tree) {
  const auto n = static_cast<LeafIndex>(tree.leaves().size());
  if (n < 3) throw Error(ErrorKind::kTooFewLeaves, "triples need at least three leaves");
  std::set<RootedTriple> out;
  const auto& names = tree.leaves();
  for (LeafIndex a = 0; a < n; ++a)
    for (LeafIndex b = a + 1; b < n; ++b) {
      const auto ab = lca(tree, tree.vertex_of(a), tree.vertex_of(b));
      for (LeafIndex c = b + 1; c < n; ++c) {
        const auto ac = lca(tree, tree.vertex_of(a), tree.vertex_of(c));
        const auto bc = lca(tree, tree.vertex_of(b), tree.vertex_of(c));
        // At most one pair lca lies strictly below the other two.
        if (tree.depth(ab) > tree.depth(ac))
          out.insert(RootedTriple::make(names.name(a), names.name(b), names.name(c)));
        else if (tree.depth(ac) > tree.depth(ab))
          out.insert(RootedTriple::make(names.name(a), names.name(c), names.name(b)));
        else if (tree.depth(bc) > tree.depth(ab))
          out.insert(RootedTriple::make(names.name(b), names.name(c), names.name(a)));
      }
    }
  return out;
}

}  // namespace fitchkit
