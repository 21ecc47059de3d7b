#include "fitchkit/recognition.hpp"

#include <algorithm>
#include <map>

#include "fitchkit/derive.hpp"
#include "fitchkit/hierarchy.hpp"

namespace fitchkit {

namespace {

using Vertex = EdgeLabeledTree::Vertex;

RecognitionResult not_fitch(NotFitchReason reason) {
  RecognitionResult r;
  r.reason = std::move(reason);
  return r;
}

EdgeLabeledTree epsilon_tree(const FitchMap& map, const NeighborhoodIndex& index) {
  const std::size_t n = map.num_leaves();
  std::vector<LeafSet> members = index.system.members();
  const std::size_t from_system = members.size();
  LeafSet all(n);
  for (LeafIndex x = 0; x < n; ++x) all[x] = x;
  if (!index.system.contains(all)) members.push_back(all);
  for (LeafIndex x = 0; x < n; ++x)
    if (n > 1 && !index.system.contains(LeafSet{x})) members.push_back(LeafSet{x});

  auto [tree, source] = tree_from_hierarchy_indexed(SetFamily(map.leaves(), std::move(members)),
                                                    map.colors());
  std::vector<ColorSet> labels(tree.num_vertices(), ColorSet(map.num_colors()));
  for (Vertex v = 1; v < tree.num_vertices(); ++v)
    if (source[v] < from_system) labels[v] = index.label_sets[source[v]];
  return tree.with_labels(map.colors(), std::move(labels));
}

// Index translation between two universes holding the same names.
template <class U>
std::vector<std::uint32_t> translation(const U& from, const U& to) {
  std::vector<std::uint32_t> out(from.size());
  for (std::uint32_t i = 0; i < from.size(); ++i) out[i] = to.at(from.name(i));
  return out;
}

}  // namespace

RecognitionResult recognize(const FitchMap& map) {
  auto built = build_index(map);
  if (auto* ff = std::get_if<FailFast>(&built)) return not_fitch(GuardExceeded{*ff});
  const auto& index = std::get<NeighborhoodIndex>(built);

  const HierarchyVerdict hlc = check_hlc(index);
  if (!hlc.is_hierarchy_like) {
    const auto [i, j] = *hlc.violation;
    return not_fitch(HlcViolation{index.system[i], index.system[j]});
  }
  const IcVerdict ic = check_ic(map, index);
  if (!ic.ok) return not_fitch(*ic.violation);

  RecognitionResult r;
  r.verdict = Verdict::kFitch;
  r.tree = epsilon_tree(map, index);
  return r;
}

std::string describe(const NotFitchReason& reason, const FitchMap& map) {
  if (const auto* g = std::get_if<GuardExceeded>(&reason))
    return "GUARD size=" + std::to_string(g->guard.system_size) +
           " cardinality=" + std::to_string(g->guard.cardinality) +
           " count=" + std::to_string(g->guard.count);
  if (const auto* h = std::get_if<HlcViolation>(&reason))
    return "HLC " + format_set(map.leaves(), h->first) + " " + format_set(map.leaves(), h->second);
  const auto& ic = std::get<IcViolation>(reason);
  return "IC " + map.colors().name(ic.color) + " " + map.leaves().name(ic.y) + " " +
         map.leaves().name(ic.y_prime);
}

bool is_coarse_graining(const EdgeLabeledTree& fine, const EdgeLabeledTree& coarse) {
  if (!fine.leaves().same_elements(coarse.leaves()) ||
      !fine.colors().same_elements(coarse.colors()))
    throw Error(ErrorKind::kUniverseMismatch, "trees are over different leaves or colors");
  const auto leaf_map = translation(coarse.leaves(), fine.leaves());
  const auto color_map = translation(coarse.colors(), fine.colors());

  std::map<LeafSet, Vertex> fine_clusters;
  for (Vertex v = 0; v < fine.num_vertices(); ++v) fine_clusters.emplace(fine.cluster(v), v);

  for (Vertex v = 1; v < coarse.num_vertices(); ++v) {
    LeafSet c = coarse.cluster(v);
    for (auto& x : c) x = leaf_map[x];
    std::sort(c.begin(), c.end());
    auto it = fine_clusters.find(c);
    if (it == fine_clusters.end()) return false;
    const ColorSet& fine_label = fine.label(it->second);
    bool subset = true;
    coarse.label(v).for_each([&](std::size_t m) { subset = subset && fine_label.test(color_map[m]); });
    if (!subset) return false;
  }
  return true;
}

bool is_isomorphic(const EdgeLabeledTree& a, const EdgeLabeledTree& b) {
  return is_coarse_graining(a, b) && is_coarse_graining(b, a);
}

bool is_least_resolved(const EdgeLabeledTree& tree, const FitchMap& map) {
  if (!tree.leaves().same_elements(map.leaves()) || !tree.colors().same_elements(map.colors()) ||
      !(map_of_tree(tree) == map))
    throw Error(ErrorKind::kTreeDoesNotExplainMap, "tree does not explain map");

  // free[v]: colors m for which some leaf below v has no m-edge on its
  // path from v. Children have larger preorder numbers than their parent.
  const std::size_t k = tree.colors().size();
  std::vector<ColorSet> free(tree.num_vertices(), ColorSet(k));
  for (Vertex v = static_cast<Vertex>(tree.num_vertices()); v-- > 0;) {
    if (tree.is_leaf(v)) {
      for (std::size_t m = 0; m < k; ++m) free[v].set(m);
      continue;
    }
    for (Vertex c : tree.children(v)) {
      ColorSet through = free[c];
      through.subtract(tree.label(c));
      free[v] |= through;
    }
    if (v == tree.root()) continue;
    if (tree.label(v).none() || !tree.label(v).is_subset_of(free[v])) return false;
  }
  return true;
}

bool is_k_restricted(const FitchMap& map, std::size_t k) {
  if (!recognize(map).is_fitch()) return false;
  return check_k_elc(neighborhood_system(map), k).ok;
}

std::vector<EdgeLabeledTree> enumerate_explaining_trees(const FitchMap& map,
                                                        std::size_t max_leaves) {
  const std::size_t n = map.num_leaves();
  const std::size_t k = map.num_colors();
  if (n > std::min<std::size_t>(max_leaves, 6) || k > 3)
    throw Error(ErrorKind::kInstanceTooLarge, "enumeration needs |X| <= 6 and |M| <= 3");

  std::vector<EdgeLabeledTree> out;
  for (const SetFamily& h : all_hierarchies(map.leaves())) {
    const EdgeLabeledTree shape = tree_from_hierarchy(h, map.colors());
    const auto nv = static_cast<Vertex>(shape.num_vertices());

    // Per color, every set of edges (as a vertex mask) that reproduces the
    // color's pattern in the map. Colors are independent of each other.
    std::vector<std::vector<std::vector<bool>>> per_color(k);
    for (ColorIndex m = 0; m < k; ++m) {
      std::vector<bool> has(nv, false);
      auto consistent_at = [&](Vertex v) {
        if (!shape.is_leaf(v)) return true;
        const LeafIndex y = shape.leaf_of(v);
        for (LeafIndex x = 0; x < n; ++x) {
          if (x == y) continue;
          const Vertex top = lca(shape, shape.vertex_of(x), v);
          bool hit = false;
          for (Vertex u = v; u != top && !hit; u = shape.parent(u)) hit = has[u];
          if (hit != map.contains(x, y, m)) return false;
        }
        return true;
      };
      // Preorder assignment: every ancestor of v is fixed before v.
      auto search = [&](auto&& self, Vertex v) -> void {
        if (v == nv) {
          per_color[m].push_back(has);
          return;
        }
        for (bool bit : {false, true}) {
          has[v] = bit;
          if (consistent_at(v)) self(self, v + 1);
        }
        has[v] = false;
      };
      search(search, 1);
      if (nv == 1) per_color[m] = {has};
    }

    std::vector<std::size_t> pick(k, 0);
    bool any = std::all_of(per_color.begin(), per_color.end(), [](const auto& c) { return !c.empty(); });
    while (any) {
      std::vector<ColorSet> labels(nv, ColorSet(k));
      for (ColorIndex m = 0; m < k; ++m)
        for (Vertex v = 1; v < nv; ++v)
          if (per_color[m][pick[m]][v]) labels[v].set(m);
      out.push_back(shape.with_labels(map.colors(), std::move(labels)));
      std::size_t d = k;
      while (d > 0 && ++pick[d - 1] == per_color[d - 1].size()) pick[--d] = 0;
      if (d == 0) break;
    }
  }
  return out;
}

}  // namespace fitchkit
