#include "fitchkit/derive.hpp"

#include "fitchkit/neighborhoods.hpp"

namespace fitchkit {

namespace {

using Vertex = EdgeLabeledTree::Vertex;

FitchMap derive_fast(const EdgeLabeledTree& tree) {
  FitchMap map(tree.leaves(), tree.colors());
  const std::size_t n = tree.leaves().size();
  const std::size_t k = tree.colors().size();
  std::vector<Vertex> lowest(k);
  ColorSet entry(k);

  for (LeafIndex y = 0; y < n; ++y) {
    // lowest[m]: the vertex below the lowest m-edge on the path from y to
    // the root, or the root if there is none.
    std::fill(lowest.begin(), lowest.end(), tree.root());
    ColorSet open(k);
    for (std::size_t m = 0; m < k; ++m) open.set(m);
    for (Vertex v = tree.vertex_of(y); v != tree.root() && open.any(); v = tree.parent(v)) {
      tree.label(v).for_each([&](std::size_t m) {
        if (open.test(m)) {
          lowest[m] = v;
          open.reset(m);
        }
      });
    }
    for (LeafIndex x = 0; x < n; ++x) {
      if (x == y) continue;
      entry.clear();
      const Vertex vx = tree.vertex_of(x);
      for (std::size_t m = 0; m < k; ++m)
        if (lowest[m] != tree.root() && !tree.is_ancestor_or_self(lowest[m], vx)) entry.set(m);
      map.set_entry(x, y, entry);
    }
  }
  return map;
}

FitchMap derive_naive(const EdgeLabeledTree& tree) {
  FitchMap map(tree.leaves(), tree.colors());
  const std::size_t n = tree.leaves().size();
  for (LeafIndex x = 0; x < n; ++x)
    for (LeafIndex y = 0; y < n; ++y) {
      if (x == y) continue;
      const Vertex top = lca(tree, tree.vertex_of(x), tree.vertex_of(y));
      ColorSet acc(tree.colors().size());
      for (Vertex v = tree.vertex_of(y); v != top; v = tree.parent(v)) acc |= tree.label(v);
      map.set_entry(x, y, acc);
    }
  return map;
}

ColorSet recolor_set(const ColorSet& in, const ResolvedScheme& scheme) {
  ColorSet out(scheme.parts.size());
  for (std::size_t i = 0; i < scheme.parts.size(); ++i)
    if (in.intersects(scheme.parts[i])) out.set(i);
  return out;
}

}  // namespace

FitchMap map_of_tree(const EdgeLabeledTree& tree, DeriveMode mode) {
  return mode == DeriveMode::kFast ? derive_fast(tree) : derive_naive(tree);
}

RecoloringScheme RecoloringScheme::singletons(const Colors& colors) {
  RecoloringScheme s;
  for (const auto& c : colors.names()) s.parts.push_back({c});
  s.partition = true;
  return s;
}

ResolvedScheme resolve(const RecoloringScheme& scheme, const Colors& colors) {
  std::vector<std::string> out_names = scheme.output_colors;
  if (out_names.empty())
    for (std::size_t i = 1; i <= scheme.parts.size(); ++i) out_names.push_back(std::to_string(i));
  if (out_names.size() != scheme.parts.size())
    throw Error(ErrorKind::kInvalidArgument, "one output color per part required");

  ResolvedScheme r{{}, Colors(std::move(out_names))};
  ColorSet seen(colors.size());
  for (const auto& part : scheme.parts) {
    if (part.empty()) throw Error(ErrorKind::kPartNotSubsetOfM, "empty part");
    ColorSet s(colors.size());
    for (const auto& name : part) {
      auto m = colors.find(name);
      if (!m) throw Error(ErrorKind::kPartNotSubsetOfM, "part color '" + name + "' is not in M");
      s.set(*m);
    }
    if (scheme.partition && s.intersects(seen))
      throw Error(ErrorKind::kInvalidArgument, "partition parts overlap");
    seen |= s;
    r.parts.push_back(std::move(s));
  }
  if (scheme.partition && seen.count() != colors.size())
    throw Error(ErrorKind::kInvalidArgument, "partition parts do not cover M");
  return r;
}

FitchMap recolor_map(const FitchMap& map, const RecoloringScheme& scheme) {
  const ResolvedScheme r = resolve(scheme, map.colors());
  FitchMap out(map.leaves(), r.output);
  for (LeafIndex x = 0; x < map.num_leaves(); ++x)
    for (LeafIndex y = 0; y < map.num_leaves(); ++y)
      if (x != y) out.set_entry(x, y, recolor_set(map.entry(x, y), r));
  return out;
}

EdgeLabeledTree recolor_tree(const EdgeLabeledTree& tree, const RecoloringScheme& scheme) {
  const ResolvedScheme r = resolve(scheme, tree.colors());
  std::vector<ColorSet> labels;
  labels.reserve(tree.num_vertices());
  for (const auto& l : tree.labels()) labels.push_back(recolor_set(l, r));
  return tree.with_labels(r.output, std::move(labels));
}

std::set<RootedTriple> triples_of_map(const FitchMap& map) {
  const std::size_t n = map.num_leaves();
  if (n < 3) throw Error(ErrorKind::kTooFewLeaves, "triples need at least three leaves");
  const NeighborhoodIndex index = neighborhood_system(map);
  const auto& names = map.leaves();
  std::set<RootedTriple> out;
  std::vector<bool> inside(n);
  for (const LeafSet& nb : index.system.members()) {
    if (nb.size() == n) continue;
    std::fill(inside.begin(), inside.end(), false);
    for (LeafIndex x : nb) inside[x] = true;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (LeafIndex c = 0; c < n; ++c)
          if (!inside[c]) out.insert(RootedTriple::make(names.name(nb[i]), names.name(nb[j]), names.name(c)));
  }
  return out;
}

}  // namespace fitchkit
