#include "fitchkit/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace fitchkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::kInvalidArgument, "empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

std::vector<std::string> default_leaf_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> default_color_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(std::to_string(i));
  return out;
}

EdgeLabeledTree random_tree(std::size_t n, const Colors& colors, double p, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "a tree needs at least one leaf");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "density must lie in [0,1]");
  using Vertex = EdgeLabeledTree::Vertex;
  Rng rng(seed);

  std::vector<Vertex> parent(n, EdgeLabeledTree::kNoVertex);
  std::vector<std::optional<LeafIndex>> leaf_at(n);
  std::vector<Vertex> roots(n);
  for (LeafIndex x = 0; x < n; ++x) {
    leaf_at[x] = x;
    roots[x] = x;
  }
  while (roots.size() > 1) {
    // Binary merges half of the time keep deep trees common.
    std::size_t g = 2;
    if (roots.size() > 2 && rng.chance(0.5)) g = 2 + rng.below(roots.size() - 1);
    for (std::size_t i = 0; i < g; ++i)
      std::swap(roots[i], roots[i + rng.below(roots.size() - i)]);
    const auto v = static_cast<Vertex>(parent.size());
    parent.push_back(EdgeLabeledTree::kNoVertex);
    leaf_at.emplace_back();
    for (std::size_t i = 0; i < g; ++i) parent[roots[i]] = v;
    roots.erase(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(g));
    roots.push_back(v);
  }

  std::vector<ColorSet> labels(parent.size(), ColorSet(colors.size()));
  for (Vertex v = 0; v < parent.size(); ++v) {
    if (parent[v] == EdgeLabeledTree::kNoVertex) continue;
    for (std::size_t m = 0; m < colors.size(); ++m)
      if (rng.chance(p)) labels[v].set(m);
  }
  return EdgeLabeledTree::build(Leaves(default_leaf_names(n)), colors, parent, leaf_at,
                                std::move(labels));
}

EdgeLabeledTree random_tree(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  return random_tree(n, Colors(default_color_names(k)), p, seed);
}

std::vector<FitchMap> enumerate_maps(std::size_t n, std::size_t k) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "at least one leaf required");
  if (n > 3 || k > 2) throw Error(ErrorKind::kInstanceTooLarge, "enumeration needs n <= 3, k <= 2");
  const std::vector<std::string> leaf_names{"a", "b", "c"};
  std::vector<std::string> leaves(leaf_names.begin(), leaf_names.begin() + static_cast<std::ptrdiff_t>(n));

  std::vector<std::pair<LeafIndex, LeafIndex>> pairs;
  for (LeafIndex x = 0; x < n; ++x)
    for (LeafIndex y = 0; y < n; ++y)
      if (x != y) pairs.emplace_back(x, y);
  const std::size_t base = std::size_t{1} << k;
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= base;

  std::vector<FitchMap> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    FitchMap map(leaves, default_color_names(k));
    std::size_t rest = code;
    // The first pair is the most significant digit.
    for (std::size_t i = pairs.size(); i-- > 0;) {
      const std::size_t digit = rest % base;
      rest /= base;
      for (ColorIndex m = 0; m < k; ++m)
        if ((digit >> m) & 1U) map.add(pairs[i].first, pairs[i].second, m);
    }
    out.push_back(std::move(map));
  }
  return out;
}

FitchMap random_map(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  Rng rng(seed);
  FitchMap map(default_leaf_names(n), default_color_names(k));
  for (LeafIndex x = 0; x < n; ++x)
    for (LeafIndex y = 0; y < n; ++y)
      if (x != y)
        for (ColorIndex m = 0; m < k; ++m)
          if (rng.chance(p)) map.add(x, y, m);
  return map;
}

SetFamily random_set_family(std::size_t universe, std::size_t members, std::uint64_t seed) {
  if (universe == 0) throw Error(ErrorKind::kInvalidArgument, "empty universe");
  Rng rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < universe; ++i) names.push_back("u" + std::to_string(i));
  std::set<LeafSet> seen;
  std::vector<LeafSet> out;
  for (std::size_t tries = 0; out.size() < members && tries < 20 * members; ++tries) {
    LeafSet s;
    if (!out.empty() && rng.chance(0.5)) {
      for (LeafIndex x : out[rng.below(out.size())])
        if (rng.chance(0.6)) s.push_back(x);
    } else {
      const double p = rng.unit();
      for (LeafIndex x = 0; x < universe; ++x)
        if (rng.chance(p)) s.push_back(x);
    }
    if (s.empty() || !seen.insert(s).second) continue;
    out.push_back(std::move(s));
  }
  return SetFamily(Leaves(std::move(names)), std::move(out));
}

}  // namespace fitchkit
