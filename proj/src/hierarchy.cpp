#include "fitchkit/hierarchy.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace fitchkit {

namespace {

// Stable bucket sort of member indices by non-increasing cardinality.
std::vector<std::size_t> by_decreasing_size(const SetFamily& family) {
  const std::size_t n = family.universe().size();
  std::vector<std::size_t> start(n + 2, 0);
  for (const auto& m : family.members()) ++start[n - m.size() + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<std::size_t> order(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    order[start[n - family[i].size()]++] = i;
  return order;
}

void require_nonempty(const SetFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family[i].empty())
      throw Error(ErrorKind::kEmptyMember, "member " + std::to_string(i) + " is empty");
}

// Scans members from largest to smallest keeping, for every element, the
// position of the last scanned member containing it (0 = the universe).
// A member is nested in its predecessor iff all its elements agree.
std::optional<std::pair<std::size_t, std::size_t>> last_seen_scan(
    const SetFamily& family, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> last(family.universe().size(), 0);
  for (std::size_t pos = 1; pos <= order.size(); ++pos) {
    const LeafSet& member = family[order[pos - 1]];
    const std::size_t expected = last[member.front()];
    for (LeafIndex y : member) {
      if (last[y] == expected) {
        last[y] = pos;
        continue;
      }
      const std::size_t other = order[std::max(expected, last[y]) - 1];
      const std::size_t self = order[pos - 1];
      return std::pair{std::min(self, other), std::max(self, other)};
    }
  }
  return std::nullopt;
}

bool proper_overlap(const LeafSet& a, const LeafSet& b) {
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++common; ++i; ++j; }
  }
  return common != 0 && common != a.size() && common != b.size();
}

}  // namespace

HierarchyVerdict is_hierarchy_like(const SetFamily& family, HierarchyMode mode) {
  require_nonempty(family);
  HierarchyVerdict verdict;

  if (mode == HierarchyMode::kAllPairs) {
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j)
        if (proper_overlap(family[i], family[j])) {
          verdict.is_hierarchy_like = false;
          verdict.violation = std::pair{i, j};
          return verdict;
        }
    return verdict;
  }

  // Distinct nonempty laminar members number at most 2|X| - 1.
  const bool too_many = family.size() + 1 > 2 * family.universe().size();
  const auto order = by_decreasing_size(family);
  verdict.violation = last_seen_scan(family, order);
  verdict.is_hierarchy_like = !too_many && !verdict.violation;
  assert(verdict.is_hierarchy_like == !verdict.violation.has_value());
  return verdict;
}

bool is_hierarchy(const SetFamily& family) {
  if (!is_hierarchy_like(family).is_hierarchy_like) return false;
  const std::size_t n = family.universe().size();
  std::vector<bool> singleton(n, false);
  bool whole = false;
  for (const auto& m : family.members()) {
    if (m.size() == 1) singleton[m.front()] = true;
    if (m.size() == n) whole = true;
  }
  return whole && std::all_of(singleton.begin(), singleton.end(), [](bool b) { return b; });
}

std::pair<EdgeLabeledTree, std::vector<std::size_t>> tree_from_hierarchy_indexed(
    const SetFamily& family, const Colors& colors) {
  const HierarchyVerdict verdict = is_hierarchy_like(family);
  if (!verdict.is_hierarchy_like) {
    const auto [i, j] = *verdict.violation;
    throw Error(ErrorKind::kNotAHierarchy,
                "members " + format_set(family.universe(), family[i]) + " and " +
                    format_set(family.universe(), family[j]) + " overlap properly");
  }
  if (!is_hierarchy(family))
    throw Error(ErrorKind::kNotAHierarchy, "the universe or a singleton is missing");

  const std::size_t n = family.universe().size();
  const auto order = by_decreasing_size(family);
  assert(family[order.front()].size() == n);

  // Vertex p is the member at sorted position p; its parent is the smallest
  // strict superset, i.e. the last scanned member containing any element.
  using Vertex = EdgeLabeledTree::Vertex;
  std::vector<Vertex> parent(order.size(), EdgeLabeledTree::kNoVertex);
  std::vector<std::optional<LeafIndex>> leaf_at(order.size());
  std::vector<Vertex> last(n, 0);
  for (Vertex p = 1; p < order.size(); ++p) {
    const LeafSet& member = family[order[p]];
    parent[p] = last[member.front()];
    for (LeafIndex x : member) last[x] = p;
    if (member.size() == 1) leaf_at[p] = member.front();
  }
  if (n == 1) leaf_at[0] = 0;

  std::vector<Vertex> renumbering;
  auto tree = EdgeLabeledTree::build(family.universe(), colors, parent, leaf_at,
                                     std::vector<ColorSet>(order.size(), ColorSet(colors.size())),
                                     &renumbering);
  std::vector<std::size_t> source(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) source[renumbering[p]] = order[p];
  return {std::move(tree), std::move(source)};
}

EdgeLabeledTree tree_from_hierarchy(const SetFamily& family, const Colors& colors) {
  return tree_from_hierarchy_indexed(family, colors).first;
}

std::vector<SetFamily> all_hierarchies(const Leaves& leaves) {
  const std::size_t n = leaves.size();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "empty leaf universe");
  if (n > 7) throw Error(ErrorKind::kInstanceTooLarge, "at most 7 leaves");

  using Family = std::vector<LeafSet>;
  std::vector<Family> current{Family{LeafSet{0}}};
  for (LeafIndex k = 1; k < n; ++k) {
    std::vector<Family> next;
    for (const Family& h : current) {
      for (const LeafSet& c : h) {
        auto grow = [&](bool strict) {
          // strict: k joins the supersets of c only (new vertex above c);
          // otherwise k also joins c itself (new child of c).
          Family f;
          for (const LeafSet& d : h) {
            const bool contains_c = std::includes(d.begin(), d.end(), c.begin(), c.end());
            LeafSet e = d;
            if (contains_c && (!strict || d != c)) e.push_back(k);
            f.push_back(std::move(e));
          }
          if (strict) {
            LeafSet above = c;
            above.push_back(k);
            f.push_back(std::move(above));
          }
          f.push_back(LeafSet{k});
          next.push_back(std::move(f));
        };
        grow(true);
        if (c.size() >= 2) grow(false);
      }
    }
    current = std::move(next);
  }

  std::vector<SetFamily> out;
  out.reserve(current.size());
  for (Family& f : current) {
    std::sort(f.begin(), f.end());
    out.emplace_back(leaves, std::move(f));
  }
  return out;
}

}  // namespace fitchkit
