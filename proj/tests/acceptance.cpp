// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fitchkit/derive.hpp"
#include "fitchkit/forbidden.hpp"
#include "fitchkit/generators.hpp"
#include "fitchkit/hierarchy.hpp"
#include "fitchkit/neighborhoods.hpp"
#include "fitchkit/recognition.hpp"
#include "support.hpp"

using namespace fitchkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts checks and keeps the first failure message.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
    return {false, std::to_string(failures) + "/" + std::to_string(checks) + " failed; first: " + first};
  }
};

std::size_t label_weight(const EdgeLabeledTree& t) {
  std::size_t w = 0;
  for (const auto& l : t.labels()) w += l.count();
  return w;
}

std::size_t widest_label(const EdgeLabeledTree& t) {
  std::size_t w = 0;
  for (const auto& l : t.labels()) w = std::max(w, l.count());
  return w;
}

const double kDensities[] = {0.1, 0.3, 0.7};

Outcome three_way_agreement() {
  const auto start = Clock::now();
  Tally t;
  std::size_t fitch = 0;
  for (std::size_t k : {1, 2}) {
    for (const FitchMap& map : enumerate_maps(3, k)) {
      const bool a = recognize(map).is_fitch();
      const bool b = !find_forbidden_witness(map);
      const bool c = !enumerate_explaining_trees(map).empty();
      fitch += a;
      t.expect(a == b && b == c, print_map(map));
    }
  }
  const double secs = seconds_since(start);
  t.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  return t.outcome("4160 maps, " + std::to_string(fitch) + " Fitch, " + std::to_string(secs) + " s");
}

Outcome round_trip() {
  const auto start = Clock::now();
  Tally t;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto source = random_tree(1 + i % 12, 1 + (i / 12) % 4, kDensities[i % 3], 1000 + i);
    const FitchMap map = map_of_tree(source);
    const auto r = recognize(map);
    const std::string tag = print_tree(source);
    t.expect(r.is_fitch(), "not Fitch: " + tag);
    if (!r.is_fitch()) continue;
    t.expect(map_of_tree(*r.tree) == map, "map differs: " + tag);
    t.expect(is_coarse_graining(source, *r.tree), "not a coarse-graining: " + tag);
  }
  const double secs = seconds_since(start);
  t.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
  return t.outcome("1000 trees, " + std::to_string(secs) + " s");
}

// Small Fitch instances with |X| <= 4 and |M| <= 2, every one distinct.
std::vector<FitchMap> small_instances() {
  std::vector<FitchMap> out;
  std::vector<std::string> seen;
  for (std::uint64_t seed = 1; out.size() < 200 && seed < 100000; ++seed) {
    const FitchMap map = map_of_tree(random_tree(2 + seed % 3, 1 + (seed / 3) % 2, kDensities[seed % 3], seed));
    std::string doc = print_map(map);
    if (std::find(seen.begin(), seen.end(), doc) != seen.end()) continue;
    seen.push_back(std::move(doc));
    out.push_back(map);
  }
  return out;
}

Outcome uniqueness_and_minimality(const std::vector<FitchMap>& instances) {
  Tally t;
  std::size_t trees = 0;
  for (const FitchMap& map : instances) {
    const auto eps = *recognize(map).tree;
    const auto all = enumerate_explaining_trees(map);
    trees += all.size();
    const std::string tag = print_map(map);
    t.expect(!all.empty(), "no explaining tree: " + tag);
    bool found = false;
    std::size_t min_vertices = static_cast<std::size_t>(-1), min_weight = min_vertices;
    for (const auto& tree : all) {
      min_vertices = std::min(min_vertices, tree.num_vertices());
      min_weight = std::min(min_weight, label_weight(tree));
      if (is_least_resolved(tree, map)) {
        found = true;
        t.expect(is_isomorphic(tree, eps), "least-resolved tree differs: " + print_tree(tree));
      }
    }
    t.expect(found, "no least-resolved tree enumerated: " + tag);
    t.expect(eps.num_vertices() == min_vertices, "vertex count not minimal: " + tag);
    t.expect(label_weight(eps) == min_weight, "label weight not minimal: " + tag);
  }
  return t.outcome(std::to_string(instances.size()) + " instances, " + std::to_string(trees) + " trees");
}

Outcome least_resolved_equivalence(const std::vector<FitchMap>& instances) {
  Tally t;
  std::size_t trees = 0;
  for (const FitchMap& map : instances) {
    const auto eps = *recognize(map).tree;
    for (const auto& tree : enumerate_explaining_trees(map)) {
      ++trees;
      t.expect(is_least_resolved(tree, map) == is_isomorphic(tree, eps), print_tree(tree));
    }
  }
  return t.outcome(std::to_string(trees) + " explaining trees");
}

Outcome single_pass_vs_pairs() {
  Tally t;
  Rng rng(2024);
  std::size_t laminar = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto f = random_set_family(1 + rng.below(20), 1 + rng.below(60), i);
    const bool fast = is_hierarchy_like(f, HierarchyMode::kSinglePass).is_hierarchy_like;
    const bool slow = is_hierarchy_like(f, HierarchyMode::kAllPairs).is_hierarchy_like;
    laminar += slow;
    t.expect(fast == slow, "verdicts differ on family " + std::to_string(i));
    std::vector<LeafSet> members = f.members();
    for (std::size_t j = members.size(); j > 1; --j) std::swap(members[j - 1], members[rng.below(j)]);
    t.expect(is_hierarchy_like(SetFamily(f.universe(), members)).is_hierarchy_like == fast,
             "shuffle changed verdict on family " + std::to_string(i));
  }
  return t.outcome("10000 families, " + std::to_string(laminar) + " hierarchy-like");
}

Outcome k_restriction() {
  Tally t;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const FitchMap map = map_of_tree(random_tree(2 + i % 11, 1 + i % 4, kDensities[i % 3], 5000 + i));
    const auto eps = *recognize(map).tree;
    const auto index = std::get<NeighborhoodIndex>(build_index(map));
    for (std::size_t k = 0; k <= 3; ++k) {
      const bool a = is_k_restricted(map, k);
      const bool b = widest_label(eps) <= k;
      const bool c = check_k_elc(index, k).ok;
      t.expect(a == b && b == c, "k=" + std::to_string(k) + " " + print_map(map));
    }
  }
  const FitchMap cherry = fixtures::two_color_cherry_map();
  t.expect(recognize(cherry).is_fitch(), "two-color cherry map is not Fitch");
  t.expect(!is_k_restricted(cherry, 1), "two-color cherry map is 1-restricted");
  t.expect(is_k_restricted(cherry, 2), "two-color cherry map is not 2-restricted");
  const FitchMap parent = map_of_tree(fixtures::two_color_parent_tree());
  t.expect(is_k_restricted(parent, 1), "parent map is not 1-restricted");
  t.expect(restrict_map(parent, {"a", "b", "d"}) == cherry, "parent does not induce the cherry map");
  return t.outcome("500 instances x 4 values of k + regression fixtures");
}

Outcome recoloring() {
  Tally t;
  Rng rng(77);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto tree = random_tree(2 + i % 11, 1 + i % 4, kDensities[i % 3], 9000 + i);
    const auto& colors = tree.colors().names();
    RecoloringScheme s;
    if (i % 2 == 0) {
      // Partition: each color goes to one of up to three parts.
      std::vector<std::vector<std::string>> parts(1 + rng.below(3));
      for (const auto& c : colors) parts[rng.below(parts.size())].push_back(c);
      for (auto& p : parts)
        if (!p.empty()) s.parts.push_back(std::move(p));
      s.partition = true;
    } else {
      // Overlapping parts.
      const std::size_t k = 1 + rng.below(4);
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::string> part;
        for (const auto& c : colors)
          if (rng.chance(0.6)) part.push_back(c);
        if (part.empty()) part.push_back(colors[rng.below(colors.size())]);
        s.parts.push_back(std::move(part));
      }
    }
    const FitchMap map = map_of_tree(tree);
    const FitchMap recolored = recolor_map(map, s);
    t.expect(map_of_tree(recolor_tree(tree, s)) == recolored, "does not commute: " + print_tree(tree));
    t.expect(recognize(recolored).is_fitch(), "recolored map not Fitch: " + print_tree(tree));

    const FitchMap same = recolor_map(map, RecoloringScheme::singletons(map.colors()));
    bool identical = same.num_colors() == map.num_colors();
    for (LeafIndex x = 0; identical && x < map.num_leaves(); ++x)
      for (LeafIndex y = 0; y < map.num_leaves(); ++y)
        if (x != y)
          for (ColorIndex m = 0; m < map.num_colors(); ++m)
            identical = identical && same.contains(x, y, m) == map.contains(x, y, m);
    t.expect(identical, "singleton recoloring changed the map: " + print_tree(tree));
  }
  return t.outcome("500 (tree, scheme) pairs");
}

Outcome triples() {
  Tally t;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto source = random_tree(3 + i % 10, 1 + (i / 12) % 4, kDensities[i % 3], 1000 + i);
    const FitchMap map = map_of_tree(source);
    const auto r = triples_of_map(map);
    const auto shown = displayed_triples(source);
    t.expect(std::includes(shown.begin(), shown.end(), r.begin(), r.end()),
             "not displayed by source: " + print_tree(source));
    t.expect(r == displayed_triples(*recognize(map).tree), "differs from tree triples: " + print_tree(source));
  }
  const auto nested = fixtures::nested_tree();
  const auto clusters = tree_clusters(nested);
  t.expect(clusters == SetFamily::from_names({"a", "b", "c", "d"}, {{"a", "b", "c", "d"},
                                                                    {"a", "b", "c"},
                                                                    {"a", "b"},
                                                                    {"a"},
                                                                    {"b"},
                                                                    {"c"},
                                                                    {"d"}}),
           "nested tree clusters");
  const std::set<RootedTriple> expected{RootedTriple::make("a", "b", "c"), RootedTriple::make("a", "c", "d"),
                                        RootedTriple::make("b", "c", "d"), RootedTriple::make("a", "b", "d")};
  t.expect(displayed_triples(nested) == expected, "nested tree triples");
  return t.outcome("1000 round-trip instances + nested tree");
}

Outcome micro_fixtures() {
  Tally t;
  const FitchMap colored = map_of_tree(fixtures::four_color_tree());
  t.expect(neighborhood(colored, "1", "b") == std::vector<std::string>{"a", "b"}, "N[1,b]");
  t.expect(neighborhood(colored, "4", "b") == std::vector<std::string>{"a", "b", "c"}, "N[4,b]");
  t.expect(colored.contains("a", "c", "1") && colored.contains("c", "b", "1"), "color 1 entries");
  t.expect(colored.empty_entry(colored.leaves().at("a"), colored.leaves().at("b")) &&
               !colored.empty_entry(colored.leaves().at("b"), colored.leaves().at("a")),
           "asymmetric entries");

  const auto fine = fixtures::redundant_tree();
  const auto coarse = fixtures::contracted_tree();
  const FitchMap redundant_map = map_of_tree(fine);
  t.expect(map_of_tree(coarse) == redundant_map, "redundant and contracted trees explain different maps");

  // C(T') = C(T) minus the cluster {c,d}.
  const LeafSet cd{fine.leaves().at("c"), fine.leaves().at("d")};
  std::vector<LeafSet> expected;
  const SetFamily fine_clusters = tree_clusters(fine);
  for (const LeafSet& c : fine_clusters.members())
    if (c != cd) expected.push_back(c);
  t.expect(tree_clusters(coarse) == SetFamily(fine.leaves(), expected), "contracted cluster set");

  // The {a,b} edge loses color 1; every other shared edge keeps its label.
  const auto ab_fine = lca(fine, std::vector<std::string>{"a", "b"});
  const auto ab_coarse = lca(coarse, std::vector<std::string>{"a", "b"});
  ColorSet reduced = fine.label(ab_fine);
  reduced.reset(fine.colors().at("1"));
  t.expect(coarse.label(ab_coarse) == reduced, "contracted edge label");
  t.expect(is_coarse_graining(fine, coarse), "T' is not a coarse-graining of T");
  t.expect(!is_coarse_graining(coarse, fine), "T is a coarse-graining of T'");
  t.expect(is_least_resolved(coarse, redundant_map), "T' is not least-resolved");
  t.expect(!is_least_resolved(fine, redundant_map), "T is least-resolved");
  return t.outcome("neighborhoods, coarse-graining pair");
}

// Median over instances of the fastest of several runs per instance.
double median_recognition_seconds(std::size_t n, std::size_t k, int instances) {
  std::vector<double> times;
  for (int r = 0; r < instances; ++r) {
    const FitchMap map = map_of_tree(random_tree(n, k, 0.3, 31 + static_cast<std::uint64_t>(r)));
    double best = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = Clock::now();
      const auto result = recognize(map);
      best = std::min(best, seconds_since(start));
      if (!result.is_fitch()) return -1.0;
    }
    times.push_back(best);
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

Outcome scaling() {
  const double t500 = median_recognition_seconds(500, 8, 7);
  const double t1000 = median_recognition_seconds(1000, 8, 7);
  const double t1000_16 = median_recognition_seconds(1000, 16, 7);
  char buf[256];
  if (t500 <= 0 || t1000 <= 0 || t1000_16 <= 0) return {false, "a generated instance was not recognized as Fitch"};
  const double leaves_ratio = t1000 / t500;
  const double colors_ratio = t1000_16 / t1000;
  std::snprintf(buf, sizeof buf,
                "|X| 500->1000: %.3fs->%.3fs ratio %.2f; |M| 8->16 at |X|=1000: %.3fs ratio %.2f", t500,
                t1000, leaves_ratio, t1000_16, colors_ratio);
  const bool ok = leaves_ratio >= 2.5 && leaves_ratio <= 6.5 && colors_ratio >= 1.3 && colors_ratio <= 3.5 &&
                  t1000 < 30.0;
  return {ok, buf};
}

Outcome induced_closure() {
  Tally t;
  Rng rng(99);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const FitchMap map = map_of_tree(random_tree(2 + i % 14, 1 + i % 4, kDensities[i % 3], 20000 + i));
    std::vector<std::string> keep;
    for (const auto& x : map.leaves().names())
      if (rng.chance(0.5)) keep.push_back(x);
    if (keep.empty()) keep.push_back(map.leaves().name(static_cast<LeafIndex>(rng.below(map.num_leaves()))));
    t.expect(recognize(restrict_map(map, keep)).is_fitch(), print_map(map));
  }
  return t.outcome("500 induced submaps");
}

}  // namespace

int main() {
  const auto instances = small_instances();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 three-way characterization agreement", three_way_agreement},
      {"AC2 derive/recognize round trip", round_trip},
      {"AC3 uniqueness and minimality of the least-resolved tree",
       [&] { return uniqueness_and_minimality(instances); }},
      {"AC4 least-resolved test matches isomorphism", [&] { return least_resolved_equivalence(instances); }},
      {"AC5 single-pass hierarchy test vs all pairs", single_pass_vs_pairs},
      {"AC6 k-restriction equivalences", k_restriction},
      {"AC7 recoloring", recoloring},
      {"AC8 triples", triples},
      {"AC9 hand-built micro-fixtures", micro_fixtures},
      {"AC10 complexity scaling", scaling},
      {"AC11 induced-submap closure", induced_closure},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s (%s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
