// fitchkit: command-line front end. Exit status 0 = positive verdict,
// 2 = negative verdict, 1 = error. Data on stdout, diagnostics on stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fitchkit/derive.hpp"
#include "fitchkit/forbidden.hpp"
#include "fitchkit/generators.hpp"
#include "fitchkit/hierarchy.hpp"
#include "fitchkit/io.hpp"
#include "fitchkit/recognition.hpp"

namespace fk = fitchkit;

namespace {

constexpr int kPositive = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct Options {
  std::string map, tree, sets, scheme, out, out_tree, out_map;
  std::optional<std::size_t> k;
  bool all_pairs = false;
  std::size_t leaves = 8;
  std::size_t colors = 2;
  double density = 0.3;
  std::uint64_t seed = 1;
};

int run_recognize(const Options& o) {
  const fk::FitchMap map = fk::parse_map(slurp(o.map));
  const auto result = fk::recognize(map);
  if (!result.is_fitch()) {
    std::cout << fk::describe(*result.reason, map) << '\n';
    return kNegative;
  }
  if (o.k) {
    const auto index = fk::neighborhood_system(map);
    const auto elc = fk::check_k_elc(index, *o.k);
    if (!elc.ok) {
      std::cout << "KELC " << fk::format_set(map.leaves(), index.system[*elc.member]) << ' '
                << elc.colors << '\n';
      return kNegative;
    }
  }
  emit(o.out, fk::print_tree(*result.tree) + '\n');
  return kPositive;
}

int run_derive(const Options& o) {
  emit(o.out, fk::print_map(fk::map_of_tree(fk::parse_tree(slurp(o.tree)))));
  return kPositive;
}

int run_lrt_check(const Options& o) {
  const fk::FitchMap map = fk::parse_map(slurp(o.map));
  const auto tree = fk::parse_tree(slurp(o.tree), map.colors());
  if (fk::is_least_resolved(tree, map)) {
    std::cout << "least-resolved\n";
    return kPositive;
  }
  std::cout << "not least-resolved\n";
  return kNegative;
}

int run_forbidden(const Options& o) {
  const auto w = fk::find_forbidden_witness(fk::parse_map(slurp(o.map)));
  if (!w) {
    std::cout << "none\n";
    return kPositive;
  }
  std::cout << fk::to_string(*w) << '\n';
  return kNegative;
}

int run_hierarchy_check(const Options& o) {
  const fk::SetFamily family = fk::parse_sets(slurp(o.sets));
  const auto v = fk::is_hierarchy_like(
      family, o.all_pairs ? fk::HierarchyMode::kAllPairs : fk::HierarchyMode::kSinglePass);
  if (v.is_hierarchy_like) {
    std::cout << "hierarchy-like\n";
    return kPositive;
  }
  const auto [i, j] = *v.violation;
  std::cout << "violation " << fk::format_set(family.universe(), family[i]) << ' '
            << fk::format_set(family.universe(), family[j]) << '\n';
  return kNegative;
}

int run_recolor(const Options& o) {
  const fk::FitchMap map = fk::parse_map(slurp(o.map));
  emit(o.out, fk::print_map(fk::recolor_map(map, fk::parse_scheme(slurp(o.scheme)))));
  return kPositive;
}

int run_triples(const Options& o) {
  for (const auto& t : fk::triples_of_map(fk::parse_map(slurp(o.map))))
    std::cout << fk::to_string(t) << '\n';
  return kPositive;
}

int run_gen(const Options& o) {
  const auto tree = fk::random_tree(o.leaves, o.colors, o.density, o.seed);
  if (!o.out_tree.empty() || o.out_map.empty()) emit(o.out_tree, fk::print_tree(tree) + '\n');
  if (!o.out_map.empty()) emit(o.out_map, fk::print_map(fk::map_of_tree(tree)));
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitch map recognition and least-resolved tree construction"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("FITCHKIT_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: FITCHKIT_SEED is not an unsigned integer\n";
      return kError;
    }
  }

  auto* recognize = app.add_subcommand("recognize", "decide Fitch-ness and print the least-resolved tree");
  recognize->add_option("--map", o.map, "map document")->required();
  recognize->add_option("--out", o.out, "tree output path (default stdout)");
  recognize->add_option("--k", o.k, "also require at most k colors per edge");

  auto* derive = app.add_subcommand("derive", "map explained by a tree");
  derive->add_option("--tree", o.tree, "labeled-Newick tree")->required();
  derive->add_option("--out", o.out, "map output path (default stdout)");

  auto* lrt = app.add_subcommand("lrt-check", "is the tree the least-resolved tree of the map");
  lrt->add_option("--tree", o.tree, "labeled-Newick tree")->required();
  lrt->add_option("--map", o.map, "map document")->required();

  auto* forbidden = app.add_subcommand("forbidden", "search a forbidden submap");
  forbidden->add_option("--map", o.map, "map document")->required();

  auto* hier = app.add_subcommand("hierarchy-check", "is a set family hierarchy-like");
  hier->add_option("--sets", o.sets, "set family document")->required();
  hier->add_flag("--all-pairs", o.all_pairs, "pairwise reference check");

  auto* recolor = app.add_subcommand("recolor", "recolor a map by a scheme");
  recolor->add_option("--map", o.map, "map document")->required();
  recolor->add_option("--scheme", o.scheme, "scheme document")->required();
  recolor->add_option("--out", o.out, "map output path (default stdout)");

  auto* triples = app.add_subcommand("triples", "rooted triples of a map");
  triples->add_option("--map", o.map, "map document")->required();

  auto* gen = app.add_subcommand("gen", "random tree and its map");
  gen->add_option("--leaves", o.leaves, "number of leaves")->check(CLI::PositiveNumber);
  gen->add_option("--colors", o.colors, "number of colors");
  gen->add_option("--density", o.density, "probability per (edge, color)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "seed (default $FITCHKIT_SEED or 1)");
  gen->add_option("--out-tree", o.out_tree, "tree output path");
  gen->add_option("--out-map", o.out_map, "map output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*recognize) return run_recognize(o);
    if (*derive) return run_derive(o);
    if (*lrt) return run_lrt_check(o);
    if (*forbidden) return run_forbidden(o);
    if (*hier) return run_hierarchy_check(o);
    if (*recolor) return run_recolor(o);
    if (*triples) return run_triples(o);
    if (*gen) return run_gen(o);
  } catch (const fk::Error& e) {
    std::cerr << "error: " << fk::to_string(e.kind()) << ": " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
