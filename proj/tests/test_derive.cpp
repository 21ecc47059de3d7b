#include "doctest.h"
#include "fitchkit/derive.hpp"
#include "fitchkit/generators.hpp"
#include "fitchkit/recognition.hpp"
#include "support.hpp"

using namespace fitchkit;

namespace {
using Names = std::vector<std::string>;

Names entry(const FitchMap& map, const char* x, const char* y) {
  Names out;
  map.entry(map.leaves().at(x), map.leaves().at(y)).for_each([&](std::size_t m) {
    out.push_back(map.colors().name(static_cast<ColorIndex>(m)));
  });
  return out;
}
}  // namespace

TEST_CASE("worked three-leaf example") {
  const auto t = fixtures::tree("((a:{},b:{2}):{1},c:{});", {"1", "2"});
  for (auto mode : {DeriveMode::kFast, DeriveMode::kNaive}) {
    const FitchMap map = map_of_tree(t, mode);
    CHECK(entry(map, "a", "b") == Names{"2"});
    CHECK(entry(map, "b", "a").empty());
    CHECK(entry(map, "a", "c").empty());
    CHECK(entry(map, "c", "a") == Names{"1"});
    CHECK(entry(map, "c", "b") == Names{"1", "2"});
    CHECK(entry(map, "b", "c").empty());
  }
}

TEST_CASE("unlabeled trees give the empty map") {
  const auto t = random_tree(9, 3, 0.0, 42);
  const FitchMap map = map_of_tree(t);
  for (LeafIndex x = 0; x < 9; ++x)
    for (LeafIndex y = 0; y < 9; ++y)
      if (x != y) CHECK(map.empty_entry(x, y));
}

TEST_CASE("four-color tree map facts") {
  const FitchMap map = map_of_tree(fixtures::four_color_tree());
  CHECK(entry(map, "a", "b").empty());
  CHECK(map.contains("a", "c", "1"));
  CHECK(map.contains("c", "b", "1"));
  CHECK(entry(map, "a", "b") != entry(map, "b", "a"));
}

TEST_CASE("single leaf") {
  const auto t = fixtures::tree("a;", {"1"});
  const FitchMap map = map_of_tree(t);
  CHECK(map.num_leaves() == 1);
  CHECK(recognize(map).is_fitch());
}

TEST_CASE("fast and naive modes agree") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const auto t = random_tree(1 + seed % 20, seed % 5, 0.1 + 0.2 * static_cast<double>(seed % 4), seed);
    CHECK(map_of_tree(t, DeriveMode::kFast) == map_of_tree(t, DeriveMode::kNaive));
  }
}

TEST_CASE("recoloring") {
  const auto t = fixtures::four_color_tree();
  const FitchMap map = map_of_tree(t);

  SUBCASE("singletons rename colors") {
    const auto s = RecoloringScheme::singletons(map.colors());
    const FitchMap r = recolor_map(map, s);
    for (LeafIndex x = 0; x < 3; ++x)
      for (LeafIndex y = 0; y < 3; ++y)
        if (x != y)
          for (ColorIndex m = 0; m < 4; ++m) CHECK(r.contains(x, y, m) == map.contains(x, y, m));
    CHECK(r.colors().names() == Names{"1", "2", "3", "4"});
  }
  SUBCASE("one part collapses to presence") {
    RecoloringScheme s{{{"1", "2", "3", "4"}}, {}, true};
    const FitchMap r = recolor_map(map, s);
    for (LeafIndex x = 0; x < 3; ++x)
      for (LeafIndex y = 0; y < 3; ++y)
        if (x != y) CHECK(r.contains(x, y, 0) == !map.empty_entry(x, y));
  }
  SUBCASE("two parts") {
    RecoloringScheme s{{{"1", "2"}, {"3", "4"}}, {}, true};
    const FitchMap r = recolor_map(map, s);
    CHECK(r.contains("c", "b", "1"));
    CHECK(map_of_tree(recolor_tree(t, s)) == r);
  }
  SUBCASE("custom output names and overlap") {
    RecoloringScheme s{{{"1", "3"}, {"3"}}, {"p", "q"}, false};
    const FitchMap r = recolor_map(map, s);
    CHECK(r.colors().names() == Names{"p", "q"});
    CHECK(map_of_tree(recolor_tree(t, s)) == r);
  }
  SUBCASE("errors") {
    auto kind_of = [&](const RecoloringScheme& s) {
      try {
        recolor_map(map, s);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::kUnknownName;
    };
    CHECK(kind_of({{{"9"}}, {}, false}) == ErrorKind::kPartNotSubsetOfM);
    CHECK(kind_of({{{}}, {}, false}) == ErrorKind::kPartNotSubsetOfM);
    CHECK(kind_of({{{"1"}, {"1", "2"}}, {}, true}) == ErrorKind::kInvalidArgument);
    CHECK(kind_of({{{"1"}}, {}, true}) == ErrorKind::kInvalidArgument);
    CHECK(kind_of({{{"1"}}, {"x", "y"}, false}) == ErrorKind::kInvalidArgument);
  }
}

TEST_CASE("recoloring commutes with deriving") {
  Rng rng(11);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto t = random_tree(2 + seed % 10, 1 + seed % 4, 0.3, seed);
    RecoloringScheme s;
    const std::size_t parts = 1 + rng.below(4);
    for (std::size_t i = 0; i < parts; ++i) {
      std::vector<std::string> part;
      for (const auto& c : t.colors().names())
        if (rng.chance(0.5)) part.push_back(c);
      if (part.empty()) part.push_back(t.colors().name(0));
      s.parts.push_back(part);
    }
    const FitchMap lhs = map_of_tree(recolor_tree(t, s));
    CHECK(lhs == recolor_map(map_of_tree(t), s));
    CHECK(recognize(lhs).is_fitch());
  }
}

TEST_CASE("triples of a map") {
  CHECK(triples_of_map(fixtures::empty_map({"a", "b", "c"}, {"1"})).empty());
  const auto r = triples_of_map(map_of_tree(fixtures::four_color_tree()));
  CHECK(r.count(RootedTriple::make("a", "b", "c")) == 1);
  CHECK_THROWS_AS(triples_of_map(fixtures::empty_map({"a", "b"}, {"1"})), Error);

  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto t = random_tree(3 + seed % 9, 1 + seed % 3, 0.3, seed);
    const FitchMap map = map_of_tree(t);
    const auto triples = triples_of_map(map);
    const auto shown = displayed_triples(t);
    CHECK(std::includes(shown.begin(), shown.end(), triples.begin(), triples.end()));
    CHECK(triples == displayed_triples(*recognize(map).tree));
  }
}
