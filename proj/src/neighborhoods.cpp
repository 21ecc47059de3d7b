#include "fitchkit/neighborhoods.hpp"

namespace fitchkit {

namespace {

void check_indices(const FitchMap& map, ColorIndex m, LeafIndex y) {
  if (m >= map.num_colors()) throw Error(ErrorKind::kUnknownColor, "color index out of range");
  if (y >= map.num_leaves()) throw Error(ErrorKind::kUnknownLeaf, "leaf index out of range");
}

Bitset neighborhood_bits(const FitchMap& map, ColorIndex m, LeafIndex y) {
  Bitset out(map.num_leaves());
  for (LeafIndex x = 0; x < map.num_leaves(); ++x)
    if (x == y || !map.contains(x, y, m)) out.set(x);
  return out;
}

std::uint64_t hash_words(const Bitset& b) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : b.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::variant<NeighborhoodIndex, FailFast> build(const FitchMap& map, bool guarded) {
  const std::size_t n = map.num_leaves();
  const std::size_t k = map.num_colors();

  std::vector<Bitset> bits;
  std::vector<std::uint64_t> hashes;
  std::vector<std::size_t> sizes;
  std::vector<std::pair<ColorIndex, LeafIndex>> witness;
  std::vector<ColorSet> labels;
  std::vector<std::size_t> count(n + 1, 0);
  std::vector<std::vector<std::uint32_t>> bucket(n + 1);
  std::vector<std::uint32_t> member_of(n * k);

  for (ColorIndex m = 0; m < k; ++m) {
    for (LeafIndex y = 0; y < n; ++y) {
      Bitset nb = neighborhood_bits(map, m, y);
      const std::size_t s = nb.count();
      const std::uint64_t h = hash_words(nb);

      std::uint32_t found = static_cast<std::uint32_t>(-1);
      for (std::uint32_t id : bucket[s])
        if (hashes[id] == h && bits[id] == nb) {
          found = id;
          break;
        }

      if (found == static_cast<std::uint32_t>(-1)) {
        found = static_cast<std::uint32_t>(bits.size());
        bits.push_back(std::move(nb));
        hashes.push_back(h);
        sizes.push_back(s);
        witness.emplace_back(m, y);
        labels.emplace_back(k);
        bucket[s].push_back(found);
        ++count[s];
        if (guarded && (bits.size() + 1 > 2 * n || count[s] * s > n))
          return FailFast{bits.size(), s, count[s]};
      }
      labels[found].set(m);
      member_of[static_cast<std::size_t>(m) * n + y] = found;
    }
  }

  std::vector<LeafSet> members;
  members.reserve(bits.size());
  for (const auto& b : bits) members.push_back(b.to_indices());
  return NeighborhoodIndex{SetFamily(map.leaves(), std::move(members)), std::move(witness),
                           std::move(labels), std::move(count), std::move(member_of)};
}

}  // namespace

LeafSet neighborhood(const FitchMap& map, ColorIndex m, LeafIndex y) {
  check_indices(map, m, y);
  return neighborhood_bits(map, m, y).to_indices();
}

std::vector<std::string> neighborhood(const FitchMap& map, std::string_view m,
                                      std::string_view y) {
  std::vector<std::string> out;
  for (LeafIndex x : neighborhood(map, map.colors().at(m), map.leaves().at(y)))
    out.push_back(map.leaves().name(x));
  return out;
}

std::variant<NeighborhoodIndex, FailFast> build_index(const FitchMap& map) {
  return build(map, true);
}

NeighborhoodIndex neighborhood_system(const FitchMap& map) {
  return std::get<NeighborhoodIndex>(build(map, false));
}

HierarchyVerdict check_hlc(const NeighborhoodIndex& index) {
  return is_hierarchy_like(index.system);
}

IcVerdict check_ic(const FitchMap& map, const NeighborhoodIndex& index) {
  const std::size_t n = map.num_leaves();
  if (n != index.num_leaves())
    throw Error(ErrorKind::kUniverseMismatch, "index was built for another map");
  for (ColorIndex m = 0; m < map.num_colors(); ++m)
    for (LeafIndex y = 0; y < n; ++y) {
      const LeafSet& nb = index.system[index.member(m, y)];
      for (LeafIndex y2 : nb)
        if (index.system[index.member(m, y2)].size() > nb.size())
          return IcVerdict{false, IcViolation{m, y, y2}};
    }
  return IcVerdict{};
}

KElcVerdict check_k_elc(const NeighborhoodIndex& index, std::size_t k) {
  for (std::size_t i = 0; i < index.system.size(); ++i) {
    if (index.system[i].size() == index.num_leaves()) continue;
    const std::size_t c = index.label_sets[i].count();
    if (c > k) return KElcVerdict{false, i, c};
  }
  return KElcVerdict{};
}

}  // namespace fitchkit
