#include "fitchkit/io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace fitchkit {

using json = nlohmann::json;

ParseError::ParseError(std::size_t position, std::string expected)
    : Error(ErrorKind::kParseError,
            "parse error at offset " + std::to_string(position) + ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

// ------------------------------------------------------------------- trees

namespace {

using Vertex = EdgeLabeledTree::Vertex;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_delim(char c) {
  return is_space(c) || c == '(' || c == ')' || c == '{' || c == '}' || c == ',' || c == ':' ||
         c == ';';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : s_(text) {}

  void parse() {
    subtree(EdgeLabeledTree::kNoVertex);
    expect(';');
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "end of input");
  }

  std::vector<Vertex> parent;
  std::vector<std::optional<std::string>> leaf_name;
  std::vector<std::vector<std::string>> label;
  std::vector<std::size_t> offset;

 private:
  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(pos_, std::string("'") + c + "'");
    ++pos_;
  }
  std::string name(const char* what) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !is_delim(s_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError(pos_, what);
    return std::string(s_.substr(start, pos_ - start));
  }

  Vertex add_vertex(Vertex par) {
    const auto v = static_cast<Vertex>(parent.size());
    parent.push_back(par);
    leaf_name.emplace_back();
    label.emplace_back();
    skip();
    offset.push_back(pos_);
    return v;
  }

  Vertex subtree(Vertex par) {
    const Vertex v = add_vertex(par);
    if (!peek('(')) {
      leaf_name[v] = name("leaf name or '('");
      return v;
    }
    ++pos_;
    for (;;) {
      const Vertex c = subtree(v);
      expect(':');
      expect('{');
      if (!peek('}')) {
        label[c].push_back(name("color name or '}'"));
        while (peek(',')) {
          ++pos_;
          label[c].push_back(name("color name"));
        }
      }
      expect('}');
      if (!peek(',')) break;
      ++pos_;
    }
    expect(')');
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print_subtree(const EdgeLabeledTree& t, Vertex v, std::string& out) {
  if (t.is_leaf(v)) {
    out += t.leaves().name(t.leaf_of(v));
    return;
  }
  out += '(';
  bool first = true;
  for (Vertex c : t.children(v)) {
    if (!first) out += ',';
    first = false;
    print_subtree(t, c, out);
    std::vector<std::string> names;
    t.label(c).for_each([&](std::size_t m) { names.push_back(t.colors().name(static_cast<ColorIndex>(m))); });
    std::sort(names.begin(), names.end());
    out += ":{";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ',';
      out += names[i];
    }
    out += '}';
  }
  out += ')';
}

}  // namespace

EdgeLabeledTree parse_tree(std::string_view text, const std::optional<Colors>& colors) {
  TreeParser p(text);
  p.parse();
  const std::size_t nv = p.parent.size();

  std::vector<std::size_t> kids(nv, 0);
  for (Vertex v = 1; v < nv; ++v) ++kids[p.parent[v]];

  std::vector<std::string> leaf_names;
  for (const auto& l : p.leaf_name)
    if (l) leaf_names.push_back(*l);
  std::sort(leaf_names.begin(), leaf_names.end());
  if (auto dup = std::adjacent_find(leaf_names.begin(), leaf_names.end()); dup != leaf_names.end())
    throw Error(ErrorKind::kDuplicateName, "leaf '" + *dup + "' occurs twice");
  Leaves leaves(leaf_names);

  for (Vertex v = 0; v < nv; ++v)
    if (!p.leaf_name[v] && kids[v] == 1) {
      LeafSet below;
      for (Vertex u = v + 1; u < nv; ++u) {
        Vertex w = u;
        while (w != EdgeLabeledTree::kNoVertex && w != v) w = p.parent[w];
        if (w == v && p.leaf_name[u]) below.push_back(leaves.at(*p.leaf_name[u]));
      }
      std::sort(below.begin(), below.end());
      throw Error(ErrorKind::kDegreeViolation,
                  "vertex at offset " + std::to_string(p.offset[v]) + " with cluster " +
                      format_set(leaves, below) + " has a single child");
    }

  Colors universe;
  if (colors) {
    universe = *colors;
  } else {
    std::set<std::string> used;
    for (const auto& l : p.label) used.insert(l.begin(), l.end());
    universe = Colors(std::vector<std::string>(used.begin(), used.end()));
  }

  std::vector<std::optional<LeafIndex>> leaf_at(nv);
  std::vector<ColorSet> labels(nv, ColorSet(universe.size()));
  for (Vertex v = 0; v < nv; ++v) {
    if (p.leaf_name[v]) leaf_at[v] = leaves.at(*p.leaf_name[v]);
    for (const auto& m : p.label[v]) labels[v].set(universe.at(m));
  }
  return EdgeLabeledTree::build(std::move(leaves), std::move(universe), p.parent, leaf_at,
                                std::move(labels));
}

std::string print_tree(const EdgeLabeledTree& tree) {
  std::string out;
  print_subtree(tree, tree.root(), out);
  return out + ';';
}

// --------------------------------------------------------------- documents

namespace {

json parse_json(std::string_view doc) {
  try {
    return json::parse(doc);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "valid JSON");
  }
}

const json& field(const json& obj, const char* key, json::value_t type) {
  if (!obj.is_object()) throw Error(ErrorKind::kParseError, "expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::kParseError, std::string("missing key '") + key + "'");
  if (it->type() != type) throw Error(ErrorKind::kParseError, std::string("key '") + key + "' has the wrong type");
  return *it;
}

std::string string_of(const json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorKind::kParseError, std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> strings_of(const json& arr, const char* what) {
  if (!arr.is_array()) throw Error(ErrorKind::kParseError, std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(string_of(v, what));
  return out;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string quoted_list(const std::vector<std::string>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += quoted(xs[i]);
  }
  return out + "]";
}

}  // namespace

FitchMap parse_map(std::string_view doc) {
  const json j = parse_json(doc);
  auto leaf_names = strings_of(field(j, "leaves", json::value_t::array), "leaf");
  auto color_names = strings_of(field(j, "colors", json::value_t::array), "color");
  std::sort(leaf_names.begin(), leaf_names.end());
  std::sort(color_names.begin(), color_names.end());
  FitchMap map(std::move(leaf_names), std::move(color_names));

  auto lookup_leaf = [&](const std::string& name) {
    auto i = map.leaves().find(name);
    if (!i) throw Error(ErrorKind::kUnknownName, "undeclared leaf '" + name + "'");
    return *i;
  };
  std::set<std::pair<LeafIndex, LeafIndex>> seen;
  for (const auto& e : field(j, "entries", json::value_t::array)) {
    const LeafIndex x = lookup_leaf(string_of(field(e, "from", json::value_t::string), "from"));
    const LeafIndex y = lookup_leaf(string_of(field(e, "to", json::value_t::string), "to"));
    if (x == y) throw Error(ErrorKind::kSelfPair, "entry from '" + map.leaves().name(x) + "' to itself");
    if (!seen.emplace(x, y).second)
      throw Error(ErrorKind::kDuplicateEntry, "duplicate entry (" + map.leaves().name(x) + "," +
                                                  map.leaves().name(y) + ")");
    for (const auto& c : strings_of(field(e, "colors", json::value_t::array), "color")) {
      auto m = map.colors().find(c);
      if (!m) throw Error(ErrorKind::kUnknownName, "undeclared color '" + c + "'");
      map.add(x, y, *m);
    }
  }
  return map;
}

std::string print_map(const FitchMap& map) {
  auto sorted_indices = [](const auto& universe) {
    std::vector<std::uint32_t> idx(universe.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](auto a, auto b) { return universe.name(a) < universe.name(b); });
    return idx;
  };
  const auto leaf_order = sorted_indices(map.leaves());
  const auto color_order = sorted_indices(map.colors());

  std::vector<std::string> leaf_names, color_names;
  for (auto i : leaf_order) leaf_names.push_back(map.leaves().name(i));
  for (auto i : color_order) color_names.push_back(map.colors().name(i));

  std::string out = "{\n  \"leaves\": " + quoted_list(leaf_names) +
                    ",\n  \"colors\": " + quoted_list(color_names) + ",\n  \"entries\": [";
  bool first = true;
  for (LeafIndex x : leaf_order)
    for (LeafIndex y : leaf_order) {
      if (x == y || map.empty_entry(x, y)) continue;
      std::vector<std::string> cs;
      for (ColorIndex m : color_order)
        if (map.contains(x, y, m)) cs.push_back(map.colors().name(m));
      out += first ? "\n" : ",\n";
      first = false;
      out += "    {\"from\": " + quoted(map.leaves().name(x)) + ", \"to\": " +
             quoted(map.leaves().name(y)) + ", \"colors\": " + quoted_list(cs) + "}";
    }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

SetFamily parse_sets(std::string_view doc) {
  const json j = parse_json(doc);
  auto universe = strings_of(field(j, "universe", json::value_t::array), "universe element");
  std::vector<std::vector<std::string>> members;
  for (const auto& s : field(j, "sets", json::value_t::array))
    members.push_back(strings_of(s, "set element"));
  return SetFamily::from_names(std::move(universe), members);
}

RecoloringScheme parse_scheme(std::string_view doc) {
  const json j = parse_json(doc);
  RecoloringScheme s;
  for (const auto& p : field(j, "parts", json::value_t::array))
    s.parts.push_back(strings_of(p, "part color"));
  if (j.contains("output_colors"))
    s.output_colors = strings_of(j["output_colors"], "output color");
  if (j.contains("partition")) {
    if (!j["partition"].is_boolean()) throw Error(ErrorKind::kParseError, "partition must be a boolean");
    s.partition = j["partition"].get<bool>();
  }
  return s;
}

}  // namespace fitchkit
