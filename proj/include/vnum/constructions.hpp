#ifndef VNUM_CONSTRUCTIONS_HPP
#define VNUM_CONSTRUCTIONS_HPP

// Generators for the named graph families with fixed, documented labellings.
//
//   path(n), cycle(n)        1..n in order (cycle closes n-1)
//   complete(n)              K_n on 1..n
//   star(m)                  K_{1,m}: centre 1, leaves 2..m+1
//   binary_tree(n)           heap order: root 1, children of i are 2i, 2i+1;
//                            node (level l, index i) is 2^l + i - 1
//   clique_path(s_1..s_t)    consecutive labels, cut vertex v_i is the last
//                            vertex of F_i and the first of F_{i+1}
//   gkr(k, r)                hub v = 1; star i: v{i}_1 = 3i-1, v{i}_2 = 3i,
//                            v{i}_3 = 3i+1; path j: u{j}_1 = 3k+2j, u{j}_2 = 3k+2j+1
//   hkm(k, m)                x = 1, x1 = 2, then y1_s, z1_s pairs, then
//                            x{i}, y{i}, z{i} triples for 2 <= i <= k
//   whiskered_complete(c)    K_m on 1..m, then c_i pendant vertices on vertex i

#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/graph.hpp"

namespace vnum {

enum class Family { path, cycle, complete, star, binary_tree, clique_path, gkr, hkm, whiskered_complete };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::binary_tree: return "binary-tree";
    case Family::clique_path: return "clique-path";
    case Family::gkr: return "gkr";
    case Family::hkm: return "hkm";
    case Family::whiskered_complete: return "whiskered-complete";
  }
  return "?";
}

inline Family parse_family(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == '_') c = '-';
  }
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::star, Family::binary_tree,
                   Family::clique_path, Family::gkr, Family::hkm, Family::whiskered_complete}) {
    if (family_name(f) == s) return f;
  }
  throw InvalidArgument("unknown family '" + s + "'");
}

struct FamilySpec {
  Family family = Family::path;
  int n = 0;               // order (path, cycle, complete), leaves (star), level (binary tree), m (whiskered complete)
  int k = 0;               // gkr, hkm
  int r = 0;               // gkr
  int m = 0;               // hkm
  std::vector<int> sizes;  // clique sizes (clique path) or whisker counts (whiskered complete)

  static FamilySpec path(int n) { return {Family::path, n, 0, 0, 0, {}}; }
  static FamilySpec cycle(int n) { return {Family::cycle, n, 0, 0, 0, {}}; }
  static FamilySpec complete(int n) { return {Family::complete, n, 0, 0, 0, {}}; }
  static FamilySpec star(int leaves) { return {Family::star, leaves, 0, 0, 0, {}}; }
  static FamilySpec binary_tree(int level) { return {Family::binary_tree, level, 0, 0, 0, {}}; }
  static FamilySpec clique_path(std::vector<int> sizes) { return {Family::clique_path, 0, 0, 0, 0, std::move(sizes)}; }
  static FamilySpec gkr(int k, int r) { return {Family::gkr, 0, k, r, 0, {}}; }
  static FamilySpec hkm(int k, int m) { return {Family::hkm, 0, k, 0, m, {}}; }
  static FamilySpec whiskered_complete(int m, std::vector<int> whiskers) {
    return {Family::whiskered_complete, m, 0, 0, 0, std::move(whiskers)};
  }

  std::string describe() const {
    auto list = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    switch (family) {
      case Family::gkr: return "gkr(" + std::to_string(k) + "," + std::to_string(r) + ")";
      case Family::hkm: return "hkm(" + std::to_string(k) + "," + std::to_string(m) + ")";
      case Family::clique_path: return "clique-path(" + list(sizes) + ")";
      case Family::whiskered_complete: return "whiskered-complete(" + std::to_string(n) + ";" + list(sizes) + ")";
      default: return family_name(family) + "(" + std::to_string(n) + ")";
    }
  }

  bool operator==(const FamilySpec&) const = default;
};

struct BuiltGraph {
  FamilySpec spec;
  Graph graph;
  std::map<std::string, Vertex> names;
};

inline Vertex binary_tree_node(int level, int index) {
  if (level < 0 || index < 1 || index > (1 << level)) {
    throw UnknownName("no binary-tree node (" + std::to_string(level) + ", " + std::to_string(index) + ")");
  }
  return (1 << level) + index - 1;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

inline std::string sub(const std::string& head, int a) { return head + std::to_string(a); }

inline std::string sub(const std::string& head, int a, int b) {
  return head + std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace detail

inline BuiltGraph build(const FamilySpec& spec) {
  using detail::require;
  using detail::sub;
  BuiltGraph out;
  out.spec = spec;
  std::vector<Edge> edges;
  int order = 0;
  auto add = [&](Vertex a, Vertex b) { edges.push_back({a, b}); };

  switch (spec.family) {
    case Family::path:
      require(spec.n >= 1, "path needs n >= 1");
      order = spec.n;
      for (Vertex i = 1; i < order; ++i) add(i, i + 1);
      break;
    case Family::cycle:
      require(spec.n >= 3, "cycle needs n >= 3");
      order = spec.n;
      for (Vertex i = 1; i < order; ++i) add(i, i + 1);
      add(1, order);
      break;
    case Family::complete:
      require(spec.n >= 1, "complete graph needs n >= 1");
      order = spec.n;
      for (Vertex i = 1; i <= order; ++i)
        for (Vertex j = i + 1; j <= order; ++j) add(i, j);
      break;
    case Family::star:
      require(spec.n >= 1, "star needs at least one leaf");
      order = spec.n + 1;
      out.names["center"] = 1;
      for (Vertex i = 2; i <= order; ++i) add(1, i);
      break;
    case Family::binary_tree:
      require(spec.n >= 0 && spec.n <= 5, "binary tree level must lie in [0, 5]");
      order = (1 << (spec.n + 1)) - 1;
      for (Vertex i = 2; i <= order; ++i) add(i / 2, i);
      break;
    case Family::clique_path: {
      require(!spec.sizes.empty(), "clique path needs at least one clique");
      Vertex first = 1;
      for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        const int s = spec.sizes[i];
        require(s >= 2, "clique sizes must be >= 2");
        const Vertex last = first + s - 1;
        for (Vertex a = first; a <= last; ++a)
          for (Vertex b = a + 1; b <= last; ++b) add(a, b);
        if (i + 1 < spec.sizes.size()) out.names[sub("v_", static_cast<int>(i) + 1)] = last;
        first = last;
      }
      order = first;
      break;
    }
    case Family::gkr: {
      require(spec.k >= 2, "G(k,r) needs k >= 2");
      require(spec.r >= 0, "G(k,r) needs r >= 0");
      order = 1 + 3 * spec.k + 2 * spec.r;
      out.names["v"] = 1;
      for (int i = 1; i <= spec.k; ++i) {
        const Vertex a = 3 * i - 1, c = 3 * i, b = 3 * i + 1;
        out.names[sub("v", i, 1)] = a;
        out.names[sub("v", i, 2)] = c;
        out.names[sub("v", i, 3)] = b;
        add(1, c);
        add(a, c);
        add(c, b);
      }
      for (int j = 1; j <= spec.r; ++j) {
        const Vertex a = 3 * spec.k + 2 * j, b = a + 1;
        out.names[sub("u", j, 1)] = a;
        out.names[sub("u", j, 2)] = b;
        add(1, a);
        add(a, b);
      }
      break;
    }
    case Family::hkm: {
      require(spec.k >= 1 && spec.k <= spec.m, "H(k,m) needs 1 <= k <= m");
      const int branches = spec.m - spec.k + 1;
      order = 2 + 2 * branches + 3 * (spec.k - 1);
      out.names["x"] = 1;
      out.names["x1"] = 2;
      add(1, 2);
      Vertex next = 3;
      for (int s = 1; s <= branches; ++s) {
        out.names[sub("y1_", s)] = next;
        out.names[sub("z1_", s)] = next + 1;
        add(2, next);
        add(next, next + 1);
        next += 2;
      }
      for (int i = 2; i <= spec.k; ++i) {
        out.names[sub("x", i)] = next;
        out.names[sub("y", i)] = next + 1;
        out.names[sub("z", i)] = next + 2;
        add(1, next);
        add(next, next + 1);
        add(next + 1, next + 2);
        next += 3;
      }
      break;
    }
    case Family::whiskered_complete: {
      const int m = spec.n;
      require(m >= 2, "whiskered complete graph needs m >= 2");
      require(static_cast<int>(spec.sizes.size()) <= m, "more whisker counts than clique vertices");
      order = m;
      for (Vertex a = 1; a <= m; ++a) {
        out.names[sub("u", a)] = a;
        for (Vertex b = a + 1; b <= m; ++b) add(a, b);
      }
      for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        require(spec.sizes[i] >= 0, "whisker counts must be >= 0");
        for (int w = 1; w <= spec.sizes[i]; ++w) {
          ++order;
          out.names[sub("w", static_cast<int>(i) + 1, w)] = order;
          add(static_cast<Vertex>(i) + 1, order);
        }
      }
      break;
    }
  }
  require(order <= kMaxGraphOrder, "family instance exceeds 64 vertices");
  out.graph = Graph(order, edges);
  return out;
}

/// Resolves a symbolic vertex name of a built family: "v", "v2_1", "u1_2",
/// "x3", "y1_2", "v_1", "center", "w2_1", "level:index" for binary trees, or a
/// plain integer label.
inline Vertex vertex_handle(const BuiltGraph& b, std::string_view name) {
  if (auto it = b.names.find(std::string(name)); it != b.names.end()) return it->second;
  if (b.spec.family == Family::binary_tree) {
    if (auto colon = name.find(':'); colon != std::string_view::npos) {
      int level = 0, index = 0;
      auto lhs = name.substr(0, colon), rhs = name.substr(colon + 1);
      auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), level);
      auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), index);
      if (r1.ec == std::errc{} && r2.ec == std::errc{} && r1.ptr == lhs.data() + lhs.size() &&
          r2.ptr == rhs.data() + rhs.size() && level <= b.spec.n) {
        return binary_tree_node(level, index);
      }
    }
  }
  int label = 0;
  auto res = std::from_chars(name.data(), name.data() + name.size(), label);
  if (res.ec == std::errc{} && res.ptr == name.data() + name.size() && label >= 1 && label <= b.graph.order()) {
    return label;
  }
  throw UnknownName("no vertex named '" + std::string(name) + "' in " + b.spec.describe());
}

}  // namespace vnum

#endif  // VNUM_CONSTRUCTIONS_HPP
