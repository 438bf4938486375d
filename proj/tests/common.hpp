#ifndef VNUM_TESTS_COMMON_HPP
#define VNUM_TESTS_COMMON_HPP

#include <sstream>
#include <string>
#include <vector>

#include "vnum/constructions.hpp"
#include "vnum/graph.hpp"
#include "vnum/io.hpp"

namespace vnum::testing {

inline Graph path(int n) { return build(FamilySpec::path(n)).graph; }
inline Graph cycle(int n) { return build(FamilySpec::cycle(n)).graph; }
inline Graph complete(int n) { return build(FamilySpec::complete(n)).graph; }
inline Graph star(int leaves) { return build(FamilySpec::star(leaves)).graph; }

// The drawn Cohen-Macaulay closed graph: cliques of sizes 4, 3, 2, 4, 2 in a row.
inline BuiltGraph figure_h() { return build(FamilySpec::clique_path({4, 3, 2, 4, 2})); }

inline std::vector<Graph> corpus() {
  std::vector<Graph> out;
  std::istringstream in(read_file(std::string(VNUM_TEST_DATA) + "/connected_le6.g6"));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(from_graph6(line));
  return out;
}

/// The cut-set property straight from the definition, over all subsets.
inline std::vector<VertexSet> brute_cut_sets(const Graph& g) {
  std::vector<VertexSet> out;
  const VertexSet all = g.vertices();
  for (VertexSet s = 0; s <= all; ++s) {
    if ((s & ~all) != 0) continue;
    bool ok = true;
    for (Vertex v : members(s)) {
      if (component_count(g, all & ~s) <= component_count(g, all & ~(s & ~bit(v)))) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace vnum::testing

#endif
