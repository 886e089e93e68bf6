#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbcut/graph.hpp"
#include "lbcut/length_vector.hpp"

namespace lbcut {

struct OracleResult {
  std::uint32_t size = 0;
  EdgeSet cut;
};

/// Exhaustive multi-cut search by increasing cardinality; the returned set is
/// the lexicographically smallest accepted set of minimum size.
/// Throws ResourceError when the graph has more than `edge_cap` edges.
OracleResult brute_force_mlbmc(const Graph& g, const LengthVector& constraints,
                               std::size_t edge_cap = 20);

/// brute_force_mlbmc with the single constraint a_{s,t} = L + 1.
OracleResult brute_force_mlbc(const Graph& g, Vertex s, Vertex t, int L,
                              std::size_t edge_cap = 20);

/// k-partite graph with colour classes V_1..V_k of size N and, per colour
/// pair i < j, a list E_ij of cross edges.
///
/// Vertex ids are 1..kN with V_i = {(i-1)N + 1, ..., iN}.
struct MulticolorInstance {
  int k = 0;
  int n = 0;  // N: part size
  /// edges[pair_slot(i, j)] lists E_ij as (u in V_i, v in V_j), 1-based colours.
  std::vector<std::vector<Edge>> edges;

  Vertex vertex(int color, int index) const { return (color - 1) * n + index; }
  int color_of(Vertex v) const { return (v - 1) / n + 1; }
  int index_of(Vertex v) const { return (v - 1) % n + 1; }
  std::vector<Vertex> part(int color) const;

  std::size_t pair_slot(int i, int j) const;
  const std::vector<Edge>& pair_edges(int i, int j) const { return edges.at(pair_slot(i, j)); }

  /// M when every pair has the same edge count, otherwise nullopt.
  std::optional<int> uniform_edge_count() const;

  /// Throws ArgumentError on malformed parts or edges.
  void check() const;

  Graph to_graph() const;
};

/// Empty instance skeleton with k colours of size n.
MulticolorInstance make_multicolor(int k, int n);

/// Exhaustive search over the N^k choices in lexicographic order.
/// Returns one vertex per colour, or nullopt. Throws ResourceError when
/// N^k > cap.
std::optional<std::vector<Vertex>> find_multicolor_clique(const MulticolorInstance& inst,
                                                          double cap = 1e7);

}  // namespace lbcut
