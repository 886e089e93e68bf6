#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "lbcut/decomposition.hpp"
#include "lbcut/graph.hpp"
#include "lbcut/oracle.hpp"

namespace lbcut {

// -- butte -------------------------------------------------------------------

/// Two-terminal gadget: h shortcuts (s-m-t) and Q ridgeways of length h + 2.
struct Butte {
  Vertex s = 0;
  Vertex t = 0;
  int h = 0;
  int q = 0;
  std::vector<Vertex> shortcut_mids;
  std::vector<std::vector<Vertex>> ridgeway_interiors;  // h + 1 vertices each, s side first
  std::vector<std::array<Edge, 2>> shortcut_edges;      // (s,m), (m,t)
  std::vector<std::vector<Edge>> ridgeway_edges;        // h + 2 edges each, s side first

  std::size_t vertex_count() const { return 2 + shortcut_mids.size() + ridgeway_interiors.size() * (h + 1); }
  std::size_t edge_count() const { return 2 * shortcut_edges.size() + ridgeway_edges.size() * (h + 2); }
};

/// Adds a butte between existing vertices s and t. Requires h, q >= 1.
Butte make_butte(GraphBuilder& builder, Vertex s, Vertex t, int h, int q,
                 const std::string& tag = "B");

struct ButteGraph {
  Graph graph;
  Butte butte;
};

/// Standalone butte with s = 1 and t = 2.
ButteGraph make_butte(int h, int q);

/// First edge of every shortcut.
EdgeSet ridge_edges(const Butte& b);

/// Width-3 path decomposition: {s, t} plus at most two interior vertices.
TreeDecomposition butte_path_decomposition(const ButteGraph& bg);

// -- highland ----------------------------------------------------------------

/// X low buttes of heights X² + i followed by Y high buttes, all with
/// Q = X⁴ + X², chained from s to t.
struct Highland {
  int x = 0;
  int y = 0;
  Vertex s = 0;
  Vertex t = 0;
  Vertex center = 0;
  std::vector<Butte> buttes;
  /// junctions[p] = t(B_p) for p = 0..X+Y, with junctions[0] = s.
  std::vector<Vertex> junctions;

  /// 1-based position.
  const Butte& butte(int position) const { return buttes.at(static_cast<std::size_t>(position - 1)); }
};

/// `junction_overrides[p - 1]`, when set, is used as t(B_p) instead of a
/// fresh vertex (p < X + Y). Throws ArgumentError for an illegal high height.
Highland make_highland(GraphBuilder& builder, Vertex s, Vertex t, int x,
                       std::span<const int> high_heights,
                       std::span<const std::optional<Vertex>> junction_overrides = {},
                       const std::string& tag = "H");

struct HighlandGraph {
  Graph graph;
  Highland highland;
};

/// Standalone highland with s = 1 and t = 2.
HighlandGraph make_highland(int x, const std::vector<int>& high_heights);

/// Path decomposition sweeping the buttes in order with {s, t, center} in
/// every bag.
TreeDecomposition highland_path_decomposition(const HighlandGraph& hg);

// -- clique reduction --------------------------------------------------------

struct ButteRef {
  int i = 0;
  int j = 0;
  int position = 0;
  friend auto operator<=>(const ButteRef&, const ButteRef&) = default;
};

/// Multicolour-clique instance turned into an L-cut instance.
struct ReductionOutput {
  Graph graph;
  Vertex s = 0;
  Vertex t = 0;
  int k = 0;
  int n = 0;
  int m = 0;
  std::int64_t L = 0;
  std::int64_t budget = 0;
  /// Highland H^{i,j} for every ordered pair i != j.
  std::map<std::pair<int, int>, Highland> highlands;
  /// Source vertex -> its k - 1 low buttes.
  std::map<Vertex, std::vector<ButteRef>> vertex_buttes;
  /// (i, j, ℓ) with i < j -> the two high buttes of edge e_ℓ of E_ij.
  std::map<std::tuple<int, int, int>, std::array<ButteRef, 2>> edge_buttes;
  /// Low valley edges and high valley paths (vertex sequences, endpoints included).
  EdgeSet low_valley_edges;
  std::vector<std::vector<Vertex>> high_valley_paths;

  const Butte& butte(const ButteRef& ref) const;
  std::vector<Vertex> hub_vertices() const;  // s, t and every highland center
};

/// Requires k >= 2, N >= 1 and a uniform M >= 1.
ReductionOutput reduce_clique_to_mlbc(const MulticolorInstance& inst);

/// One vertex per colour plus the index (1..M) of the chosen edge of every
/// colour pair, keyed by (i, j) with i < j.
struct CliqueSelection {
  std::vector<int> vertex_index;  // per colour, 1..N
  std::map<std::pair<int, int>, int> edge_index;
};

/// Picks, for each colour pair, the first listed edge joining the chosen
/// vertices. Throws ArgumentError when some pair has none.
CliqueSelection clique_selection(const MulticolorInstance& inst, const std::vector<Vertex>& clique);

/// Ridge edges of every low butte of the chosen vertices and both high
/// buttes of the chosen edges, without checking consistency.
EdgeSet ridge_pattern(const ReductionOutput& out, const CliqueSelection& sel);

/// As ridge_pattern, but throws ArgumentError unless `sel` is a clique of
/// `inst` whose chosen edges join the chosen vertices.
EdgeSet ridge_set_for_clique(const ReductionOutput& out, const MulticolorInstance& inst,
                             const CliqueSelection& sel);

/// Path decomposition of the reduction graph; every bag contains the hubs.
TreeDecomposition reduction_path_decomposition(const ReductionOutput& out);

/// Vertex count predicted from the butte formulas (heights depend on the
/// edge lists, so the instance is needed, not just k, N, M).
std::int64_t predicted_reduction_vertex_count(const MulticolorInstance& inst);

// -- AND-composition ---------------------------------------------------------

struct CompositionInput {
  Graph graph;
  Vertex s = 0;
  Vertex t = 0;
};

struct CompositionOutput {
  Graph graph;
  Vertex s = 1;
  Vertex t = 2;
  int L = 0;
  std::int64_t K = 0;
  TreeDecomposition path;
};

/// Disjoint union with all sources merged into s = 1 and all sinks into
/// t = 2; the remaining vertices follow in input order. Throws ArgumentError
/// on empty input, unequal vertex counts, s_i = t_i, or when more than one
/// instance has the edge {s_i, t_i} (it would become a parallel edge).
CompositionOutput and_compose(const std::vector<CompositionInput>& instances, int L, std::int64_t K);

// -- random instances --------------------------------------------------------

/// Deterministic given the seed. With `plant`, the edges of a uniformly
/// chosen clique are drawn first. Edge lists are sorted. Requires M <= N²
/// (and M >= 1 with `plant`).
MulticolorInstance random_multicolor_instance(int k, int n, int m, bool plant, std::uint64_t seed);

}  // namespace lbcut
