#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbcut/graph.hpp"

namespace lbcut {

/// Bag tree over the vertices of a graph. Bag ids are 1-based in files and
/// in messages; `bags[i]` is bag id i + 1. Bags are sorted.
struct TreeDecomposition {
  int vertex_count = 0;
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;  // 1-based bag ids, first < second

  std::size_t node_count() const noexcept { return bags.size(); }
  /// max bag size − 1 (−1 for an empty decomposition).
  int width() const;
  /// Sorts bags and edges into canonical form.
  void canonicalize();

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct Violation {
  enum class Kind {
    kNotATree,
    kVertexOutOfRange,
    kVertexUncovered,
    kEdgeUncovered,
    kVertexDisconnected,
  };
  Kind kind;
  std::string message;
};

/// Empty iff `td` is a tree decomposition of `g`.
std::vector<Violation> validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Min-degree elimination ordering (ties to the smaller id). Disconnected
/// graphs yield one subtree per component, linked in id order.
TreeDecomposition heuristic_decomposition(const Graph& g);

/// Decomposition of g in which some bag already holds every terminal:
/// the elimination runs on g plus a clique on the terminals.
TreeDecomposition decomposition_for_terminals(const Graph& g, const std::vector<Vertex>& terminals);

/// Makes some bag contain every terminal. The anchor is the smallest-id bag
/// holding the most terminals; every missing terminal is added along the tree
/// path from its nearest occurrence to the anchor. Unchanged if a bag already
/// holds them all.
TreeDecomposition inject_terminals(const TreeDecomposition& td, const std::vector<Vertex>& terminals);

/// PACE 2017 `.td` text.
TreeDecomposition parse_td(std::string_view text);
std::string write_td(const TreeDecomposition& td);

// -- nice form ---------------------------------------------------------------

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

enum class NodeKind : std::uint8_t { kLeaf, kIntroduce, kForget, kJoin };

std::string_view to_string(NodeKind kind);

struct NiceNode {
  NodeKind kind = NodeKind::kLeaf;
  Vertex vertex = 0;  // introduced or forgotten vertex
  std::vector<Vertex> bag;
  std::vector<NodeId> children;
  NodeId parent = kNoNode;
};

/// Rooted binary decomposition with leaf/introduce/forget/join nodes in
/// which every introduce node hangs under a join whose other child is a leaf
/// with the same bag. Node ids are a post-order: children precede parents,
/// so ascending ids form a valid bottom-up schedule.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  NodeId root = kNoNode;
  /// Edges owned by each node; empty for non-leaves.
  std::vector<EdgeSet> leaf_edges;

  std::size_t size() const noexcept { return nodes.size(); }
  int width() const;
};

/// Converts `td` (which must have a bag containing `root_terminals`) into
/// nice form rooted at the smallest such bag, and assigns edges to leaves.
/// Throws ArgumentError when no bag contains the root terminals.
NiceDecomposition make_nice(const TreeDecomposition& td, const Graph& g,
                            const std::vector<Vertex>& root_terminals);

/// Gives every edge to the smallest-id leaf whose bag contains both ends.
/// Throws StructuralError when some edge has no such leaf.
NiceDecomposition assign_edges(NiceDecomposition nd, const Graph& g);

/// Lists broken nice-form invariants (empty when all hold).
std::vector<std::string> check_nice(const NiceDecomposition& nd, const Graph& g,
                                    const std::vector<Vertex>& root_terminals);

/// Vertex and edge set of the subgraph a node accounts for.
struct AuxiliaryGraphView {
  NodeId node = kNoNode;
  std::vector<Vertex> vertices;
  EdgeSet edges;
};

AuxiliaryGraphView auxiliary_graph(const NiceDecomposition& nd, NodeId node);

}  // namespace lbcut
