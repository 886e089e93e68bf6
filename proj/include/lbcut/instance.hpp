#pragma once

#include <string>
#include <vector>

#include "lbcut/graph.hpp"
#include "lbcut/length_vector.hpp"

namespace lbcut {

/// Graph + terminals + per-pair distance lower bounds.
///
/// `constraints` is a LengthVector over the sorted terminal set; it need not
/// satisfy the triangle inequalities (the multi-cut solver handles that).
struct CutInstance {
  Graph graph;
  std::vector<Vertex> terminals;
  LengthVector constraints;
  int limit = 1;

  /// Throws ArgumentError when terminals are invalid or the limit is below
  /// the largest constraint.
  void check() const;

  /// Two-terminal L-cut: a_{s,t} = L + 1 and Lim = L + 1.
  static CutInstance two_terminal(Graph g, Vertex s, Vertex t, int L);
};

/// True iff removing `cut` leaves every terminal pair at distance >= its bound.
bool verify_cut(const CutInstance& inst, const EdgeSet& cut);

/// Same check without building an instance.
bool verify_cut(const Graph& g, const LengthVector& constraints, const EdgeSet& cut);

}  // namespace lbcut
