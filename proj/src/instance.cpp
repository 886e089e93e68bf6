#include "lbcut/instance.hpp"

#include <algorithm>

#include "lbcut/error.hpp"

namespace lbcut {

void CutInstance::check() const {
  std::vector<Vertex> sorted = terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("terminals must be distinct");
  }
  for (Vertex v : sorted) {
    if (!graph.contains(v)) throw ArgumentError("terminal " + std::to_string(v) + " is not a vertex");
  }
  if (constraints.support() != sorted) throw ArgumentError("constraints must range over the terminals");
  const auto entries = constraints.entries();
  const int largest = entries.empty() ? 1 : *std::max_element(entries.begin(), entries.end());
  if (limit < largest) {
    throw ArgumentError("limit " + std::to_string(limit) + " below largest constraint " + std::to_string(largest));
  }
}

CutInstance CutInstance::two_terminal(Graph g, Vertex s, Vertex t, int L) {
  if (L < 1) throw ArgumentError("L must be at least 1");
  if (s == t) throw ArgumentError("s and t must differ");
  if (!g.contains(s) || !g.contains(t)) throw ArgumentError("s or t is not a vertex");
  std::vector<Vertex> support{std::min(s, t), std::max(s, t)};
  LengthVector a(support, {static_cast<Bound>(L + 1)}, L + 1);
  CutInstance inst{std::move(g), {s, t}, std::move(a), L + 1};
  return inst;
}

bool verify_cut(const Graph& g, const LengthVector& constraints, const EdgeSet& cut) {
  const auto& support = constraints.support();
  const std::size_t m = support.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto dist = bfs_distances(g, support[i], cut);
    for (std::size_t j = i + 1; j < m; ++j) {
      const Bound need = constraints.entries()[pair_index(i, j, m)];
      if (!dist[static_cast<std::size_t>(support[j])].at_least(need)) return false;
    }
  }
  return true;
}

bool verify_cut(const CutInstance& inst, const EdgeSet& cut) {
  return verify_cut(inst.graph, inst.constraints, cut);
}

}  // namespace lbcut
