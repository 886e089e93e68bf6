#include "lbcut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lbcut/error.hpp"
#include "lbcut/instance.hpp"

namespace lbcut {

OracleResult brute_force_mlbmc(const Graph& g, const LengthVector& constraints, std::size_t edge_cap) {
  for (Vertex v : constraints.support()) {
    if (!g.contains(v)) throw ArgumentError("terminal " + std::to_string(v) + " is not a vertex");
  }
  const std::size_t e = g.edge_count();
  if (e > edge_cap) {
    throw ResourceError("oracle: " + std::to_string(e) + " edges exceed cap " + std::to_string(edge_cap),
                        static_cast<double>(e), static_cast<double>(edge_cap));
  }
  const auto& edges = g.edges();
  std::vector<std::size_t> combo;
  EdgeSet cut;
  for (std::size_t card = 0; card <= e; ++card) {
    combo.resize(card);
    for (std::size_t k = 0; k < card; ++k) combo[k] = k;
    while (true) {
      cut.clear();
      for (std::size_t k : combo) cut.push_back(edges[k]);
      if (verify_cut(g, constraints, cut)) return {static_cast<std::uint32_t>(card), cut};
      std::size_t k = card;
      while (k > 0 && combo[k - 1] == e - card + k - 1) --k;
      if (k == 0) break;
      ++combo[k - 1];
      for (std::size_t r = k; r < card; ++r) combo[r] = combo[r - 1] + 1;
    }
  }
  // Unreachable for distinct terminals: removing everything disconnects them.
  throw InternalError("oracle: no cut satisfies the constraints");
}

OracleResult brute_force_mlbc(const Graph& g, Vertex s, Vertex t, int L, std::size_t edge_cap) {
  const CutInstance inst = CutInstance::two_terminal(g, s, t, L);
  return brute_force_mlbmc(inst.graph, inst.constraints, edge_cap);
}

// -- multicolour clique ------------------------------------------------------

std::vector<Vertex> MulticolorInstance::part(int color) const {
  std::vector<Vertex> out;
  for (int idx = 1; idx <= n; ++idx) out.push_back(vertex(color, idx));
  return out;
}

std::size_t MulticolorInstance::pair_slot(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > k || j > k) {
    throw ArgumentError("no colour pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i > j) std::swap(i, j);
  return pair_index(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k));
}

std::optional<int> MulticolorInstance::uniform_edge_count() const {
  if (edges.empty()) return std::nullopt;
  const std::size_t m = edges.front().size();
  for (const auto& list : edges) {
    if (list.size() != m) return std::nullopt;
  }
  return static_cast<int>(m);
}

void MulticolorInstance::check() const {
  if (k < 1 || n < 1) throw ArgumentError("multicolour instance needs k >= 1 and N >= 1");
  if (edges.size() != pair_count(static_cast<std::size_t>(k))) {
    throw ArgumentError("expected one edge list per colour pair");
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      std::set<Edge> seen;
      for (const Edge& e : pair_edges(i, j)) {
        if (e.u < 1 || e.v > k * n || color_of(e.u) != i || color_of(e.v) != j) {
          throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not between V_" +
                              std::to_string(i) + " and V_" + std::to_string(j));
        }
        if (!seen.insert(e).second) throw ArgumentError("duplicate cross edge");
      }
    }
  }
}

Graph MulticolorInstance::to_graph() const {
  EdgeSet all;
  for (const auto& list : edges) all.insert(all.end(), list.begin(), list.end());
  return Graph(k * n, std::move(all));
}

MulticolorInstance make_multicolor(int k, int n) {
  MulticolorInstance inst;
  inst.k = k;
  inst.n = n;
  inst.edges.resize(pair_count(static_cast<std::size_t>(std::max(k, 0))));
  return inst;
}

std::optional<std::vector<Vertex>> find_multicolor_clique(const MulticolorInstance& inst, double cap) {
  inst.check();
  const double tuples = std::pow(static_cast<double>(inst.n), inst.k);
  if (tuples > cap) throw ResourceError("clique search over N^k tuples exceeds cap", tuples, cap);
  const Graph g = inst.to_graph();
  std::vector<int> idx(static_cast<std::size_t>(inst.k), 1);
  while (true) {
    bool ok = true;
    for (int i = 0; i < inst.k && ok; ++i) {
      for (int j = i + 1; j < inst.k && ok; ++j) {
        ok = g.has_edge(inst.vertex(i + 1, idx[static_cast<std::size_t>(i)]),
                        inst.vertex(j + 1, idx[static_cast<std::size_t>(j)]));
      }
    }
    if (ok) {
      std::vector<Vertex> clique;
      for (int i = 0; i < inst.k; ++i) clique.push_back(inst.vertex(i + 1, idx[static_cast<std::size_t>(i)]));
      return clique;
    }
    int pos = inst.k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == inst.n) idx[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(pos)];
  }
}

}  // namespace lbcut
