#include "lbcut/graph.hpp"

#include <algorithm>
#include <deque>

#include "lbcut/error.hpp"

namespace lbcut {

EdgeSet& normalize(EdgeSet& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Graph::Graph(int n, EdgeSet edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0) throw ArgumentError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    if (!contains(e.u) || !contains(e.v)) {
      throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") has an endpoint outside [1," + std::to_string(n_) + "]");
    }
  }
  normalize(edges_);
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_)) {
    throw ArgumentError("label count does not match vertex count");
  }

  std::vector<std::size_t> degree(static_cast<std::size_t>(n_) + 2, 0);
  for (const Edge& e : edges_) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (int v = 1; v <= n_; ++v) {
    offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
  }
  adjacency_.resize(2 * edges_.size());
  adjacency_edge_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end());
  // Edges are sorted by (u, v), so every CSR row fills in increasing order.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[static_cast<std::size_t>(e.u)]] = e.v;
    adjacency_edge_[fill[static_cast<std::size_t>(e.u)]++] = i;
    adjacency_[fill[static_cast<std::size_t>(e.v)]] = e.u;
    adjacency_edge_[fill[static_cast<std::size_t>(e.v)]++] = i;
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(Edge(a, b)).has_value(); }

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!contains(v)) return {};
  const auto lo = offsets_[static_cast<std::size_t>(v)];
  const auto hi = offsets_[static_cast<std::size_t>(v) + 1];
  return {adjacency_.data() + lo, hi - lo};
}

std::span<const std::size_t> Graph::incident_edges(Vertex v) const {
  if (!contains(v)) return {};
  const auto lo = offsets_[static_cast<std::size_t>(v)];
  const auto hi = offsets_[static_cast<std::size_t>(v) + 1];
  return {adjacency_edge_.data() + lo, hi - lo};
}

const std::string& Graph::label(Vertex v) const {
  static const std::string kEmpty;
  if (labels_.empty() || !contains(v)) return kEmpty;
  return labels_[static_cast<std::size_t>(v - 1)];
}

Vertex GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return ++n_;
}

void GraphBuilder::add_edge(Vertex a, Vertex b) {
  if (a == b) throw ArgumentError("self-loop at vertex " + std::to_string(a));
  if (a < 1 || b < 1 || a > n_ || b > n_) throw ArgumentError("edge endpoint not allocated");
  edges_.emplace_back(a, b);
}

Graph GraphBuilder::build() const {
  const bool any_label = std::any_of(labels_.begin(), labels_.end(),
                                     [](const std::string& s) { return !s.empty(); });
  return Graph(n_, edges_, any_label ? labels_ : std::vector<std::string>{});
}

std::string Distance::to_string() const {
  return is_infinite() ? std::string("INF") : std::to_string(value_);
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Distance::infinite()) {
  for (int v = 1; v <= n; ++v) set(v, v, Distance(0));
}

Distance DistanceMatrix::at(Vertex u, Vertex v) const {
  return cells_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1)];
}

void DistanceMatrix::set(Vertex u, Vertex v, Distance d) {
  cells_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1)] = d;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const EdgeSet& removed) {
  if (!g.contains(source)) throw ArgumentError("source " + std::to_string(source) + " is not a vertex");
  std::vector<char> blocked(g.edge_count(), 0);
  for (const Edge& e : removed) {
    auto idx = g.edge_index(e);
    if (!idx) {
      throw ArgumentError("removed pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") is not an edge");
    }
    blocked[*idx] = 1;
  }
  std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()) + 1, Distance::infinite());
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = Distance(0);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const auto nbrs = g.neighbors(u);
    const auto eids = g.incident_edges(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (blocked[eids[k]]) continue;
      auto& d = dist[static_cast<std::size_t>(nbrs[k])];
      if (d.is_infinite()) {
        d = dist[static_cast<std::size_t>(u)] + Distance(1);
        queue.push_back(nbrs[k]);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix m(n);
  for (const Edge& e : g.edges()) {
    m.set(e.u, e.v, Distance(1));
    m.set(e.v, e.u, Distance(1));
  }
  for (int w = 1; w <= n; ++w) {
    for (int u = 1; u <= n; ++u) {
      const Distance uw = m.at(u, w);
      if (uw.is_infinite()) continue;
      for (int v = 1; v <= n; ++v) {
        const Distance through = uw + m.at(w, v);
        if (through < m.at(u, v)) m.set(u, v, through);
      }
    }
  }
  return m;
}

}  // namespace lbcut
