#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lbcut {

/// Vertex ids are 1-based everywhere in the public interface.
using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

/// Sorts and deduplicates in place; returns the argument for chaining.
EdgeSet& normalize(EdgeSet& edges);

/// Immutable undirected simple graph on vertices 1..n.
///
/// Edges are kept sorted by (min id, max id) so iteration order is
/// deterministic; each edge also has a dense index into `edges()`.
class Graph {
 public:
  Graph() = default;

  /// Throws ArgumentError on self-loops or out-of-range endpoints.
  /// Duplicate edges collapse to one.
  Graph(int n, EdgeSet edges, std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const EdgeSet& edges() const noexcept { return edges_; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }
  bool has_edge(Vertex a, Vertex b) const;

  /// Index of the edge in `edges()`, or nullopt.
  std::optional<std::size_t> edge_index(Edge e) const;

  /// Neighbours of v in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const;

  /// Edge index of each entry in `neighbors(v)`.
  std::span<const std::size_t> incident_edges(Vertex v) const;

  /// Optional human-readable label; empty when absent.
  const std::string& label(Vertex v) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<std::size_t> offsets_;  // CSR offsets, size n+2
  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> adjacency_edge_;
  std::vector<std::string> labels_;
};

/// Incrementally assembles a Graph; vertex ids are allocated contiguously.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(int n) : n_(n), labels_(static_cast<std::size_t>(n)) {}

  Vertex add_vertex(std::string label = {});
  void add_edge(Vertex a, Vertex b);
  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  Graph build() const;

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<std::string> labels_;
};

/// Unweighted path length; INFINITE encodes disconnection.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint64_t value) : value_(value), finite_(true) {}

  static constexpr Distance infinite() {
    Distance d;
    d.finite_ = false;
    return d;
  }

  constexpr bool is_infinite() const noexcept { return !finite_; }
  /// Only meaningful when finite.
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Distance(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Distance a, Distance b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value_ <=> b.value_;
  }

  /// True iff this distance is at least `bound` edges.
  constexpr bool at_least(std::uint64_t bound) const noexcept {
    return is_infinite() || value_ >= bound;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool finite_ = true;
};

/// Symmetric matrix of pairwise distances indexed by 1-based vertex ids.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n);
  int size() const noexcept { return n_; }
  Distance at(Vertex u, Vertex v) const;
  void set(Vertex u, Vertex v, Distance d);

 private:
  int n_;
  std::vector<Distance> cells_;
};

/// BFS distances from `source` in (V, E \ removed). Index 0 is unused.
/// Throws ArgumentError if `removed` contains a pair that is not an edge.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const EdgeSet& removed = {});

/// Floyd–Warshall over unit edge lengths.
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace lbcut
