#include "lbcut/gadgets.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "lbcut/error.hpp"

namespace lbcut {

namespace {

std::string at_tag(const std::string& tag, const std::string& what) { return tag + ":" + what; }

/// Appends the width-3 walk of a butte's interior with `base` in every bag.
void walk_butte(const Butte& b, const std::vector<Vertex>& base, std::vector<std::vector<Vertex>>& bags) {
  for (Vertex m : b.shortcut_mids) {
    auto bag = base;
    bag.push_back(m);
    bags.push_back(std::move(bag));
  }
  for (const auto& r : b.ridgeway_interiors) {
    for (std::size_t a = 0; a + 1 < r.size(); ++a) {
      auto bag = base;
      bag.push_back(r[a]);
      bag.push_back(r[a + 1]);
      bags.push_back(std::move(bag));
    }
    if (r.size() == 1) {
      auto bag = base;
      bag.push_back(r[0]);
      bags.push_back(std::move(bag));
    }
  }
}

TreeDecomposition path_of(int n, std::vector<std::vector<Vertex>> bags) {
  TreeDecomposition td;
  td.vertex_count = n;
  td.bags = std::move(bags);
  for (std::size_t i = 1; i < td.bags.size(); ++i) {
    td.tree_edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  }
  td.canonicalize();
  return td;
}

std::int64_t pow4(std::int64_t x) { return x * x * x * x; }

std::int64_t butte_interior(std::int64_t h, std::int64_t q) { return h + q * (h + 1); }

/// Uniform integer in [0, bound) from a 64-bit engine, identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

constexpr double kReductionVertexCap = 5e7;

}  // namespace

// -- butte -----------------------------------------------------------------------

Butte make_butte(GraphBuilder& builder, Vertex s, Vertex t, int h, int q, const std::string& tag) {
  if (h < 1 || q < 1) throw ArgumentError("butte needs h >= 1 and Q >= 1");
  if (s == t) throw ArgumentError("butte endpoints must differ");
  Butte b;
  b.s = s;
  b.t = t;
  b.h = h;
  b.q = q;
  for (int a = 1; a <= h; ++a) {
    const Vertex m = builder.add_vertex(at_tag(tag, "m" + std::to_string(a)));
    builder.add_edge(s, m);
    builder.add_edge(m, t);
    b.shortcut_mids.push_back(m);
    b.shortcut_edges.push_back({Edge(s, m), Edge(m, t)});
  }
  for (int r = 1; r <= q; ++r) {
    std::vector<Vertex> interior;
    std::vector<Edge> path;
    Vertex prev = s;
    for (int a = 1; a <= h + 1; ++a) {
      const Vertex v = builder.add_vertex(at_tag(tag, "r" + std::to_string(r) + "." + std::to_string(a)));
      builder.add_edge(prev, v);
      path.emplace_back(prev, v);
      interior.push_back(v);
      prev = v;
    }
    builder.add_edge(prev, t);
    path.emplace_back(prev, t);
    b.ridgeway_interiors.push_back(std::move(interior));
    b.ridgeway_edges.push_back(std::move(path));
  }
  return b;
}

ButteGraph make_butte(int h, int q) {
  GraphBuilder builder;
  const Vertex s = builder.add_vertex("s");
  const Vertex t = builder.add_vertex("t");
  Butte b = make_butte(builder, s, t, h, q);
  return {builder.build(), std::move(b)};
}

EdgeSet ridge_edges(const Butte& b) {
  EdgeSet out;
  for (const auto& sc : b.shortcut_edges) out.push_back(sc[0]);
  return normalize(out);
}

TreeDecomposition butte_path_decomposition(const ButteGraph& bg) {
  std::vector<std::vector<Vertex>> bags;
  walk_butte(bg.butte, {bg.butte.s, bg.butte.t}, bags);
  return path_of(bg.graph.vertex_count(), std::move(bags));
}

// -- highland --------------------------------------------------------------------

Highland make_highland(GraphBuilder& builder, Vertex s, Vertex t, int x, std::span<const int> high_heights,
                       std::span<const std::optional<Vertex>> junction_overrides, const std::string& tag) {
  if (x < 1) throw ArgumentError("highland needs X >= 1");
  if (high_heights.empty()) throw ArgumentError("highland needs Y >= 1");
  const std::int64_t lo = pow4(x);
  const std::int64_t hi = lo + x - 1;
  for (int h : high_heights) {
    if (h < lo || h > hi) {
      throw ArgumentError("high butte height " + std::to_string(h) + " outside [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");
    }
  }
  const std::int64_t q = lo + static_cast<std::int64_t>(x) * x;
  Highland hl;
  hl.x = x;
  hl.y = static_cast<int>(high_heights.size());
  hl.s = s;
  hl.t = t;
  hl.junctions.push_back(s);
  const int total = hl.x + hl.y;
  for (int p = 1; p <= total; ++p) {
    Vertex end;
    if (p == total) {
      end = t;
    } else if (static_cast<std::size_t>(p - 1) < junction_overrides.size() && junction_overrides[p - 1]) {
      end = *junction_overrides[p - 1];
    } else {
      end = builder.add_vertex(at_tag(tag, "J" + std::to_string(p)));
    }
    const int h = p <= x ? x * x + p : high_heights[static_cast<std::size_t>(p - x - 1)];
    hl.buttes.push_back(make_butte(builder, hl.junctions.back(), end, h, static_cast<int>(q),
                                   at_tag(tag, "B" + std::to_string(p))));
    hl.junctions.push_back(end);
  }
  hl.center = hl.junctions[static_cast<std::size_t>(x)];
  return hl;
}

HighlandGraph make_highland(int x, const std::vector<int>& high_heights) {
  GraphBuilder builder;
  const Vertex s = builder.add_vertex("s");
  const Vertex t = builder.add_vertex("t");
  Highland hl = make_highland(builder, s, t, x, high_heights);
  return {builder.build(), std::move(hl)};
}

TreeDecomposition highland_path_decomposition(const HighlandGraph& hg) {
  const Highland& hl = hg.highland;
  std::vector<std::vector<Vertex>> bags;
  for (std::size_t p = 0; p < hl.buttes.size(); ++p) {
    walk_butte(hl.buttes[p], {hl.s, hl.t, hl.center, hl.junctions[p], hl.junctions[p + 1]}, bags);
  }
  for (auto& bag : bags) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  return path_of(hg.graph.vertex_count(), std::move(bags));
}

// -- clique reduction ------------------------------------------------------------

const Butte& ReductionOutput::butte(const ButteRef& ref) const {
  return highlands.at({ref.i, ref.j}).butte(ref.position);
}

std::vector<Vertex> ReductionOutput::hub_vertices() const {
  std::vector<Vertex> hubs{s, t};
  for (const auto& [key, hl] : highlands) hubs.push_back(hl.center);
  std::sort(hubs.begin(), hubs.end());
  hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());
  return hubs;
}

std::int64_t predicted_reduction_vertex_count(const MulticolorInstance& inst) {
  inst.check();
  const auto m_opt = inst.uniform_edge_count();
  if (!m_opt || *m_opt < 1) throw ArgumentError("reduction needs the same M >= 1 for every colour pair");
  const std::int64_t k = inst.k, n = inst.n, m = *m_opt;
  const std::int64_t q = pow4(n) + n * n;
  std::int64_t count = 2;
  for (int i = 1; i <= inst.k; ++i) {
    for (int j = 1; j <= inst.k; ++j) {
      if (i == j) continue;
      count += n + m - 1;  // junctions other than s and t
      for (std::int64_t l = 1; l <= n; ++l) count += butte_interior(n * n + l, q);
      for (const Edge& e : inst.pair_edges(i, j)) {
        const Vertex mine = i < j ? e.u : e.v;
        count += butte_interior(pow4(n) + n - inst.index_of(mine), q);
      }
    }
  }
  const std::int64_t pairs = k * (k - 1) / 2;
  if (n == 1) {
    count -= pairs * (m - 1);  // merged high junctions
  } else {
    count += pairs * (m - 1) * (n - 2);
  }
  return count;
}

ReductionOutput reduce_clique_to_mlbc(const MulticolorInstance& inst) {
  inst.check();
  if (inst.k < 2) throw ArgumentError("reduction needs k >= 2");
  const auto m_opt = inst.uniform_edge_count();
  if (!m_opt || *m_opt < 1) throw ArgumentError("reduction needs the same M >= 1 for every colour pair");
  const double predicted = static_cast<double>(predicted_reduction_vertex_count(inst));
  if (predicted > kReductionVertexCap) {
    throw ResourceError("reduction graph would have " + std::to_string(static_cast<long long>(predicted)) +
                            " vertices",
                        predicted, kReductionVertexCap);
  }
  const int k = inst.k, n = inst.n, m = *m_opt;

  ReductionOutput out;
  out.k = k;
  out.n = n;
  out.m = m;
  out.L = 2 * static_cast<std::int64_t>(n + m) + pow4(n) + static_cast<std::int64_t>(n) * n + n - 1;
  out.budget = static_cast<std::int64_t>(k) * (k - 1) * (pow4(n) + static_cast<std::int64_t>(n) * n + n);

  GraphBuilder builder;
  out.s = builder.add_vertex("s");
  out.t = builder.add_vertex("t");

  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      std::vector<int> heights;
      for (const Edge& e : inst.pair_edges(i, j)) {
        const Vertex mine = i < j ? e.u : e.v;
        heights.push_back(static_cast<int>(pow4(n) + n - inst.index_of(mine)));
      }
      // A valley path of length N − 1 = 0 identifies the two junctions.
      std::vector<std::optional<Vertex>> overrides(static_cast<std::size_t>(n + m - 1));
      if (n == 1 && i > j) {
        const Highland& partner = out.highlands.at({j, i});
        for (int l = 1; l < m; ++l) {
          overrides[static_cast<std::size_t>(n + l - 1)] = partner.junctions[static_cast<std::size_t>(n + l)];
        }
      }
      const std::string tag = "H" + std::to_string(i) + "," + std::to_string(j);
      out.highlands.emplace(std::make_pair(i, j),
                            make_highland(builder, out.s, out.t, n, heights, overrides, tag));
    }
  }

  for (int i = 1; i <= k; ++i) {
    std::vector<int> others;
    for (int j = 1; j <= k; ++j) {
      if (j != i) others.push_back(j);
    }
    for (std::size_t a = 0; a + 1 < others.size(); ++a) {
      const Highland& here = out.highlands.at({i, others[a]});
      const Highland& next = out.highlands.at({i, others[a + 1]});
      for (int l = 1; l < n; ++l) {
        const Vertex u = here.junctions[static_cast<std::size_t>(l)];
        const Vertex v = next.junctions[static_cast<std::size_t>(l)];
        builder.add_edge(u, v);
        out.low_valley_edges.emplace_back(u, v);
      }
    }
  }
  normalize(out.low_valley_edges);

  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const Highland& a = out.highlands.at({i, j});
      const Highland& b = out.highlands.at({j, i});
      for (int l = 1; l < m; ++l) {
        const Vertex from = a.junctions[static_cast<std::size_t>(n + l)];
        const Vertex to = b.junctions[static_cast<std::size_t>(n + l)];
        std::vector<Vertex> path{from};
        if (n > 1) {
          Vertex prev = from;
          for (int w = 1; w <= n - 2; ++w) {
            const Vertex v = builder.add_vertex("V" + std::to_string(i) + "," + std::to_string(j) + ":" +
                                                std::to_string(l) + "." + std::to_string(w));
            builder.add_edge(prev, v);
            path.push_back(v);
            prev = v;
          }
          builder.add_edge(prev, to);
          path.push_back(to);
        }
        out.high_valley_paths.push_back(std::move(path));
      }
    }
  }

  for (int i = 1; i <= k; ++i) {
    for (int l = 1; l <= n; ++l) {
      auto& refs = out.vertex_buttes[inst.vertex(i, l)];
      for (int j = 1; j <= k; ++j) {
        if (j != i) refs.push_back({i, j, l});
      }
    }
    for (int j = i + 1; j <= k; ++j) {
      for (int l = 1; l <= m; ++l) out.edge_buttes[{i, j, l}] = {ButteRef{i, j, n + l}, ButteRef{j, i, n + l}};
    }
  }

  out.graph = builder.build();
  return out;
}

CliqueSelection clique_selection(const MulticolorInstance& inst, const std::vector<Vertex>& clique) {
  if (clique.size() != static_cast<std::size_t>(inst.k)) throw ArgumentError("clique needs one vertex per colour");
  CliqueSelection sel;
  for (int i = 1; i <= inst.k; ++i) {
    const Vertex v = clique[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > inst.k * inst.n || inst.color_of(v) != i) {
      throw ArgumentError("vertex " + std::to_string(v) + " is not in V_" + std::to_string(i));
    }
    sel.vertex_index.push_back(inst.index_of(v));
  }
  for (int i = 1; i <= inst.k; ++i) {
    for (int j = i + 1; j <= inst.k; ++j) {
      const Edge want(clique[static_cast<std::size_t>(i - 1)], clique[static_cast<std::size_t>(j - 1)]);
      const auto& list = inst.pair_edges(i, j);
      auto it = std::find(list.begin(), list.end(), want);
      if (it == list.end()) {
        throw ArgumentError("clique misses the edge between colours " + std::to_string(i) + " and " +
                            std::to_string(j));
      }
      sel.edge_index[{i, j}] = static_cast<int>(it - list.begin()) + 1;
    }
  }
  return sel;
}

EdgeSet ridge_pattern(const ReductionOutput& out, const CliqueSelection& sel) {
  if (sel.vertex_index.size() != static_cast<std::size_t>(out.k)) {
    throw ArgumentError("selection needs one vertex per colour");
  }
  EdgeSet cut;
  auto add = [&](const ButteRef& ref) {
    const auto r = ridge_edges(out.butte(ref));
    cut.insert(cut.end(), r.begin(), r.end());
  };
  for (int i = 1; i <= out.k; ++i) {
    const int l = sel.vertex_index[static_cast<std::size_t>(i - 1)];
    if (l < 1 || l > out.n) throw ArgumentError("vertex index out of range");
    for (int j = 1; j <= out.k; ++j) {
      if (j != i) add({i, j, l});
    }
  }
  for (int i = 1; i <= out.k; ++i) {
    for (int j = i + 1; j <= out.k; ++j) {
      auto it = sel.edge_index.find({i, j});
      if (it == sel.edge_index.end() || it->second < 1 || it->second > out.m) {
        throw ArgumentError("edge index missing or out of range for colours " + std::to_string(i) + "," +
                            std::to_string(j));
      }
      for (const auto& ref : out.edge_buttes.at({i, j, it->second})) add(ref);
    }
  }
  return normalize(cut);
}

EdgeSet ridge_set_for_clique(const ReductionOutput& out, const MulticolorInstance& inst,
                             const CliqueSelection& sel) {
  if (inst.k != out.k || inst.n != out.n) throw ArgumentError("instance does not match the reduction");
  if (sel.vertex_index.size() != static_cast<std::size_t>(inst.k)) {
    throw ArgumentError("selection needs one vertex per colour");
  }
  for (int i = 1; i <= inst.k; ++i) {
    for (int j = i + 1; j <= inst.k; ++j) {
      auto it = sel.edge_index.find({i, j});
      const auto& list = inst.pair_edges(i, j);
      if (it == sel.edge_index.end() || it->second < 1 || static_cast<std::size_t>(it->second) > list.size()) {
        throw ArgumentError("no chosen edge for colours " + std::to_string(i) + "," + std::to_string(j));
      }
      const Edge e = list[static_cast<std::size_t>(it->second - 1)];
      const Edge want(inst.vertex(i, sel.vertex_index[static_cast<std::size_t>(i - 1)]),
                      inst.vertex(j, sel.vertex_index[static_cast<std::size_t>(j - 1)]));
      if (e != want) {
        throw ArgumentError("chosen edge for colours " + std::to_string(i) + "," + std::to_string(j) +
                            " does not join the chosen vertices");
      }
    }
  }
  return ridge_pattern(out, sel);
}

TreeDecomposition reduction_path_decomposition(const ReductionOutput& out) {
  const std::vector<Vertex> hubs = out.hub_vertices();
  std::vector<std::vector<Vertex>> bags;
  auto junction = [&](int i, int j, int p) {
    return out.highlands.at({i, j}).junctions[static_cast<std::size_t>(p)];
  };

  // Low part of every colour: one column per butte position.
  for (int i = 1; i <= out.k; ++i) {
    for (int l = 1; l <= out.n; ++l) {
      std::vector<Vertex> base = hubs;
      for (int j = 1; j <= out.k; ++j) {
        if (j == i) continue;
        base.push_back(junction(i, j, l - 1));
        base.push_back(junction(i, j, l));
      }
      for (int j = 1; j <= out.k; ++j) {
        if (j != i) walk_butte(out.highlands.at({i, j}).butte(l), base, bags);
      }
    }
  }

  // High part of every colour pair, with the valley paths between columns.
  std::size_t valley = 0;
  for (int i = 1; i <= out.k; ++i) {
    for (int j = i + 1; j <= out.k; ++j) {
      for (int l = 1; l <= out.m; ++l) {
        const int p = out.n + l;
        std::vector<Vertex> base = hubs;
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          base.push_back(junction(a, b, p - 1));
          base.push_back(junction(a, b, p));
        }
        walk_butte(out.highlands.at({i, j}).butte(p), base, bags);
        walk_butte(out.highlands.at({j, i}).butte(p), base, bags);
        if (l < out.m) {
          const auto& path = out.high_valley_paths.at(valley++);
          for (std::size_t a = 1; a + 2 < path.size(); ++a) {
            auto bag = base;
            bag.push_back(path[a]);
            bag.push_back(path[a + 1]);
            bags.push_back(std::move(bag));
          }
          if (path.size() == 3) {
            auto bag = base;
            bag.push_back(path[1]);
            bags.push_back(std::move(bag));
          }
        }
      }
    }
  }
  for (auto& bag : bags) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  return path_of(out.graph.vertex_count(), std::move(bags));
}

// -- AND-composition -------------------------------------------------------------

CompositionOutput and_compose(const std::vector<CompositionInput>& instances, int L, std::int64_t K) {
  if (instances.empty()) throw ArgumentError("composition needs at least one instance");
  if (L < 1 || K < 0) throw ArgumentError("composition needs L >= 1 and K >= 0");
  const int n = instances.front().graph.vertex_count();
  int direct = 0;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& in = instances[idx];
    if (in.graph.vertex_count() != n) {
      throw ArgumentError("instance " + std::to_string(idx + 1) + " has " + std::to_string(in.graph.vertex_count()) +
                          " vertices, expected " + std::to_string(n));
    }
    if (!in.graph.contains(in.s) || !in.graph.contains(in.t) || in.s == in.t) {
      throw ArgumentError("instance " + std::to_string(idx + 1) + " has invalid terminals");
    }
    if (in.graph.has_edge(in.s, in.t)) ++direct;
  }
  if (direct > 1) throw ArgumentError("more than one instance has a direct s-t edge");

  CompositionOutput out;
  out.L = L;
  out.K = K;
  std::vector<std::string> labels{"s", "t"};
  EdgeSet edges;
  std::vector<std::vector<Vertex>> bags;
  int next = 3;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& in = instances[idx];
    std::vector<Vertex> map(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> bag{1, 2};
    for (Vertex v = 1; v <= n; ++v) {
      if (v == in.s) {
        map[static_cast<std::size_t>(v)] = 1;
      } else if (v == in.t) {
        map[static_cast<std::size_t>(v)] = 2;
      } else {
        map[static_cast<std::size_t>(v)] = next++;
        labels.push_back("G" + std::to_string(idx + 1) + ":" + std::to_string(v));
        bag.push_back(map[static_cast<std::size_t>(v)]);
      }
    }
    for (const Edge& e : in.graph.edges()) {
      edges.emplace_back(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    }
    bags.push_back(std::move(bag));
  }
  out.graph = Graph(next - 1, std::move(edges), std::move(labels));
  out.path = path_of(out.graph.vertex_count(), std::move(bags));
  return out;
}

// -- random instances ------------------------------------------------------------

MulticolorInstance random_multicolor_instance(int k, int n, int m, bool plant, std::uint64_t seed) {
  if (k < 1 || n < 1) throw ArgumentError("need k >= 1 and N >= 1");
  if (m < 0 || static_cast<std::int64_t>(m) > static_cast<std::int64_t>(n) * n) {
    throw ArgumentError("M must lie in [0, N^2]");
  }
  if (plant && m < 1 && k > 1) throw ArgumentError("planting a clique needs M >= 1");
  std::mt19937_64 rng(seed);
  MulticolorInstance inst = make_multicolor(k, n);
  std::vector<int> chosen(static_cast<std::size_t>(k), 0);
  if (plant) {
    for (auto& c : chosen) c = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n))) + 1;
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      std::vector<Edge> candidates;
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) candidates.emplace_back(inst.vertex(i, a), inst.vertex(j, b));
      }
      std::size_t taken = 0;
      if (plant) {
        const Edge forced(inst.vertex(i, chosen[static_cast<std::size_t>(i - 1)]),
                          inst.vertex(j, chosen[static_cast<std::size_t>(j - 1)]));
        auto it = std::find(candidates.begin(), candidates.end(), forced);
        std::iter_swap(candidates.begin(), it);
        taken = 1;
      }
      for (; taken < static_cast<std::size_t>(m); ++taken) {
        const auto pick = taken + bounded(rng, candidates.size() - taken);
        std::swap(candidates[taken], candidates[pick]);
      }
      candidates.resize(static_cast<std::size_t>(m));
      std::sort(candidates.begin(), candidates.end());
      inst.edges[inst.pair_slot(i, j)] = std::move(candidates);
    }
  }
  return inst;
}

}  // namespace lbcut
