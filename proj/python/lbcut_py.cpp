#include <algorithm>
#include <map>
#include <string>
#include <optional>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lbcut/decomposition.hpp"
#include "lbcut/error.hpp"
#include "lbcut/gadgets.hpp"
#include "lbcut/io.hpp"
#include "lbcut/oracle.hpp"
#include "lbcut/solver.hpp"

namespace py = pybind11;
using namespace lbcut;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;
using BoundMap = std::map<std::pair<int, int>, int>;

Graph to_graph(int n, const EdgeList& edges) {
  EdgeSet e;
  e.reserve(edges.size());
  for (const auto& [u, v] : edges) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

EdgeList to_list(const EdgeSet& edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

/// Constraints over sorted terminals; missing pairs default to 1.
LengthVector to_constraints(std::vector<Vertex> terminals, const BoundMap& bounds) {
  std::sort(terminals.begin(), terminals.end());
  const std::size_t m = terminals.size();
  std::vector<Bound> entries(pair_count(m), 1);
  int lim = 1;
  for (const auto& [pair, bound] : bounds) {
    const auto a = std::find(terminals.begin(), terminals.end(), std::min(pair.first, pair.second));
    const auto b = std::find(terminals.begin(), terminals.end(), std::max(pair.first, pair.second));
    if (a == terminals.end() || b == terminals.end() || a == b) {
      throw ArgumentError("constraint pair (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                          ") is not a pair of distinct terminals");
    }
    if (bound < 1 || bound > kMaxLimit) throw ArgumentError("bounds must lie in [1, 65535]");
    entries[pair_index(static_cast<std::size_t>(a - terminals.begin()), static_cast<std::size_t>(b - terminals.begin()), m)] =
        static_cast<Bound>(bound);
    lim = std::max(lim, bound);
  }
  return LengthVector(terminals, entries, lim);
}

std::optional<TreeDecomposition> to_td(int n, const std::optional<std::vector<std::vector<int>>>& bags,
                                       const std::vector<std::pair<int, int>>& tree_edges) {
  if (!bags) return std::nullopt;
  TreeDecomposition td;
  td.vertex_count = n;
  td.bags = *bags;
  td.tree_edges = tree_edges;
  td.canonicalize();
  return td;
}

py::dict td_dict(const TreeDecomposition& td) {
  py::dict d;
  d["bags"] = td.bags;
  d["tree_edges"] = td.tree_edges;
  d["width"] = td.width();
  return d;
}

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["size"] = r.size;
  d["cut"] = to_list(r.cut);
  d["root_support"] = r.root_vector.support();
  d["root_entries"] = std::vector<int>(r.root_vector.entries().begin(), r.root_vector.entries().end());
  py::dict stats;
  stats["nodes"] = r.stats.nodes;
  stats["table_entries"] = r.stats.table_entries;
  stats["elapsed_ms"] = r.stats.elapsed_ms;
  stats["width"] = r.stats.width;
  stats["lim"] = r.stats.lim;
  d["stats"] = stats;
  return d;
}

py::dict oracle_dict(const OracleResult& r) {
  py::dict d;
  d["size"] = r.size;
  d["cut"] = to_list(r.cut);
  return d;
}

py::dict graph_dict(const Graph& g, Vertex s, Vertex t) {
  py::dict d;
  d["n"] = g.vertex_count();
  d["edges"] = to_list(g.edges());
  d["s"] = s;
  d["t"] = t;
  return d;
}

DpLimits limits_of(double table_cap, std::size_t leaf_edge_cap, unsigned threads) {
  return DpLimits{table_cap, leaf_edge_cap, threads};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact minimum length-bounded cuts and multi-cuts on graphs of small tree-width";

  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceError& e) {
      resource_error(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "solve_mlbc",
      [](int n, const EdgeList& edges, int s, int t, int L, std::optional<std::vector<std::vector<int>>> bags,
         std::vector<std::pair<int, int>> tree_edges, double table_cap, std::size_t leaf_edge_cap, unsigned threads) {
        const Graph g = to_graph(n, edges);
        const auto td = to_td(n, bags, tree_edges);
        py::gil_scoped_release release;
        const auto r = solve_mlbc(g, s, t, L, td, limits_of(table_cap, leaf_edge_cap, threads));
        py::gil_scoped_acquire acquire;
        return result_dict(r);
      },
      py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("t"), py::arg("L"), py::arg("bags") = py::none(),
      py::arg("tree_edges") = std::vector<std::pair<int, int>>{}, py::arg("table_cap") = 1e7,
      py::arg("leaf_edge_cap") = 20, py::arg("threads") = 1,
      "Minimum L-cut between s and t: afterwards every s-t path has more than L edges.");

  m.def(
      "solve_mlbmc",
      [](int n, const EdgeList& edges, const std::vector<int>& terminals, const BoundMap& bounds,
         std::optional<std::vector<std::vector<int>>> bags, std::vector<std::pair<int, int>> tree_edges,
         double table_cap, std::size_t leaf_edge_cap, unsigned threads) {
        const Graph g = to_graph(n, edges);
        const LengthVector a = to_constraints(terminals, bounds);
        const auto td = to_td(n, bags, tree_edges);
        py::gil_scoped_release release;
        const auto r = solve_mlbmc(g, a.support(), a, td, limits_of(table_cap, leaf_edge_cap, threads));
        py::gil_scoped_acquire acquire;
        return result_dict(r);
      },
      py::arg("n"), py::arg("edges"), py::arg("terminals"), py::arg("bounds"), py::arg("bags") = py::none(),
      py::arg("tree_edges") = std::vector<std::pair<int, int>>{}, py::arg("table_cap") = 1e7,
      py::arg("leaf_edge_cap") = 20, py::arg("threads") = 1,
      "Minimum multi-cut: afterwards terminals u, v are at distance >= bounds[(u, v)] (missing pairs: 1).");

  m.def(
      "brute_force_mlbc",
      [](int n, const EdgeList& edges, int s, int t, int L, std::size_t edge_cap) {
        return oracle_dict(brute_force_mlbc(to_graph(n, edges), s, t, L, edge_cap));
      },
      py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("t"), py::arg("L"), py::arg("edge_cap") = 20,
      "Exhaustive reference for solve_mlbc.");

  m.def(
      "brute_force_mlbmc",
      [](int n, const EdgeList& edges, const std::vector<int>& terminals, const BoundMap& bounds,
         std::size_t edge_cap) {
        return oracle_dict(brute_force_mlbmc(to_graph(n, edges), to_constraints(terminals, bounds), edge_cap));
      },
      py::arg("n"), py::arg("edges"), py::arg("terminals"), py::arg("bounds"), py::arg("edge_cap") = 20,
      "Exhaustive reference for solve_mlbmc.");

  m.def(
      "verify_cut",
      [](int n, const EdgeList& edges, const std::vector<int>& terminals, const BoundMap& bounds,
         const EdgeList& cut) {
        EdgeSet removed;
        for (const auto& [u, v] : cut) removed.emplace_back(u, v);
        return verify_cut(to_graph(n, edges), to_constraints(terminals, bounds), normalize(removed));
      },
      py::arg("n"), py::arg("edges"), py::arg("terminals"), py::arg("bounds"), py::arg("cut"),
      "True iff removing `cut` meets every bound.");

  m.def(
      "bfs_distances",
      [](int n, const EdgeList& edges, int source) {
        std::vector<std::optional<std::uint64_t>> out;
        const auto d = bfs_distances(to_graph(n, edges), source);
        for (std::size_t v = 1; v < d.size(); ++v) {
          out.push_back(d[v].is_infinite() ? std::nullopt : std::optional<std::uint64_t>(d[v].value()));
        }
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("source"),
      "Distances from `source` to vertices 1..n; None when unreachable.");

  m.def(
      "heuristic_decomposition",
      [](int n, const EdgeList& edges, const std::vector<int>& terminals) {
        const Graph g = to_graph(n, edges);
        return td_dict(terminals.empty() ? heuristic_decomposition(g) : decomposition_for_terminals(g, terminals));
      },
      py::arg("n"), py::arg("edges"), py::arg("terminals") = std::vector<int>{},
      "Min-degree tree decomposition; with terminals, some bag holds all of them.");

  m.def(
      "validate_decomposition",
      [](int n, const EdgeList& edges, const std::vector<std::vector<int>>& bags,
         const std::vector<std::pair<int, int>>& tree_edges) {
        std::vector<std::string> out;
        for (const auto& v : validate_decomposition(to_graph(n, edges), *to_td(n, bags, tree_edges))) {
          out.push_back(v.message);
        }
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("bags"), py::arg("tree_edges"),
      "Violation messages; empty when the decomposition is valid.");

  m.def(
      "count_length_vectors",
      [](std::size_t support_size, int lim) {
        std::vector<Vertex> support(support_size);
        for (std::size_t i = 0; i < support_size; ++i) support[i] = static_cast<Vertex>(i + 1);
        std::size_t count = 0;
        auto stream = enumerate_vectors(support, lim);
        while (stream.next()) ++count;
        return count;
      },
      py::arg("support_size"), py::arg("lim"),
      "Number of [1, lim] vectors on a support of this size that satisfy the triangle inequalities.");

  m.def(
      "make_butte",
      [](int h, int q) {
        const auto bg = make_butte(h, q);
        py::dict d = graph_dict(bg.graph, bg.butte.s, bg.butte.t);
        d["ridge"] = to_list(ridge_edges(bg.butte));
        return d;
      },
      py::arg("h"), py::arg("q"), "Butte with h shortcuts and q ridgeways between s = 1 and t = 2.");

  m.def(
      "make_highland",
      [](int x, const std::vector<int>& heights) {
        const auto hg = make_highland(x, heights);
        py::dict d = graph_dict(hg.graph, hg.highland.s, hg.highland.t);
        std::vector<EdgeList> ridges;
        for (const auto& b : hg.highland.buttes) ridges.push_back(to_list(ridge_edges(b)));
        d["butte_ridges"] = ridges;
        d["center"] = hg.highland.center;
        return d;
      },
      py::arg("x"), py::arg("heights"), "Highland of X low buttes followed by the given high buttes.");

  m.def(
      "random_multicolor_instance",
      [](int k, int n, int m_edges, bool plant, std::uint64_t seed) {
        const auto inst = random_multicolor_instance(k, n, m_edges, plant, seed);
        std::map<std::pair<int, int>, EdgeList> pairs;
        for (int i = 1; i <= k; ++i) {
          for (int j = i + 1; j <= k; ++j) pairs[{i, j}] = to_list(EdgeSet(inst.pair_edges(i, j)));
        }
        py::dict d;
        d["k"] = k;
        d["n"] = n;
        d["pairs"] = pairs;
        d["clique"] = find_multicolor_clique(inst);
        return d;
      },
      py::arg("k"), py::arg("n"), py::arg("m"), py::arg("plant") = false, py::arg("seed") = 0,
      "Seeded random multicolour instance with its first clique (or None).");

  m.def(
      "reduce_clique",
      [](int k, int n, int m_edges, bool plant, std::uint64_t seed) {
        const auto inst = random_multicolor_instance(k, n, m_edges, plant, seed);
        const auto out = reduce_clique_to_mlbc(inst);
        py::dict d = graph_dict(out.graph, out.s, out.t);
        d["L"] = out.L;
        d["budget"] = out.budget;
        const auto clique = find_multicolor_clique(inst);
        d["clique"] = clique;
        if (clique) {
          d["witness"] = to_list(ridge_set_for_clique(out, inst, clique_selection(inst, *clique)));
        } else {
          d["witness"] = py::none();
        }
        d["path_decomposition"] = td_dict(reduction_path_decomposition(out));
        return d;
      },
      py::arg("k"), py::arg("n"), py::arg("m"), py::arg("plant") = false, py::arg("seed") = 0,
      "Random multicolour instance reduced to an L-cut instance, with a ridge witness when a clique exists.");

  m.def(
      "parse_graph",
      [](const std::string& text) {
        const Graph g = parse_graph(text);
        py::dict d;
        d["n"] = g.vertex_count();
        d["edges"] = to_list(g.edges());
        return d;
      },
      py::arg("text"), "Parse PACE .gr text.");

  m.def(
      "write_graph", [](int n, const EdgeList& edges) { return write_graph(to_graph(n, edges)); }, py::arg("n"),
      py::arg("edges"), "Canonical PACE .gr text.");

  m.attr("__version__") = "0.1.0";
}
