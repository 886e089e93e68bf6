#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "lbcut/decomposition.hpp"
#include "lbcut/error.hpp"
#include "test_support.hpp"

using namespace lbcut;
using lbcut::testing::Rng;

namespace {

Graph path(int n) {
  EdgeSet e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  EdgeSet e;
  for (int v = 1; v <= n; ++v) e.emplace_back(v, v % n + 1);
  return Graph(n, e);
}

Graph clique(int n) {
  EdgeSet e;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

TreeDecomposition make_td(int n, std::vector<std::vector<Vertex>> bags,
                          std::vector<std::pair<int, int>> edges) {
  TreeDecomposition td;
  td.vertex_count = n;
  td.bags = std::move(bags);
  td.tree_edges = std::move(edges);
  return td;
}

bool has_kind(const std::vector<Violation>& v, Violation::Kind kind) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == kind; });
}

/// Exact tree-width by trying every elimination ordering.
int exact_treewidth(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  int best = n;
  do {
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : g.edges()) {
      adj[static_cast<std::size_t>(e.u)].insert(e.v);
      adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    int width = 0;
    for (int v : order) {
      auto nb = adj[static_cast<std::size_t>(v)];
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb) {
        adj[static_cast<std::size_t>(a)].erase(v);
        for (int b : nb) {
          if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
        }
      }
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool some_bag_contains(const TreeDecomposition& td, const std::vector<Vertex>& set) {
  return std::any_of(td.bags.begin(), td.bags.end(), [&](const std::vector<Vertex>& bag) {
    return std::includes(bag.begin(), bag.end(), set.begin(), set.end());
  });
}

}  // namespace

TEST(Validate, Examples) {
  const Graph g = path(3);
  EXPECT_TRUE(validate_decomposition(g, make_td(3, {{1, 2}, {2, 3}}, {{1, 2}})).empty());

  const auto uncovered = validate_decomposition(g, make_td(3, {{1, 2}, {3}}, {{1, 2}}));
  ASSERT_TRUE(has_kind(uncovered, Violation::Kind::kEdgeUncovered));
  EXPECT_NE(uncovered.front().message.find("(2,3)"), std::string::npos);

  const auto split = validate_decomposition(g, make_td(3, {{1, 2}, {2}, {1, 2, 3}}, {{1, 2}, {2, 3}}));
  EXPECT_TRUE(has_kind(split, Violation::Kind::kVertexDisconnected));
}

TEST(Validate, TreeShapeAndRange) {
  const Graph g = path(3);
  EXPECT_TRUE(has_kind(validate_decomposition(g, make_td(3, {{1, 2}, {2, 3}}, {})),
                       Violation::Kind::kNotATree));
  EXPECT_TRUE(has_kind(validate_decomposition(g, make_td(3, {{1, 2}, {2, 3}, {2}}, {{1, 2}, {2, 3}, {1, 3}})),
                       Violation::Kind::kNotATree));
  EXPECT_TRUE(has_kind(validate_decomposition(g, make_td(3, {{1, 2}, {2, 3, 4}}, {{1, 2}})),
                       Violation::Kind::kVertexOutOfRange));
  EXPECT_TRUE(has_kind(validate_decomposition(Graph(4, {{1, 2}, {2, 3}}), make_td(4, {{1, 2}, {2, 3}}, {{1, 2}})),
                       Violation::Kind::kVertexUncovered));
}

TEST(Heuristic, TreeHasWidthOne) {
  const Graph tree(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
  const auto td = heuristic_decomposition(tree);
  EXPECT_TRUE(validate_decomposition(tree, td).empty());
  EXPECT_EQ(td.width(), 1);
}

TEST(Heuristic, CliqueAndCycle) {
  const auto k4 = heuristic_decomposition(clique(4));
  EXPECT_TRUE(validate_decomposition(clique(4), k4).empty());
  EXPECT_EQ(k4.width(), 3);

  const Graph c5 = cycle(5);
  const auto td = heuristic_decomposition(c5);
  EXPECT_TRUE(validate_decomposition(c5, td).empty());
  EXPECT_EQ(td.width(), 2);
  EXPECT_EQ(exact_treewidth(c5), 2);
}

TEST(Heuristic, DisconnectedAndEmpty) {
  const Graph g(6, {{1, 2}, {2, 3}, {5, 6}});
  const auto td = heuristic_decomposition(g);
  EXPECT_TRUE(validate_decomposition(g, td).empty());
  const Graph none(3, {});
  EXPECT_TRUE(validate_decomposition(none, heuristic_decomposition(none)).empty());
}

TEST(Heuristic, ValidOnRandomGraphsAndDeterministic) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(1, 12);
    const Graph g = lbcut::testing::random_graph(rng, n, rng.between(0, 3 * n));
    const auto td = heuristic_decomposition(g);
    EXPECT_TRUE(validate_decomposition(g, td).empty());
    EXPECT_EQ(heuristic_decomposition(g), td);
    if (n <= 7) EXPECT_GE(td.width(), exact_treewidth(g));
  }
}

TEST(Inject, AlreadyPresentIsUnchanged) {
  const auto td = make_td(4, {{1, 2}, {2, 3}, {3, 4}}, {{1, 2}, {2, 3}});
  EXPECT_EQ(inject_terminals(td, {2, 3}), td);
  const auto single = make_td(4, {{1, 2, 3, 4}}, {});
  EXPECT_EQ(inject_terminals(single, {1, 4}), single);
}

TEST(Inject, PathEnds) {
  const Graph g = path(4);
  const auto td = make_td(4, {{1, 2}, {2, 3}, {3, 4}}, {{1, 2}, {2, 3}});
  const auto out = inject_terminals(td, {1, 4});
  EXPECT_TRUE(validate_decomposition(g, out).empty());
  EXPECT_TRUE(some_bag_contains(out, {1, 4}));
  EXPECT_LE(out.width(), 2);
}

TEST(Inject, WidthGrowsByAtMostTerminalsMinusOne) {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.between(2, 12);
    const Graph g = lbcut::testing::random_connected_graph(rng, n, rng.between(0, n));
    const auto terms = lbcut::testing::random_terminals(rng, n, rng.between(2, std::min(n, 4)));
    const auto td = heuristic_decomposition(g);
    const auto out = inject_terminals(td, terms);
    EXPECT_TRUE(validate_decomposition(g, out).empty());
    EXPECT_TRUE(some_bag_contains(out, terms));
    EXPECT_LE(out.width(), td.width() + static_cast<int>(terms.size()) - 1);
  }
}

TEST(TerminalDecomposition, HasTerminalBag) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.between(2, 10);
    const Graph g = lbcut::testing::random_graph(rng, n, rng.between(0, 2 * n));
    const auto terms = lbcut::testing::random_terminals(rng, n, rng.between(2, std::min(n, 4)));
    const auto td = decomposition_for_terminals(g, terms);
    EXPECT_TRUE(validate_decomposition(g, td).empty());
    EXPECT_TRUE(some_bag_contains(td, terms));
  }
}

TEST(ParseTd, Examples) {
  const auto td = parse_td("s td 1 2 2\nb 1 1 2");
  ASSERT_EQ(td.node_count(), 1u);
  EXPECT_EQ(td.bags[0], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(td.vertex_count, 2);

  const auto two = make_td(3, {{1, 2}, {2, 3}}, {{1, 2}});
  EXPECT_EQ(parse_td(write_td(two)), two);
  EXPECT_EQ(write_td(parse_td(write_td(two))), write_td(two));

  EXPECT_THROW(parse_td("s td 3 2 3\nb 1 1 2\nb 2 2 3\nb 3 1 3\n1 2\n2 3\n1 3\n"), ParseError);
  EXPECT_THROW(parse_td("s td 2 2 3\nb 1 1 2\nb 3 2 3\n1 2\n"), ParseError);
  EXPECT_THROW(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 5\n"), ParseError);
  EXPECT_THROW(parse_td("b 1 1 2\n"), ParseError);
}

TEST(ParseTd, RoundTripsHeuristicOutput) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.between(1, 10);
    const auto td = heuristic_decomposition(lbcut::testing::random_graph(rng, n, rng.between(0, 2 * n)));
    EXPECT_EQ(parse_td(write_td(td)), td);
  }
}

TEST(MakeNice, SingleBag) {
  const Graph g(2, {{1, 2}});
  const auto nd = make_nice(make_td(2, {{1, 2}}, {}), g, {1, 2});
  EXPECT_TRUE(check_nice(nd, g, {1, 2}).empty());
  EdgeSet all;
  for (const auto& e : nd.leaf_edges) all.insert(all.end(), e.begin(), e.end());
  EXPECT_EQ(all, EdgeSet({Edge(1, 2)}));
}

TEST(MakeNice, PathWithEndTerminals) {
  const Graph g = path(3);
  const auto td = inject_terminals(heuristic_decomposition(g), {1, 3});
  const auto nd = make_nice(td, g, {1, 3});
  EXPECT_TRUE(check_nice(nd, g, {1, 3}).empty());
  const auto& root = nd.nodes[static_cast<std::size_t>(nd.root)].bag;
  const std::vector<Vertex> ends{1, 3};
  EXPECT_TRUE(std::includes(root.begin(), root.end(), ends.begin(), ends.end()));
  EdgeSet all;
  for (const auto& e : nd.leaf_edges) all.insert(all.end(), e.begin(), e.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, g.edges());
}

TEST(MakeNice, RejectsMissingRootBag) {
  const Graph g = path(3);
  EXPECT_THROW(make_nice(make_td(3, {{1, 2}, {2, 3}}, {{1, 2}}), g, {1, 3}), ArgumentError);
}

TEST(MakeNice, StructureOnRandomGraphs) {
  Rng rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.between(2, 10);
    const Graph g = lbcut::testing::random_graph(rng, n, rng.between(0, 3 * n));
    const auto terms = lbcut::testing::random_terminals(rng, n, rng.between(2, std::min(n, 3)));
    const auto td = inject_terminals(heuristic_decomposition(g), terms);
    const auto nd = make_nice(td, g, terms);
    const auto problems = check_nice(nd, g, terms);
    EXPECT_TRUE(problems.empty()) << (problems.empty() ? "" : problems.front());
    EXPECT_EQ(nd.width(), td.width());
    EXPECT_LE(nd.size(), 8 * (static_cast<std::size_t>(n) + td.node_count()));

    for (std::size_t id = 0; id < nd.size(); ++id) {
      const auto& node = nd.nodes[id];
      for (NodeId c : node.children) EXPECT_LT(c, static_cast<NodeId>(id));
      if (node.kind != NodeKind::kIntroduce) continue;
      ASSERT_NE(node.parent, kNoNode);
      const auto& parent = nd.nodes[static_cast<std::size_t>(node.parent)];
      ASSERT_EQ(parent.kind, NodeKind::kJoin);
      const NodeId other = parent.children[0] == static_cast<NodeId>(id) ? parent.children[1] : parent.children[0];
      EXPECT_EQ(nd.nodes[static_cast<std::size_t>(other)].kind, NodeKind::kLeaf);
      EXPECT_EQ(nd.nodes[static_cast<std::size_t>(other)].bag, node.bag);
    }
  }
}

TEST(AssignEdges, TriangleInOneLeaf) {
  const Graph g(3, {{1, 2}, {1, 3}, {2, 3}});
  const auto nd = make_nice(make_td(3, {{1, 2, 3}}, {}), g, {1, 2, 3});
  std::size_t owners = 0;
  for (std::size_t id = 0; id < nd.size(); ++id) {
    if (!nd.leaf_edges[id].empty()) {
      ++owners;
      EXPECT_EQ(nd.leaf_edges[id], g.edges());
    }
  }
  EXPECT_EQ(owners, 1u);
}

TEST(AssignEdges, SmallestEligibleLeafWins) {
  const Graph g(2, {{1, 2}});
  NiceDecomposition nd;
  nd.nodes.resize(3);
  nd.nodes[0] = {NodeKind::kLeaf, 0, {1, 2}, {}, 2};
  nd.nodes[1] = {NodeKind::kLeaf, 0, {1, 2}, {}, 2};
  nd.nodes[2] = {NodeKind::kJoin, 0, {1, 2}, {0, 1}, kNoNode};
  nd.root = 2;
  const auto out = assign_edges(nd, g);
  EXPECT_EQ(out.leaf_edges[0], EdgeSet({Edge(1, 2)}));
  EXPECT_TRUE(out.leaf_edges[1].empty());

  nd.nodes[0].bag = {1};
  nd.nodes[1].bag = {2};
  EXPECT_THROW(assign_edges(nd, g), StructuralError);
}

TEST(AuxiliaryGraph, JoinChildrenAreDisjointAndRootIsEverything) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.between(2, 10);
    const Graph g = lbcut::testing::random_connected_graph(rng, n, rng.between(0, 2 * n));
    const auto terms = lbcut::testing::random_terminals(rng, n, 2);
    const auto nd = make_nice(decomposition_for_terminals(g, terms), g, terms);
    for (std::size_t id = 0; id < nd.size(); ++id) {
      const auto& node = nd.nodes[id];
      if (node.kind != NodeKind::kJoin) continue;
      const auto a = auxiliary_graph(nd, node.children[0]).edges;
      const auto b = auxiliary_graph(nd, node.children[1]).edges;
      EdgeSet both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      EXPECT_TRUE(both.empty());
    }
    const auto root = auxiliary_graph(nd, nd.root);
    EXPECT_EQ(root.edges, g.edges());
    EXPECT_EQ(static_cast<int>(root.vertices.size()), n);
  }
}
