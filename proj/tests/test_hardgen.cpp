#include <cmath>
#include <algorithm>

#include <gtest/gtest.h>

#include "lbcut/error.hpp"
#include "lbcut/gadgets.hpp"
#include "lbcut/instance.hpp"
#include "lbcut/oracle.hpp"
#include "test_support.hpp"

using namespace lbcut;

namespace {

Distance dist(const Graph& g, Vertex s, Vertex t, const EdgeSet& removed = {}) {
  return bfs_distances(g, s, removed)[static_cast<std::size_t>(t)];
}

EdgeSet merged(EdgeSet a, const EdgeSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize(a);
}

/// k=2, N=2, M=1 with the single edge v1-u1.
MulticolorInstance two_by_two() {
  auto inst = make_multicolor(2, 2);
  inst.edges[inst.pair_slot(1, 2)] = {Edge(1, 3)};
  return inst;
}

bool every_bag_holds(const TreeDecomposition& td, const std::vector<Vertex>& set) {
  return std::all_of(td.bags.begin(), td.bags.end(), [&](const std::vector<Vertex>& bag) {
    return std::includes(bag.begin(), bag.end(), set.begin(), set.end());
  });
}

}  // namespace

TEST(ButteGadget, Fig2Parameters) {
  const auto bg = make_butte(3, 4);
  EXPECT_EQ(bg.graph.vertex_count(), 21);
  EXPECT_EQ(bg.graph.edge_count(), 26u);
  EXPECT_EQ(bg.butte.vertex_count(), 21u);
  EXPECT_EQ(bg.butte.edge_count(), 26u);
  EXPECT_EQ(dist(bg.graph, bg.butte.s, bg.butte.t), Distance(2));
}

TEST(ButteGadget, Smallest) {
  const auto bg = make_butte(1, 1);
  EXPECT_EQ(bg.graph.vertex_count(), 5);
  EXPECT_EQ(bg.graph.edge_count(), 5u);
  EXPECT_THROW(make_butte(0, 1), ArgumentError);
}

TEST(ButteGadget, Ridging) {
  const auto bg = make_butte(3, 4);
  const EdgeSet ridge = ridge_edges(bg.butte);
  ASSERT_EQ(ridge.size(), 3u);
  EXPECT_EQ(dist(bg.graph, 1, 2, ridge), Distance(5));
  for (std::size_t skip = 0; skip < ridge.size(); ++skip) {
    EdgeSet partial = ridge;
    partial.erase(partial.begin() + static_cast<std::ptrdiff_t>(skip));
    EXPECT_EQ(dist(bg.graph, 1, 2, partial), Distance(2));
  }
}

TEST(ButteGadget, PathDecompositionWidthThree) {
  const auto bg = make_butte(3, 4);
  const auto td = butte_path_decomposition(bg);
  EXPECT_TRUE(validate_decomposition(bg.graph, td).empty());
  EXPECT_LE(td.width(), 3);
  EXPECT_TRUE(every_bag_holds(td, {1, 2}));
}

TEST(HighlandGadget, Heights) {
  const auto hg = make_highland(2, {17});
  const auto& hl = hg.highland;
  ASSERT_EQ(hl.buttes.size(), 3u);
  EXPECT_EQ(hl.butte(1).h, 5);
  EXPECT_EQ(hl.butte(2).h, 6);
  EXPECT_EQ(hl.butte(3).h, 17);
  for (const auto& b : hl.buttes) EXPECT_EQ(b.q, 20);
  EXPECT_EQ(hl.center, hl.junctions[2]);
  EXPECT_EQ(dist(hg.graph, hl.s, hl.t), Distance(6));
}

TEST(HighlandGadget, RidgingLowAndHigh) {
  const auto hg = make_highland(2, {17});
  const auto& hl = hg.highland;
  const EdgeSet both = merged(ridge_edges(hl.butte(1)), ridge_edges(hl.butte(3)));
  EXPECT_EQ(both.size(), 22u);
  EXPECT_EQ(dist(hg.graph, hl.s, hl.t, both), Distance(28));
  EXPECT_EQ(dist(hg.graph, hl.s, hl.t, ridge_edges(hl.butte(3))), Distance(23));
}

TEST(HighlandGadget, RejectsIllegalHeights) {
  EXPECT_THROW(make_highland(2, {15}), ArgumentError);
  EXPECT_THROW(make_highland(2, {18}), ArgumentError);
  EXPECT_THROW(make_highland(2, {}), ArgumentError);
  EXPECT_NO_THROW(make_highland(2, {16, 17}));
}

TEST(HighlandGadget, PathDecomposition) {
  const auto hg = make_highland(2, {16, 17});
  const auto td = highland_path_decomposition(hg);
  EXPECT_TRUE(validate_decomposition(hg.graph, td).empty());
  std::vector<Vertex> hubs{hg.highland.s, hg.highland.t, hg.highland.center};
  std::sort(hubs.begin(), hubs.end());
  EXPECT_TRUE(every_bag_holds(td, hubs));
}

TEST(Reduction, TwoByTwoExample) {
  const auto inst = two_by_two();
  const auto out = reduce_clique_to_mlbc(inst);
  EXPECT_EQ(out.highlands.size(), 2u);
  EXPECT_EQ(out.L, 27);
  EXPECT_EQ(out.budget, 44);
  EXPECT_TRUE(out.low_valley_edges.empty());
  EXPECT_TRUE(out.high_valley_paths.empty());
  for (const auto& [key, hl] : out.highlands) {
    EXPECT_EQ(hl.butte(1).h, 5);
    EXPECT_EQ(hl.butte(2).h, 6);
    EXPECT_EQ(hl.butte(3).h, 17);
  }
  EXPECT_EQ(dist(out.graph, out.s, out.t), Distance(6));
  EXPECT_EQ(out.graph.vertex_count(), predicted_reduction_vertex_count(inst));
}

TEST(Reduction, ProvenanceIsTotal) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto inst = random_multicolor_instance(3, 2, 2, false, seed);
    const auto out = reduce_clique_to_mlbc(inst);
    EXPECT_EQ(out.vertex_buttes.size(), 6u);
    for (const auto& [v, refs] : out.vertex_buttes) EXPECT_EQ(refs.size(), 2u);
    EXPECT_EQ(out.edge_buttes.size(), 3u * 2u);
    for (const auto& [key, refs] : out.edge_buttes) {
      EXPECT_EQ(out.butte(refs[0]).h + out.butte(refs[1]).h,
                2 * (16 + 2) - inst.index_of(inst.pair_edges(std::get<0>(key), std::get<1>(key))
                                                 [static_cast<std::size_t>(std::get<2>(key) - 1)].u) -
                    inst.index_of(inst.pair_edges(std::get<0>(key), std::get<1>(key))
                                      [static_cast<std::size_t>(std::get<2>(key) - 1)].v));
    }
    EXPECT_EQ(out.graph.vertex_count(), predicted_reduction_vertex_count(inst));
    EXPECT_EQ(dist(out.graph, out.s, out.t), Distance(static_cast<std::uint64_t>(2 * (2 + 2))));
  }
}

TEST(Reduction, SizeGrowsPolynomially) {
  // High buttes have h ~ N^4 and Q ~ N^4 ridgeways, so each highland is Theta(N^8).
  std::vector<double> counts;
  for (int n = 1; n <= 32; n *= 2) {
    auto inst = make_multicolor(2, n);
    inst.edges[inst.pair_slot(1, 2)] = {Edge(1, n + 1)};
    counts.push_back(static_cast<double>(predicted_reduction_vertex_count(inst)));
  }
  for (std::size_t i = 1; i < counts.size(); ++i) {
    EXPECT_LE(counts[i] / counts[i - 1], 256.0);
    const double n = std::pow(2.0, static_cast<double>(i));
    const double prev = std::pow(2.0, static_cast<double>(i - 1));
    // count / N^8 falls toward k(k - 1) = 2 from above.
    EXPECT_LE(counts[i] / std::pow(n, 8), counts[i - 1] / std::pow(prev, 8));
    EXPECT_GE(counts[i] / std::pow(n, 8), 2.0);
  }
}

TEST(Reduction, PlantedWitnessExample) {
  const auto inst = two_by_two();
  const auto out = reduce_clique_to_mlbc(inst);
  const auto sel = clique_selection(inst, {1, 3});
  const EdgeSet cut = ridge_set_for_clique(out, inst, sel);
  EXPECT_EQ(static_cast<std::int64_t>(cut.size()), out.budget);
  EXPECT_EQ(dist(out.graph, out.s, out.t, cut), Distance(28));
  EXPECT_TRUE(verify_cut(CutInstance::two_terminal(out.graph, out.s, out.t, static_cast<int>(out.L)), cut));

  // Each highland carries exactly N⁴ + N² + N ridge edges.
  for (const auto& [key, hl] : out.highlands) {
    std::size_t inside = 0;
    for (const auto& b : hl.buttes) {
      for (const Edge& e : ridge_edges(b)) inside += std::binary_search(cut.begin(), cut.end(), e) ? 1 : 0;
    }
    EXPECT_EQ(inside, 22u);
  }

  for (std::size_t back = 0; back < cut.size(); ++back) {
    EdgeSet fewer = cut;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(back));
    EXPECT_LE(dist(out.graph, out.s, out.t, fewer), Distance(27));
  }
}

TEST(Reduction, WitnessRejectsNonClique) {
  auto inst = make_multicolor(3, 1);
  inst.edges[inst.pair_slot(1, 2)] = {Edge(1, 2)};
  inst.edges[inst.pair_slot(1, 3)] = {Edge(1, 3)};
  inst.edges[inst.pair_slot(2, 3)] = {Edge(2, 3)};
  const auto out = reduce_clique_to_mlbc(inst);
  auto sel = clique_selection(inst, {1, 2, 3});
  EXPECT_NO_THROW(ridge_set_for_clique(out, inst, sel));
  sel.edge_index[{1, 2}] = 2;
  EXPECT_THROW(ridge_set_for_clique(out, inst, sel), ArgumentError);
  EXPECT_THROW(clique_selection(two_by_two(), {2, 3}), ArgumentError);
}

TEST(Reduction, PlantedWitnessesHaveBudgetSize) {
  int checked = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int n = 1; n <= 2; ++n) {
      for (int m = 1; m <= 2; ++m) {
        if (m > n * n) continue;
        for (std::uint64_t seed = 1; seed <= 4 && checked < 20; ++seed, ++checked) {
          const auto inst = random_multicolor_instance(k, n, m, true, seed);
          const auto clique = find_multicolor_clique(inst);
          ASSERT_TRUE(clique.has_value());
          const auto out = reduce_clique_to_mlbc(inst);
          const auto cut = ridge_set_for_clique(out, inst, clique_selection(inst, *clique));
          EXPECT_EQ(static_cast<std::int64_t>(cut.size()), out.budget);
          EXPECT_EQ(out.budget, k * (k - 1) * (n * n * n * n + n * n + n));
          EXPECT_EQ(out.L, 2 * (n + m) + n * n * n * n + n * n + n - 1);
          EXPECT_TRUE(verify_cut(CutInstance::two_terminal(out.graph, out.s, out.t, static_cast<int>(out.L)), cut));
        }
      }
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Reduction, NoCliqueMeansNoRidgePatternCut) {
  std::vector<MulticolorInstance> cases;
  {
    auto inst = make_multicolor(3, 1);
    inst.edges[inst.pair_slot(1, 2)] = {Edge(1, 2)};
    inst.edges[inst.pair_slot(1, 3)] = {Edge(1, 3)};
    cases.push_back(inst);  // pair (2,3) has M = 0: not uniform, skipped below
  }
  for (std::uint64_t seed = 1; seed <= 40 && cases.size() < 4; ++seed) {
    auto inst = random_multicolor_instance(3, 2, 1, false, seed);
    if (!find_multicolor_clique(inst)) cases.push_back(inst);
  }
  {
    auto inst = make_multicolor(2, 2);
    inst.edges[inst.pair_slot(1, 2)] = {Edge(1, 3)};
    cases.push_back(inst);  // has a clique; kept as a positive control
  }
  int negatives = 0;
  for (const auto& inst : cases) {
    const auto m = inst.uniform_edge_count();
    if (!m || *m < 1) continue;
    const bool has_clique = find_multicolor_clique(inst).has_value();
    negatives += has_clique ? 0 : 1;
    const auto out = reduce_clique_to_mlbc(inst);
    const auto lcut = CutInstance::two_terminal(out.graph, out.s, out.t, static_cast<int>(out.L));
    bool any = false;
    std::vector<int> vidx(static_cast<std::size_t>(inst.k), 1);
    const int pairs = static_cast<int>(pair_count(static_cast<std::size_t>(inst.k)));
    std::vector<int> eidx(static_cast<std::size_t>(pairs), 1);
    while (true) {
      CliqueSelection sel;
      sel.vertex_index = vidx;
      int slot = 0;
      for (int i = 1; i <= inst.k; ++i) {
        for (int j = i + 1; j <= inst.k; ++j) sel.edge_index[{i, j}] = eidx[static_cast<std::size_t>(slot++)];
      }
      const EdgeSet cut = ridge_pattern(out, sel);
      if (static_cast<std::int64_t>(cut.size()) <= out.budget && verify_cut(lcut, cut)) any = true;
      // Advance the odometer over vertex then edge choices.
      int p = pairs - 1;
      while (p >= 0 && eidx[static_cast<std::size_t>(p)] == *m) eidx[static_cast<std::size_t>(p--)] = 1;
      if (p >= 0) {
        ++eidx[static_cast<std::size_t>(p)];
        continue;
      }
      int q = inst.k - 1;
      while (q >= 0 && vidx[static_cast<std::size_t>(q)] == inst.n) vidx[static_cast<std::size_t>(q--)] = 1;
      if (q < 0) break;
      ++vidx[static_cast<std::size_t>(q)];
    }
    EXPECT_EQ(any, has_clique);
  }
  EXPECT_GE(negatives, 1);
}

TEST(Reduction, PathDecompositionIsValidAndFlat) {
  // N = 2 columns have a hub at each end, so the full width needs N >= 3.
  std::vector<int> widths;
  for (int n = 2; n <= 5; ++n) {
    auto inst = make_multicolor(2, n);
    inst.edges[inst.pair_slot(1, 2)] = {Edge(1, n + 1)};
    const auto out = reduce_clique_to_mlbc(inst);
    const auto td = reduction_path_decomposition(out);
    EXPECT_TRUE(validate_decomposition(out.graph, td).empty()) << "N=" << n;
    EXPECT_TRUE(every_bag_holds(td, out.hub_vertices()));
    EXPECT_EQ(out.hub_vertices().size(), 4u);
    widths.push_back(td.width());
  }
  // |U| + 2(k - 1) + 2 walk vertices, minus one.
  EXPECT_EQ(widths[1], 4 + 2 + 1);
  EXPECT_EQ(widths[1], widths[2]);
  EXPECT_EQ(widths[2], widths[3]);
  EXPECT_EQ(widths[0], widths[1] - 1);
}

TEST(Reduction, PathDecompositionWithValleys) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = random_multicolor_instance(3, 2, 3, seed == 1, seed);
    const auto out = reduce_clique_to_mlbc(inst);
    EXPECT_FALSE(out.low_valley_edges.empty());
    EXPECT_FALSE(out.high_valley_paths.empty());
    const auto td = reduction_path_decomposition(out);
    EXPECT_TRUE(validate_decomposition(out.graph, td).empty());
    EXPECT_TRUE(every_bag_holds(td, out.hub_vertices()));
    EXPECT_LE(td.width(), 8 + 4 + 1);
  }
  // Once low and high columns both have interior junctions the width is fixed.
  std::vector<int> widths;
  for (int m = 3; m <= 5; ++m) {
    const auto out = reduce_clique_to_mlbc(random_multicolor_instance(3, 3, m, false, 9));
    const auto td = reduction_path_decomposition(out);
    EXPECT_TRUE(validate_decomposition(out.graph, td).empty()) << "M=" << m;
    widths.push_back(td.width());
  }
  EXPECT_EQ(widths[0], 8 + 4 + 1);
  EXPECT_EQ(widths[0], widths[1]);
  EXPECT_EQ(widths[1], widths[2]);
}

TEST(Reduction, SingleVertexColours) {
  auto inst = make_multicolor(3, 1);
  inst.edges[inst.pair_slot(1, 2)] = {Edge(1, 2)};
  inst.edges[inst.pair_slot(1, 3)] = {Edge(1, 3)};
  inst.edges[inst.pair_slot(2, 3)] = {Edge(2, 3)};
  const auto out = reduce_clique_to_mlbc(inst);
  EXPECT_TRUE(validate_decomposition(out.graph, reduction_path_decomposition(out)).empty());
  const auto cut = ridge_set_for_clique(out, inst, clique_selection(inst, {1, 2, 3}));
  EXPECT_TRUE(verify_cut(CutInstance::two_terminal(out.graph, out.s, out.t, static_cast<int>(out.L)), cut));
}

TEST(Composition, SingleInstanceIsACopy) {
  const Graph g(4, {{1, 3}, {3, 4}, {4, 2}, {1, 2}});
  const auto out = and_compose({{g, 1, 2}}, 2, 1);
  EXPECT_EQ(out.graph.vertex_count(), 4);
  EXPECT_EQ(out.graph.edge_count(), 4u);
  EXPECT_EQ(brute_force_mlbc(out.graph, out.s, out.t, 2).size, brute_force_mlbc(g, 1, 2, 2).size);
  EXPECT_TRUE(validate_decomposition(out.graph, out.path).empty());
}

TEST(Composition, TwoInstancesAddUp) {
  const Graph a(4, {{1, 3}, {3, 2}, {1, 4}, {4, 2}});
  const Graph b(4, {{1, 2}, {1, 3}, {3, 4}, {4, 2}});
  const auto out = and_compose({{a, 1, 2}, {b, 1, 2}}, 3, 2);
  EXPECT_EQ(out.graph.vertex_count(), 6);
  EXPECT_TRUE(validate_decomposition(out.graph, out.path).empty());
  EXPECT_LE(out.path.width(), 4 + 1);
  for (int L = 1; L <= 4; ++L) {
    EXPECT_EQ(brute_force_mlbc(out.graph, 1, 2, L).size,
              brute_force_mlbc(a, 1, 2, L).size + brute_force_mlbc(b, 1, 2, L).size);
  }
}

TEST(Composition, RejectsMismatch) {
  const Graph a(3, {{1, 3}, {3, 2}});
  const Graph b(4, {{1, 3}, {3, 2}, {2, 4}});
  EXPECT_THROW(and_compose({{a, 1, 2}, {b, 1, 2}}, 2, 1), ArgumentError);
  EXPECT_THROW(and_compose({}, 2, 1), ArgumentError);
  EXPECT_THROW(and_compose({{a, 1, 1}}, 2, 1), ArgumentError);
}

TEST(RandomInstances, DeterministicAndPlanted) {
  const auto a = random_multicolor_instance(3, 3, 4, true, 77);
  const auto b = random_multicolor_instance(3, 3, 4, true, 77);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_TRUE(find_multicolor_clique(a).has_value());
  EXPECT_EQ(a.uniform_edge_count(), 4);
  for (const auto& list : a.edges) EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
  EXPECT_THROW(random_multicolor_instance(2, 2, 5, false, 1), ArgumentError);
}

TEST(RandomInstances, SomeSeedsHaveNoClique) {
  int none = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    if (!find_multicolor_clique(random_multicolor_instance(3, 2, 1, false, seed))) ++none;
  }
  EXPECT_GT(none, 0);
}
