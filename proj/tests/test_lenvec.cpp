#include <set>

#include <gtest/gtest.h>

#include "lbcut/error.hpp"
#include "lbcut/length_vector.hpp"

using namespace lbcut;

namespace {

std::vector<Vertex> support_of(std::size_t m) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(static_cast<Vertex>(2 * i + 1));
  return out;
}

/// All of [1, lim]^p in lexicographic order.
std::vector<std::vector<Bound>> all_boxes(std::size_t p, int lim) {
  std::vector<std::vector<Bound>> out;
  std::vector<Bound> cur(p, 1);
  while (true) {
    out.push_back(cur);
    std::size_t k = p;
    while (k > 0 && cur[k - 1] == lim) cur[--k] = 1;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

/// Triangle filter written directly from the definition, over ordered triples.
bool triangle_by_definition(const std::vector<Bound>& e, std::size_t m) {
  auto at = [&](std::size_t a, std::size_t b) { return e[pair_index(std::min(a, b), std::max(a, b), m)]; };
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        if (u == v || v == w || u == w) continue;
        if (at(u, w) + at(w, v) < at(u, v)) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Bound>> stream_all(const std::vector<Vertex>& support, int lim) {
  std::vector<std::vector<Bound>> out;
  auto stream = enumerate_vectors(support, lim);
  while (stream.next()) out.emplace_back(stream.entries().begin(), stream.entries().end());
  return out;
}

}  // namespace

TEST(Triangle, Examples) {
  EXPECT_TRUE(satisfies_triangle(std::vector<Bound>{5}, 2));
  EXPECT_FALSE(satisfies_triangle(std::vector<Bound>{1, 1, 3}, 3));
  EXPECT_TRUE(satisfies_triangle(std::vector<Bound>{2, 2, 2}, 3));
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(stream_all({1, 2}, 2).size(), 2u);
  EXPECT_EQ(stream_all({1, 2, 3}, 2).size(), 8u);
  EXPECT_EQ(stream_all({1, 2, 3}, 3).size(), 24u);
}

TEST(Enumerate, MatchesBruteForceFilter) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int lim = 1; lim <= 4; ++lim) {
      std::vector<std::vector<Bound>> expected;
      for (auto& box : all_boxes(pair_count(m), lim)) {
        if (triangle_by_definition(box, m)) expected.push_back(box);
      }
      EXPECT_EQ(stream_all(support_of(m), lim), expected) << "m=" << m << " lim=" << lim;
    }
  }
}

TEST(Enumerate, ContractionStaysTriangle) {
  const auto support = support_of(4);
  auto stream = enumerate_vectors(support, 3);
  while (stream.next()) {
    const LengthVector a = stream.current();
    EXPECT_TRUE(satisfies_triangle(contract(a, {1, 5, 7})));
    EXPECT_TRUE(satisfies_triangle(contract(a, {3, 7})));
  }
}

TEST(Enumerate, CollectRespectsCap) {
  EXPECT_THROW(collect_vectors(support_of(5), 5, 1e3), ResourceError);
  EXPECT_EQ(collect_vectors(support_of(3), 3).size(), 24u);
}

TEST(Dominates, Examples) {
  const LengthVector a({1, 2, 3}, {1, 2, 1}, 2);
  const LengthVector b({1, 2, 3}, {2, 2, 2}, 2);
  EXPECT_TRUE(dominates(a, a));
  EXPECT_TRUE(dominates(a, b));
  EXPECT_FALSE(dominates(b, a));
  const LengthVector c({1, 2}, {2}, 2);
  EXPECT_THROW(dominates(a, c), ArgumentError);
}

TEST(Dominates, PartialOrderLaws) {
  const auto all = collect_vectors({1, 2, 3}, 3);
  for (const auto& a : all) {
    EXPECT_TRUE(dominates(a, a));
    for (const auto& b : all) {
      if (dominates(a, b) && dominates(b, a)) EXPECT_EQ(a, b);
      if (!dominates(a, b)) continue;
      for (const auto& c : all) {
        if (dominates(b, c)) EXPECT_TRUE(dominates(a, c));
      }
    }
  }
}

TEST(Contract, Examples) {
  const LengthVector a({1, 2, 3}, {2, 3, 1}, 3);
  EXPECT_EQ(contract(a, {1, 2, 3}), a);
  EXPECT_EQ(contract(a, {1, 2}).entries()[0], 2);
  EXPECT_TRUE(contract(a, {2}).entries().empty());
  EXPECT_THROW(contract(a, {1, 4}), ArgumentError);
}

TEST(Augment, TwoTerminalLimitTwo) {
  const LengthVector a({1, 3}, {2}, 2);
  std::set<std::vector<Bound>> got;
  auto stream = augmentations(a, {1, 2, 3}, 2);
  while (stream.next()) got.emplace(stream.entries().begin(), stream.entries().end());
  // Support {1,2,3}: pairs (1,2), (1,3), (2,3); b_{1,3} = 2 is fixed.
  EXPECT_EQ(got, (std::set<std::vector<Bound>>{{1, 2, 1}, {1, 2, 2}, {2, 2, 1}, {2, 2, 2}}));
}

TEST(Augment, TwoTerminalLimitThree) {
  const LengthVector a({1, 3}, {3}, 3);
  std::size_t count = 0;
  auto stream = augmentations(a, {1, 2, 3}, 3);
  while (stream.next()) {
    ++count;
    EXPECT_FALSE(stream.entries()[0] == 1 && stream.entries()[2] == 1);
  }
  EXPECT_EQ(count, 8u);
}

TEST(Augment, SingletonBase) {
  const LengthVector a({4}, {}, 5);
  std::size_t count = 0;
  auto stream = augmentations(a, {2, 4}, 5);
  while (stream.next()) ++count;
  EXPECT_EQ(count, 5u);
}

TEST(Augment, EqualsFilteredEnumeration) {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (int lim = 1; lim <= 3; ++lim) {
      const auto y = support_of(m);
      for (std::size_t drop = 0; drop < m; ++drop) {
        std::vector<Vertex> x = y;
        x.erase(x.begin() + static_cast<std::ptrdiff_t>(drop));
        for (const auto& a : collect_vectors(x, lim)) {
          std::vector<LengthVector> expected;
          for (const auto& b : collect_vectors(y, lim)) {
            if (contract(b, x) == a) expected.push_back(b);
          }
          std::vector<LengthVector> got;
          auto stream = augmentations(a, y, lim);
          while (stream.next()) got.push_back(stream.current());
          EXPECT_EQ(got, expected);
        }
      }
    }
  }
}

TEST(Augment, RejectsBadExtension) {
  const LengthVector a({1, 3}, {2}, 2);
  EXPECT_THROW(augmentations(a, {1, 3}, 2), ArgumentError);
  EXPECT_THROW(augmentations(a, {1, 2, 4}, 2), ArgumentError);
}

TEST(KeySpaceTable, CodesFollowLexOrder) {
  const KeySpace ks(3, 4);
  const auto all = collect_vectors({1, 2, 3}, 4);
  ASSERT_EQ(ks.size(), all.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto key = ks.key(i);
    EXPECT_TRUE(std::equal(key.begin(), key.end(), all[i].entries().begin(), all[i].entries().end()));
    if (i > 0) EXPECT_LT(ks.code(i - 1), ks.code(i));
    EXPECT_EQ(ks.find(key), i);
  }
  const auto ones = ks.key(KeySpace::kAllOnes);
  EXPECT_TRUE(std::all_of(ones.begin(), ones.end(), [](Bound b) { return b == 1; }));
  EXPECT_FALSE(ks.find(std::vector<Bound>{1, 1, 3}).has_value());
}

TEST(KeySpaceTable, SharedCache) {
  EXPECT_EQ(key_space(3, 3).get(), key_space(3, 3).get());
  EXPECT_NE(key_space(3, 3).get(), key_space(3, 4).get());
  EXPECT_DOUBLE_EQ(projected_key_count(4, 3), 729.0);
}

TEST(LengthVectorValue, Validation) {
  EXPECT_THROW(LengthVector({2, 1}, {1}, 2), ArgumentError);
  EXPECT_THROW(LengthVector({1, 2}, {3}, 2), ArgumentError);
  EXPECT_THROW(LengthVector({1, 2}, {1, 1}, 2), ArgumentError);
  const LengthVector a({1, 2, 5}, {1, 2, 3}, 3);
  EXPECT_EQ(a.at(5, 1), 2);
  EXPECT_EQ(a.to_string(), "(1,2,3)");
}
