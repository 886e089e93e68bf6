#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lbcut/decomposition.hpp"
#include "lbcut/graph.hpp"
#include "lbcut/length_vector.hpp"

namespace lbcut {

struct DpLimits {
  /// Refuse when Lim^{C(bag,2)} exceeds this for some bag.
  double table_cap = 1e7;
  /// Largest leaf edge set the leaf rule may exhaust (2^n subsets).
  std::size_t leaf_edge_cap = 20;
  /// Worker threads for independent subtrees; 1 runs inline.
  unsigned threads = 1;
};

struct LeafWitness {
  EdgeSet removed;
};
struct JoinSplit {
  LengthVector key;
};
struct ForgetChoice {
  LengthVector child_key;
};
struct IntroducePass {
  LengthVector child_key;
};
using Backpointer = std::variant<LeafWitness, JoinSplit, ForgetChoice, IntroducePass>;

/// Minimum multi-cut sizes of one node's auxiliary graph, one entry per
/// triangle-satisfying key on the node's bag.
class DpTable {
 public:
  DpTable() = default;

  NodeId node() const noexcept { return node_; }
  NodeKind kind() const noexcept { return kind_; }
  const std::vector<Vertex>& support() const noexcept { return support_; }
  int lim() const noexcept { return keys_->lim(); }
  const KeySpace& keys() const noexcept { return *keys_; }
  std::size_t entry_count() const noexcept { return sizes_.size(); }

  LengthVector key(std::size_t index) const;
  std::uint32_t size_at(std::size_t index) const { return sizes_[index]; }
  std::span<const std::uint32_t> sizes() const noexcept { return sizes_; }

  std::optional<std::size_t> find(const LengthVector& key) const;
  /// Throws ArgumentError if the key is not a table key.
  std::uint32_t size_of(const LengthVector& key) const;

  Backpointer backpointer(std::size_t index) const;

  /// Child key index that entry `index` was derived from (forget/introduce).
  std::size_t child_index(std::size_t index) const;
  /// Removed-edge mask over `leaf_edges()` (leaf only).
  std::uint64_t leaf_mask(std::size_t index) const { return leaf_masks_[index]; }
  const EdgeSet& leaf_edges() const noexcept { return leaf_edges_; }

 private:
  friend DpTable leaf_table(const std::vector<Vertex>&, const EdgeSet&, int, std::size_t);
  friend DpTable join_tables(const DpTable&, const DpTable&);
  friend DpTable forget_table(const DpTable&, const std::vector<Vertex>&);
  friend DpTable introduce_table(const DpTable&, const std::vector<Vertex>&);

  NodeId node_ = kNoNode;
  NodeKind kind_ = NodeKind::kLeaf;
  std::vector<Vertex> support_;
  std::vector<Vertex> child_support_;
  std::shared_ptr<const KeySpace> keys_;
  std::shared_ptr<const KeySpace> child_keys_;
  std::vector<std::uint32_t> sizes_;
  EdgeSet leaf_edges_;
  std::vector<std::uint64_t> leaf_masks_;
  std::vector<std::uint32_t> choice_;  // forget/introduce child index
  // Set by run_dp.
 public:
  void set_node(NodeId id) noexcept { node_ = id; }
};

/// Exhausts every subset of `edges` (by cardinality, then lexicographically)
/// and records for each key the first removal set that satisfies it.
/// Throws ResourceError if |edges| > edge_cap.
DpTable leaf_table(const std::vector<Vertex>& bag, const EdgeSet& edges, int lim,
                   std::size_t edge_cap = 20);

/// Pointwise sum. Throws StructuralError on support or limit mismatch.
DpTable join_tables(const DpTable& left, const DpTable& right);

/// Minimum over the augmentations of each key; ties go to the smallest child
/// key. `bag` must be the child's support minus one vertex.
DpTable forget_table(const DpTable& child, const std::vector<Vertex>& bag);

/// Copies the child's entry for each key's restriction. `bag` must be the
/// child's support plus one vertex.
DpTable introduce_table(const DpTable& child, const std::vector<Vertex>& bag);

struct DpStats {
  std::size_t nodes = 0;
  std::size_t table_entries = 0;
  double projected_entries = 0;
};

struct DpRun {
  std::vector<DpTable> tables;  // indexed by node id
  DpStats stats;
  const DpTable& root(const NiceDecomposition& nd) const { return tables.at(nd.root); }
};

/// Largest Lim^{C(|bag|,2)} over the nodes.
double projected_table_size(const NiceDecomposition& nd, int lim);

/// Computes every node table bottom-up. Throws ResourceError before any work
/// if the projection exceeds `limits.table_cap` or a leaf exceeds the edge cap.
/// Output does not depend on `limits.threads`.
DpRun run_dp(const Graph& g, const NiceDecomposition& nd, int lim, const DpLimits& limits = {});

struct RootAnswer {
  std::uint32_t size = 0;
  LengthVector root_key;
};

/// Minimum over root keys b with b|S ⪰ constraints; ties to the smallest b.
/// Constraints need not satisfy the triangle inequalities.
RootAnswer root_query(const DpTable& root, const LengthVector& constraints);

/// Follows backpointers from `root_key` down to the leaves.
EdgeSet reconstruct_cut(const NiceDecomposition& nd, const DpRun& run, const LengthVector& root_key);

}  // namespace lbcut
