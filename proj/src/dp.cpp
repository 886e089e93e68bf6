#include "lbcut/dp.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "lbcut/error.hpp"

namespace lbcut {

namespace {

constexpr std::uint32_t kNoChoice = std::numeric_limits<std::uint32_t>::max();

/// Pair indices of `sub` (positions into a support of size m) in canonical order.
std::vector<std::size_t> projection(const std::vector<std::size_t>& sub, std::size_t m) {
  std::vector<std::size_t> out;
  out.reserve(pair_count(sub.size()));
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) out.push_back(pair_index(sub[i], sub[j], m));
  }
  return out;
}

/// Positions of `small` inside `large`; both sorted, small ⊆ large.
std::vector<std::size_t> positions_in(const std::vector<Vertex>& small, const std::vector<Vertex>& large) {
  std::vector<std::size_t> pos;
  pos.reserve(small.size());
  for (Vertex v : small) {
    auto it = std::lower_bound(large.begin(), large.end(), v);
    if (it == large.end() || *it != v) throw StructuralError("vertex " + std::to_string(v) + " missing from bag");
    pos.push_back(static_cast<std::size_t>(it - large.begin()));
  }
  return pos;
}

std::uint64_t project_code(const KeySpace& target, std::span<const Bound> entries,
                           const std::vector<std::size_t>& proj) {
  std::uint64_t code = 0;
  const auto radix = static_cast<std::uint64_t>(target.lim());
  for (std::size_t k : proj) code = code * radix + static_cast<std::uint64_t>(entries[k] - 1);
  return code;
}

void check_bag(const std::vector<Vertex>& bag) {
  for (std::size_t i = 1; i < bag.size(); ++i) {
    if (bag[i - 1] >= bag[i]) throw ArgumentError("bag must be sorted and duplicate-free");
  }
}

}  // namespace

// -- DpTable -------------------------------------------------------------------

LengthVector DpTable::key(std::size_t index) const {
  const auto e = keys_->key(index);
  return LengthVector(support_, std::vector<Bound>(e.begin(), e.end()), keys_->lim());
}

std::optional<std::size_t> DpTable::find(const LengthVector& key) const {
  if (key.support() != support_) return std::nullopt;
  return keys_->find(key.entries());
}

std::uint32_t DpTable::size_of(const LengthVector& key) const {
  auto idx = find(key);
  if (!idx) throw ArgumentError("vector " + key.to_string() + " is not a key of this table");
  return sizes_[*idx];
}

std::size_t DpTable::child_index(std::size_t index) const {
  if (kind_ != NodeKind::kForget && kind_ != NodeKind::kIntroduce) {
    throw ArgumentError("child_index: only forget and introduce tables keep a child choice");
  }
  return choice_[index];
}

Backpointer DpTable::backpointer(std::size_t index) const {
  switch (kind_) {
    case NodeKind::kLeaf: {
      EdgeSet removed;
      const std::uint64_t mask = leaf_masks_[index];
      for (std::size_t k = 0; k < leaf_edges_.size(); ++k) {
        if (mask >> k & 1U) removed.push_back(leaf_edges_[k]);
      }
      return LeafWitness{std::move(removed)};
    }
    case NodeKind::kJoin:
      return JoinSplit{key(index)};
    case NodeKind::kForget:
    case NodeKind::kIntroduce: {
      const auto e = child_keys_->key(choice_[index]);
      LengthVector child(child_support_, std::vector<Bound>(e.begin(), e.end()), keys_->lim());
      if (kind_ == NodeKind::kForget) return ForgetChoice{std::move(child)};
      return IntroducePass{std::move(child)};
    }
  }
  throw InternalError("unknown node kind");
}

// -- node rules ----------------------------------------------------------------

DpTable leaf_table(const std::vector<Vertex>& bag, const EdgeSet& edges_in, int lim, std::size_t edge_cap) {
  check_bag(bag);
  EdgeSet edges = edges_in;
  normalize(edges);
  const std::size_t cap = std::min<std::size_t>(edge_cap, 63);
  if (edges.size() > cap) {
    throw ResourceError("leaf has " + std::to_string(edges.size()) + " edges; exhaustion cap is " +
                            std::to_string(cap),
                        static_cast<double>(edges.size()), static_cast<double>(cap));
  }
  const std::size_t m = bag.size();
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const Edge& e : edges) {
    auto pu = std::lower_bound(bag.begin(), bag.end(), e.u);
    auto pv = std::lower_bound(bag.begin(), bag.end(), e.v);
    if (pu == bag.end() || *pu != e.u || pv == bag.end() || *pv != e.v) {
      throw ArgumentError("leaf edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") leaves the bag");
    }
    ends.emplace_back(static_cast<std::size_t>(pu - bag.begin()), static_cast<std::size_t>(pv - bag.begin()));
  }

  DpTable t;
  t.kind_ = NodeKind::kLeaf;
  t.support_ = bag;
  t.keys_ = key_space(m, lim);
  t.leaf_edges_ = edges;
  const KeySpace& ks = *t.keys_;

  // Distinct capped distance vectors, each with the first removal set reaching it.
  // Subsets are visited by cardinality, then lexicographically.
  std::vector<std::vector<Bound>> reached;
  std::vector<std::uint64_t> reached_mask;
  std::vector<std::uint32_t> reached_size;
  std::vector<std::uint64_t> seen_codes;
  const std::size_t p = pair_count(m);
  const auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(m * m);
  std::vector<Bound> capped(p);
  const std::size_t e = edges.size();
  std::vector<std::size_t> combo;
  for (std::size_t card = 0; card <= e; ++card) {
    combo.resize(card);
    for (std::size_t k = 0; k < card; ++k) combo[k] = k;
    while (true) {
      std::uint64_t mask = 0;
      for (std::size_t k : combo) mask |= std::uint64_t{1} << k;
      std::fill(dist.begin(), dist.end(), kInf);
      for (std::size_t i = 0; i < m; ++i) dist[i * m + i] = 0;
      for (std::size_t k = 0; k < e; ++k) {
        if (mask >> k & 1U) continue;
        dist[ends[k].first * m + ends[k].second] = 1;
        dist[ends[k].second * m + ends[k].first] = 1;
      }
      for (std::size_t w = 0; w < m; ++w) {
        for (std::size_t u = 0; u < m; ++u) {
          if (dist[u * m + w] == kInf) continue;
          for (std::size_t v = 0; v < m; ++v) {
            if (dist[w * m + v] == kInf) continue;
            dist[u * m + v] = std::min(dist[u * m + v], dist[u * m + w] + dist[w * m + v]);
          }
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          capped[pair_index(i, j, m)] =
              static_cast<Bound>(std::min<std::uint64_t>(dist[i * m + j], static_cast<std::uint64_t>(lim)));
        }
      }
      const std::uint64_t code = ks.encode(capped);
      auto it = std::lower_bound(seen_codes.begin(), seen_codes.end(), code);
      if (it == seen_codes.end() || *it != code) {
        seen_codes.insert(it, code);
        reached.push_back(capped);
        reached_mask.push_back(mask);
        reached_size.push_back(static_cast<std::uint32_t>(card));
      }

      // Next combination in lexicographic order.
      std::size_t k = card;
      while (k > 0 && combo[k - 1] == e - card + k - 1) --k;
      if (k == 0) break;
      ++combo[k - 1];
      for (std::size_t r = k; r < card; ++r) combo[r] = combo[r - 1] + 1;
    }
  }

  // best[b] = first reached vector dominating b, as a rank into `reached`.
  // Keys go in decreasing lex order so every b + e_q is final when b is
  // visited; single-coordinate steps connect b to every triangle key above it.
  std::vector<std::uint32_t> rank_of(ks.size(), kInf);
  for (std::size_t r = 0; r < reached.size(); ++r) {
    const auto idx = ks.find(reached[r]);
    if (!idx) throw InternalError("leaf table: reached vector outside the key space");
    rank_of[*idx] = std::min(rank_of[*idx], static_cast<std::uint32_t>(r));
  }
  std::vector<std::uint64_t> step(p);
  for (std::size_t q = p, w = 1; q-- > 0; w *= static_cast<std::uint64_t>(lim)) step[q] = w;
  for (std::size_t idx = ks.size(); idx-- > 0;) {
    const auto key = ks.key(idx);
    const std::uint64_t code = ks.code(idx);
    std::uint32_t best = rank_of[idx];
    for (std::size_t q = 0; q < p; ++q) {
      if (key[q] >= lim) continue;
      if (const auto up = ks.find_code_from(code + step[q], idx + 1)) best = std::min(best, rank_of[*up]);
    }
    rank_of[idx] = best;
  }

  t.sizes_.resize(ks.size());
  t.leaf_masks_.resize(ks.size());
  for (std::size_t idx = 0; idx < ks.size(); ++idx) {
    // Removing every edge caps all distances at Lim, so some entry always fits.
    if (rank_of[idx] == kInf) throw InternalError("leaf table: no removal set satisfies " + std::to_string(idx));
    t.sizes_[idx] = reached_size[rank_of[idx]];
    t.leaf_masks_[idx] = reached_mask[rank_of[idx]];
  }
  return t;
}

DpTable join_tables(const DpTable& left, const DpTable& right) {
  if (left.support_ != right.support_) throw StructuralError("join: child supports differ");
  if (left.lim() != right.lim()) throw StructuralError("join: child limits differ");
  DpTable t;
  t.kind_ = NodeKind::kJoin;
  t.support_ = left.support_;
  t.keys_ = left.keys_;
  t.sizes_.resize(left.sizes_.size());
  for (std::size_t i = 0; i < t.sizes_.size(); ++i) t.sizes_[i] = left.sizes_[i] + right.sizes_[i];
  return t;
}

DpTable forget_table(const DpTable& child, const std::vector<Vertex>& bag) {
  check_bag(bag);
  if (bag.size() + 1 != child.support_.size() ||
      !std::includes(child.support_.begin(), child.support_.end(), bag.begin(), bag.end())) {
    throw StructuralError("forget: bag is not the child support minus one vertex");
  }
  DpTable t;
  t.kind_ = NodeKind::kForget;
  t.support_ = bag;
  t.child_support_ = child.support_;
  t.keys_ = key_space(bag.size(), child.lim());
  t.child_keys_ = child.keys_;
  const KeySpace& ks = *t.keys_;
  const KeySpace& cks = *child.keys_;
  const auto proj = projection(positions_in(bag, child.support_), child.support_.size());

  // Every child key is an augmentation of exactly its own restriction, so one
  // ascending pass over child keys visits each augmentation set in lex order.
  t.sizes_.assign(ks.size(), std::numeric_limits<std::uint32_t>::max());
  t.choice_.assign(ks.size(), kNoChoice);
  for (std::size_t c = 0; c < cks.size(); ++c) {
    auto idx = ks.find_code(project_code(ks, cks.key(c), proj));
    if (!idx) throw InternalError("forget: restriction of a child key is not a key");
    if (child.sizes_[c] < t.sizes_[*idx]) {
      t.sizes_[*idx] = child.sizes_[c];
      t.choice_[*idx] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (t.choice_[i] == kNoChoice) throw InternalError("forget: key without augmentation");
  }
  return t;
}

DpTable introduce_table(const DpTable& child, const std::vector<Vertex>& bag) {
  check_bag(bag);
  if (child.support_.size() + 1 != bag.size() ||
      !std::includes(bag.begin(), bag.end(), child.support_.begin(), child.support_.end())) {
    throw StructuralError("introduce: bag is not the child support plus one vertex");
  }
  DpTable t;
  t.kind_ = NodeKind::kIntroduce;
  t.support_ = bag;
  t.child_support_ = child.support_;
  t.keys_ = key_space(bag.size(), child.lim());
  t.child_keys_ = child.keys_;
  const KeySpace& ks = *t.keys_;
  const KeySpace& cks = *child.keys_;
  const auto proj = projection(positions_in(child.support_, bag), bag.size());
  t.sizes_.resize(ks.size());
  t.choice_.resize(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto c = cks.find_code(project_code(cks, ks.key(i), proj));
    if (!c) throw InternalError("introduce: restriction of a key is not a child key");
    t.sizes_[i] = child.sizes_[*c];
    t.choice_[i] = static_cast<std::uint32_t>(*c);
  }
  return t;
}

// -- driver --------------------------------------------------------------------

double projected_table_size(const NiceDecomposition& nd, int lim) {
  double best = 0;
  for (const auto& node : nd.nodes) best = std::max(best, projected_key_count(node.bag.size(), lim));
  return best;
}

namespace {

DpTable compute_node(const NiceDecomposition& nd, NodeId id, const std::vector<DpTable>& tables, int lim,
                     const DpLimits& limits) {
  const auto& node = nd.nodes[static_cast<std::size_t>(id)];
  auto child = [&](std::size_t k) -> const DpTable& {
    return tables[static_cast<std::size_t>(node.children.at(k))];
  };
  DpTable t;
  switch (node.kind) {
    case NodeKind::kLeaf:
      t = leaf_table(node.bag, nd.leaf_edges[static_cast<std::size_t>(id)], lim, limits.leaf_edge_cap);
      break;
    case NodeKind::kIntroduce: t = introduce_table(child(0), node.bag); break;
    case NodeKind::kForget: t = forget_table(child(0), node.bag); break;
    case NodeKind::kJoin: t = join_tables(child(0), child(1)); break;
  }
  t.set_node(id);
  return t;
}

}  // namespace

DpRun run_dp(const Graph& g, const NiceDecomposition& nd, int lim, const DpLimits& limits) {
  if (lim < 1 || lim > kMaxLimit) throw ArgumentError("limit out of range");
  if (nd.nodes.empty() || nd.root == kNoNode) throw StructuralError("run_dp: empty decomposition");
  if (nd.leaf_edges.size() != nd.nodes.size()) throw StructuralError("run_dp: edges not assigned");
  std::size_t assigned = 0;
  for (const auto& owned : nd.leaf_edges) assigned += owned.size();
  if (assigned != g.edge_count()) throw StructuralError("run_dp: leaf edges do not cover the graph");

  const double projected = projected_table_size(nd, lim);
  if (projected > limits.table_cap) {
    throw ResourceError("dynamic-programming tables too large", projected, limits.table_cap);
  }
  const std::size_t edge_cap = std::min<std::size_t>(limits.leaf_edge_cap, 63);
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    if (nd.nodes[i].kind == NodeKind::kLeaf && nd.leaf_edges[i].size() > edge_cap) {
      throw ResourceError("leaf " + std::to_string(i) + " has " + std::to_string(nd.leaf_edges[i].size()) +
                              " edges; exhaustion cap is " + std::to_string(edge_cap),
                          static_cast<double>(nd.leaf_edges[i].size()), static_cast<double>(edge_cap));
    }
  }

  DpRun run;
  run.tables.resize(nd.nodes.size());
  const std::size_t count = nd.nodes.size();

  if (limits.threads <= 1) {
    for (std::size_t id = 0; id < count; ++id) {
      run.tables[id] = compute_node(nd, static_cast<NodeId>(id), run.tables, lim, limits);
    }
  } else {
    std::mutex mutex;
    std::condition_variable wake;
    std::vector<std::size_t> waiting(count);
    std::vector<NodeId> ready;
    for (std::size_t id = 0; id < count; ++id) {
      waiting[id] = nd.nodes[id].children.size();
      if (waiting[id] == 0) ready.push_back(static_cast<NodeId>(id));
    }
    std::size_t done = 0;
    std::exception_ptr failure;
    auto worker = [&] {
      std::unique_lock<std::mutex> lock(mutex);
      while (true) {
        wake.wait(lock, [&] { return !ready.empty() || done == count || failure; });
        if (done == count || failure) return;
        const NodeId id = ready.back();
        ready.pop_back();
        lock.unlock();
        DpTable table;
        std::exception_ptr error;
        try {
          table = compute_node(nd, id, run.tables, lim, limits);
        } catch (...) {
          error = std::current_exception();
        }
        lock.lock();
        if (error) {
          if (!failure) failure = error;
          wake.notify_all();
          return;
        }
        run.tables[static_cast<std::size_t>(id)] = std::move(table);
        ++done;
        const NodeId parent = nd.nodes[static_cast<std::size_t>(id)].parent;
        if (parent != kNoNode && --waiting[static_cast<std::size_t>(parent)] == 0) ready.push_back(parent);
        wake.notify_all();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < limits.threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  run.stats.nodes = count;
  run.stats.projected_entries = projected;
  for (const auto& t : run.tables) run.stats.table_entries += t.entry_count();
  return run;
}

RootAnswer root_query(const DpTable& root, const LengthVector& constraints) {
  const auto& s = constraints.support();
  if (!std::includes(root.support().begin(), root.support().end(), s.begin(), s.end())) {
    throw StructuralError("root_query: terminals missing from the root bag");
  }
  const auto entries = constraints.entries();
  for (Bound b : entries) {
    if (b > root.lim()) throw ArgumentError("root_query: constraint above the table limit");
  }
  const auto proj = projection(positions_in(s, root.support()), root.support().size());
  const KeySpace& ks = root.keys();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto key = ks.key(i);
    bool ok = true;
    for (std::size_t q = 0; q < proj.size() && ok; ++q) ok = key[proj[q]] >= entries[q];
    if (ok && (!best || root.size_at(i) < root.size_at(*best))) best = i;
  }
  if (!best) throw InternalError("root_query: no root key dominates the constraints");
  return {root.size_at(*best), root.key(*best)};
}

EdgeSet reconstruct_cut(const NiceDecomposition& nd, const DpRun& run, const LengthVector& root_key) {
  const DpTable& root = run.root(nd);
  auto start = root.find(root_key);
  if (!start) throw ArgumentError("reconstruct_cut: vector is not a root key");
  EdgeSet cut;
  std::vector<std::pair<NodeId, std::size_t>> stack{{nd.root, *start}};
  while (!stack.empty()) {
    auto [id, index] = stack.back();
    stack.pop_back();
    const auto& node = nd.nodes[static_cast<std::size_t>(id)];
    const DpTable& t = run.tables.at(static_cast<std::size_t>(id));
    if (t.node() != id || index >= t.entry_count()) throw InternalError("reconstruct_cut: dangling backpointer");
    switch (node.kind) {
      case NodeKind::kLeaf: {
        const std::uint64_t mask = t.leaf_mask(index);
        for (std::size_t k = 0; k < t.leaf_edges().size(); ++k) {
          if (mask >> k & 1U) cut.push_back(t.leaf_edges()[k]);
        }
        break;
      }
      case NodeKind::kJoin:
        // Children share the node's key space, so the index carries over.
        stack.emplace_back(node.children[1], index);
        stack.emplace_back(node.children[0], index);
        break;
      case NodeKind::kForget:
      case NodeKind::kIntroduce:
        stack.emplace_back(node.children[0], t.child_index(index));
        break;
    }
  }
  const std::size_t total = cut.size();
  normalize(cut);
  if (cut.size() != total) throw InternalError("reconstruct_cut: an edge was removed twice");
  return cut;
}

}  // namespace lbcut
