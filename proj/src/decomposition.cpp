#include "lbcut/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "lbcut/error.hpp"

namespace lbcut {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

bool is_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(td.bags.size());
  for (auto [a, b] : td.tree_edges) {
    adj[static_cast<std::size_t>(a - 1)].push_back(b - 1);
    adj[static_cast<std::size_t>(b - 1)].push_back(a - 1);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

/// Parent of every node when the tree is rooted at `root` (0-based); -1 at the root.
std::vector<int> root_tree(const std::vector<std::vector<int>>& adj, int root, std::vector<int>* order) {
  std::vector<int> parent(adj.size(), -2);
  std::vector<int> bfs{root};
  parent[static_cast<std::size_t>(root)] = -1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int u = bfs[head];
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = u;
        bfs.push_back(w);
      }
    }
  }
  if (order) *order = std::move(bfs);
  return parent;
}

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& bag : bags) best = std::max(best, bag.size());
  return static_cast<int>(best) - 1;
}

void TreeDecomposition::canonicalize() {
  for (auto& bag : bags) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  for (auto& [a, b] : tree_edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(tree_edges.begin(), tree_edges.end());
}

// -- validation ----------------------------------------------------------------

std::vector<Violation> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::vector<Violation> out;
  const std::size_t nodes = td.bags.size();
  const int n = g.vertex_count();

  if (nodes == 0) {
    out.push_back({Violation::Kind::kNotATree, "decomposition has no bags"});
    if (n > 0) out.push_back({Violation::Kind::kVertexUncovered, "no bag covers any vertex"});
    return out;
  }

  bool tree_ok = true;
  DisjointSets sets(nodes);
  for (auto [a, b] : td.tree_edges) {
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > nodes || static_cast<std::size_t>(b) > nodes) {
      out.push_back({Violation::Kind::kNotATree, "tree edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                     ") references a missing bag"});
      tree_ok = false;
      continue;
    }
    if (!sets.unite(a - 1, b - 1)) {
      out.push_back({Violation::Kind::kNotATree, "tree edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                     ") closes a cycle"});
      tree_ok = false;
    }
  }
  if (tree_ok && td.tree_edges.size() + 1 != nodes) {
    out.push_back({Violation::Kind::kNotATree, "bag tree is disconnected"});
    tree_ok = false;
  }

  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<Vertex>> bags = td.bags;
  for (std::size_t i = 0; i < nodes; ++i) {
    auto& bag = bags[i];
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    for (Vertex v : bag) {
      if (!g.contains(v)) {
        out.push_back({Violation::Kind::kVertexOutOfRange,
                       "bag " + std::to_string(i + 1) + " holds vertex " + std::to_string(v) + " outside the graph"});
        continue;
      }
      occurrences[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
  }

  for (Vertex v = 1; v <= n; ++v) {
    if (occurrences[static_cast<std::size_t>(v)].empty()) {
      out.push_back({Violation::Kind::kVertexUncovered, "vertex " + std::to_string(v) + " is in no bag"});
    }
  }

  for (const Edge& e : g.edges()) {
    const auto& ou = occurrences[static_cast<std::size_t>(e.u)];
    const auto& ov = occurrences[static_cast<std::size_t>(e.v)];
    const auto& shorter = ou.size() <= ov.size() ? ou : ov;
    const Vertex other = ou.size() <= ov.size() ? e.v : e.u;
    const bool covered = std::any_of(shorter.begin(), shorter.end(), [&](int bag) {
      return bag_contains(bags[static_cast<std::size_t>(bag)], other);
    });
    if (!covered) {
      out.push_back({Violation::Kind::kEdgeUncovered, "edge " + edge_name(e) + " is in no bag"});
    }
  }

  if (tree_ok) {
    // On a tree, the bags holding v induce a forest with (#bags − #edges) parts.
    std::vector<std::size_t> inner_edges(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> common;
    for (auto [a, b] : td.tree_edges) {
      const auto& ba = bags[static_cast<std::size_t>(a - 1)];
      const auto& bb = bags[static_cast<std::size_t>(b - 1)];
      common.clear();
      std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
      for (Vertex v : common) {
        if (g.contains(v)) ++inner_edges[static_cast<std::size_t>(v)];
      }
    }
    for (Vertex v = 1; v <= n; ++v) {
      const auto count = occurrences[static_cast<std::size_t>(v)].size();
      if (count > 0 && count - inner_edges[static_cast<std::size_t>(v)] != 1) {
        out.push_back({Violation::Kind::kVertexDisconnected,
                       "bags containing vertex " + std::to_string(v) + " are not connected"});
      }
    }
  }
  return out;
}

// -- heuristic decomposition ---------------------------------------------------

TreeDecomposition heuristic_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  td.vertex_count = n;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }

  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 1; v <= n; ++v) queue.emplace(adj[static_cast<std::size_t>(v)].size(), v);

  std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> bags;
  order.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    position[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
    order.push_back(v);
    auto& nv = adj[static_cast<std::size_t>(v)];
    std::vector<Vertex> bag(nv.begin(), nv.end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    bags.push_back(bag);
    std::vector<Vertex> nbrs(nv.begin(), nv.end());
    for (Vertex a : nbrs) {
      auto& na = adj[static_cast<std::size_t>(a)];
      queue.erase({na.size(), a});
      na.erase(v);
      for (Vertex b : nbrs) {
        if (b != a) na.insert(b);
      }
      queue.emplace(na.size(), a);
    }
    nv.clear();
  }

  // Parent of bag(v) is the bag of v's earliest-eliminated later neighbour.
  const std::size_t count = order.size();
  std::vector<int> parent(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    int best = -1;
    for (Vertex w : bags[i]) {
      const int pw = position[static_cast<std::size_t>(w)];
      if (pw > static_cast<int>(i) && (best < 0 || pw < best)) best = pw;
    }
    parent[i] = best;
  }

  // Contract tree edges whose bags are nested. Children are eliminated before
  // their parents, so one pass in elimination order sees final child bags.
  std::vector<char> alive(count, 1);
  std::vector<int> redirect(count);
  std::iota(redirect.begin(), redirect.end(), 0);
  auto resolve = [&](int x) {
    while (x >= 0 && redirect[static_cast<std::size_t>(x)] != x) x = redirect[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const int p = resolve(parent[i]);
    parent[i] = p;
    if (p < 0) continue;
    auto& child_bag = bags[i];
    auto& parent_bag = bags[static_cast<std::size_t>(p)];
    if (is_subset(child_bag, parent_bag) || is_subset(parent_bag, child_bag)) {
      if (parent_bag.size() < child_bag.size()) parent_bag = child_bag;
      alive[i] = 0;
      redirect[i] = p;
    }
  }

  std::vector<int> new_id(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    if (alive[i]) {
      new_id[i] = static_cast<int>(td.bags.size()) + 1;
      td.bags.push_back(bags[i]);
    }
  }
  int first_root = -1;
  for (std::size_t i = 0; i < count; ++i) {
    if (!alive[i]) continue;
    const int p = resolve(parent[i]);
    if (p >= 0) {
      td.tree_edges.emplace_back(new_id[i], new_id[static_cast<std::size_t>(p)]);
    } else if (first_root < 0) {
      first_root = new_id[i];
    } else {
      td.tree_edges.emplace_back(first_root, new_id[i]);
    }
  }
  td.canonicalize();
  return td;
}

TreeDecomposition decomposition_for_terminals(const Graph& g, const std::vector<Vertex>& terminals) {
  EdgeSet edges = g.edges();
  for (std::size_t a = 0; a < terminals.size(); ++a) {
    for (std::size_t b = a + 1; b < terminals.size(); ++b) {
      if (terminals[a] != terminals[b]) edges.emplace_back(terminals[a], terminals[b]);
    }
  }
  return heuristic_decomposition(Graph(g.vertex_count(), std::move(edges)));
}

// -- terminal injection --------------------------------------------------------

TreeDecomposition inject_terminals(const TreeDecomposition& td, const std::vector<Vertex>& terminals) {
  std::vector<Vertex> wanted(terminals);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (td.bags.empty()) throw ArgumentError("inject_terminals: decomposition has no bags");

  int anchor = -1;
  std::size_t best = 0;
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    std::vector<Vertex> bag = td.bags[i];
    std::sort(bag.begin(), bag.end());
    std::size_t hits = 0;
    for (Vertex v : wanted) hits += bag_contains(bag, v) ? 1 : 0;
    if (hits == wanted.size()) return td;
    if (anchor < 0 || hits > best) {
      anchor = static_cast<int>(i);
      best = hits;
    }
  }

  TreeDecomposition out = td;
  out.canonicalize();
  const auto adj = tree_adjacency(out);
  std::vector<int> order;
  const auto parent = root_tree(adj, anchor, &order);
  for (Vertex x : wanted) {
    if (bag_contains(out.bags[static_cast<std::size_t>(anchor)], x)) continue;
    // BFS order visits nodes by increasing depth: the first hit is nearest.
    int start = -1;
    for (int node : order) {
      if (bag_contains(out.bags[static_cast<std::size_t>(node)], x)) {
        start = node;
        break;
      }
    }
    if (start < 0) throw ArgumentError("terminal " + std::to_string(x) + " is in no bag");
    for (int node = parent[static_cast<std::size_t>(start)]; node >= 0; node = parent[static_cast<std::size_t>(node)]) {
      auto& bag = out.bags[static_cast<std::size_t>(node)];
      bag.insert(std::lower_bound(bag.begin(), bag.end(), x), x);
    }
  }
  return out;
}

// -- .td format ----------------------------------------------------------------

TreeDecomposition parse_td(std::string_view text) {
  TreeDecomposition td;
  bool have_header = false;
  std::size_t declared_max = 0;
  std::vector<char> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream in(line);
    std::string head;
    if (!(in >> head) || head == "c") {
      if (end == text.size()) break;
      continue;
    }
    if (head == "s") {
      std::string kind;
      long long count = 0, max_bag = 0, n = 0;
      if (have_header || !(in >> kind >> count >> max_bag >> n) || kind != "td" || count < 0 || max_bag < 0 ||
          n < 0) {
        throw ParseError(line_no, "malformed solution line, expected 's td <bags> <max bag> <n>'");
      }
      have_header = true;
      td.vertex_count = static_cast<int>(n);
      declared_max = static_cast<std::size_t>(max_bag);
      td.bags.assign(static_cast<std::size_t>(count), {});
      seen.assign(static_cast<std::size_t>(count), 0);
    } else if (head == "b") {
      if (!have_header) throw ParseError(line_no, "bag before solution line");
      long long id = 0;
      if (!(in >> id)) throw ParseError(line_no, "missing bag id");
      if (id < 1 || static_cast<std::size_t>(id) > td.bags.size()) {
        throw ParseError(line_no, "bag id " + std::to_string(id) + " out of range");
      }
      if (seen[static_cast<std::size_t>(id - 1)]) throw ParseError(line_no, "bag " + std::to_string(id) + " repeated");
      seen[static_cast<std::size_t>(id - 1)] = 1;
      auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
      long long v = 0;
      while (in >> v) {
        if (v < 1 || v > td.vertex_count) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        bag.push_back(static_cast<Vertex>(v));
      }
      if (!in.eof()) throw ParseError(line_no, "malformed bag line");
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      if (bag.size() > declared_max) throw ParseError(line_no, "bag exceeds declared maximum size");
    } else {
      if (!have_header) throw ParseError(line_no, "tree edge before solution line");
      long long a = 0, b = 0;
      std::istringstream edge_in(line);
      std::string rest;
      if (!(edge_in >> a >> b) || (edge_in >> rest)) throw ParseError(line_no, "malformed tree edge");
      const auto count = static_cast<long long>(td.bags.size());
      if (a < 1 || b < 1 || a > count || b > count) throw ParseError(line_no, "tree edge references a missing bag");
      if (a == b) throw ParseError(line_no, "tree edge is a loop");
      td.tree_edges.emplace_back(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(0, "missing solution line 's td ...'");
  DisjointSets sets(td.bags.size());
  for (auto [a, b] : td.tree_edges) {
    if (!sets.unite(a - 1, b - 1)) throw ParseError(0, "tree edges contain a cycle");
  }
  if (!td.bags.empty() && td.tree_edges.size() + 1 != td.bags.size()) {
    throw ParseError(0, "tree edges do not connect all bags");
  }
  td.canonicalize();
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  TreeDecomposition c = td;
  c.canonicalize();
  std::ostringstream out;
  std::size_t max_bag = 0;
  for (const auto& bag : c.bags) max_bag = std::max(max_bag, bag.size());
  out << "s td " << c.bags.size() << ' ' << max_bag << ' ' << c.vertex_count << '\n';
  for (std::size_t i = 0; i < c.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : c.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : c.tree_edges) out << a << ' ' << b << '\n';
  return out.str();
}

// -- nice form -----------------------------------------------------------------

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kLeaf: return "leaf";
    case NodeKind::kIntroduce: return "introduce";
    case NodeKind::kForget: return "forget";
    case NodeKind::kJoin: return "join";
  }
  return "?";
}

int NiceDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& node : nodes) best = std::max(best, node.bag.size());
  return static_cast<int>(best) - 1;
}

namespace {

/// Nodes under construction; ids are provisional until the post-order pass.
class NiceBuilder {
 public:
  int add(NodeKind kind, Vertex vertex, std::vector<Vertex> bag, std::vector<int> children) {
    nodes_.push_back({kind, vertex, std::move(bag), std::move(children), kNoNode});
    return static_cast<int>(nodes_.size()) - 1;
  }
  NiceNode& at(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return nodes_.size(); }

  /// Forgets then introduces vertices on top of `top` until its bag is `target`.
  int transition(int top, const std::vector<Vertex>& target) {
    std::vector<Vertex> current = at(top).bag;
    std::vector<Vertex> drop, add_list;
    std::set_difference(current.begin(), current.end(), target.begin(), target.end(), std::back_inserter(drop));
    std::set_difference(target.begin(), target.end(), current.begin(), current.end(), std::back_inserter(add_list));
    for (Vertex v : drop) {
      current.erase(std::lower_bound(current.begin(), current.end(), v));
      top = add(NodeKind::kForget, v, current, {top});
    }
    for (Vertex v : add_list) {
      current.insert(std::lower_bound(current.begin(), current.end(), v), v);
      top = add(NodeKind::kIntroduce, v, current, {top});
    }
    return top;
  }

  /// Wraps every introduce node in a join with a leaf sibling of equal bag.
  int add_siblings(int root) {
    const std::size_t original = nodes_.size();
    std::vector<int> wrapper(original, -1);
    for (std::size_t id = 0; id < original; ++id) {
      if (nodes_[id].kind != NodeKind::kIntroduce) continue;
      const auto bag = nodes_[id].bag;
      const int sibling = add(NodeKind::kLeaf, 0, bag, {});
      wrapper[id] = add(NodeKind::kJoin, 0, bag, {static_cast<int>(id), sibling});
    }
    for (std::size_t id = 0; id < original; ++id) {
      for (int& child : nodes_[id].children) {
        if (wrapper[static_cast<std::size_t>(child)] >= 0) child = wrapper[static_cast<std::size_t>(child)];
      }
    }
    return wrapper[static_cast<std::size_t>(root)] >= 0 ? wrapper[static_cast<std::size_t>(root)] : root;
  }

  /// Renumbers reachable nodes in post-order from `root`.
  NiceDecomposition finish(int root) {
    NiceDecomposition nd;
    std::vector<int> new_id(nodes_.size(), -1);
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [id, next_child] = stack.back();
      auto& node = nodes_[static_cast<std::size_t>(id)];
      if (next_child < node.children.size()) {
        const int child = node.children[next_child++];
        stack.emplace_back(child, 0);
        continue;
      }
      new_id[static_cast<std::size_t>(id)] = static_cast<int>(nd.nodes.size());
      nd.nodes.push_back(node);
      stack.pop_back();
    }
    for (auto& node : nd.nodes) {
      for (int& child : node.children) child = new_id[static_cast<std::size_t>(child)];
    }
    for (std::size_t id = 0; id < nd.nodes.size(); ++id) {
      for (int child : nd.nodes[id].children) nd.nodes[static_cast<std::size_t>(child)].parent = static_cast<NodeId>(id);
    }
    nd.root = new_id[static_cast<std::size_t>(root)];
    nd.nodes[static_cast<std::size_t>(nd.root)].parent = kNoNode;
    nd.leaf_edges.assign(nd.nodes.size(), {});
    return nd;
  }

 private:
  std::vector<NiceNode> nodes_;
};

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& td_in, const Graph& g,
                            const std::vector<Vertex>& root_terminals) {
  TreeDecomposition td = td_in;
  td.canonicalize();
  if (td.bags.empty()) throw ArgumentError("make_nice: decomposition has no bags");
  std::vector<Vertex> wanted(root_terminals);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  int root = -1;
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    if (is_subset(wanted, td.bags[i])) {
      root = static_cast<int>(i);
      break;
    }
  }
  if (root < 0) throw ArgumentError("make_nice: no bag contains all root terminals; inject them first");

  const auto adj = tree_adjacency(td);
  std::vector<int> order;
  const auto parent = root_tree(adj, root, &order);
  if (order.size() != td.bags.size()) throw StructuralError("make_nice: bag tree is disconnected");

  NiceBuilder builder;
  std::vector<int> top(td.bags.size(), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int node = *it;
    const auto& bag = td.bags[static_cast<std::size_t>(node)];
    std::vector<int> subtrees;
    for (int child : adj[static_cast<std::size_t>(node)]) {
      if (parent[static_cast<std::size_t>(child)] != node) continue;
      subtrees.push_back(builder.transition(top[static_cast<std::size_t>(child)], bag));
    }
    int current;
    if (subtrees.empty()) {
      current = builder.add(NodeKind::kLeaf, 0, bag, {});
    } else {
      current = subtrees.front();
      for (std::size_t k = 1; k < subtrees.size(); ++k) {
        current = builder.add(NodeKind::kJoin, 0, bag, {current, subtrees[k]});
      }
    }
    top[static_cast<std::size_t>(node)] = current;
  }
  const int nice_root = builder.add_siblings(top[static_cast<std::size_t>(root)]);
  return assign_edges(builder.finish(nice_root), g);
}

NiceDecomposition assign_edges(NiceDecomposition nd, const Graph& g) {
  nd.leaf_edges.assign(nd.nodes.size(), {});
  std::vector<std::vector<NodeId>> leaves_of(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (std::size_t id = 0; id < nd.nodes.size(); ++id) {
    const auto& node = nd.nodes[id];
    if (node.kind != NodeKind::kLeaf) continue;
    for (Vertex v : node.bag) {
      if (g.contains(v)) leaves_of[static_cast<std::size_t>(v)].push_back(static_cast<NodeId>(id));
    }
  }
  for (const Edge& e : g.edges()) {
    NodeId owner = kNoNode;
    for (NodeId leaf : leaves_of[static_cast<std::size_t>(e.u)]) {
      if (bag_contains(nd.nodes[static_cast<std::size_t>(leaf)].bag, e.v)) {
        owner = leaf;
        break;
      }
    }
    if (owner == kNoNode) throw StructuralError("edge " + edge_name(e) + " lies in no leaf bag");
    nd.leaf_edges[static_cast<std::size_t>(owner)].push_back(e);
  }
  return nd;
}

std::vector<std::string> check_nice(const NiceDecomposition& nd, const Graph& g,
                                    const std::vector<Vertex>& root_terminals) {
  std::vector<std::string> problems;
  auto complain = [&](NodeId id, const std::string& what) {
    problems.push_back("node " + std::to_string(id) + ": " + what);
  };
  if (nd.root < 0 || static_cast<std::size_t>(nd.root) >= nd.nodes.size()) {
    problems.emplace_back("missing root");
    return problems;
  }
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    const auto id = static_cast<NodeId>(i);
    const auto& node = nd.nodes[i];
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) complain(id, "bag not sorted");
    for (NodeId c : node.children) {
      if (c >= id) complain(id, "child id not below parent id");
      if (nd.nodes[static_cast<std::size_t>(c)].parent != id) complain(id, "child parent link broken");
    }
    switch (node.kind) {
      case NodeKind::kLeaf:
        if (!node.children.empty()) complain(id, "leaf with children");
        break;
      case NodeKind::kIntroduce: {
        if (node.children.size() != 1) {
          complain(id, "introduce needs one child");
          break;
        }
        auto child_bag = nd.nodes[static_cast<std::size_t>(node.children[0])].bag;
        if (bag_contains(child_bag, node.vertex)) complain(id, "introduced vertex already in child");
        child_bag.insert(std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex), node.vertex);
        if (child_bag != node.bag) complain(id, "introduce bag is not child bag plus vertex");
        if (node.parent == kNoNode) {
          complain(id, "introduce node without parent");
        } else {
          const auto& p = nd.nodes[static_cast<std::size_t>(node.parent)];
          bool sibling_ok = false;
          if (p.kind == NodeKind::kJoin && p.children.size() == 2) {
            const NodeId other = p.children[0] == id ? p.children[1] : p.children[0];
            const auto& o = nd.nodes[static_cast<std::size_t>(other)];
            sibling_ok = o.kind == NodeKind::kLeaf && o.bag == node.bag;
          }
          if (!sibling_ok) complain(id, "introduce node lacks a leaf sibling under a join");
        }
        break;
      }
      case NodeKind::kForget: {
        if (node.children.size() != 1) {
          complain(id, "forget needs one child");
          break;
        }
        auto child_bag = nd.nodes[static_cast<std::size_t>(node.children[0])].bag;
        if (!bag_contains(child_bag, node.vertex)) {
          complain(id, "forgotten vertex missing from child");
          break;
        }
        child_bag.erase(std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex));
        if (child_bag != node.bag) complain(id, "forget bag is not child bag minus vertex");
        break;
      }
      case NodeKind::kJoin:
        if (node.children.size() != 2) {
          complain(id, "join needs two children");
          break;
        }
        for (NodeId c : node.children) {
          if (nd.nodes[static_cast<std::size_t>(c)].bag != node.bag) complain(id, "join child bag differs");
        }
        break;
    }
  }

  if (nd.leaf_edges.size() != nd.nodes.size()) {
    problems.emplace_back("leaf edge table has wrong size");
    return problems;
  }
  EdgeSet all;
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    const auto& node = nd.nodes[i];
    if (node.kind != NodeKind::kLeaf && !nd.leaf_edges[i].empty()) {
      complain(static_cast<NodeId>(i), "non-leaf owns edges");
    }
    for (const Edge& e : nd.leaf_edges[i]) {
      if (!bag_contains(node.bag, e.u) || !bag_contains(node.bag, e.v)) {
        complain(static_cast<NodeId>(i), "edge " + edge_name(e) + " outside its leaf bag");
      }
      all.push_back(e);
    }
  }
  const std::size_t total = all.size();
  normalize(all);
  if (all.size() != total) problems.emplace_back("an edge is owned by two leaves");
  if (all != g.edges()) problems.emplace_back("leaf edges do not cover exactly the graph edges");

  std::vector<Vertex> wanted(root_terminals);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (!is_subset(wanted, nd.nodes[static_cast<std::size_t>(nd.root)].bag)) {
    problems.emplace_back("root bag misses a terminal");
  }
  return problems;
}

AuxiliaryGraphView auxiliary_graph(const NiceDecomposition& nd, NodeId node) {
  if (node < 0 || static_cast<std::size_t>(node) >= nd.nodes.size()) {
    throw ArgumentError("auxiliary_graph: no node " + std::to_string(node));
  }
  AuxiliaryGraphView view;
  view.node = node;
  std::vector<NodeId> stack{node};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const auto& n = nd.nodes[static_cast<std::size_t>(id)];
    view.vertices.insert(view.vertices.end(), n.bag.begin(), n.bag.end());
    const auto& owned = nd.leaf_edges[static_cast<std::size_t>(id)];
    view.edges.insert(view.edges.end(), owned.begin(), owned.end());
    for (NodeId c : n.children) stack.push_back(c);
  }
  std::sort(view.vertices.begin(), view.vertices.end());
  view.vertices.erase(std::unique(view.vertices.begin(), view.vertices.end()), view.vertices.end());
  normalize(view.edges);
  return view;
}

}  // namespace lbcut
