#pragma once

// Directed-graph substrate.  Node ids are 1-based.  A graph is an immutable
// value after construction; all queries are const.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twohop {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;  // (source, target)

class DirectedGraph {
 public:
  // Edges may be listed in any order; duplicates are an error.  If
  // `undirected` is set, each edge is stored in both directions and may be
  // supplied in either (but only one of the two).
  DirectedGraph(int node_count, std::vector<Edge> edges, bool undirected)
      : n_(node_count), undirected_(undirected) {
    if (node_count <= 0) throw std::invalid_argument("graph: node count must be positive");
    std::set<Edge> set;
    for (auto [u, v] : edges) {
      check_node(u);
      check_node(v);
      if (u == v) throw std::invalid_argument("graph: self-loop on node " + std::to_string(u));
      if (!set.insert({u, v}).second)
        throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + " -> " +
                                    std::to_string(v));
      if (undirected) set.insert({v, u});
    }
    edges_.assign(set.begin(), set.end());
    in_.assign(n_ + 1, {});
    out_.assign(n_ + 1, {});
    for (auto [u, v] : edges_) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    for (auto& a : in_) std::sort(a.begin(), a.end());
    for (auto& a : out_) std::sort(a.begin(), a.end());
  }

  static DirectedGraph complete(int n) {
    std::vector<Edge> e;
    for (NodeId u = 1; u <= n; ++u)
      for (NodeId v = u + 1; v <= n; ++v) e.push_back({u, v});
    return DirectedGraph(n, std::move(e), true);
  }

  int node_count() const { return n_; }
  bool undirected() const { return undirected_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(NodeId u, NodeId v) const {
    const auto& o = out_[check_node(u)];
    return std::binary_search(o.begin(), o.end(), check_node(v));
  }

  // In-neighbors of i: all j with edge (j, i).
  const std::vector<NodeId>& in_neighbors(NodeId i) const { return in_[check_node(i)]; }
  const std::vector<NodeId>& out_neighbors(NodeId i) const { return out_[check_node(i)]; }
  int in_degree(NodeId i) const { return static_cast<int>(in_neighbors(i).size()); }

  // Keeps only the nodes for which `alive[id]` holds (ids unchanged).
  DirectedGraph induced(const std::vector<char>& alive) const {
    std::vector<Edge> e;
    for (auto [u, v] : edges_) {
      if (alive[u] && alive[v] && (!undirected_ || u < v)) e.push_back({u, v});
    }
    return DirectedGraph(n_, std::move(e), undirected_);
  }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.undirected_ == b.undirected_ && a.edges_ == b.edges_;
  }

 private:
  NodeId check_node(NodeId i) const {
    if (i < 1 || i > n_)
      throw std::out_of_range("graph: node id " + std::to_string(i) + " not in [1, " +
                              std::to_string(n_) + "]");
    return i;
  }

  int n_;
  bool undirected_;
  std::vector<Edge> edges_;               // sorted, directed view
  std::vector<std::vector<NodeId>> in_;   // 1-based
  std::vector<std::vector<NodeId>> out_;
};

// Intermediate nodes m with from -> m -> to.
inline std::vector<NodeId> two_hop_paths(const DirectedGraph& g, NodeId from, NodeId to) {
  if (from == to) throw std::invalid_argument("two_hop_paths: endpoints must differ");
  const auto& a = g.out_neighbors(from);
  const auto& b = g.in_neighbors(to);
  std::vector<NodeId> mids;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(mids));
  return mids;
}

// Nodes that are out-neighbors of every other node (in-degree n-1).
inline std::vector<NodeId> full_access_nodes(const DirectedGraph& g) {
  std::vector<NodeId> r;
  for (NodeId i = 1; i <= g.node_count(); ++i)
    if (g.in_degree(i) == g.node_count() - 1) r.push_back(i);
  return r;
}

}  // namespace twohop
