#pragma once

// Vertex connectivity and rooted-spanning-tree connectivity.
//
// kappa(G) is computed two ways: exhaustive removal-set enumeration at small
// n, and a unit-capacity max-flow scan (Menger) above that.  The two routes
// are cross-validated in the test suite.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "twohop/graph.hpp"

namespace twohop {

class InstanceTooLarge : public std::runtime_error {
 public:
  explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultBruteForceCap = 16;

namespace detail {

// Is the graph restricted to `alive` connected (undirected view)?
inline bool connected_among(const DirectedGraph& g, const std::vector<char>& alive) {
  int start = 0, count = 0;
  for (NodeId i = 1; i <= g.node_count(); ++i)
    if (alive[i]) {
      if (!start) start = i;
      ++count;
    }
  if (count <= 1) return true;
  std::vector<char> vis(g.node_count() + 1, 0);
  std::queue<NodeId> q;
  q.push(start);
  vis[start] = 1;
  int seen = 1;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : g.out_neighbors(u)) {
      if (alive[v] && !vis[v]) {
        vis[v] = 1;
        ++seen;
        q.push(v);
      }
    }
  }
  return seen == count;
}

// Unit-capacity Dinic on the vertex-split digraph; stops once `cap` is hit.
class VertexFlow {
 public:
  explicit VertexFlow(const DirectedGraph& g) : n_(g.node_count()) {
    // node x -> in-vertex 2x, out-vertex 2x+1
    adj_.assign(2 * (n_ + 1), {});
    for (NodeId x = 1; x <= n_; ++x) add_edge(vin(x), vout(x), 1);
    for (auto [u, v] : g.edges()) add_edge(vout(u), vin(v), kInf);
  }

  // Max number of internally vertex-disjoint s->t paths, at most cap.
  int max_flow(NodeId s, NodeId t, int cap) {
    saved_ = cap_;
    int flow = 0;
    const int src = vout(s), dst = vin(t);
    // endpoints are not counted as cut vertices
    cap_[split_edge_[s]] = kInf;
    cap_[split_edge_[t]] = kInf;
    while (flow < cap && bfs(src, dst)) {
      it_.assign(adj_.size(), 0);
      while (flow < cap) {
        int f = dfs(src, dst, cap - flow);
        if (f == 0) break;
        flow += f;
      }
    }
    cap_ = saved_;
    return flow;
  }

 private:
  static constexpr int kInf = 1 << 28;
  int vin(NodeId x) const { return 2 * x; }
  int vout(NodeId x) const { return 2 * x + 1; }

  void add_edge(int a, int b, int c) {
    if (c == 1) split_edge_[a / 2] = static_cast<int>(head_.size());
    head_.push_back(b);
    cap_.push_back(c);
    adj_[a].push_back(static_cast<int>(head_.size()) - 1);
    head_.push_back(a);
    cap_.push_back(0);
    adj_[b].push_back(static_cast<int>(head_.size()) - 1);
  }

  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e : adj_[u]) {
        if (cap_[e] > 0 && level_[head_[e]] < 0) {
          level_[head_[e]] = level_[u] + 1;
          q.push(head_[e]);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int pushed) {
    if (u == t) return pushed;
    for (int& i = it_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      int e = adj_[u][i];
      int v = head_[e];
      if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
        int f = dfs(v, t, std::min(pushed, cap_[e]));
        if (f > 0) {
          cap_[e] -= f;
          cap_[e ^ 1] += f;
          return f;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> head_, cap_, saved_, level_, it_;
  std::map<NodeId, int> split_edge_;
};

inline bool is_complete(const DirectedGraph& g) {
  for (NodeId i = 1; i <= g.node_count(); ++i)
    if (g.in_degree(i) != g.node_count() - 1) return false;
  return true;
}

}  // namespace detail

inline void require_undirected(const DirectedGraph& g, const char* op) {
  if (!g.undirected())
    throw std::invalid_argument(std::string(op) + ": requires an undirected graph");
}

// kappa by removal-set enumeration; exact for any n but exponential.
inline int vertex_connectivity_enumeration(const DirectedGraph& g) {
  require_undirected(g, "vertex_connectivity");
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 nodes");
  if (detail::is_complete(g)) return n - 1;
  // kappa = size of the smallest removal set that disconnects the rest
  for (int t = 0; t <= n - 2; ++t) {
    std::vector<int> pick(t);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<char> alive(n + 1, 1);
      for (int idx : pick) alive[idx + 1] = 0;
      if (!detail::connected_among(g, alive)) return t;
      // next combination
      int i = t - 1;
      while (i >= 0 && pick[i] == n - t + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n - 1;
}

// kappa via max-flow (Menger): scan delta+1 candidate roots against their
// non-neighbors; some candidate avoids every minimum cut.
inline int vertex_connectivity_max_flow(const DirectedGraph& g) {
  require_undirected(g, "vertex_connectivity");
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 nodes");
  if (detail::is_complete(g)) return n - 1;
  int delta = n;
  for (NodeId i = 1; i <= n; ++i) delta = std::min(delta, g.in_degree(i));
  int best = n - 1;
  detail::VertexFlow flow(g);
  const int candidates = std::min(n, delta + 2);
  for (NodeId v = 1; v <= candidates; ++v) {
    for (NodeId u = 1; u <= n; ++u) {
      if (u == v || g.has_edge(v, u)) continue;
      best = std::min(best, flow.max_flow(v, u, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

inline int vertex_connectivity(const DirectedGraph& g) {
  if (g.node_count() <= kDefaultBruteForceCap) return vertex_connectivity_enumeration(g);
  return vertex_connectivity_max_flow(g);
}

namespace detail {

// Does the digraph restricted to `alive` contain a rooted spanning tree
// (some alive node reaches every alive node)?
inline bool has_rooted_spanning_tree(const DirectedGraph& g, const std::vector<char>& alive) {
  int count = 0;
  for (NodeId i = 1; i <= g.node_count(); ++i)
    if (alive[i]) ++count;
  if (count <= 1) return true;
  std::vector<char> vis(g.node_count() + 1, 0);
  for (NodeId r = 1; r <= g.node_count(); ++r) {
    if (!alive[r]) continue;
    std::fill(vis.begin(), vis.end(), 0);
    std::queue<NodeId> q;
    q.push(r);
    vis[r] = 1;
    int seen = 1;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (NodeId v : g.out_neighbors(u)) {
        if (alive[v] && !vis[v]) {
          vis[v] = 1;
          ++seen;
          q.push(v);
        }
      }
    }
    if (seen == count) return true;
  }
  return false;
}

}  // namespace detail

// True iff removing any k-1 nodes still leaves a rooted spanning tree.
// Exhaustive over removal subsets; capped like the robustness checker.
inline bool has_k_connected_rooted_spanning_trees(const DirectedGraph& g, int k,
                                                  int node_cap = kDefaultBruteForceCap) {
  if (k < 1) throw std::invalid_argument("rooted spanning trees: k must be positive");
  const int n = g.node_count();
  if (n <= k)
    throw std::invalid_argument("rooted spanning trees: need more than k nodes");
  if (n > node_cap)
    throw InstanceTooLarge("rooted spanning trees: instance too large (n=" + std::to_string(n) +
                           " > cap=" + std::to_string(node_cap) + ")");
  const int t = k - 1;
  std::vector<int> pick(t);
  std::iota(pick.begin(), pick.end(), 0);
  if (t == 0) {
    std::vector<char> alive(n + 1, 1);
    return detail::has_rooted_spanning_tree(g, alive);
  }
  while (true) {
    std::vector<char> alive(n + 1, 1);
    for (int idx : pick) alive[idx + 1] = 0;
    if (!detail::has_rooted_spanning_tree(g, alive)) return false;
    int i = t - 1;
    while (i >= 0 && pick[i] == n - t + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

// Connectivity of the graph as used by a run (strong connectivity for
// digraphs, plain connectivity for undirected graphs).
inline bool is_strongly_connected(const DirectedGraph& g) {
  const int n = g.node_count();
  std::vector<char> alive(n + 1, 1);
  if (g.undirected()) return detail::connected_among(g, alive);
  auto reach_all = [&](bool reversed) {
    std::vector<char> vis(n + 1, 0);
    std::queue<NodeId> q;
    q.push(1);
    vis[1] = 1;
    int seen = 1;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      const auto& nbrs = reversed ? g.in_neighbors(u) : g.out_neighbors(u);
      for (NodeId v : nbrs) {
        if (!vis[v]) {
          vis[v] = 1;
          ++seen;
          q.push(v);
        }
      }
    }
    return seen == n;
  };
  return reach_all(false) && reach_all(true);
}

}  // namespace twohop
