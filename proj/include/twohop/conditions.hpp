#pragma once

// Structural conditions the two detection schemes rely on.

#include <cstdint>
#include <vector>

#include "twohop/connectivity.hpp"
#include "twohop/graph.hpp"

namespace twohop {

namespace detail {

// Row-per-node bit matrix for fast common-neighbor counting.
class BitRows {
 public:
  explicit BitRows(int n) : words_((n + 64) / 64), bits_((n + 1) * words_, 0) {}

  void set(int row, int col) { bits_[row * words_ + (col - 1) / 64] |= 1ull << ((col - 1) % 64); }

  const std::uint64_t* row(int r) const { return &bits_[r * words_]; }
  int words() const { return words_; }

 private:
  int words_;
  std::vector<std::uint64_t> bits_;
};

inline int intersect_count(const BitRows& a, int ra, const BitRows& b, int rb) {
  int c = 0;
  const std::uint64_t* pa = a.row(ra);
  const std::uint64_t* pb = b.row(rb);
  for (int w = 0; w < a.words(); ++w) c += __builtin_popcountll(pa[w] & pb[w]);
  return c;
}

inline BitRows in_neighbor_rows(const DirectedGraph& g) {
  BitRows rows(g.node_count());
  for (NodeId i = 1; i <= g.node_count(); ++i)
    for (NodeId j : g.in_neighbors(i)) rows.set(i, j);
  return rows;
}

inline BitRows out_neighbor_rows(const DirectedGraph& g) {
  BitRows rows(g.node_count());
  for (NodeId i = 1; i <= g.node_count(); ++i)
    for (NodeId j : g.out_neighbors(i)) rows.set(i, j);
  return rows;
}

}  // namespace detail

struct Scheme1ConditionReport {
  bool satisfied = true;
  std::vector<Edge> violations;  // adjacent pairs (u < v) lacking two-hop paths
};

// Every pair of adjacent nodes needs at least f-1 two-hop paths between them
// (equivalently, f-1 common neighbors in an undirected graph).
inline Scheme1ConditionReport check_scheme1_condition(const DirectedGraph& g, int f,
                                                      bool first_violation_only = false) {
  require_undirected(g, "check_scheme1_condition");
  Scheme1ConditionReport rep;
  if (f <= 1) return rep;  // zero paths required
  auto out_rows = detail::out_neighbor_rows(g);
  auto in_rows = detail::in_neighbor_rows(g);
  for (auto [u, v] : g.edges()) {
    if (u > v) continue;
    // out(u) ∩ in(v): intermediates of u -> m -> v
    if (detail::intersect_count(out_rows, u, in_rows, v) < f - 1) {
      rep.satisfied = false;
      rep.violations.push_back({u, v});
      if (first_violation_only) return rep;
    }
  }
  return rep;
}

struct Scheme2Violation {
  NodeId node;       // i
  NodeId neighbor;   // j, in-neighbor of i
  NodeId two_hop;    // h, in-neighbor of j with too few paths to i
};

struct Scheme2ConditionReport {
  bool satisfied = true;
  std::vector<Scheme2Violation> violations;
};

// For every i, every j in N_i and every h in N_j with h != i: either h is an
// in-neighbor of i, or there are at least 2f+1 directed two-hop paths h -> i
// (the path through j counts).
inline Scheme2ConditionReport check_scheme2_condition(const DirectedGraph& g, int f,
                                                      bool first_violation_only = false) {
  Scheme2ConditionReport rep;
  const int need = 2 * f + 1;
  auto out_rows = detail::out_neighbor_rows(g);
  auto in_rows = detail::in_neighbor_rows(g);
  for (NodeId i = 1; i <= g.node_count(); ++i) {
    for (NodeId j : g.in_neighbors(i)) {
      for (NodeId h : g.in_neighbors(j)) {
        if (h == i || g.has_edge(h, i)) continue;
        if (detail::intersect_count(out_rows, h, in_rows, i) >= need) continue;
        rep.satisfied = false;
        rep.violations.push_back({i, j, h});
        if (first_violation_only) return rep;
      }
    }
  }
  return rep;
}

}  // namespace twohop
