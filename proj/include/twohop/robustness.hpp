#pragma once

// (r,s)-robustness checker.  Brute force over all pairs of nonempty disjoint
// node subsets — exponential by nature, so instances beyond the node cap are
// rejected outright rather than approximated.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twohop/connectivity.hpp"
#include "twohop/graph.hpp"

namespace twohop {

struct RobustnessWitness {
  std::vector<NodeId> subset_one;  // V1
  std::vector<NodeId> subset_two;  // V2
  std::vector<NodeId> reached_one; // nodes of V1 with >= r in-edges from outside V1
  std::vector<NodeId> reached_two;
};

struct RobustnessResult {
  bool robust = false;
  std::optional<RobustnessWitness> witness;  // violating pair when not robust
};

// True iff for every pair of nonempty disjoint subsets V1, V2 one of
// (i) X^r(V1) = V1, (ii) X^r(V2) = V2, (iii) |X^r(V1)| + |X^r(V2)| >= s holds.
inline RobustnessResult is_rs_robust(const DirectedGraph& g, int r, int s,
                                     int node_cap = kDefaultBruteForceCap) {
  const int n = g.node_count();
  if (r < 1) throw std::invalid_argument("is_rs_robust: r must be positive");
  if (s < 1 || s > n) throw std::invalid_argument("is_rs_robust: need 1 <= s <= n");
  if (n > node_cap || n > 32)
    throw InstanceTooLarge("is_rs_robust: instance too large (n=" + std::to_string(n) +
                           " > cap=" + std::to_string(std::min(node_cap, 32)) + ")");

  std::vector<std::uint32_t> in_mask(n + 1, 0);
  for (NodeId i = 1; i <= n; ++i)
    for (NodeId j : g.in_neighbors(i)) in_mask[i] |= 1u << (j - 1);

  auto unpack = [&](std::uint32_t m) {
    std::vector<NodeId> v;
    for (NodeId i = 1; i <= n; ++i)
      if (m & (1u << (i - 1))) v.push_back(i);
    return v;
  };

  // X^r of a subset, plus its size.
  auto reach_mask = [&](std::uint32_t sub) {
    std::uint32_t x = 0;
    for (NodeId i = 1; i <= n; ++i) {
      if (!(sub & (1u << (i - 1)))) continue;
      if (__builtin_popcount(in_mask[i] & ~sub) >= r) x |= 1u << (i - 1);
    }
    return x;
  };

  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t v1 = 1; v1 <= full && v1 != 0; ++v1) {
    const std::uint32_t x1 = reach_mask(v1);
    if (x1 == v1) continue;  // condition (i) holds for every V2 paired with this V1
    const int x1_count = __builtin_popcount(x1);
    const std::uint32_t rest = full & ~v1;
    // enumerate nonempty submasks of the complement in decreasing order;
    // (V1,V2) is unordered, so only visit pairs with v2 > v1
    for (std::uint32_t v2 = rest; v2; v2 = (v2 - 1) & rest) {
      if (v2 < v1) break;
      const std::uint32_t x2 = reach_mask(v2);
      if (x2 == v2) continue;                                   // (ii)
      if (x1_count + __builtin_popcount(x2) >= s) continue;      // (iii)
      RobustnessWitness w;
      w.subset_one = unpack(v1);
      w.subset_two = unpack(v2);
      w.reached_one = unpack(x1);
      w.reached_two = unpack(x2);
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

}  // namespace twohop
