#pragma once

// Edge-list text format.
//
//   # comment
//   undirected 9        <- or: directed 9
//   1 2
//   2 3
//
// Ids are 1-based.  Undirected files store each edge once (either
// orientation).  Malformed lines, out-of-range ids, self-loops and duplicate
// edges are reported with their line number.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "twohop/graph.hpp"

namespace twohop {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline DirectedGraph read_edge_list(std::istream& is) {
  std::string line;
  int lineno = 0;
  int n = -1;
  bool undirected = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view sv(line);
    auto hash = sv.find('#');
    if (hash != std::string_view::npos) sv = sv.substr(0, hash);
    std::istringstream ls{std::string(sv)};
    if (n < 0) {
      std::string kind;
      if (!(ls >> kind)) continue;  // blank/comment before header
      int count = 0;
      std::string extra;
      if ((kind != "directed" && kind != "undirected") || !(ls >> count) || count <= 0 ||
          (ls >> extra))
        throw ParseError("expected header 'directed <n>' or 'undirected <n>'", lineno);
      n = count;
      undirected = kind == "undirected";
      continue;
    }
    NodeId u = 0, v = 0;
    std::string extra;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v) || (ls >> extra)) throw ParseError("expected '<u> <v>'", lineno);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("node id out of range [1, " + std::to_string(n) + "]", lineno);
    if (u == v) throw ParseError("self-loop on node " + std::to_string(u), lineno);
    Edge key = undirected ? Edge{std::min(u, v), std::max(u, v)} : Edge{u, v};
    if (!seen.insert(key).second)
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), lineno);
    edges.push_back({u, v});
  }
  if (n < 0) throw ParseError("missing header", lineno + 1);
  return DirectedGraph(n, std::move(edges), undirected);
}

inline DirectedGraph read_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(f);
}

inline void write_edge_list(std::ostream& os, const DirectedGraph& g) {
  os << (g.undirected() ? "undirected " : "directed ") << g.node_count() << "\n";
  for (auto [u, v] : g.edges()) {
    if (g.undirected() && u > v) continue;  // store undirected edges once
    os << u << " " << v << "\n";
  }
}

inline void write_edge_list(const std::string& path, const DirectedGraph& g) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  write_edge_list(f, g);
}

}  // namespace twohop
