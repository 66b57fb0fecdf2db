#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cgroupoid {

using Vertex = std::uint32_t;

/// Simple undirected graph: no loops, no multi-edges. Edges are stored as (u, v)
/// with u < v, sorted.
class Graph {
 public:
  Graph() = default;
  /// Throws Errc::InvalidGraph on loops or out-of-range endpoints. Duplicate
  /// edges (in either orientation) are merged.
  Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  /// Neighbours of v in increasing order.
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// m x n grid; cell (r, c) is vertex r * n + c.
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Parses "kN" or "cN" (case-insensitive). Throws Errc::InvalidGraph.
Graph named_graph(const std::string& name);

}  // namespace cgroupoid
