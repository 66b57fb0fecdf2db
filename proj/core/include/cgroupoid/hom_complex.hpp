#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgroupoid/complex.hpp"
#include "cgroupoid/graph.hpp"

namespace cgroupoid {

/// Cell of Hom(G, H): eta[i] is a nonempty bitmask of H-vertices for vertex i of G.
struct HomCell {
  std::vector<std::uint32_t> eta;

  int dimension() const;
  friend bool operator==(const HomCell&, const HomCell&) = default;
  friend auto operator<=>(const HomCell&, const HomCell&) = default;
};

/// Every alpha in eta(i), beta in eta(j) is an H-edge for every G-edge (i, j).
bool is_valid_cell(const Graph& g, const Graph& h, const HomCell& cell);

/// a is a face of b: eta_a(i) is a subset of eta_b(i) for all i.
bool is_face(const HomCell& a, const HomCell& b);

/// All cells sorted by dimension, then lexicographically by masks. H may have at
/// most 32 vertices; throws Errc::TooLarge once the search visits more than
/// `node_budget` partial assignments.
std::vector<HomCell> hom_complex(const Graph& g, const Graph& h, std::uint64_t node_budget = 10'000'000);

std::vector<std::size_t> f_vector(const std::vector<HomCell>& cells);
/// Alternating sum of the f-vector; 0 for the empty complex.
long long euler_characteristic(const std::vector<HomCell>& cells);

/// Proper n-coloring of G by backtracking. Throws Errc::TooLarge when G has more
/// than 20 vertices.
std::optional<std::vector<Vertex>> graph_hom_exists(const Graph& g, std::size_t n);

/// eta -> eta o swap on cells of Hom(K2, H).
struct SwapAction {
  std::vector<std::size_t> image;  // cell index -> cell index
  bool involutive = false;
  bool dimension_preserving = false;
  bool face_preserving = false;
  bool fixed_point_free = false;
};

/// Throws Errc::InvalidGraph unless every cell has exactly two entries.
SwapAction induced_swap_action(const std::vector<HomCell>& cells);

/// Restriction to the edge (u, v): a cell of Hom(K2, H) with vertex 0 = u and
/// vertex 1 = v. Throws Errc::EdgeNotInGraph.
HomCell restriction_map(const Graph& g, const HomCell& cell, Vertex u, Vertex v);

/// Pulls a cell of Hom(G, H) back along a graph homomorphism h: G' -> G.
/// Throws Errc::InvalidGraph if h is not a homomorphism.
HomCell precompose(const Graph& source, const Graph& g, const VertexMap& h, const HomCell& cell);

}  // namespace cgroupoid
