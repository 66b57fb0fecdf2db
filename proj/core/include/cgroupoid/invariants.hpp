#pragma once

#include <vector>

#include "cgroupoid/complex.hpp"
#include "cgroupoid/graph.hpp"

namespace cgroupoid {

struct TwoColoring {
  std::vector<int> color;  // vertex -> {0,1}
};

/// Every facet's vertices receive pairwise distinct colors.
struct RainbowColoring {
  std::vector<int> color;  // vertex -> {0..colors-1}
  int colors = 0;
};

bool is_proper(const Graph& graph, const TwoColoring& coloring);
bool is_rainbow(const SimplicialComplex& complex, const RainbowColoring& coloring);
bool is_rainbow(const CubicalComplex& complex, const RainbowColoring& coloring);

/// NaCl: 0 iff the vertex-edge graph is bipartite. A 0 comes with a proper
/// coloring, a 1 with an odd closed walk (first vertex not repeated at the end).
struct NaclResult {
  int value = 0;
  TwoColoring coloring;
  std::vector<Vertex> odd_cycle;
};

NaclResult nacl(const Graph& skeleton);
NaclResult nacl(const SimplicialComplex& complex);
NaclResult nacl(const CubicalComplex& complex);

/// 0 iff every holonomy group (one per strong component) lies in B_k^even.
int i_invariant(const CubicalComplex& complex);

/// Every vertex star is connected through ridges containing that vertex.
bool locally_strongly_connected(const SimplicialComplex& complex);
bool locally_strongly_connected(const CubicalComplex& complex);

struct InvariantComparison {
  int i = 0;
  int nacl = 0;
  bool equal = true;
  bool strongly_connected = false;
  bool locally_strongly_connected = false;
  std::vector<Vertex> witness_odd_cycle;
};

InvariantComparison compare_invariants(const CubicalComplex& complex);

/// K / (u ~ v): merges v into u and renumbers vertices densely (the larger id is
/// removed). Coordinates are dropped. Throws Errc::AdjacentVertices, Errc::SharedCell,
/// or any build_cubical error raised by the glued complex.
CubicalComplex quotient_identify(const CubicalComplex& complex, Vertex u, Vertex v);

enum class ParityForm {
  Zonotope,  // color = number of negative coordinates mod 2
  Lattice,   // color = coordinate sum mod 2
};

TwoColoring lattice_parity_coloring(const std::vector<std::vector<int>>& points, ParityForm form);

/// Extends the slot coloring of facet 0 along flips. Requires strong and local
/// strong connectivity and trivial holonomy; throws Errc::NotConnected,
/// Errc::NotLocallyConnected, Errc::NontrivialHolonomy, or
/// Errc::InconsistentExtension if a cell ends up colored two ways.
RainbowColoring transport_coloring(const SimplicialComplex& complex);
/// Cubical version: each cube's 2^k corners get distinct colors.
RainbowColoring transport_coloring(const CubicalComplex& complex);

/// Parity 2-coloring of the base cube carried along flips; needs I(K) = 0
/// (Errc::NontrivialHolonomy otherwise) plus both connectivity conditions.
TwoColoring transport_two_coloring(const CubicalComplex& complex);

}  // namespace cgroupoid
