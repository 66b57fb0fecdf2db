#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cgroupoid/complex.hpp"
#include "cgroupoid/perm.hpp"

namespace cgroupoid {

/// Cycle graph C_n as a 1-dimensional simplicial complex (facets {i, i+1}).
SimplicialComplex cycle_complex(std::size_t n);
SimplicialComplex tetrahedron_boundary();
SimplicialComplex octahedron_boundary();
/// Strip of n triangles {i, i+1, i+2}.
SimplicialComplex triangle_strip(std::size_t n);

/// Single k-cube with 0/1 coordinates.
CubicalComplex cube_complex(unsigned k);

/// Unit k-cubes of the box [0, dims[0]] x ... inside Z^k. `cells` lists the lower
/// corners of the chosen cubes; vertices are numbered densely in lexicographic
/// order of their coordinates (last coordinate slowest) and carry coordinates.
CubicalComplex lattice_patch(const std::vector<std::vector<int>>& cells);
/// Full rows x cols patch of squares.
CubicalComplex grid_patch(std::size_t rows, std::size_t cols);

/// Ring of n k-cubes: cube i spans slabs i and i+1 along the ring direction
/// (corner bit 0); slab n is glued back onto slab 0 through `twist`, a symmetry
/// of the (k-1)-cube cross-section. For k = 2 and twist = -1 this is a Moebius
/// strip of n squares. Needs n >= 3.
CubicalComplex cube_ring(std::size_t n, unsigned k, const SignedPerm& twist);
CubicalComplex square_ring(std::size_t n, bool twisted);

/// A 1 x 3 strip of squares with the corners (0,0) and (3,0) identified.
CubicalComplex quotient_example();

/// Deterministic random cubical complex: lattice subsets in dimension 2 or 3,
/// rings with random twists, and quotients of lattice subsets.
CubicalComplex random_cubical(std::uint64_t seed);

struct NamedComplex {
  std::string name;
  std::variant<SimplicialComplex, CubicalComplex> complex;
};

/// The bundled examples in a fixed order.
std::vector<NamedComplex> builtin_corpus();

}  // namespace cgroupoid
