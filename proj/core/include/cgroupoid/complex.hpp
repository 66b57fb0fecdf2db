#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cgroupoid/graph.hpp"

namespace cgroupoid {

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Finite ranked poset. Elements are faces identified by their vertex sets;
/// covering relations go between ranks r and r+1.
class RankedPoset {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const VertexSet& element(std::size_t x) const { return elements_[x]; }
  int rank(std::size_t x) const { return ranks_[x]; }
  int depth() const noexcept { return depth_; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }

  /// Elements of P_{<=x}, including x.
  std::vector<std::size_t> down_set(std::size_t x) const;
  std::optional<std::size_t> find(const VertexSet& face) const;
  /// Number of elements of each rank.
  std::vector<std::size_t> rank_counts() const;

  /// Adds an element if new and returns its index.
  std::size_t add(VertexSet face, int rank);
  /// Records that `upper` covers `lower` (idempotent).
  void add_cover(std::size_t lower, std::size_t upper);

 private:
  std::vector<VertexSet> elements_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::map<VertexSet, std::size_t> index_;
  int depth_ = -1;
};

/// Pure d-dimensional simplicial complex on vertices 0..n-1. Facets are stored
/// sorted; a facet's vertex order is its slot order.
class SimplicialComplex {
 public:
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  int dimension() const noexcept { return dimension_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  std::optional<std::size_t> facet_index(const VertexSet& facet) const;

  friend SimplicialComplex build_simplicial(std::vector<std::vector<Vertex>> facets);
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  int dimension_ = -1;
  std::vector<VertexSet> facets_;
};

/// Throws Errc::EmptyInput, NonPure, DegenerateFacet, DominatedFacet or SparseVertices.
SimplicialComplex build_simplicial(std::vector<std::vector<Vertex>> facets);

/// Pure cubical complex of dimension k. Each cube maps the 2^k corner addresses
/// (bit j = coordinate j) to vertex ids; faces are obtained by freezing bits.
class CubicalComplex {
 public:
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  unsigned dimension() const noexcept { return dimension_; }
  const std::vector<std::vector<Vertex>>& cubes() const noexcept { return cubes_; }
  /// Optional integer coordinates per vertex (lattice patches carry them).
  const std::vector<std::vector<int>>& coords() const noexcept { return coords_; }
  const RankedPoset& poset() const noexcept { return poset_; }

  friend CubicalComplex build_cubical(unsigned dimension, std::vector<std::vector<Vertex>> cubes,
                                      std::vector<std::vector<int>> coords);
  friend bool operator==(const CubicalComplex& a, const CubicalComplex& b) {
    return a.dimension_ == b.dimension_ && a.cubes_ == b.cubes_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t vertex_count_ = 0;
  unsigned dimension_ = 0;
  std::vector<std::vector<Vertex>> cubes_;
  std::vector<std::vector<int>> coords_;
  RankedPoset poset_;
};

/// Validates corner distinctness, the pairwise "intersection is a common face"
/// semilattice surrogate, and the cube shape of every down-set. Throws
/// Errc::EmptyInput, CornerCollision, SemilatticeViolation, NonCubicalFace or
/// SparseVertices.
CubicalComplex build_cubical(unsigned dimension, std::vector<std::vector<Vertex>> cubes,
                             std::vector<std::vector<int>> coords = {});

/// One face of a cube: bits in `free_mask` vary, the others are fixed to `fixed_bits`.
struct CubeFace {
  unsigned free_mask = 0;
  unsigned fixed_bits = 0;
  std::vector<unsigned> addresses;  // corner addresses, increasing
  VertexSet vertices;               // sorted vertex ids
};

/// All 3^k faces of a cube given by its corner array.
std::vector<CubeFace> cube_faces(const std::vector<Vertex>& corners, unsigned dimension);

RankedPoset face_poset(const SimplicialComplex& complex);
RankedPoset face_poset(const CubicalComplex& complex);

/// Vertex-edge graph.
Graph one_skeleton(const SimplicialComplex& complex);
Graph one_skeleton(const CubicalComplex& complex);

struct DualEdge {
  std::size_t a;
  std::size_t b;
  std::size_t ridge;
  friend bool operator==(const DualEdge&, const DualEdge&) = default;
};

/// Facets as nodes, one edge per shared codimension-1 face per facet pair.
struct DualMultigraph {
  std::size_t node_count = 0;
  std::vector<DualEdge> edges;
  std::vector<VertexSet> ridges;  // ridge id -> vertex set
};

DualMultigraph facet_adjacency(const SimplicialComplex& complex);
DualMultigraph facet_adjacency(const CubicalComplex& complex);

/// Total assignment source vertex -> target vertex.
struct VertexMap {
  std::vector<Vertex> assignment;
  Vertex operator()(Vertex v) const { return assignment[v]; }
};

/// (f then g).
VertexMap compose(const VertexMap& f, const VertexMap& g);

struct NondegeneracyResult {
  bool ok = true;
  VertexSet witness;  // an offending source face when !ok
  explicit operator bool() const noexcept { return ok; }
};

/// True iff every face maps injectively onto a face of the target of equal dimension.
/// Throws Errc::NotNondegenerate when the map is not total on the source.
NondegeneracyResult check_nondegenerate(const SimplicialComplex& source,
                                        const SimplicialComplex& target, const VertexMap& f);
/// Cubical reading: every cube maps injectively onto a cube face of the target with
/// its edges sent to edges.
NondegeneracyResult check_nondegenerate(const CubicalComplex& source, const CubicalComplex& target,
                                        const VertexMap& f);

}  // namespace cgroupoid
