#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cgroupoid/complex.hpp"
#include "cgroupoid/groupoid.hpp"
#include "cgroupoid/perm_group.hpp"

namespace cgroupoid {

bool is_strongly_connected(const Groupoid& g);
bool is_strongly_connected(const SimplicialComplex& complex);
bool is_strongly_connected(const CubicalComplex& complex);

struct HolonomyOptions {
  /// Throw Errc::NotConnected when the whole groupoid is not connected. When
  /// false, the group of the base object's component is computed.
  bool require_connected = true;
  /// Shuffle adjacency before the BFS to obtain a different spanning tree.
  std::optional<std::uint64_t> tree_seed;
};

/// Vertex group at a base object. Generators act on the base object's slots and
/// come one per non-tree morphism of a BFS spanning tree: tree path out, the
/// morphism, tree path back.
struct HolonomyResult {
  std::size_t base = 0;
  std::vector<Perm> generators;
  std::vector<TransportPath> loops;  // loops[i] realizes generators[i]
  PermGroup group;
  std::vector<std::size_t> component;       // objects reached from the base
  std::vector<std::size_t> tree_morphisms;  // morphism ids used by the spanning tree

  GroupTag tag() const { return recognize(group); }
};

HolonomyResult holonomy_group(const Groupoid& g, std::size_t base, const HolonomyOptions& options = {});

/// True iff holonomy order and recognition tag agree for every base object and
/// for `random_trees` additional seeded spanning trees per base.
bool holonomy_order_invariance(const Groupoid& g, unsigned random_trees = 3, std::uint64_t seed = 0);

/// Reads a corner-address permutation of a k-cube as a signed permutation
/// matrix. Corner bit 0 stands for +1 and bit 1 for -1 in each coordinate.
/// Throws Errc::NotAPermutation if the permutation is not a cube symmetry.
SignedPerm corner_action_to_signed(const Perm& corners, unsigned k);

std::vector<SignedPerm> signed_generators(const HolonomyResult& result, unsigned k);

struct EmbeddingReport {
  bool ok = false;
  BigInt source_order;
  BigInt image_order;
  BigInt target_order;
  std::size_t target_base = 0;
  std::vector<Perm> images;  // renamed source generators
};

/// Checks that a non-degenerate map induces an injective homomorphism of
/// holonomy groups at `base` and f(base). Throws Errc::NotNondegenerate or
/// Errc::NotConnected.
EmbeddingReport induced_embedding_check(const SimplicialComplex& source,
                                        const SimplicialComplex& target, const VertexMap& f,
                                        std::size_t base = 0);

/// Compares the holonomy group with the full outer symmetry group of an object.
struct OuterComparison {
  BigInt holonomy_order;
  BigInt outer_order;
  bool proper = false;  // holonomy is a proper subgroup
};

/// Outer group: S_{d+1} for simplices, B_k (order 2^k k!) for cubes.
OuterComparison compare_with_outer(const HolonomyResult& result, const BigInt& outer_order);

}  // namespace cgroupoid
