#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgroupoid {

enum class Errc {
  // complex construction
  EmptyInput,
  NonPure,
  DegenerateFacet,
  DominatedFacet,
  SparseVertices,
  CornerCollision,
  SemilatticeViolation,
  NonCubicalFace,
  // permutations
  DegreeMismatch,
  NotAPermutation,
  ClosureTooLarge,
  // groupoids and holonomy
  NotAdjacent,
  BrokenPath,
  BaseMismatch,
  NotConnected,
  NotNondegenerate,
  // invariants
  AdjacentVertices,
  SharedCell,
  NontrivialHolonomy,
  NotLocallyConnected,
  InconsistentExtension,
  // games
  DegenerateBoard,
  BoardMismatch,
  InvalidState,
  // graphs
  InvalidGraph,
  TooLarge,
  EdgeNotInGraph,
  NotRegular,
  InvalidConnection,
  // io
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` says which contract failed.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cgroupoid
