#include "cgroupoid/error.hpp"

namespace cgroupoid {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonPure: return "NonPure";
    case Errc::DegenerateFacet: return "DegenerateFacet";
    case Errc::DominatedFacet: return "DominatedFacet";
    case Errc::SparseVertices: return "SparseVertices";
    case Errc::CornerCollision: return "CornerCollision";
    case Errc::SemilatticeViolation: return "SemilatticeViolation";
    case Errc::NonCubicalFace: return "NonCubicalFace";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::ClosureTooLarge: return "ClosureTooLarge";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::BrokenPath: return "BrokenPath";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotNondegenerate: return "NotNondegenerate";
    case Errc::AdjacentVertices: return "AdjacentVertices";
    case Errc::SharedCell: return "SharedCell";
    case Errc::NontrivialHolonomy: return "NontrivialHolonomy";
    case Errc::NotLocallyConnected: return "NotLocallyConnected";
    case Errc::InconsistentExtension: return "InconsistentExtension";
    case Errc::DegenerateBoard: return "DegenerateBoard";
    case Errc::BoardMismatch: return "BoardMismatch";
    case Errc::InvalidState: return "InvalidState";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EdgeNotInGraph: return "EdgeNotInGraph";
    case Errc::NotRegular: return "NotRegular";
    case Errc::InvalidConnection: return "InvalidConnection";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cgroupoid
