#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgroupoid/complex.hpp"
#include "cgroupoid/graph.hpp"
#include "cgroupoid/groupoid.hpp"
#include "cgroupoid/holonomy.hpp"

namespace cgroupoid {

/// Sliding puzzle on an arbitrary connected board; one cell is always empty.
struct Puzzle {
  Graph board;
  std::size_t rows = 0, cols = 0;  // 0 for boards not built from a grid

  std::size_t cell_count() const noexcept { return board.vertex_count(); }
  std::size_t piece_count() const noexcept { return board.vertex_count() - 1; }
};

/// Throws Errc::DegenerateBoard for fewer than two cells or a disconnected board.
Puzzle make_puzzle(Graph board);
/// Cells numbered row-major: cell = r * n + c.
Puzzle grid_puzzle(std::size_t m, std::size_t n);

/// Objects are hole cells. Slots of object h are the occupied cells in
/// increasing order. The move h -> h' slides the piece at h' into h; its ridge id
/// is the board edge index.
///
/// A closed hole tour shifts the pieces on it against the hole's motion. On the
/// 2x2 board (0 1 / 2 3) with the hole at 3, the tour 3-1-0-2-3 carries the piece
/// from 1 to 2, from 0 to 1 and from 2 to 0.
Groupoid puzzle_groupoid(const Puzzle& p);

/// Holonomy at `base_hole`, acting on the slots of that object.
HolonomyResult puzzle_holonomy(const Puzzle& p, Vertex base_hole);

struct LabelledState {
  Vertex hole = 0;
  std::map<std::string, Vertex> pieces;  // piece label -> cell

  friend bool operator==(const LabelledState&, const LabelledState&) = default;
};

/// Pieces "1".."N" in row-major order with the hole in the last cell.
LabelledState solved_state(const Puzzle& p);

/// Throws Errc::InvalidState unless the pieces cover exactly the non-hole cells.
void validate_state(const Puzzle& p, const LabelledState& s);

/// Slides the piece at `to` into the hole. Throws Errc::InvalidState if `to`
/// is not next to the hole.
LabelledState apply_move(const Puzzle& p, const LabelledState& s, Vertex to);

/// True iff b can be reached from a by legal moves. Throws Errc::BoardMismatch
/// when the label sets differ and Errc::InvalidState for malformed states.
bool reachable(const Puzzle& p, const LabelledState& a, const LabelledState& b);

/// Same computation with a precomputed holonomy at b's hole.
bool reachable(const Puzzle& p, const Groupoid& g, const HolonomyResult& at_b, const LabelledState& a,
               const LabelledState& b);

/// Positions are facets, moves are ridge flips.
Groupoid game_groupoid_from_complex(const SimplicialComplex& complex);

}  // namespace cgroupoid
