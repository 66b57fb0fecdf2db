#include "cgroupoid/games.hpp"

#include <algorithm>
#include <set>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

Puzzle make_puzzle(Graph board) {
  if (board.vertex_count() < 2) throw Error(Errc::DegenerateBoard, "a puzzle needs at least two cells");
  if (!board.is_connected()) throw Error(Errc::DegenerateBoard, "board is not connected");
  return Puzzle{std::move(board)};
}

Puzzle grid_puzzle(std::size_t m, std::size_t n) {
  if (m * n < 2)
    throw Error(Errc::DegenerateBoard, std::to_string(m) + "x" + std::to_string(n) + " board is too small");
  Puzzle p = make_puzzle(grid_graph(m, n));
  p.rows = m;
  p.cols = n;
  return p;
}

namespace {

std::vector<Vertex> occupied(std::size_t cells, Vertex hole) {
  std::vector<Vertex> out;
  for (Vertex c = 0; c < cells; ++c)
    if (c != hole) out.push_back(c);
  return out;
}

// Slot of cell c when the hole is at h.
Point slot_of(Vertex c, Vertex h) { return c < h ? c : c - 1; }

}  // namespace

Groupoid puzzle_groupoid(const Puzzle& p) {
  const std::size_t cells = p.cell_count();
  std::vector<std::vector<Vertex>> labels;
  for (Vertex h = 0; h < cells; ++h) labels.push_back(occupied(cells, h));

  std::vector<ElemMorphism> moves;
  const auto& edges = p.board.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [h, h2] = edges[e];
    std::vector<Point> images(cells - 1);
    for (Vertex c = 0; c < cells; ++c) {
      if (c == h) continue;
      const Vertex lands = c == h2 ? h : c;
      images[slot_of(c, h)] = slot_of(lands, h2);
    }
    moves.push_back({h, h2, e, Perm(std::move(images))});
  }
  return Groupoid(std::move(labels), std::move(moves));
}

HolonomyResult puzzle_holonomy(const Puzzle& p, Vertex base_hole) {
  if (base_hole >= p.cell_count()) throw Error(Errc::InvalidState, "hole cell out of range");
  return holonomy_group(puzzle_groupoid(p), base_hole);
}

LabelledState solved_state(const Puzzle& p) {
  LabelledState s;
  s.hole = static_cast<Vertex>(p.cell_count() - 1);
  for (Vertex c = 0; c + 1 < p.cell_count(); ++c) s.pieces[std::to_string(c + 1)] = c;
  return s;
}

void validate_state(const Puzzle& p, const LabelledState& s) {
  if (s.hole >= p.cell_count()) throw Error(Errc::InvalidState, "hole cell out of range");
  if (s.pieces.size() != p.piece_count())
    throw Error(Errc::InvalidState, "expected " + std::to_string(p.piece_count()) + " pieces, got " +
                                        std::to_string(s.pieces.size()));
  std::set<Vertex> used;
  for (const auto& [label, cell] : s.pieces) {
    if (cell >= p.cell_count() || cell == s.hole || !used.insert(cell).second)
      throw Error(Errc::InvalidState, "piece " + label + " sits on an invalid cell");
  }
}

LabelledState apply_move(const Puzzle& p, const LabelledState& s, Vertex to) {
  if (!p.board.adjacent(s.hole, to))
    throw Error(Errc::InvalidState, "cell " + std::to_string(to) + " is not next to the hole");
  LabelledState out = s;
  for (auto& [label, cell] : out.pieces)
    if (cell == to) cell = s.hole;
  out.hole = to;
  return out;
}

bool reachable(const Puzzle& p, const Groupoid& g, const HolonomyResult& at_b, const LabelledState& a,
               const LabelledState& b) {
  validate_state(p, a);
  validate_state(p, b);
  if (at_b.base != b.hole) throw Error(Errc::BaseMismatch, "holonomy is not based at b's hole");
  for (auto ia = a.pieces.begin(), ib = b.pieces.begin(); ia != a.pieces.end(); ++ia, ++ib)
    if (ia->first != ib->first) throw Error(Errc::BoardMismatch, "states use different piece labels");

  // Walk the hole of a to b's hole along a BFS path in the board.
  std::vector<Vertex> parent(p.cell_count(), static_cast<Vertex>(-1));
  std::vector<Vertex> queue{a.hole};
  parent[a.hole] = a.hole;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : p.board.neighbours(queue[head]))
      if (parent[w] == static_cast<Vertex>(-1)) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
  std::vector<Vertex> route;
  for (Vertex c = b.hole; c != a.hole; c = parent[c]) route.push_back(c);
  LabelledState moved = a;
  for (auto it = route.rbegin(); it != route.rend(); ++it) moved = apply_move(p, moved, *it);

  // Residual slot permutation at b's hole: slot of each piece now -> slot in b.
  std::vector<Point> images(g.slot_count());
  for (const auto& [label, cell] : moved.pieces) images[slot_of(cell, b.hole)] = slot_of(b.pieces.at(label), b.hole);
  return at_b.group.contains(Perm(std::move(images)));
}

bool reachable(const Puzzle& p, const LabelledState& a, const LabelledState& b) {
  validate_state(p, b);
  const Groupoid g = puzzle_groupoid(p);
  return reachable(p, g, holonomy_group(g, b.hole), a, b);
}

Groupoid game_groupoid_from_complex(const SimplicialComplex& complex) { return build_groupoid(complex); }

}  // namespace cgroupoid
