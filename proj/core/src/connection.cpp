#include "cgroupoid/connection.hpp"

#include <algorithm>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

namespace {

Point star_index(const Graph& g, Vertex x, Vertex y) {
  const auto& star = g.neighbours(x);
  return static_cast<Point>(std::lower_bound(star.begin(), star.end(), y) - star.begin());
}

std::size_t regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d)
      throw Error(Errc::NotRegular, "vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + ", expected " + std::to_string(d));
  return d;
}

bool is_bijection(const std::vector<Point>& table, std::size_t d) {
  if (table.size() != d) return false;
  std::vector<bool> hit(d, false);
  for (Point p : table) {
    if (p >= d || hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

}  // namespace

ConnectionCheck validate_connection(const GraphConnection& c) {
  const Graph& g = c.graph;
  const std::size_t d = regular_degree(g);
  auto fail = [](Vertex x, Vertex y, std::string reason) {
    return ConnectionCheck{false, ConnectionViolation{x, y, std::move(reason)}};
  };

  for (const auto& [edge, table] : c.nabla)
    if (edge.first >= g.vertex_count() || edge.second >= g.vertex_count() || !g.adjacent(edge.first, edge.second))
      return fail(edge.first, edge.second, "not an edge of the graph");

  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y : g.neighbours(x)) {
      auto it = c.nabla.find({x, y});
      if (it == c.nabla.end()) return fail(x, y, "missing table");
      if (!is_bijection(it->second, d)) return fail(x, y, "not a bijection of stars");
      if (it->second[star_index(g, x, y)] != star_index(g, y, x)) return fail(x, y, "(x,y) is not sent to (y,x)");
      auto back = c.nabla.find({y, x});
      if (back == c.nabla.end() || !is_bijection(back->second, d)) return fail(x, y, "reverse table missing or invalid");
      for (Point i = 0; i < d; ++i)
        if (back->second[it->second[i]] != i) return fail(x, y, "reverse table is not the inverse");
    }
  return {};
}

GraphConnection canonical_connection(const Graph& g) {
  GraphConnection c{g, {}};
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y : g.neighbours(x)) {
      const Point from_y = star_index(g, x, y);
      const Point to_x = star_index(g, y, x);
      std::vector<Point> table(g.degree(x));
      table[from_y] = to_x;
      // Remaining entries in order, skipping the forced pair on both sides.
      Point j = 0;
      for (Point i = 0; i < table.size(); ++i) {
        if (i == from_y) continue;
        if (j == to_x) ++j;
        table[i] = j++;
      }
      c.nabla[{x, y}] = std::move(table);
    }
  return c;
}

GraphConnection rotation_connection(const Graph& g) {
  GraphConnection c{g, {}};
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y : g.neighbours(x)) {
      if (x > y) continue;
      const std::size_t d = g.degree(x);
      const Point from_y = star_index(g, x, y);
      const Point to_x = star_index(g, y, x);
      std::vector<Point> table(d), inverse(d);
      for (Point k = 0; k < d; ++k) {
        const Point i = static_cast<Point>((from_y + k) % d);
        const Point j = static_cast<Point>((to_x + k) % d);
        table[i] = j;
        inverse[j] = i;
      }
      c.nabla[{x, y}] = std::move(table);
      c.nabla[{y, x}] = std::move(inverse);
    }
  return c;
}

Groupoid connection_groupoid(const GraphConnection& c) {
  if (auto check = validate_connection(c); !check)
    throw Error(Errc::InvalidConnection, "edge (" + std::to_string(check.violation->x) + "," +
                                             std::to_string(check.violation->y) + "): " + check.violation->reason);
  const Graph& g = c.graph;
  std::vector<std::vector<Vertex>> labels;
  for (Vertex x = 0; x < g.vertex_count(); ++x) labels.push_back(g.neighbours(x));
  std::vector<ElemMorphism> morphisms;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto [x, y] = g.edges()[e];
    morphisms.push_back({x, y, e, Perm(c.nabla.at({x, y}))});
  }
  return Groupoid(std::move(labels), std::move(morphisms));
}

HolonomyResult connection_holonomy(const GraphConnection& c, Vertex base) {
  const Groupoid g = connection_groupoid(c);
  if (base >= g.object_count()) throw Error(Errc::NotConnected, "base vertex out of range");
  return holonomy_group(g, base);
}

}  // namespace cgroupoid
