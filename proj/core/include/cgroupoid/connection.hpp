#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgroupoid/graph.hpp"
#include "cgroupoid/groupoid.hpp"
#include "cgroupoid/holonomy.hpp"

namespace cgroupoid {

/// Star(x) is graph.neighbours(x): the oriented edge (x, y) is named by its
/// index in that sorted list. nabla[{x, y}][i] = j sends (x, Star(x)[i]) to
/// (y, Star(y)[j]).
struct GraphConnection {
  Graph graph;
  std::map<std::pair<Vertex, Vertex>, std::vector<Point>> nabla;
};

struct ConnectionViolation {
  Vertex x = 0, y = 0;
  std::string reason;
};

struct ConnectionCheck {
  bool ok = true;
  std::optional<ConnectionViolation> violation;  // first offending oriented edge
  explicit operator bool() const noexcept { return ok; }
};

/// Checks nabla(x,y)(x,y) = (y,x) and nabla(y,x) = nabla(x,y)^-1 on every
/// oriented edge in lexicographic order. Throws Errc::NotRegular.
ConnectionCheck validate_connection(const GraphConnection& c);

/// (x,y) -> (y,x); the remaining star entries are matched in increasing order.
GraphConnection canonical_connection(const Graph& g);
/// Stars read cyclically in increasing order and rotated so that y lines up with
/// x; for x > y the inverse table is used.
GraphConnection rotation_connection(const Graph& g);

/// Objects are vertices, slots are star entries, one morphism per edge.
/// Throws Errc::InvalidConnection unless the connection validates.
Groupoid connection_groupoid(const GraphConnection& c);

/// Holonomy on Star(base). Throws Errc::InvalidConnection or Errc::NotConnected.
HolonomyResult connection_holonomy(const GraphConnection& c, Vertex base);

}  // namespace cgroupoid
