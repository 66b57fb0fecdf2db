#include "cgroupoid/invariants.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cgroupoid/error.hpp"
#include "cgroupoid/groupoid.hpp"
#include "cgroupoid/holonomy.hpp"

namespace cgroupoid {

bool is_proper(const Graph& graph, const TwoColoring& coloring) {
  if (coloring.color.size() != graph.vertex_count()) return false;
  return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const auto& e) {
    return coloring.color[e.first] != coloring.color[e.second];
  });
}

namespace {

template <class Cells>
bool rainbow_cells(const Cells& cells, std::size_t vertex_count, const RainbowColoring& coloring) {
  if (coloring.color.size() != vertex_count) return false;
  for (const auto& cell : cells) {
    std::set<int> seen;
    for (Vertex v : cell)
      if (coloring.color[v] < 0 || coloring.color[v] >= coloring.colors || !seen.insert(coloring.color[v]).second)
        return false;
  }
  return true;
}

}  // namespace

bool is_rainbow(const SimplicialComplex& complex, const RainbowColoring& coloring) {
  return rainbow_cells(complex.facets(), complex.vertex_count(), coloring);
}

bool is_rainbow(const CubicalComplex& complex, const RainbowColoring& coloring) {
  return rainbow_cells(complex.cubes(), complex.vertex_count(), coloring);
}

NaclResult nacl(const Graph& skeleton) {
  const std::size_t n = skeleton.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n);
  std::vector<std::size_t> depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    parent[root] = root;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : skeleton.neighbours(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Same-colored edge: climb both BFS branches to their meeting point.
          std::vector<Vertex> left{u}, right{w};
          Vertex a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // meeting vertex already ends `left`
          NaclResult result;
          result.value = 1;
          result.odd_cycle = left;
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
          return result;
        }
      }
    }
  }
  NaclResult result;
  result.coloring.color = std::move(color);
  return result;
}

NaclResult nacl(const SimplicialComplex& complex) { return nacl(one_skeleton(complex)); }
NaclResult nacl(const CubicalComplex& complex) { return nacl(one_skeleton(complex)); }

int i_invariant(const CubicalComplex& complex) {
  const Groupoid g = build_groupoid(complex);
  const auto comp = g.components();
  std::set<std::size_t> done;
  for (std::size_t base = 0; base < comp.size(); ++base) {
    if (!done.insert(comp[base]).second) continue;
    const HolonomyResult h = holonomy_group(g, base, {.require_connected = false, .tree_seed = {}});
    if (!all_in_even_subgroup(signed_generators(h, complex.dimension()))) return 1;
  }
  return 0;
}

namespace {

bool stars_connected(std::size_t vertex_count, const std::vector<std::vector<Vertex>>& cells,
                     const DualMultigraph& dual) {
  std::vector<std::vector<std::size_t>> cells_at(vertex_count);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (Vertex v : cells[c]) cells_at[v].push_back(c);

  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& star = cells_at[v];
    if (star.size() <= 1) continue;
    // Union-find over the star using ridges that contain v.
    std::vector<std::size_t> root(cells.size());
    for (std::size_t c : star) root[c] = c;
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const DualEdge& e : dual.edges) {
      const auto& ridge = dual.ridges[e.ridge];
      if (std::binary_search(ridge.begin(), ridge.end(), v)) root[find(e.a)] = find(e.b);
    }
    const std::size_t r = find(star.front());
    for (std::size_t c : star)
      if (find(c) != r) return false;
  }
  return true;
}

}  // namespace

bool locally_strongly_connected(const SimplicialComplex& complex) {
  return stars_connected(complex.vertex_count(), complex.facets(), facet_adjacency(complex));
}

bool locally_strongly_connected(const CubicalComplex& complex) {
  return stars_connected(complex.vertex_count(), complex.cubes(), facet_adjacency(complex));
}

InvariantComparison compare_invariants(const CubicalComplex& complex) {
  InvariantComparison out;
  out.i = i_invariant(complex);
  const NaclResult n = nacl(complex);
  out.nacl = n.value;
  out.witness_odd_cycle = n.odd_cycle;
  out.equal = out.i == out.nacl;
  out.strongly_connected = is_strongly_connected(complex);
  out.locally_strongly_connected = locally_strongly_connected(complex);
  return out;
}

CubicalComplex quotient_identify(const CubicalComplex& complex, Vertex u, Vertex v) {
  if (u >= complex.vertex_count() || v >= complex.vertex_count())
    throw Error(Errc::SharedCell, "vertex out of range");
  if (u == v) throw Error(Errc::SharedCell, "cannot identify a vertex with itself");
  if (one_skeleton(complex).adjacent(u, v))
    throw Error(Errc::AdjacentVertices,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) + " span an edge");
  for (const auto& cube : complex.cubes())
    if (std::find(cube.begin(), cube.end(), u) != cube.end() &&
        std::find(cube.begin(), cube.end(), v) != cube.end())
      throw Error(Errc::SharedCell, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                        " lie in a common cube");

  const Vertex keep = std::min(u, v);
  const Vertex gone = std::max(u, v);
  auto relabel = [&](Vertex x) -> Vertex {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<std::vector<Vertex>> cubes = complex.cubes();
  for (auto& cube : cubes)
    for (Vertex& x : cube) x = relabel(x);
  return build_cubical(complex.dimension(), std::move(cubes));
}

TwoColoring lattice_parity_coloring(const std::vector<std::vector<int>>& points, ParityForm form) {
  TwoColoring out;
  out.color.reserve(points.size());
  for (const auto& p : points) {
    int parity = 0;
    for (int x : p) parity ^= form == ParityForm::Zonotope ? (x < 0 ? 1 : 0) : (x & 1);
    out.color.push_back(parity);
  }
  return out;
}

namespace {

void require_hypotheses(const Groupoid& g, bool locally_connected) {
  if (!g.is_connected()) throw Error(Errc::NotConnected, "complex is not strongly connected");
  if (!locally_connected)
    throw Error(Errc::NotLocallyConnected, "some vertex star is not strongly connected");
}

/// Carries per-slot colors of object 0 along a BFS of the groupoid, then checks
/// every morphism and every shared vertex.
std::vector<int> transport_slot_colors(const Groupoid& g, std::size_t vertex_count,
                                       std::vector<int> base_colors) {
  const std::size_t n = g.object_count();
  std::vector<std::vector<int>> slot_color(n);
  slot_color[0] = std::move(base_colors);
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t o = queue[head];
    for (const auto& step : g.steps_from(o)) {
      if (!slot_color[step.to].empty()) continue;
      const Perm& map = g.step_map(step);
      std::vector<int> colors(g.slot_count());
      for (std::size_t s = 0; s < g.slot_count(); ++s) colors[map[s]] = slot_color[o][s];
      slot_color[step.to] = std::move(colors);
      queue.push_back(step.to);
    }
  }

  for (const auto& m : g.morphisms())
    for (std::size_t s = 0; s < g.slot_count(); ++s)
      if (slot_color[m.target][m.slot_map[s]] != slot_color[m.source][s])
        throw Error(Errc::InconsistentExtension, "flip " + std::to_string(m.source) + " -> " +
                                                     std::to_string(m.target) +
                                                     " does not carry the coloring");

  std::vector<int> color(vertex_count, -1);
  for (std::size_t o = 0; o < n; ++o)
    for (std::size_t s = 0; s < g.slot_count(); ++s) {
      int& c = color[g.labels(o)[s]];
      if (c != -1 && c != slot_color[o][s])
        throw Error(Errc::InconsistentExtension,
                    "vertex " + std::to_string(g.labels(o)[s]) + " receives two colors");
      c = slot_color[o][s];
    }
  return color;
}

std::vector<int> slot_identity_colors(std::size_t slots) {
  std::vector<int> colors(slots);
  for (std::size_t s = 0; s < slots; ++s) colors[s] = static_cast<int>(s);
  return colors;
}

}  // namespace

RainbowColoring transport_coloring(const SimplicialComplex& complex) {
  const Groupoid g = build_groupoid(complex);
  require_hypotheses(g, locally_strongly_connected(complex));
  if (!holonomy_group(g, 0).group.is_trivial())
    throw Error(Errc::NontrivialHolonomy, "holonomy group is not trivial");
  RainbowColoring out;
  out.colors = static_cast<int>(g.slot_count());
  out.color = transport_slot_colors(g, complex.vertex_count(), slot_identity_colors(g.slot_count()));
  return out;
}

RainbowColoring transport_coloring(const CubicalComplex& complex) {
  const Groupoid g = build_groupoid(complex);
  require_hypotheses(g, locally_strongly_connected(complex));
  if (!holonomy_group(g, 0).group.is_trivial())
    throw Error(Errc::NontrivialHolonomy, "holonomy group is not trivial");
  RainbowColoring out;
  out.colors = static_cast<int>(g.slot_count());
  out.color = transport_slot_colors(g, complex.vertex_count(), slot_identity_colors(g.slot_count()));
  return out;
}

TwoColoring transport_two_coloring(const CubicalComplex& complex) {
  const Groupoid g = build_groupoid(complex);
  require_hypotheses(g, locally_strongly_connected(complex));
  if (i_invariant(complex) != 0)
    throw Error(Errc::NontrivialHolonomy, "holonomy leaves B_k^even");
  std::vector<int> parity(g.slot_count());
  for (std::size_t a = 0; a < parity.size(); ++a) parity[a] = std::popcount(a) % 2;
  return TwoColoring{transport_slot_colors(g, complex.vertex_count(), std::move(parity))};
}

}  // namespace cgroupoid
