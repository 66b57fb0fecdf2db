#include "cgroupoid/hom_complex.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

int HomCell::dimension() const {
  int d = 0;
  for (auto m : eta) d += std::popcount(m) - 1;
  return d;
}

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& h) {
  std::vector<std::uint32_t> adj(h.vertex_count(), 0);
  for (auto [a, b] : h.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  return adj;
}

// Vertices adjacent to every vertex of `mask`.
std::uint32_t common_neighbours(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  std::uint32_t out = ~0u;
  for (std::uint32_t m = mask; m; m &= m - 1) out &= adj[std::countr_zero(m)];
  return out;
}

}  // namespace

bool is_valid_cell(const Graph& g, const Graph& h, const HomCell& cell) {
  if (cell.eta.size() != g.vertex_count() || h.vertex_count() > 32) return false;
  const std::uint32_t all = h.vertex_count() == 32 ? ~0u : (1u << h.vertex_count()) - 1;
  for (auto m : cell.eta)
    if (m == 0 || (m & ~all)) return false;
  for (auto [i, j] : g.edges())
    for (std::uint32_t a = cell.eta[i]; a; a &= a - 1)
      for (std::uint32_t b = cell.eta[j]; b; b &= b - 1)
        if (!h.adjacent(std::countr_zero(a), std::countr_zero(b))) return false;
  return true;
}

bool is_face(const HomCell& a, const HomCell& b) {
  if (a.eta.size() != b.eta.size()) return false;
  for (std::size_t i = 0; i < a.eta.size(); ++i)
    if (a.eta[i] & ~b.eta[i]) return false;
  return true;
}

std::vector<HomCell> hom_complex(const Graph& g, const Graph& h, std::uint64_t node_budget) {
  if (h.vertex_count() > 32) throw Error(Errc::TooLarge, "H has more than 32 vertices");
  const std::size_t n = g.vertex_count();
  std::vector<HomCell> cells;
  if (h.vertex_count() == 0) return cells;
  const auto adj = adjacency_masks(h);
  const std::uint64_t limit = std::uint64_t{1} << h.vertex_count();

  HomCell current{std::vector<std::uint32_t>(n, 0)};
  std::uint64_t visited = 0;
  // allowed = H-vertices compatible with the already assigned neighbours.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      cells.push_back(current);
      return;
    }
    std::uint32_t allowed = static_cast<std::uint32_t>(limit - 1);
    for (Vertex j : g.neighbours(static_cast<Vertex>(i)))
      if (j < i) allowed &= common_neighbours(adj, current.eta[j]);
    // Nonempty submasks of `allowed` in increasing order.
    for (std::uint32_t mask = (0u - allowed) & allowed; mask; mask = (mask - allowed) & allowed) {
      if (++visited > node_budget) throw Error(Errc::TooLarge, "Hom complex enumeration exceeds budget");
      current.eta[i] = mask;
      self(self, i + 1);
    }
    current.eta[i] = 0;
  };
  recurse(recurse, 0);

  std::stable_sort(cells.begin(), cells.end(),
                   [](const HomCell& a, const HomCell& b) { return a.dimension() < b.dimension(); });
  return cells;
}

std::vector<std::size_t> f_vector(const std::vector<HomCell>& cells) {
  std::vector<std::size_t> f;
  for (const auto& c : cells) {
    const auto d = static_cast<std::size_t>(c.dimension());
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

long long euler_characteristic(const std::vector<HomCell>& cells) {
  long long chi = 0;
  for (const auto& c : cells) chi += c.dimension() % 2 == 0 ? 1 : -1;
  return chi;
}

std::optional<std::vector<Vertex>> graph_hom_exists(const Graph& g, std::size_t n) {
  if (g.vertex_count() > 20) throw Error(Errc::TooLarge, "graph has more than 20 vertices");
  const std::size_t v = g.vertex_count();
  std::vector<Vertex> color(v, 0);
  auto recurse = [&](auto&& self, std::size_t i) -> bool {
    if (i == v) return true;
    for (Vertex c = 0; c < n; ++c) {
      bool ok = true;
      for (Vertex j : g.neighbours(static_cast<Vertex>(i)))
        if (j < i && color[j] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[i] = c;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return color;
}

SwapAction induced_swap_action(const std::vector<HomCell>& cells) {
  std::map<HomCell, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].eta.size() != 2) throw Error(Errc::InvalidGraph, "swap action needs cells of Hom(K2, H)");
    index.emplace(cells[i], i);
  }
  SwapAction out;
  out.involutive = out.dimension_preserving = out.face_preserving = out.fixed_point_free = true;
  for (const auto& c : cells) {
    auto it = index.find(HomCell{{c.eta[1], c.eta[0]}});
    if (it == index.end()) throw Error(Errc::InvalidGraph, "cell set is not closed under the swap");
    out.image.push_back(it->second);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::size_t j = out.image[i];
    if (out.image[j] != i) out.involutive = false;
    if (j == i) out.fixed_point_free = false;
    if (cells[j].dimension() != cells[i].dimension()) out.dimension_preserving = false;
  }
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (is_face(cells[a], cells[b]) != is_face(cells[out.image[a]], cells[out.image[b]])) {
        out.face_preserving = false;
        return out;
      }
  return out;
}

HomCell restriction_map(const Graph& g, const HomCell& cell, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v))
    throw Error(Errc::EdgeNotInGraph, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  return HomCell{{cell.eta[u], cell.eta[v]}};
}

HomCell precompose(const Graph& source, const Graph& g, const VertexMap& h, const HomCell& cell) {
  if (h.assignment.size() != source.vertex_count())
    throw Error(Errc::InvalidGraph, "map is not total on the source graph");
  for (auto [a, b] : source.edges())
    if (!g.adjacent(h(a), h(b))) throw Error(Errc::InvalidGraph, "map is not a graph homomorphism");
  HomCell out;
  for (Vertex x = 0; x < source.vertex_count(); ++x) out.eta.push_back(cell.eta[h(x)]);
  return out;
}

}  // namespace cgroupoid
