#include "cgroupoid/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "cgroupoid/error.hpp"
#include "cgroupoid/invariants.hpp"

namespace cgroupoid {

SimplicialComplex cycle_complex(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidGraph, "a cycle needs at least 3 vertices");
  std::vector<std::vector<Vertex>> facets;
  for (Vertex i = 0; i < n; ++i) facets.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return build_simplicial(std::move(facets));
}

SimplicialComplex tetrahedron_boundary() {
  return build_simplicial({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex octahedron_boundary() {
  // Antipodal pairs (0,1), (2,3), (4,5).
  std::vector<std::vector<Vertex>> facets;
  for (Vertex a : {0u, 1u})
    for (Vertex b : {2u, 3u})
      for (Vertex c : {4u, 5u}) facets.push_back({a, b, c});
  return build_simplicial(std::move(facets));
}

SimplicialComplex triangle_strip(std::size_t n) {
  std::vector<std::vector<Vertex>> facets;
  for (Vertex i = 0; i < n; ++i) facets.push_back({i, i + 1, i + 2});
  return build_simplicial(std::move(facets));
}

CubicalComplex cube_complex(unsigned k) { return lattice_patch({std::vector<int>(k, 0)}); }

CubicalComplex lattice_patch(const std::vector<std::vector<int>>& cells) {
  if (cells.empty()) throw Error(Errc::EmptyInput, "no cells");
  const auto k = static_cast<unsigned>(cells.front().size());
  // Last coordinate slowest.
  auto less = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  };
  std::map<std::vector<int>, Vertex, decltype(less)> ids(less);
  auto corner = [&](const std::vector<int>& cell, unsigned a) {
    std::vector<int> p = cell;
    for (unsigned j = 0; j < k; ++j) p[j] += (a >> j) & 1;
    return p;
  };
  for (const auto& cell : cells)
    for (unsigned a = 0; a < (1u << k); ++a) ids.emplace(corner(cell, a), 0);
  std::vector<std::vector<int>> coords;
  for (auto& [p, id] : ids) {
    id = static_cast<Vertex>(coords.size());
    coords.push_back(p);
  }
  std::vector<std::vector<Vertex>> cubes;
  for (const auto& cell : cells) {
    std::vector<Vertex> corners;
    for (unsigned a = 0; a < (1u << k); ++a) corners.push_back(ids.at(corner(cell, a)));
    cubes.push_back(std::move(corners));
  }
  return build_cubical(k, std::move(cubes), std::move(coords));
}

CubicalComplex grid_patch(std::size_t rows, std::size_t cols) {
  std::vector<std::vector<int>> cells;
  for (int y = 0; y < static_cast<int>(rows); ++y)
    for (int x = 0; x < static_cast<int>(cols); ++x) cells.push_back({x, y});
  return lattice_patch(cells);
}

CubicalComplex cube_ring(std::size_t n, unsigned k, const SignedPerm& twist) {
  if (k < 2 || twist.degree() != k - 1) throw Error(Errc::DegreeMismatch, "twist must act on k-1 coordinates");
  const unsigned section = 1u << (k - 1);
  auto twisted = [&](unsigned s) {
    unsigned out = 0;
    for (unsigned j = 0; j + 1 < k; ++j) {
      unsigned bit = (s >> j) & 1u;
      if (twist.signs[j] < 0) bit ^= 1u;
      out |= bit << twist.perm[j];
    }
    return out;
  };
  auto id = [&](std::size_t slab, unsigned s) -> Vertex {
    if (slab == n) return twisted(s);
    return static_cast<Vertex>(slab * section + s);
  };
  std::vector<std::vector<Vertex>> cubes;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> corners;
    for (unsigned a = 0; a < 2 * section; ++a) corners.push_back(id(i + (a & 1u), a >> 1));
    cubes.push_back(std::move(corners));
  }
  return build_cubical(k, std::move(cubes));
}

CubicalComplex square_ring(std::size_t n, bool twisted) {
  return cube_ring(n, 2, SignedPerm{Perm::identity(1), {twisted ? -1 : 1}});
}

CubicalComplex quotient_example() { return quotient_identify(grid_patch(1, 3), 0, 3); }

namespace {

std::vector<std::vector<int>> random_cells(std::mt19937_64& rng, const std::vector<int>& dims) {
  std::vector<std::vector<int>> all{{}};
  for (int d : dims) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : all)
      for (int x = 0; x < d; ++x) {
        auto p = prefix;
        p.push_back(x);
        next.push_back(std::move(p));
      }
    all = std::move(next);
  }
  std::vector<std::vector<int>> cells;
  for (auto& c : all)
    if (rng() % 2 == 0) cells.push_back(std::move(c));
  if (cells.empty()) cells.push_back(std::vector<int>(dims.size(), 0));
  return cells;
}

SignedPerm random_signed(std::mt19937_64& rng, unsigned k) {
  std::vector<Point> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  std::vector<int> signs(k);
  for (auto& s : signs) s = rng() % 2 ? -1 : 1;
  return SignedPerm{Perm(std::move(perm)), std::move(signs)};
}

}  // namespace

CubicalComplex random_cubical(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto dim = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  switch (rng() % 4) {
    case 0:
      return lattice_patch(random_cells(rng, {dim(1, 4), dim(1, 4)}));
    case 1:
      return lattice_patch(random_cells(rng, {dim(1, 3), dim(1, 3), dim(1, 3)}));
    case 2: {
      const unsigned k = static_cast<unsigned>(dim(2, 3));
      const auto n = static_cast<std::size_t>(dim(3, 7));
      return cube_ring(n, k, random_signed(rng, k - 1));
    }
    default: {
      const CubicalComplex base = lattice_patch(random_cells(rng, {dim(2, 5), dim(2, 4)}));
      for (int attempt = 0; attempt < 20; ++attempt) {
        const auto u = static_cast<Vertex>(rng() % base.vertex_count());
        const auto v = static_cast<Vertex>(rng() % base.vertex_count());
        try {
          return quotient_identify(base, u, v);
        } catch (const Error&) {
        }
      }
      return base;
    }
  }
}

std::vector<NamedComplex> builtin_corpus() {
  std::vector<NamedComplex> out;
  for (std::size_t n = 3; n <= 11; ++n) out.push_back({"c" + std::to_string(n), cycle_complex(n)});
  out.push_back({"tetrahedron-boundary", tetrahedron_boundary()});
  out.push_back({"octahedron", octahedron_boundary()});
  out.push_back({"triangle-strip", triangle_strip(4)});
  for (unsigned k = 1; k <= 4; ++k) out.push_back({"cube" + std::to_string(k), cube_complex(k)});
  out.push_back({"grid-2x2", grid_patch(2, 2)});
  out.push_back({"grid-3x3", grid_patch(3, 3)});
  out.push_back({"grid-2x4", grid_patch(2, 4)});
  out.push_back({"grid-lshape", lattice_patch({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}})});
  out.push_back({"grid-ring", lattice_patch({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}})});
  out.push_back({"grid-diagonal", lattice_patch({{0, 0}, {1, 1}})});
  out.push_back({"grid3d-2x2x2", lattice_patch({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                                {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})});
  out.push_back({"annulus-3", square_ring(3, false)});
  out.push_back({"annulus-4", square_ring(4, false)});
  out.push_back({"twisted-strip", square_ring(4, true)});
  out.push_back({"quotient", quotient_example()});
  return out;
}

}  // namespace cgroupoid
