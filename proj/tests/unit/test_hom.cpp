#include <gtest/gtest.h>

#include <random>

#include "cgroupoid/error.hpp"
#include "cgroupoid/hom_complex.hpp"
#include "oracles.hpp"

using namespace cgroupoid;

TEST(Hom, K2K3IsHexagon) {
  const auto cells = hom_complex(complete_graph(2), complete_graph(3));
  EXPECT_EQ(f_vector(cells), (std::vector<std::size_t>{6, 6}));
  EXPECT_EQ(euler_characteristic(cells), 0);
}

TEST(Hom, SpheresAgainstCountingOracle) {
  for (int m = 2; m <= 6; ++m) {
    const auto cells = hom_complex(complete_graph(2), complete_graph(static_cast<std::size_t>(m)));
    const auto expected = oracle::hom_k2_km_fvector(m);
    const auto got = f_vector(cells);
    ASSERT_EQ(got.size(), expected.size()) << "m=" << m;
    long long chi = 0;
    for (std::size_t d = 0; d < got.size(); ++d) {
      EXPECT_EQ(static_cast<long long>(got[d]), expected[d]);
      chi += (d % 2 ? -1 : 1) * expected[d];
    }
    EXPECT_EQ(euler_characteristic(cells), chi);
    EXPECT_EQ(chi, m % 2 ? 0 : 2) << "m=" << m;  // sphere of dimension m - 2
  }
}

TEST(Hom, SwapActionIsFree) {
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto cells = hom_complex(complete_graph(2), complete_graph(m));
    const auto s = induced_swap_action(cells);
    EXPECT_TRUE(s.involutive);
    EXPECT_TRUE(s.dimension_preserving);
    EXPECT_TRUE(s.face_preserving);
    EXPECT_TRUE(s.fixed_point_free) << "m=" << m;
  }
  // Hom(K2, K2) is two points swapped by the action.
  const auto two = hom_complex(complete_graph(2), complete_graph(2));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(induced_swap_action(two).image, (std::vector<std::size_t>{1, 0}));
  EXPECT_THROW(induced_swap_action(hom_complex(complete_graph(3), complete_graph(3))), Error);
}

TEST(Hom, CellsAreValidAndClosedUnderFaces) {
  const std::vector<std::pair<Graph, Graph>> pairs{{cycle_graph(5), complete_graph(3)},
                                                   {path_graph(3), complete_graph(3)},
                                                   {complete_graph(3), complete_graph(4)},
                                                   {cycle_graph(4), cycle_graph(4)}};
  for (const auto& [g, h] : pairs) {
    const auto cells = hom_complex(g, h);
    ASSERT_FALSE(cells.empty());
    std::set<HomCell> all(cells.begin(), cells.end());
    EXPECT_EQ(all.size(), cells.size());
    for (std::size_t i = 1; i < cells.size(); ++i) EXPECT_LE(cells[i - 1].dimension(), cells[i].dimension());
    for (const auto& c : cells) {
      EXPECT_TRUE(is_valid_cell(g, h, c));
      // Dropping one element from one nonempty mask gives another cell.
      for (std::size_t i = 0; i < c.eta.size(); ++i)
        for (std::uint32_t bit = 1; bit && bit <= c.eta[i]; bit <<= 1)
          if ((c.eta[i] & bit) && c.eta[i] != bit) {
            HomCell face = c;
            face.eta[i] &= ~bit;
            EXPECT_TRUE(all.count(face));
            EXPECT_TRUE(is_face(face, c));
            EXPECT_FALSE(is_face(c, face));
          }
    }
    // Vertices are exactly the graph homomorphisms; count them directly.
    std::size_t homs = 0;
    std::vector<Vertex> f(g.vertex_count(), 0);
    for (;;) {
      bool ok = true;
      for (auto [u, v] : g.edges()) ok = ok && h.adjacent(f[u], f[v]);
      homs += ok;
      std::size_t i = 0;
      while (i < f.size() && ++f[i] == h.vertex_count()) f[i++] = 0;
      if (i == f.size()) break;
    }
    EXPECT_EQ(f_vector(cells)[0], homs);
  }
}

TEST(Hom, MonotoneInTarget) {
  // Hom(G, H) embeds in Hom(G, H') when H is a subgraph of H'.
  const auto small = hom_complex(cycle_graph(5), complete_graph(3));
  const auto big = hom_complex(cycle_graph(5), complete_graph(4));
  std::set<HomCell> all(big.begin(), big.end());
  for (const auto& c : small) EXPECT_TRUE(all.count(c));
  EXPECT_LT(small.size(), big.size());
}

TEST(Hom, EmptyComplex) {
  const auto none = hom_complex(complete_graph(3), complete_graph(2));
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(euler_characteristic(none), 0);
  EXPECT_TRUE(f_vector(none).empty());
}

TEST(Hom, ColorabilityGuard) {
  EXPECT_TRUE(graph_hom_exists(cycle_graph(5), 3).has_value());
  EXPECT_FALSE(graph_hom_exists(cycle_graph(5), 2).has_value());
  EXPECT_FALSE(graph_hom_exists(complete_graph(5), 4).has_value());
  const Graph grid = grid_graph(3, 3);
  const auto col = graph_hom_exists(grid, 2);
  ASSERT_TRUE(col.has_value());
  for (auto [u, v] : grid.edges()) EXPECT_NE((*col)[u], (*col)[v]);
  EXPECT_THROW(graph_hom_exists(cycle_graph(21), 3), Error);
}

TEST(Hom, TooLargeGuard) {
  try {
    hom_complex(cycle_graph(8), complete_graph(8), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(Hom, RestrictionCommutesWithFacesAndSwap) {
  const Graph c5 = cycle_graph(5), k3 = complete_graph(3), k2 = complete_graph(2);
  const auto cells = hom_complex(c5, k3);
  const auto edge_cells = hom_complex(k2, k3);
  std::set<HomCell> targets(edge_cells.begin(), edge_cells.end());
  for (const auto& c : cells)
    for (auto [u, v] : c5.edges()) {
      const auto r = restriction_map(c5, c, u, v);
      EXPECT_TRUE(targets.count(r));
      // Swapping the edge direction swaps the restricted cell.
      const auto back = restriction_map(c5, c, v, u);
      EXPECT_EQ(back.eta, (std::vector<std::uint32_t>{r.eta[1], r.eta[0]}));
      for (const auto& d : cells)
        if (is_face(d, c)) EXPECT_TRUE(is_face(restriction_map(c5, d, u, v), r));
    }
  EXPECT_THROW(restriction_map(c5, cells[0], 0, 2), Error);
}

TEST(Hom, Precompose) {
  // C10 -> C5 wrapping twice is a homomorphism; pulled back cells stay valid.
  const Graph c10 = cycle_graph(10), c5 = cycle_graph(5), k3 = complete_graph(3);
  VertexMap wrap;
  for (Vertex v = 0; v < 10; ++v) wrap.assignment.push_back(v % 5);
  for (const auto& c : hom_complex(c5, k3)) {
    const auto pulled = precompose(c10, c5, wrap, c);
    EXPECT_TRUE(is_valid_cell(c10, k3, pulled));
    EXPECT_EQ(pulled.dimension(), 2 * c.dimension());
  }
  VertexMap bad{{0, 1, 0, 1, 0, 1, 0, 1, 0, 0}};
  EXPECT_THROW(precompose(c10, c5, bad, hom_complex(c5, k3)[0]), Error);
}
