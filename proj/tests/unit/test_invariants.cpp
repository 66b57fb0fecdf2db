#include <gtest/gtest.h>

#include "cgroupoid/corpus.hpp"
#include "cgroupoid/error.hpp"
#include "cgroupoid/holonomy.hpp"
#include "cgroupoid/invariants.hpp"
#include "oracles.hpp"

using namespace cgroupoid;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

bool is_odd_closed_walk(const Graph& g, const std::vector<Vertex>& w) {
  if (w.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!g.adjacent(w[i], w[(i + 1) % w.size()])) return false;
  return true;
}

}  // namespace

TEST(Nacl, GraphExamples) {
  EXPECT_EQ(nacl(cycle_graph(4)).value, 0);
  EXPECT_EQ(nacl(complete_graph(3)).value, 1);
  EXPECT_EQ(nacl(grid_graph(3, 5)).value, 0);
  const auto r = nacl(cycle_graph(7));
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(is_odd_closed_walk(cycle_graph(7), r.odd_cycle));
  const auto ok = nacl(grid_graph(2, 3));
  EXPECT_TRUE(is_proper(grid_graph(2, 3), ok.coloring));
}

TEST(Nacl, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const auto r = nacl(g);
    EXPECT_EQ(r.value == 0, oracle::bipartite_bruteforce(g));
    if (r.value == 0)
      EXPECT_TRUE(is_proper(g, r.coloring));
    else
      EXPECT_TRUE(is_odd_closed_walk(g, r.odd_cycle));
  }
}

TEST(IInvariant, Examples) {
  EXPECT_EQ(i_invariant(cube_complex(3)), 0);
  EXPECT_EQ(i_invariant(grid_patch(3, 3)), 0);
  EXPECT_EQ(i_invariant(square_ring(4, false)), 0);
  EXPECT_EQ(i_invariant(square_ring(4, true)), 1);
  EXPECT_EQ(i_invariant(square_ring(3, false)), 1);
  EXPECT_EQ(nacl(square_ring(3, false)).value, 1);
  EXPECT_EQ(nacl(square_ring(4, true)).value, 1);
  // A Moebius strip of 5 squares has an even vertex-edge graph.
  EXPECT_EQ(i_invariant(square_ring(5, true)), 0);
  EXPECT_EQ(nacl(square_ring(5, true)).value, 0);
}

TEST(IInvariant, QuotientExample) {
  const auto k = grid_patch(1, 3);
  const auto q = quotient_example();
  EXPECT_EQ(q.vertex_count(), k.vertex_count() - 1);
  const auto cmp = compare_invariants(q);
  EXPECT_EQ(cmp.i, 0);
  EXPECT_EQ(cmp.nacl, 1);
  EXPECT_FALSE(cmp.equal);
  EXPECT_TRUE(cmp.strongly_connected);
  EXPECT_FALSE(cmp.locally_strongly_connected);
  EXPECT_TRUE(is_odd_closed_walk(one_skeleton(q), cmp.witness_odd_cycle));
  EXPECT_EQ(i_invariant(k), 0);
  // Holonomy survives the gluing.
  EXPECT_EQ(holonomy_group(build_groupoid(q), 0).group.order(), holonomy_group(build_groupoid(k), 0).group.order());
}

TEST(Quotient, Errors) {
  const auto k = grid_patch(1, 3);  // vertices 0..3 bottom, 4..7 top
  EXPECT_EQ(code_of([&] { quotient_identify(k, 0, 1); }), Errc::AdjacentVertices);
  EXPECT_EQ(code_of([&] { quotient_identify(k, 0, 5); }), Errc::SharedCell);
  EXPECT_EQ(code_of([&] { quotient_identify(k, 2, 2); }), Errc::SharedCell);
  EXPECT_EQ(code_of([&] { quotient_identify(k, 0, 42); }), Errc::SharedCell);
  EXPECT_EQ(quotient_identify(k, 3, 0), quotient_identify(k, 0, 3));
}

TEST(LocalConnectivity, Examples) {
  EXPECT_TRUE(locally_strongly_connected(grid_patch(3, 3)));
  EXPECT_TRUE(locally_strongly_connected(cube_complex(3)));
  EXPECT_FALSE(locally_strongly_connected(lattice_patch({{0, 0}, {1, 1}})));
  EXPECT_FALSE(locally_strongly_connected(quotient_example()));
  EXPECT_TRUE(locally_strongly_connected(octahedron_boundary()));
  // Two triangles touching at a vertex.
  EXPECT_FALSE(locally_strongly_connected(build_simplicial({{0, 1, 2}, {0, 3, 4}})));
}

TEST(Parity, Examples) {
  const auto z = lattice_parity_coloring({{1, 1, 1}, {-1, 1, 1}, {-1, -1, 1}}, ParityForm::Zonotope);
  EXPECT_EQ(z.color, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(lattice_parity_coloring({{2, 3}, {0, 0}, {-1, 0}}, ParityForm::Lattice).color,
            (std::vector<int>{1, 0, 1}));
}

TEST(Parity, ProperOnPatches) {
  for (const auto& named : builtin_corpus()) {
    const auto* k = std::get_if<CubicalComplex>(&named.complex);
    if (!k || k->coords().empty()) continue;
    EXPECT_TRUE(is_proper(one_skeleton(*k), lattice_parity_coloring(k->coords(), ParityForm::Lattice)))
        << named.name;
  }
}

TEST(TransportColoring, Simplicial) {
  const auto tri = build_simplicial({{0, 1, 2}});
  const auto c = transport_coloring(tri);
  EXPECT_EQ(c.colors, 3);
  EXPECT_TRUE(is_rainbow(tri, c));

  const auto oct = octahedron_boundary();
  const auto co = transport_coloring(oct);
  EXPECT_EQ(co.colors, 3);
  EXPECT_TRUE(is_rainbow(oct, co));

  EXPECT_EQ(code_of([] { transport_coloring(cycle_complex(3)); }), Errc::NontrivialHolonomy);
  EXPECT_EQ(code_of([] { transport_coloring(tetrahedron_boundary()); }), Errc::NontrivialHolonomy);
  EXPECT_EQ(code_of([] { transport_coloring(build_simplicial({{0, 1, 2}, {0, 3, 4}})); }),
            Errc::NotConnected);
}

TEST(TransportColoring, AgreesWithRainbowSearch) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto strip = triangle_strip(n);
    const auto c = transport_coloring(strip);
    EXPECT_TRUE(is_rainbow(strip, c));
    EXPECT_TRUE(oracle::rainbow_search(strip.vertex_count(), strip.facets(), 3).has_value());
  }
  // The oracle agrees that C3 and the tetrahedron boundary have no rainbow coloring.
  EXPECT_FALSE(oracle::rainbow_search(3, cycle_complex(3).facets(), 2).has_value());
  EXPECT_FALSE(oracle::rainbow_search(4, tetrahedron_boundary().facets(), 3).has_value());
}

TEST(TransportColoring, Cubical) {
  for (const auto& k : {grid_patch(2, 3), cube_complex(3), square_ring(4, false)}) {
    const auto c = transport_coloring(k);
    EXPECT_EQ(c.colors, 1 << k.dimension());
    EXPECT_TRUE(is_rainbow(k, c));
    const auto two = transport_two_coloring(k);
    EXPECT_TRUE(is_proper(one_skeleton(k), two));
  }
  EXPECT_EQ(code_of([] { transport_coloring(square_ring(4, true)); }), Errc::NontrivialHolonomy);
  EXPECT_EQ(code_of([] { transport_two_coloring(square_ring(3, false)); }), Errc::NontrivialHolonomy);
  EXPECT_EQ(code_of([] { transport_coloring(quotient_example()); }), Errc::NotLocallyConnected);
}

TEST(Invariants, PropertyRandomCorpus) {
  std::size_t hyp = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto k = random_cubical(seed);
    const auto c = compare_invariants(k);
    EXPECT_LE(c.i, c.nacl) << "seed " << seed;
    if (k.vertex_count() <= 18) EXPECT_EQ(c.nacl == 0, oracle::bipartite_bruteforce(one_skeleton(k))) << "seed " << seed;
    if (c.strongly_connected && c.locally_strongly_connected) {
      ++hyp;
      EXPECT_EQ(c.i, c.nacl) << "seed " << seed;
      if (c.i == 0) EXPECT_TRUE(is_proper(one_skeleton(k), transport_two_coloring(k)));
    }
    // Subcomplexes of lattice patches always have I = 0.
    if (!k.coords().empty()) EXPECT_EQ(c.i, 0) << "seed " << seed;
  }
  EXPECT_GT(hyp, 20u);
}
