#include <gtest/gtest.h>

#include "cgroupoid/corpus.hpp"
#include "cgroupoid/error.hpp"
#include "cgroupoid/holonomy.hpp"
#include "oracles.hpp"

using namespace cgroupoid;

namespace {

std::set<oracle::Images> group_elements(const HolonomyResult& h) {
  std::vector<oracle::Images> gens;
  for (const auto& g : h.generators) gens.push_back(g.images());
  return oracle::closure(gens, h.group.degree());
}

VertexMap covering(std::size_t n, std::size_t m) {
  VertexMap f;
  for (std::size_t v = 0; v < n; ++v) f.assignment.push_back(static_cast<Vertex>(v % m));
  return f;
}

}  // namespace

TEST(Holonomy, Cycles) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto h = holonomy_group(build_groupoid(cycle_complex(n)), 0);
    EXPECT_EQ(h.tag().to_string(), n % 2 ? "cyclic(2)" : "trivial") << "C" << n;
  }
}

TEST(Holonomy, Examples) {
  EXPECT_EQ(holonomy_group(build_groupoid(tetrahedron_boundary()), 0).tag().to_string(), "symmetric");
  EXPECT_EQ(holonomy_group(build_groupoid(octahedron_boundary()), 0).tag().to_string(), "trivial");
  EXPECT_EQ(holonomy_group(build_groupoid(triangle_strip(5)), 0).tag().to_string(), "trivial");
  EXPECT_EQ(holonomy_group(build_groupoid(square_ring(4, true)), 0).tag().to_string(), "cyclic(2)");
  EXPECT_EQ(holonomy_group(build_groupoid(square_ring(4, false)), 0).tag().to_string(), "trivial");
  EXPECT_EQ(holonomy_group(build_groupoid(grid_patch(3, 3)), 0).tag().to_string(), "trivial");
}

TEST(Holonomy, DisconnectedNeedsOptIn) {
  const auto g = build_groupoid(lattice_patch({{0, 0}, {1, 1}}));
  try {
    holonomy_group(g, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotConnected);
  }
  const auto h = holonomy_group(g, 1, {.require_connected = false});
  EXPECT_EQ(h.component, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(h.group.is_trivial());
}

TEST(Holonomy, GeneratorsAreLoopTransports) {
  for (const auto& named : builtin_corpus()) {
    std::visit(
        [&](const auto& k) {
          const auto g = build_groupoid(k);
          const auto h = holonomy_group(g, 0, {.require_connected = false});
          ASSERT_EQ(h.generators.size(), h.loops.size());
          for (std::size_t i = 0; i < h.loops.size(); ++i) {
            EXPECT_EQ(h.loops[i].source(), 0u);
            EXPECT_EQ(h.loops[i].target(), 0u);
            EXPECT_EQ(transport(g, h.loops[i].serialize()).map, h.generators[i]) << named.name;
          }
          // One generator per non-tree morphism inside the component.
          std::size_t inside = 0;
          std::vector<bool> in(g.object_count(), false);
          for (auto o : h.component) in[o] = true;
          for (const auto& m : g.morphisms()) inside += in[m.source];
          EXPECT_EQ(h.generators.size(), inside - h.tree_morphisms.size());
        },
        named.complex);
  }
}

TEST(Holonomy, OrderInvariance) {
  for (const auto& named : builtin_corpus()) {
    std::visit(
        [&](const auto& k) {
          const auto g = build_groupoid(k);
          if (g.is_connected()) EXPECT_TRUE(holonomy_order_invariance(g, 3, 42)) << named.name;
        },
        named.complex);
  }
  EXPECT_TRUE(holonomy_order_invariance(tribar_groupoid(), 5, 1));
}

TEST(Holonomy, OracleSimplicial) {
  std::vector<SimplicialComplex> cases;
  for (std::size_t n = 3; n <= 8; ++n) cases.push_back(cycle_complex(n));
  cases.push_back(tetrahedron_boundary());
  cases.push_back(octahedron_boundary());
  cases.push_back(triangle_strip(6));
  cases.push_back(build_simplicial({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}}));  // cone over C3
  for (const auto& k : cases) {
    ASSERT_LE(k.facets().size(), 8u);
    const auto h = holonomy_group(build_groupoid(k), 0);
    const auto flips = oracle::simplicial_flips(k);
    const auto brute = oracle::closed_path_maps(flips, k.facets()[0].size(), 0, 1000);
    EXPECT_EQ(group_elements(h), brute);
    EXPECT_EQ(h.group.order(), BigInt(brute.size()));
  }
}

TEST(Holonomy, OracleCubical) {
  std::vector<CubicalComplex> cases{cube_complex(2), grid_patch(2, 2), grid_patch(2, 4), square_ring(3, false),
                                    square_ring(4, true), square_ring(5, true), quotient_example(),
                                    lattice_patch({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  for (std::uint64_t seed = 0; cases.size() < 40 && seed < 400; ++seed) {
    auto k = random_cubical(seed);
    if (k.cubes().size() <= 8) cases.push_back(std::move(k));
  }
  std::size_t checked = 0;
  for (const auto& k : cases) {
    const auto flips = oracle::cubical_flips(k);
    ASSERT_TRUE(flips.has_value());
    const auto h = holonomy_group(build_groupoid(k), 0, {.require_connected = false});
    const auto brute = oracle::closed_path_maps(*flips, k.cubes()[0].size(), 0, 1000);
    EXPECT_EQ(group_elements(h), brute);
    ++checked;
  }
  EXPECT_GE(checked, 20u);
}

TEST(Holonomy, SignedGenerators) {
  const auto h = holonomy_group(build_groupoid(square_ring(4, true)), 0);
  const auto s = signed_generators(h, 2);
  ASSERT_FALSE(s.empty());
  EXPECT_FALSE(all_in_even_subgroup(s));
  EXPECT_THROW(corner_action_to_signed(Perm({1, 0, 2, 3}), 2), Error);
  EXPECT_EQ(corner_action_to_signed(Perm({1, 0, 3, 2}), 2), (SignedPerm{Perm::identity(2), {-1, 1}}));
  EXPECT_EQ(corner_action_to_signed(Perm({0, 2, 1, 3}), 2), (SignedPerm{Perm({1, 0}), {1, 1}}));
}

TEST(Holonomy, OuterComparison) {
  const auto tet = holonomy_group(build_groupoid(tetrahedron_boundary()), 0);
  const auto c = compare_with_outer(tet, factorial(3));
  EXPECT_FALSE(c.proper);
  const auto oct = holonomy_group(build_groupoid(octahedron_boundary()), 0);
  EXPECT_TRUE(compare_with_outer(oct, factorial(3)).proper);
}

TEST(InducedEmbedding, Coverings) {
  const std::vector<std::pair<std::size_t, std::size_t>> maps{{6, 3}, {9, 3}, {8, 4}, {10, 5}};
  for (auto [n, m] : maps) {
    const auto r = induced_embedding_check(cycle_complex(n), cycle_complex(m), covering(n, m));
    EXPECT_TRUE(r.ok) << n << "->" << m;
    EXPECT_EQ(r.image_order, r.source_order);
    EXPECT_EQ(r.source_order, holonomy_group(build_groupoid(cycle_complex(n)), 0).group.order());
    EXPECT_LE(r.image_order, r.target_order);
  }
  // An even cover of an odd cycle: trivial group embeds into Z2.
  const auto r = induced_embedding_check(cycle_complex(6), cycle_complex(3), covering(6, 3));
  EXPECT_EQ(r.source_order, 1);
  EXPECT_EQ(r.target_order, 2);
}

TEST(InducedEmbedding, IdentityAndErrors) {
  const auto t = tetrahedron_boundary();
  const auto r = induced_embedding_check(t, t, VertexMap{{0, 1, 2, 3}});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.image_order, 6);
  try {
    induced_embedding_check(cycle_complex(3), build_simplicial({{0, 1}}), VertexMap{{0, 1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNondegenerate);
  }
}
