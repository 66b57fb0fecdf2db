#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cgroupoid/error.hpp"
#include "cgroupoid/perm_group.hpp"
#include "oracles.hpp"

using namespace cgroupoid;

namespace {

std::vector<Perm> to_perms(const std::vector<oracle::Images>& gens) {
  std::vector<Perm> out;
  for (const auto& g : gens) out.emplace_back(g);
  return out;
}

Perm cycle(std::size_t n, std::vector<Point> c) { return Perm::from_cycles(n, {std::move(c)}); }

}  // namespace

TEST(SchreierSims, SymmetricFifteen) {
  std::vector<Point> long_cycle(15);
  for (Point i = 0; i < 15; ++i) long_cycle[i] = i;
  const PermGroup g = schreier_sims(15, {cycle(15, {0, 1}), cycle(15, long_cycle)});
  EXPECT_EQ(g.order(), BigInt("1307674368000"));
  EXPECT_EQ(g.order(), factorial(15));
  EXPECT_EQ(recognize(g).kind, GroupTag::Kind::Symmetric);
}

TEST(SchreierSims, AlternatingFourFromThreeCycles) {
  const PermGroup g = schreier_sims(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  EXPECT_EQ(g.order(), 12);
  const std::vector<oracle::Images> gens{cycle(4, {0, 1, 2}).images(), cycle(4, {1, 2, 3}).images()};
  EXPECT_EQ(oracle::closure(gens, 4).size(), 12u);
  EXPECT_EQ(recognize(g).kind, GroupTag::Kind::Alternating);
}

TEST(SchreierSims, EmptyGenerators) {
  const PermGroup g = schreier_sims(5, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_TRUE(g.is_trivial());
  EXPECT_EQ(recognize(g).kind, GroupTag::Kind::Trivial);
  EXPECT_TRUE(g.contains(Perm::identity(5)));
}

TEST(SchreierSims, OrderIsProductOfOrbitSizes) {
  const PermGroup g = schreier_sims(6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4})});
  BigInt product = 1;
  for (auto s : g.orbit_sizes()) product *= s;
  EXPECT_EQ(product, g.order());
  EXPECT_EQ(g.order(), 6);
}

TEST(Contains, AlternatingFifteen) {
  std::vector<Perm> three_cycles;
  for (Point i = 0; i + 2 < 15; ++i) three_cycles.push_back(cycle(15, {i, i + 1, i + 2}));
  const PermGroup a15(15, three_cycles);
  EXPECT_EQ(a15.order(), factorial(15) / 2);
  EXPECT_TRUE(a15.contains(cycle(15, {2, 9, 14})));
  EXPECT_FALSE(a15.contains(cycle(15, {13, 14})));
  EXPECT_TRUE(a15.contains(Perm::identity(15)));
  EXPECT_EQ(recognize(a15).kind, GroupTag::Kind::Alternating);
  // Every 3-cycle on 15 points lies in the group.
  std::size_t count = 0;
  for (Point a = 0; a < 15; ++a)
    for (Point b = 0; b < 15; ++b)
      for (Point c = 0; c < 15; ++c)
        if (a < b && a < c && b != c) {
          EXPECT_TRUE(a15.contains(cycle(15, {a, b, c})));
          ++count;
        }
  EXPECT_EQ(count, 455u * 2);
}

TEST(Contains, DegreeMismatchThrows) {
  const PermGroup g(3, {cycle(3, {0, 1})});
  EXPECT_THROW((void)g.contains(Perm::identity(4)), Error);
}

TEST(Recognize, Examples) {
  EXPECT_EQ(recognize(PermGroup(4, {cycle(4, {0, 1, 2, 3})})).to_string(), "cyclic(4)");
  EXPECT_EQ(recognize(PermGroup(4, {})).to_string(), "trivial");
  EXPECT_EQ(recognize(PermGroup(3, {cycle(3, {0, 1}), cycle(3, {1, 2})})).to_string(), "symmetric");
  // Klein four-group: abelian but not cyclic.
  EXPECT_EQ(recognize(PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})}))
                .to_string(),
            "other");
  // Cyclic generated by two commuting elements.
  EXPECT_EQ(recognize(PermGroup(5, {cycle(5, {0, 1}), cycle(5, {2, 3, 4})})).to_string(), "cyclic(6)");
}

TEST(Recognize, StableUnderGeneratorShuffle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto gens = to_perms(oracle::random_generators(rng, 6, 3));
    const auto tag = recognize(PermGroup(6, gens));
    std::reverse(gens.begin(), gens.end());
    EXPECT_EQ(recognize(PermGroup(6, gens)), tag);
    std::rotate(gens.begin(), gens.begin() + 1, gens.end());
    EXPECT_EQ(recognize(PermGroup(6, gens)), tag);
  }
}

TEST(SchreierSims, OracleOrderAndMembership) {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 120; ++t) {
    const std::size_t degree = 2 + rng() % 7;
    const auto gens = oracle::random_generators(rng, degree, 1 + rng() % 3);
    const auto elements = oracle::closure(gens, degree);
    const PermGroup g(degree, to_perms(gens));
    ASSERT_EQ(g.order(), BigInt(elements.size())) << "trial " << t;
    for (const auto& gen : g.strong_generators()) EXPECT_TRUE(elements.count(gen.images()));
    // Membership agrees on random permutations.
    for (int q = 0; q < 20; ++q) {
      oracle::Images p = oracle::identity(degree);
      for (std::size_t i = degree; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
      EXPECT_EQ(g.contains(Perm(p)), elements.count(p) == 1);
    }
  }
}
