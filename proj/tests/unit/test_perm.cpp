#include <gtest/gtest.h>

#include <random>

#include "cgroupoid/error.hpp"
#include "cgroupoid/perm.hpp"

using namespace cgroupoid;

namespace {

Perm random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  return Perm(img);
}

SignedPerm random_signed(std::mt19937_64& rng, std::size_t k) {
  std::vector<int> signs(k);
  for (auto& s : signs) s = rng() % 2 ? -1 : 1;
  return SignedPerm{random_perm(rng, k), signs};
}

}  // namespace

TEST(Perm, RejectsNonBijections) {
  EXPECT_THROW(Perm({0, 0, 1}), Error);
  EXPECT_THROW(Perm({0, 3}), Error);
  try {
    Perm({1, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAPermutation);
  }
}

TEST(Perm, ComposeIsLeftToRight) {
  // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0, 2 -> 1.
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  EXPECT_EQ(compose(a, b), Perm({2, 0, 1}));
  EXPECT_NE(compose(b, a), compose(a, b));
}

TEST(Perm, InverseAndIdentity) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Perm a = random_perm(rng, 7);
    EXPECT_TRUE(compose(a, a.inverse()).is_identity());
    EXPECT_EQ(compose(Perm::identity(7), a), a);
    EXPECT_EQ(compose(a, Perm::identity(7)), a);
  }
}

TEST(Perm, DegreeMismatch) {
  try {
    compose(Perm::identity(2), Perm::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeMismatch);
  }
}

TEST(Perm, OrderParityCycles) {
  const Perm p = Perm::from_cycles(6, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.parity(), 1);
  EXPECT_EQ(Perm::from_cycles(4, {{0, 1, 2}}).parity(), 0);
  EXPECT_EQ(p.first_moved(), 0u);
  EXPECT_EQ(Perm::identity(3).first_moved(), 3u);
  EXPECT_EQ(Perm::identity(3).to_cycle_string(), "()");
}

TEST(Perm, PropertyAssociativeAndParityHomomorphism) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Perm a = random_perm(rng, 6), b = random_perm(rng, 6), c = random_perm(rng, 6);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, b).parity(), a.parity() ^ b.parity());
    EXPECT_EQ(compose(a, b).inverse(), compose(b.inverse(), a.inverse()));
  }
}

TEST(ClosureSmall, Examples) {
  const std::vector<Perm> t{Perm::from_cycles(3, {{0, 1}})};
  EXPECT_EQ(closure_small(t, 3).size(), 2u);
  const std::vector<Perm> s3{Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})};
  EXPECT_EQ(closure_small(s3, 3).size(), 6u);
  const auto trivial = closure_small(std::vector<Perm>{}, 4);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(trivial.begin()->is_identity());
}

TEST(ClosureSmall, Guard) {
  const std::vector<Perm> s8{Perm::from_cycles(8, {{0, 1}}), Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})};
  try {
    closure_small(s8, 8, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ClosureTooLarge);
  }
}

TEST(SignedPerm, ParityExamples) {
  EXPECT_EQ(signed_parity(SignedPerm::identity(3)), 0);
  const SignedPerm reflect{Perm::identity(3), {-1, 1, 1}};
  EXPECT_EQ(signed_parity(reflect), 1);
  const SignedPerm other{Perm::identity(3), {1, -1, 1}};
  EXPECT_EQ(signed_parity(compose(reflect, other)), 0);
}

TEST(SignedPerm, EvenSubgroupExamples) {
  const std::vector<SignedPerm> sign_free{SignedPerm{Perm({1, 0, 2}), {1, 1, 1}}, SignedPerm::identity(3)};
  EXPECT_TRUE(all_in_even_subgroup(sign_free));
  const std::vector<SignedPerm> one_minus{SignedPerm::identity(3), SignedPerm{Perm::identity(3), {1, 1, -1}}};
  EXPECT_FALSE(all_in_even_subgroup(one_minus));
  const std::vector<SignedPerm> two_minus{SignedPerm{Perm::identity(3), {-1, -1, 1}},
                                          SignedPerm{Perm({2, 0, 1}), {1, -1, -1}}};
  EXPECT_TRUE(all_in_even_subgroup(two_minus));
}

TEST(SignedPerm, PropertyParityIsHomomorphism) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const SignedPerm a = random_signed(rng, 4), b = random_signed(rng, 4);
    EXPECT_EQ(signed_parity(compose(a, b)), signed_parity(a) ^ signed_parity(b));
  }
}

TEST(SignedPerm, ComposeMatchesMatrixAction) {
  // Acting on a vector: coordinate i goes to perm[i] with sign signs[i].
  std::mt19937_64 rng(4);
  auto act = [](const SignedPerm& s, const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[s.perm[i]] = s.signs[i] * v[i];
    return out;
  };
  for (int t = 0; t < 100; ++t) {
    const SignedPerm a = random_signed(rng, 4), b = random_signed(rng, 4);
    const std::vector<int> v{1, 2, 3, 4};
    EXPECT_EQ(act(compose(a, b), v), act(b, act(a, v)));
  }
}
