#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cgroupoid {

using Point = std::uint32_t;

/// Permutation of {0..n-1} stored as an image array: images()[i] is the image of i.
///
/// Points are acted on from the right, so `compose(a, b)` applies `a` first and
/// then `b`.
class Perm {
 public:
  Perm() = default;

  /// Throws Errc::NotAPermutation unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);
  Perm(std::initializer_list<Point> images) : Perm(std::vector<Point>(images)) {}

  static Perm identity(std::size_t degree);
  /// Product of disjoint or overlapping cycles, applied left to right.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  Point operator[](std::size_t p) const { return images_[p]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  /// Smallest k >= 1 with this^k = identity.
  std::uint64_t order() const;
  /// 0 for even permutations, 1 for odd ones.
  int parity() const;
  /// First point moved, or degree() when this is the identity.
  std::size_t first_moved() const noexcept;

  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// Left-to-right product: compose(a, b)(x) = b(a(x)). Throws Errc::DegreeMismatch.
Perm compose(const Perm& a, const Perm& b);

/// Every element of <gens> by breadth-first multiplication. Brute-force oracle for
/// small groups; throws Errc::ClosureTooLarge once more than `limit` elements appear.
std::set<Perm> closure_small(std::span<const Perm> gens, std::size_t degree,
                             std::size_t limit = 1'000'000);

/// Signed permutation matrix on k coordinates: coordinate i is sent to coordinate
/// perm[i] and multiplied by signs[i].
struct SignedPerm {
  Perm perm;
  std::vector<int> signs;

  static SignedPerm identity(std::size_t k);
  std::size_t degree() const noexcept { return perm.degree(); }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// Left-to-right product of signed permutations (a first).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

/// 0 iff the number of -1 entries is even, i.e. the element lies in B_k^even.
int signed_parity(const SignedPerm& s);

bool all_in_even_subgroup(std::span<const SignedPerm> gens);

}  // namespace cgroupoid
