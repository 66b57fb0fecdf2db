#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgroupoid/perm.hpp"

namespace cgroupoid {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);

/// Permutation group with a base and strong generating set computed once, at
/// construction, by deterministic Schreier-Sims. Read-only afterwards.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }

  std::vector<Point> base() const;
  std::vector<Perm> strong_generators() const;
  /// Sizes of the fundamental orbits, one per base point.
  std::vector<std::size_t> orbit_sizes() const;

  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Sift membership test. Throws Errc::DegreeMismatch.
  bool contains(const Perm& p) const;

 private:
  struct Level {
    Point base_point;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::optional<Perm>> transversal;  // indexed by point
  };

  struct SiftResult {
    Perm residue;
    std::size_t level;  // levels_.size() when the sift ran to completion
  };

  void run_schreier_sims();
  void rebuild_orbit(Level& level) const;
  SiftResult sift(Perm g, std::size_t from_level) const;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  BigInt order_{1};
};

PermGroup schreier_sims(std::size_t degree, std::vector<Perm> generators);

struct GroupTag {
  enum class Kind { Trivial, Cyclic, Alternating, Symmetric, Other };
  Kind kind = Kind::Other;
  std::uint64_t cyclic_order = 0;  // only meaningful for Kind::Cyclic

  std::string to_string() const;  // "trivial", "cyclic(4)", "alternating", ...
  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

/// Named-group recognition on the group's full degree. Ambiguous cases come back
/// as Kind::Other.
GroupTag recognize(const PermGroup& group);

}  // namespace cgroupoid
