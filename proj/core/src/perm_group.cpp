#include "cgroupoid/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Perm& g : generators_)
    if (g.degree() != degree_)
      throw Error(Errc::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                            " in a group of degree " + std::to_string(degree_));
  run_schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base_point] = Perm::identity(degree_);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point beta = level.orbit[head];
    for (const Perm& x : level.gens) {
      const Point image = x[beta];
      if (!level.transversal[image]) {
        level.transversal[image] = compose(*level.transversal[beta], x);
        level.orbit.push_back(image);
      }
    }
  }
}

PermGroup::SiftResult PermGroup::sift(Perm g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const Point beta = g[level.base_point];
    if (!level.transversal[beta]) return {std::move(g), l};
    g = compose(g, level.transversal[beta]->inverse());
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::run_schreier_sims() {
  std::vector<Perm> gens;
  for (const Perm& g : generators_)
    if (!g.is_identity()) gens.push_back(g);

  auto fixes_base = [this](const Perm& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels_[l].base_point] != levels_[l].base_point) return false;
    return true;
  };

  for (const Perm& g : gens)
    if (fixes_base(g, levels_.size()))
      levels_.push_back(Level{static_cast<Point>(g.first_moved()), {}, {}, {}});

  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const Perm& g : gens)
      if (fixes_base(g, l)) levels_[l].gens.push_back(g);
    rebuild_orbit(levels_[l]);
  }

  // Holt-style SCHREIERSIMS: level i is complete once every Schreier generator
  // of its orbit sifts through the levels below it.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t cur = i - 1;
    bool extended = false;
    for (std::size_t oi = 0; oi < levels_[cur].orbit.size() && !extended; ++oi) {
      const Point beta = levels_[cur].orbit[oi];
      for (std::size_t gi = 0; gi < levels_[cur].gens.size(); ++gi) {
        const Level& level = levels_[cur];
        const Perm& x = level.gens[gi];
        const Perm& u_beta = *level.transversal[beta];
        const Perm& u_image = *level.transversal[x[beta]];
        Perm schreier = compose(compose(u_beta, x), u_image.inverse());
        if (schreier.is_identity()) continue;

        auto [residue, drop] = sift(std::move(schreier), cur + 1);
        if (drop == levels_.size()) {
          if (residue.is_identity()) continue;
          levels_.push_back(Level{static_cast<Point>(residue.first_moved()), {}, {}, {}});
          drop = levels_.size() - 1;
        }
        for (std::size_t l = cur + 1; l <= drop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = drop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const Level& level : levels_) order_ *= level.orbit.size();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const Level& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const Level& level : levels_)
    for (const Perm& g : level.gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::vector<std::size_t> PermGroup::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const Level& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw Error(Errc::DegreeMismatch, "permutation of degree " + std::to_string(p.degree()) +
                                          " tested against a group of degree " +
                                          std::to_string(degree_));
  auto [residue, drop] = sift(p, 0);
  return drop == levels_.size() && residue.is_identity();
}

PermGroup schreier_sims(std::size_t degree, std::vector<Perm> generators) {
  return PermGroup(degree, std::move(generators));
}

std::string GroupTag::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Cyclic: return "cyclic(" + std::to_string(cyclic_order) + ")";
    case Kind::Alternating: return "alternating";
    case Kind::Symmetric: return "symmetric";
    case Kind::Other: return "other";
  }
  return "other";
}

GroupTag recognize(const PermGroup& group) {
  using Kind = GroupTag::Kind;
  if (group.is_trivial()) return {Kind::Trivial, 0};

  std::vector<Perm> gens;
  for (const Perm& g : group.generators())
    if (!g.is_identity()) gens.push_back(g);

  // An abelian group is cyclic iff its exponent (lcm of generator orders) equals its order.
  bool abelian = true;
  for (std::size_t a = 0; a < gens.size() && abelian; ++a)
    for (std::size_t b = a + 1; b < gens.size() && abelian; ++b)
      abelian = compose(gens[a], gens[b]) == compose(gens[b], gens[a]);
  if (abelian) {
    std::uint64_t exponent = 1;
    for (const Perm& g : gens) exponent = std::lcm(exponent, g.order());
    if (BigInt(exponent) == group.order()) return {Kind::Cyclic, exponent};
    return {Kind::Other, 0};
  }

  const std::size_t n = group.degree();
  if (n < 3) return {Kind::Other, 0};
  const BigInt full = factorial(n);
  const Perm three_cycle = Perm::from_cycles(n, {{0, 1, 2}});
  const Perm transposition = Perm::from_cycles(n, {{0, 1}});

  if (group.order() * 2 == full && group.contains(three_cycle) && !group.contains(transposition))
    return {Kind::Alternating, 0};
  if (group.order() == full && group.contains(transposition) && group.contains(three_cycle))
    return {Kind::Symmetric, 0};
  return {Kind::Other, 0};
}

}  // namespace cgroupoid
