#include "cgroupoid/holonomy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

bool is_strongly_connected(const Groupoid& g) { return g.is_connected(); }

bool is_strongly_connected(const SimplicialComplex& complex) {
  return build_groupoid(complex).is_connected();
}

bool is_strongly_connected(const CubicalComplex& complex) {
  return build_groupoid(complex).is_connected();
}

namespace {

struct Tree {
  std::vector<std::optional<Groupoid::Step>> parent_step;  // step taken from parent
  std::vector<std::size_t> parent;
  std::vector<bool> reached;
  std::vector<std::size_t> order;
};

Tree bfs_tree(const Groupoid& g, std::size_t base, std::optional<std::uint64_t> seed) {
  Tree t;
  const std::size_t n = g.object_count();
  t.parent_step.assign(n, std::nullopt);
  t.parent.assign(n, base);
  t.reached.assign(n, false);
  t.reached[base] = true;
  t.order.push_back(base);
  std::mt19937_64 rng(seed.value_or(0));
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const std::size_t o = t.order[head];
    std::vector<Groupoid::Step> steps = g.steps_from(o);
    if (seed) {
      // Fisher-Yates with plain modulo so the tree is identical on every platform.
      for (std::size_t i = steps.size(); i > 1; --i) std::swap(steps[i - 1], steps[rng() % i]);
    }
    for (const auto& s : steps)
      if (!t.reached[s.to]) {
        t.reached[s.to] = true;
        t.parent[s.to] = o;
        t.parent_step[s.to] = s;
        t.order.push_back(s.to);
      }
  }
  return t;
}

/// Tree path from the base to `target` as object and ridge lists.
void tree_path(const Tree& t, std::size_t target, std::vector<std::size_t>& objects,
               std::vector<std::size_t>& ridges) {
  std::vector<std::size_t> rev_objects{target};
  std::vector<std::size_t> rev_ridges;
  for (std::size_t o = target; t.parent_step[o]; o = t.parent[o]) {
    rev_ridges.push_back(t.parent_step[o]->ridge);
    rev_objects.push_back(t.parent[o]);
  }
  objects.assign(rev_objects.rbegin(), rev_objects.rend());
  ridges.assign(rev_ridges.rbegin(), rev_ridges.rend());
}

}  // namespace

HolonomyResult holonomy_group(const Groupoid& g, std::size_t base, const HolonomyOptions& options) {
  if (base >= g.object_count())
    throw Error(Errc::NotConnected, "base object " + std::to_string(base) + " does not exist");
  if (options.require_connected && !g.is_connected())
    throw Error(Errc::NotConnected, "groupoid has more than one component");

  const Tree tree = bfs_tree(g, base, options.tree_seed);
  const std::size_t slots = g.slot_count();

  // Transport from the base to every reached object along the tree.
  std::vector<Perm> to_object(g.object_count(), Perm::identity(slots));
  for (std::size_t o : tree.order)
    if (tree.parent_step[o]) to_object[o] = compose(to_object[tree.parent[o]], g.step_map(*tree.parent_step[o]));

  std::vector<bool> is_tree(g.morphisms().size(), false);
  std::vector<std::size_t> tree_morphisms;
  for (std::size_t o : tree.order)
    if (tree.parent_step[o]) {
      is_tree[tree.parent_step[o]->morphism] = true;
      tree_morphisms.push_back(tree.parent_step[o]->morphism);
    }

  std::vector<Perm> generators;
  std::vector<TransportPath> loops;
  for (std::size_t m = 0; m < g.morphisms().size(); ++m) {
    const ElemMorphism& mor = g.morphisms()[m];
    if (is_tree[m] || !tree.reached[mor.source]) continue;
    Perm gen = compose(compose(to_object[mor.source], mor.slot_map), to_object[mor.target].inverse());

    std::vector<std::size_t> out_objects, out_ridges, back_objects, back_ridges;
    tree_path(tree, mor.source, out_objects, out_ridges);
    tree_path(tree, mor.target, back_objects, back_ridges);
    TransportPath loop;
    loop.objects = out_objects;
    loop.ridges = out_ridges;
    loop.ridges.push_back(mor.ridge);
    loop.objects.insert(loop.objects.end(), back_objects.rbegin(), back_objects.rend());
    loop.ridges.insert(loop.ridges.end(), back_ridges.rbegin(), back_ridges.rend());
    loop.map = gen;

    generators.push_back(std::move(gen));
    loops.push_back(std::move(loop));
  }

  PermGroup group(slots, generators);
  return HolonomyResult{base, std::move(generators), std::move(loops), std::move(group), tree.order,
                        std::move(tree_morphisms)};
}

bool holonomy_order_invariance(const Groupoid& g, unsigned random_trees, std::uint64_t seed) {
  if (g.object_count() == 0) return true;
  const HolonomyResult reference = holonomy_group(g, 0);
  const GroupTag tag = reference.tag();
  for (std::size_t base = 0; base < g.object_count(); ++base)
    for (unsigned t = 0; t <= random_trees; ++t) {
      HolonomyOptions options;
      if (t > 0) options.tree_seed = seed * 1'000'003 + base * 131 + t;
      const HolonomyResult r = holonomy_group(g, base, options);
      if (r.group.order() != reference.group.order() || !(r.tag() == tag)) return false;
    }
  return true;
}

SignedPerm corner_action_to_signed(const Perm& corners, unsigned k) {
  if (corners.degree() != (std::size_t{1} << k))
    throw Error(Errc::DegreeMismatch, "corner permutation must have degree 2^k");
  const unsigned shift = corners[0];
  std::vector<Point> perm(k);
  std::vector<int> signs(k);
  for (unsigned i = 0; i < k; ++i) {
    const unsigned moved = corners[1u << i] ^ shift;
    if (std::popcount(moved) != 1) throw Error(Errc::NotAPermutation, "not a cube symmetry");
    perm[i] = static_cast<Point>(std::countr_zero(moved));
    signs[i] = (shift >> perm[i]) & 1u ? -1 : 1;
  }
  for (unsigned a = 0; a < corners.degree(); ++a) {
    unsigned image = shift;
    for (unsigned i = 0; i < k; ++i)
      if (a & (1u << i)) image ^= 1u << perm[i];
    if (corners[a] != image) throw Error(Errc::NotAPermutation, "not a cube symmetry");
  }
  return SignedPerm{Perm(std::move(perm)), std::move(signs)};
}

std::vector<SignedPerm> signed_generators(const HolonomyResult& result, unsigned k) {
  std::vector<SignedPerm> out;
  for (const Perm& g : result.generators) out.push_back(corner_action_to_signed(g, k));
  return out;
}

EmbeddingReport induced_embedding_check(const SimplicialComplex& source,
                                        const SimplicialComplex& target, const VertexMap& f,
                                        std::size_t base) {
  if (auto nd = check_nondegenerate(source, target, f); !nd)
    throw Error(Errc::NotNondegenerate, "map degenerates a face");
  if (source.dimension() != target.dimension())
    throw Error(Errc::NotNondegenerate, "source and target dimensions differ");

  const Groupoid gp = build_groupoid(source);
  const Groupoid gq = build_groupoid(target);
  if (!gp.is_connected() || !gq.is_connected())
    throw Error(Errc::NotConnected, "both complexes must be strongly connected");

  auto image_facet = [&](std::size_t facet) {
    VertexSet image;
    for (Vertex v : source.facets()[facet]) image.push_back(f(v));
    std::sort(image.begin(), image.end());
    auto idx = target.facet_index(image);
    if (!idx) throw Error(Errc::NotNondegenerate, "a facet does not map onto a facet");
    return *idx;
  };

  const DualMultigraph source_dual = facet_adjacency(source);
  const DualMultigraph target_dual = facet_adjacency(target);
  std::map<VertexSet, std::size_t> target_ridge;
  for (std::size_t r = 0; r < target_dual.ridges.size(); ++r) target_ridge[target_dual.ridges[r]] = r;

  const HolonomyResult hp = holonomy_group(gp, base);
  EmbeddingReport report;
  report.target_base = image_facet(base);
  const HolonomyResult hq = holonomy_group(gq, report.target_base);

  // Slot i of the source base lands on slot rename[i] of the target base.
  const auto& base_p = source.facets()[base];
  const auto& base_q = target.facets()[report.target_base];
  std::vector<Point> rename(base_p.size());
  for (std::size_t i = 0; i < base_p.size(); ++i)
    rename[i] = static_cast<Point>(std::find(base_q.begin(), base_q.end(), f(base_p[i])) - base_q.begin());

  report.ok = true;
  for (std::size_t gi = 0; gi < hp.generators.size(); ++gi) {
    const Perm& g = hp.generators[gi];
    std::vector<Point> images(g.degree());
    for (std::size_t i = 0; i < g.degree(); ++i) images[rename[i]] = rename[g[i]];
    Perm renamed(std::move(images));

    // Push the defining loop through f and transport it in the target.
    const TransportPath& loop = hp.loops[gi];
    std::vector<std::size_t> objects{image_facet(loop.objects.front())};
    std::vector<std::size_t> ridges;
    for (std::size_t s = 0; s < loop.ridges.size(); ++s) {
      const std::size_t next = image_facet(loop.objects[s + 1]);
      if (next == objects.back()) continue;  // both facets fold onto one: identity step
      VertexSet ridge;
      for (Vertex v : source_dual.ridges[loop.ridges[s]]) ridge.push_back(f(v));
      std::sort(ridge.begin(), ridge.end());
      ridges.push_back(target_ridge.at(ridge));
      objects.push_back(next);
    }
    const TransportPath pushed = transport(gq, objects, ridges);
    if (pushed.map != renamed || !hq.group.contains(renamed)) report.ok = false;
    report.images.push_back(std::move(renamed));
  }

  const PermGroup image_group(gq.slot_count(), report.images);
  report.source_order = hp.group.order();
  report.image_order = image_group.order();
  report.target_order = hq.group.order();
  if (report.image_order != report.source_order) report.ok = false;
  return report;
}

OuterComparison compare_with_outer(const HolonomyResult& result, const BigInt& outer_order) {
  return OuterComparison{result.group.order(), outer_order, result.group.order() < outer_order};
}

}  // namespace cgroupoid
