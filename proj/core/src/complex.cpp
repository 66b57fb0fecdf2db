#include "cgroupoid/complex.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <set>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

namespace {

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_dense(const std::vector<bool>& used) {
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v])
      throw Error(Errc::SparseVertices, "vertex " + std::to_string(v) + " occurs in no cell");
}

}  // namespace

// ---------------------------------------------------------------- RankedPoset

std::size_t RankedPoset::add(VertexSet face, int rank) {
  if (auto it = index_.find(face); it != index_.end()) return it->second;
  const std::size_t id = elements_.size();
  index_.emplace(face, id);
  elements_.push_back(std::move(face));
  ranks_.push_back(rank);
  lower_.emplace_back();
  upper_.emplace_back();
  depth_ = std::max(depth_, rank);
  return id;
}

void RankedPoset::add_cover(std::size_t lower, std::size_t upper) {
  auto& down = lower_[upper];
  if (std::find(down.begin(), down.end(), lower) != down.end()) return;
  down.push_back(lower);
  upper_[lower].push_back(upper);
}

std::vector<std::size_t> RankedPoset::down_set(std::size_t x) const {
  std::vector<std::size_t> out{x};
  std::set<std::size_t> seen{x};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (std::size_t y : lower_[out[head]])
      if (seen.insert(y).second) out.push_back(y);
  return out;
}

std::optional<std::size_t> RankedPoset::find(const VertexSet& face) const {
  if (auto it = index_.find(face); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::size_t> RankedPoset::rank_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(depth_ + 1), 0);
  for (int r : ranks_) ++counts[static_cast<std::size_t>(r)];
  return counts;
}

// --------------------------------------------------------- SimplicialComplex

std::optional<std::size_t> SimplicialComplex::facet_index(const VertexSet& facet) const {
  auto it = std::find(facets_.begin(), facets_.end(), facet);
  if (it == facets_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

SimplicialComplex build_simplicial(std::vector<std::vector<Vertex>> facets) {
  if (facets.empty()) throw Error(Errc::EmptyInput, "no facets");
  const std::size_t width = facets.front().size();
  if (width == 0) throw Error(Errc::EmptyInput, "empty facet");

  Vertex max_vertex = 0;
  for (auto& facet : facets) {
    if (facet.size() != width)
      throw Error(Errc::NonPure, "facet " + set_string(facet) + " has " +
                                     std::to_string(facet.size()) + " vertices, expected " +
                                     std::to_string(width));
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
      throw Error(Errc::DegenerateFacet, "facet " + set_string(facet) + " repeats a vertex");
    max_vertex = std::max(max_vertex, facet.back());
  }

  std::set<VertexSet> distinct;
  for (const auto& facet : facets)
    if (!distinct.insert(facet).second)
      throw Error(Errc::DominatedFacet, "facet " + set_string(facet) + " listed twice");

  std::vector<bool> used(max_vertex + 1, false);
  for (const auto& facet : facets)
    for (Vertex v : facet) used[v] = true;
  require_dense(used);

  SimplicialComplex k;
  k.vertex_count_ = used.size();
  k.dimension_ = static_cast<int>(width) - 1;
  k.facets_ = std::move(facets);
  return k;
}

RankedPoset face_poset(const SimplicialComplex& complex) {
  RankedPoset poset;
  for (const auto& facet : complex.facets()) {
    const std::size_t n = facet.size();
    // Masks in increasing popcount order so lower faces exist before their covers.
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::size_t> id_of(1u << n, 0);
    for (unsigned m : masks) {
      VertexSet face;
      for (std::size_t i = 0; i < n; ++i)
        if (m & (1u << i)) face.push_back(facet[i]);
      id_of[m] = poset.add(std::move(face), std::popcount(m) - 1);
      if (std::popcount(m) > 1)
        for (std::size_t i = 0; i < n; ++i)
          if (m & (1u << i)) poset.add_cover(id_of[m & ~(1u << i)], id_of[m]);
    }
  }
  return poset;
}

Graph one_skeleton(const SimplicialComplex& complex) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& facet : complex.facets())
    for (std::size_t i = 0; i < facet.size(); ++i)
      for (std::size_t j = i + 1; j < facet.size(); ++j) edges.emplace_back(facet[i], facet[j]);
  return Graph(complex.vertex_count(), std::move(edges));
}

DualMultigraph facet_adjacency(const SimplicialComplex& complex) {
  DualMultigraph dual;
  dual.node_count = complex.facets().size();
  std::map<VertexSet, std::size_t> ridge_id;
  std::vector<std::vector<std::size_t>> incident;
  for (std::size_t f = 0; f < complex.facets().size(); ++f) {
    const auto& facet = complex.facets()[f];
    if (facet.size() < 2) continue;  // 0-dimensional complexes have no ridges
    for (std::size_t omit = 0; omit < facet.size(); ++omit) {
      VertexSet ridge;
      for (std::size_t i = 0; i < facet.size(); ++i)
        if (i != omit) ridge.push_back(facet[i]);
      auto [it, fresh] = ridge_id.emplace(ridge, dual.ridges.size());
      if (fresh) {
        dual.ridges.push_back(std::move(ridge));
        incident.emplace_back();
      }
      incident[it->second].push_back(f);
    }
  }
  for (std::size_t r = 0; r < incident.size(); ++r)
    for (std::size_t i = 0; i < incident[r].size(); ++i)
      for (std::size_t j = i + 1; j < incident[r].size(); ++j)
        dual.edges.push_back({incident[r][i], incident[r][j], r});
  return dual;
}

// ------------------------------------------------------------ CubicalComplex

std::vector<CubeFace> cube_faces(const std::vector<Vertex>& corners, unsigned dimension) {
  const unsigned all = (1u << dimension) - 1;
  std::vector<CubeFace> faces;
  for (unsigned free = 0; free <= all; ++free) {
    const unsigned fixed_mask = all & ~free;
    // Enumerate every assignment of the fixed bits.
    for (unsigned fixed = fixed_mask;; fixed = (fixed - 1) & fixed_mask) {
      CubeFace face{free, fixed, {}, {}};
      for (unsigned s = free;; s = (s - 1) & free) {
        face.addresses.push_back(fixed | s);
        if (s == 0) break;
      }
      std::sort(face.addresses.begin(), face.addresses.end());
      for (unsigned a : face.addresses) face.vertices.push_back(corners[a]);
      std::sort(face.vertices.begin(), face.vertices.end());
      faces.push_back(std::move(face));
      if (fixed == 0) break;
    }
  }
  return faces;
}

namespace {

void add_cube_to_poset(RankedPoset& poset, const std::vector<Vertex>& corners, unsigned k) {
  auto faces = cube_faces(corners, k);
  std::stable_sort(faces.begin(), faces.end(), [](const CubeFace& a, const CubeFace& b) {
    return std::popcount(a.free_mask) < std::popcount(b.free_mask);
  });
  std::map<std::pair<unsigned, unsigned>, std::size_t> id_of;
  for (const auto& face : faces) {
    const std::size_t id = poset.add(face.vertices, std::popcount(face.free_mask));
    id_of[{face.free_mask, face.fixed_bits}] = id;
    for (unsigned j = 0; j < k; ++j) {
      const unsigned bit = 1u << j;
      if (!(face.free_mask & bit)) continue;
      for (unsigned value : {0u, bit})
        poset.add_cover(id_of.at({face.free_mask & ~bit, face.fixed_bits | value}), id);
    }
  }
}

}  // namespace

CubicalComplex build_cubical(unsigned dimension, std::vector<std::vector<Vertex>> cubes,
                             std::vector<std::vector<int>> coords) {
  if (dimension == 0 || dimension > 8)
    throw Error(Errc::EmptyInput, "cube dimension must be in 1..8");
  if (cubes.empty()) throw Error(Errc::EmptyInput, "no cubes");
  const std::size_t corners = std::size_t{1} << dimension;

  Vertex max_vertex = 0;
  for (std::size_t c = 0; c < cubes.size(); ++c) {
    if (cubes[c].size() != corners)
      throw Error(Errc::NonPure, "cube " + std::to_string(c) + " has " +
                                     std::to_string(cubes[c].size()) + " corners, expected " +
                                     std::to_string(corners));
    VertexSet sorted = cubes[c];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::CornerCollision, "cube " + std::to_string(c) + " repeats a vertex");
    max_vertex = std::max(max_vertex, sorted.back());
  }
  std::vector<bool> used(max_vertex + 1, false);
  for (const auto& cube : cubes)
    for (Vertex v : cube) used[v] = true;
  require_dense(used);
  if (!coords.empty() && coords.size() != used.size())
    throw Error(Errc::SparseVertices, "coordinate list does not cover every vertex");

  // Pairwise: two closed cells meet in a common face or not at all.
  std::vector<std::set<VertexSet>> face_sets(cubes.size());
  std::vector<VertexSet> vertex_sets(cubes.size());
  std::vector<std::vector<std::size_t>> cubes_at(used.size());
  for (std::size_t c = 0; c < cubes.size(); ++c) {
    for (auto& face : cube_faces(cubes[c], dimension)) face_sets[c].insert(face.vertices);
    vertex_sets[c] = cubes[c];
    std::sort(vertex_sets[c].begin(), vertex_sets[c].end());
    for (Vertex v : cubes[c]) cubes_at[v].push_back(c);
  }
  std::set<std::pair<std::size_t, std::size_t>> checked;
  for (const auto& around : cubes_at)
    for (std::size_t i = 0; i < around.size(); ++i)
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        const std::size_t a = around[i], b = around[j];
        if (!checked.insert({a, b}).second) continue;
        if (vertex_sets[a] == vertex_sets[b])
          throw Error(Errc::DominatedFacet, "cubes " + std::to_string(a) + " and " +
                                                std::to_string(b) + " share all vertices");
        VertexSet meet;
        std::set_intersection(vertex_sets[a].begin(), vertex_sets[a].end(),
                              vertex_sets[b].begin(), vertex_sets[b].end(),
                              std::back_inserter(meet));
        if (!face_sets[a].contains(meet) || !face_sets[b].contains(meet))
          throw Error(Errc::SemilatticeViolation, "cubes " + std::to_string(a) + " and " +
                                                      std::to_string(b) + " meet in " +
                                                      set_string(meet) + ", not a common face");
      }

  CubicalComplex k;
  k.vertex_count_ = used.size();
  k.dimension_ = dimension;
  k.cubes_ = std::move(cubes);
  k.coords_ = std::move(coords);
  for (const auto& cube : k.cubes_) add_cube_to_poset(k.poset_, cube, dimension);

  // Every down-set must look like the face poset of a cube: C(q,j) 2^(q-j) faces of rank j.
  for (std::size_t x = 0; x < k.poset_.size(); ++x) {
    const auto q = static_cast<std::size_t>(k.poset_.rank(x));
    std::vector<std::size_t> counts(q + 1, 0);
    for (std::size_t y : k.poset_.down_set(x)) ++counts[static_cast<std::size_t>(k.poset_.rank(y))];
    for (std::size_t j = 0; j <= q; ++j)
      if (counts[j] != binomial(q, j) << (q - j))
        throw Error(Errc::NonCubicalFace, "face " + set_string(k.poset_.element(x)) +
                                              " is glued inconsistently");
  }
  return k;
}

RankedPoset face_poset(const CubicalComplex& complex) { return complex.poset(); }

Graph one_skeleton(const CubicalComplex& complex) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const unsigned k = complex.dimension();
  for (const auto& cube : complex.cubes())
    for (unsigned a = 0; a < (1u << k); ++a)
      for (unsigned j = 0; j < k; ++j)
        if (!(a & (1u << j))) edges.emplace_back(cube[a], cube[a | (1u << j)]);
  return Graph(complex.vertex_count(), std::move(edges));
}

DualMultigraph facet_adjacency(const CubicalComplex& complex) {
  DualMultigraph dual;
  dual.node_count = complex.cubes().size();
  const unsigned k = complex.dimension();
  const unsigned all = (1u << k) - 1;
  std::map<VertexSet, std::size_t> ridge_id;
  std::vector<std::vector<std::size_t>> incident;
  for (std::size_t c = 0; c < complex.cubes().size(); ++c) {
    const auto& cube = complex.cubes()[c];
    for (unsigned j = 0; j < k; ++j)
      for (unsigned value : {0u, 1u << j}) {
        VertexSet ridge;
        for (unsigned a = 0; a <= all; ++a)
          if ((a & (1u << j)) == value) ridge.push_back(cube[a]);
        std::sort(ridge.begin(), ridge.end());
        auto [it, fresh] = ridge_id.emplace(ridge, dual.ridges.size());
        if (fresh) {
          dual.ridges.push_back(std::move(ridge));
          incident.emplace_back();
        }
        incident[it->second].push_back(c);
      }
  }
  for (std::size_t r = 0; r < incident.size(); ++r)
    for (std::size_t i = 0; i < incident[r].size(); ++i)
      for (std::size_t j = i + 1; j < incident[r].size(); ++j)
        dual.edges.push_back({incident[r][i], incident[r][j], r});
  return dual;
}

// ------------------------------------------------------------------ VertexMap

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  VertexMap out;
  out.assignment.reserve(f.assignment.size());
  for (Vertex v : f.assignment) out.assignment.push_back(g.assignment.at(v));
  return out;
}

NondegeneracyResult check_nondegenerate(const SimplicialComplex& source,
                                        const SimplicialComplex& target, const VertexMap& f) {
  if (f.assignment.size() != source.vertex_count())
    throw Error(Errc::NotNondegenerate, "vertex map is not total on the source");

  std::vector<std::vector<std::size_t>> facets_at(target.vertex_count());
  for (std::size_t t = 0; t < target.facets().size(); ++t)
    for (Vertex v : target.facets()[t]) facets_at[v].push_back(t);

  for (const auto& facet : source.facets()) {
    VertexSet image;
    for (Vertex v : facet) {
      if (f(v) >= target.vertex_count()) return {false, {v}};
      image.push_back(f(v));
    }
    for (std::size_t i = 0; i < facet.size(); ++i)
      for (std::size_t j = i + 1; j < facet.size(); ++j)
        if (image[i] == image[j]) return {false, {facet[i], facet[j]}};
    std::sort(image.begin(), image.end());
    const bool is_face = std::any_of(
        facets_at[image.front()].begin(), facets_at[image.front()].end(), [&](std::size_t t) {
          const auto& tf = target.facets()[t];
          return std::includes(tf.begin(), tf.end(), image.begin(), image.end());
        });
    if (!is_face) return {false, facet};
  }
  return {};
}

NondegeneracyResult check_nondegenerate(const CubicalComplex& source, const CubicalComplex& target,
                                        const VertexMap& f) {
  if (f.assignment.size() != source.vertex_count())
    throw Error(Errc::NotNondegenerate, "vertex map is not total on the source");
  const unsigned k = source.dimension();
  if (k > target.dimension()) return {false, {}};

  std::set<VertexSet> target_faces;
  for (const auto& cube : target.cubes())
    for (auto& face : cube_faces(cube, target.dimension()))
      if (static_cast<unsigned>(std::popcount(face.free_mask)) == k)
        target_faces.insert(std::move(face.vertices));
  const Graph target_edges = one_skeleton(target);

  for (const auto& cube : source.cubes()) {
    VertexSet sorted = cube;
    std::sort(sorted.begin(), sorted.end());
    VertexSet image;
    for (Vertex v : cube) {
      if (f(v) >= target.vertex_count()) return {false, {v}};
      image.push_back(f(v));
    }
    for (unsigned a = 0; a < cube.size(); ++a)
      for (unsigned b = a + 1; b < cube.size(); ++b)
        if (image[a] == image[b]) return {false, {std::min(cube[a], cube[b]), std::max(cube[a], cube[b])}};
    for (unsigned a = 0; a < cube.size(); ++a)
      for (unsigned j = 0; j < k; ++j)
        if (!(a & (1u << j)) && !target_edges.adjacent(image[a], image[a | (1u << j)]))
          return {false, {std::min(cube[a], cube[a | (1u << j)]), std::max(cube[a], cube[a | (1u << j)])}};
    std::sort(image.begin(), image.end());
    if (!target_faces.contains(image)) return {false, sorted};
  }
  return {};
}

}  // namespace cgroupoid
