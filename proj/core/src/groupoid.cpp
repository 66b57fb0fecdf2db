#include "cgroupoid/groupoid.hpp"

#include <algorithm>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

Groupoid::Groupoid(std::vector<std::vector<Vertex>> object_labels,
                   std::vector<ElemMorphism> morphisms)
    : labels_(std::move(object_labels)), morphisms_(std::move(morphisms)) {
  slots_ = labels_.empty() ? 0 : labels_.front().size();
  for (const auto& l : labels_)
    if (l.size() != slots_) throw Error(Errc::DegreeMismatch, "objects carry different slot counts");

  steps_.resize(labels_.size());
  inverses_.reserve(morphisms_.size());
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    const auto& mor = morphisms_[m];
    if (mor.source >= labels_.size() || mor.target >= labels_.size())
      throw Error(Errc::NotAdjacent, "morphism endpoint out of range");
    if (mor.slot_map.degree() != slots_)
      throw Error(Errc::DegreeMismatch, "morphism slot map has the wrong degree");
    inverses_.push_back(mor.slot_map.inverse());
    steps_[mor.source].push_back({m, true, mor.target, mor.ridge});
    steps_[mor.target].push_back({m, false, mor.source, mor.ridge});
  }
  for (auto& steps : steps_) {
    std::sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
      return std::tie(a.ridge, a.morphism, a.forward) < std::tie(b.ridge, b.morphism, b.forward);
    });
  }
  for (std::size_t o = 0; o < steps_.size(); ++o)
    for (const Step& s : steps_[o]) step_index_.emplace(std::make_tuple(o, s.to, s.ridge), s);
}

const Perm& Groupoid::step_map(const Step& step) const {
  return step.forward ? morphisms_[step.morphism].slot_map : inverses_[step.morphism];
}

std::optional<Groupoid::Step> Groupoid::find_step(std::size_t from, std::size_t to,
                                                  std::size_t ridge) const {
  if (auto it = step_index_.find({from, to, ridge}); it != step_index_.end()) return it->second;
  return std::nullopt;
}

ElemMorphism Groupoid::flip(std::size_t from, std::size_t to, std::size_t ridge) const {
  auto step = find_step(from, to, ridge);
  if (!step)
    throw Error(Errc::NotAdjacent, "objects " + std::to_string(from) + " and " +
                                       std::to_string(to) + " are not adjacent through ridge " +
                                       std::to_string(ridge));
  return ElemMorphism{from, to, ridge, step_map(*step)};
}

std::map<Vertex, Vertex> Groupoid::label_bijection(const ElemMorphism& m) const {
  std::map<Vertex, Vertex> out;
  for (std::size_t i = 0; i < slots_; ++i)
    out[labels_[m.source][i]] = labels_[m.target][m.slot_map[i]];
  return out;
}

std::vector<std::size_t> Groupoid::components() const {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(labels_.size(), unset);
  std::size_t next = 0;
  for (std::size_t start = 0; start < labels_.size(); ++start) {
    if (comp[start] != unset) continue;
    comp[start] = next;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t o = stack.back();
      stack.pop_back();
      for (const Step& s : steps_[o])
        if (comp[s.to] == unset) {
          comp[s.to] = next;
          stack.push_back(s.to);
        }
    }
    ++next;
  }
  return comp;
}

bool Groupoid::is_connected() const {
  const auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

// ------------------------------------------------------------------- flips

std::vector<ElemMorphism> elementary_morphisms(const SimplicialComplex& complex, std::size_t a,
                                               std::size_t b, const VertexSet& ridge,
                                               std::size_t ridge_id) {
  const auto& facets = complex.facets();
  if (a >= facets.size() || b >= facets.size() || a == b)
    throw Error(Errc::NotAdjacent, "facet indices must be distinct and in range");
  const auto& fa = facets[a];
  const auto& fb = facets[b];
  if (ridge.size() + 1 != fa.size() || !std::includes(fa.begin(), fa.end(), ridge.begin(), ridge.end()) ||
      !std::includes(fb.begin(), fb.end(), ridge.begin(), ridge.end()))
    throw Error(Errc::NotAdjacent, "ridge is not a common codimension-1 face");

  auto slot_in = [](const VertexSet& facet, Vertex v) {
    return static_cast<Point>(std::lower_bound(facet.begin(), facet.end(), v) - facet.begin());
  };
  Point free_b = 0;
  for (std::size_t i = 0; i < fb.size(); ++i)
    if (!std::binary_search(ridge.begin(), ridge.end(), fb[i])) free_b = static_cast<Point>(i);

  std::vector<Point> images(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i)
    images[i] = std::binary_search(ridge.begin(), ridge.end(), fa[i]) ? slot_in(fb, fa[i]) : free_b;
  return {ElemMorphism{a, b, ridge_id, Perm(std::move(images))}};
}

namespace {

/// (direction bit, value) of the codimension-1 face of `cube` with vertex set `ridge`.
std::optional<std::pair<unsigned, unsigned>> find_cube_ridge(const std::vector<Vertex>& cube,
                                                            unsigned k, const VertexSet& ridge) {
  for (unsigned j = 0; j < k; ++j)
    for (unsigned value : {0u, 1u << j}) {
      VertexSet face;
      for (unsigned addr = 0; addr < cube.size(); ++addr)
        if ((addr & (1u << j)) == value) face.push_back(cube[addr]);
      std::sort(face.begin(), face.end());
      if (face == ridge) return std::make_pair(j, value);
    }
  return std::nullopt;
}

}  // namespace

std::vector<ElemMorphism> elementary_morphisms(const CubicalComplex& complex, std::size_t a,
                                               std::size_t b, const VertexSet& ridge,
                                               std::size_t ridge_id) {
  const auto& cubes = complex.cubes();
  if (a >= cubes.size() || b >= cubes.size() || a == b)
    throw Error(Errc::NotAdjacent, "cube indices must be distinct and in range");
  const unsigned k = complex.dimension();
  const auto ra = find_cube_ridge(cubes[a], k, ridge);
  const auto rb = find_cube_ridge(cubes[b], k, ridge);
  if (!ra || !rb) throw Error(Errc::NotAdjacent, "ridge is not a common codimension-1 face");

  const auto& ca = cubes[a];
  const auto& cb = cubes[b];
  auto address_in_b = [&](Vertex v) {
    return static_cast<Point>(std::find(cb.begin(), cb.end(), v) - cb.begin());
  };
  const unsigned bit_a = 1u << ra->first;
  const unsigned bit_b = 1u << rb->first;
  std::vector<Point> images(ca.size());
  for (unsigned addr = 0; addr < ca.size(); ++addr) {
    if ((addr & bit_a) == ra->second) {
      images[addr] = address_in_b(ca[addr]);
    } else {
      // Off-ridge corner: follow its edge onto the ridge, then leave the ridge in b.
      images[addr] = address_in_b(ca[addr ^ bit_a]) ^ bit_b;
    }
  }
  return {ElemMorphism{a, b, ridge_id, Perm(std::move(images))}};
}

Groupoid build_groupoid(const SimplicialComplex& complex) {
  const DualMultigraph dual = facet_adjacency(complex);
  std::vector<ElemMorphism> morphisms;
  for (const DualEdge& e : dual.edges)
    morphisms.push_back(elementary_morphisms(complex, e.a, e.b, dual.ridges[e.ridge], e.ridge).front());
  return Groupoid(complex.facets(), std::move(morphisms));
}

Groupoid build_groupoid(const CubicalComplex& complex) {
  const DualMultigraph dual = facet_adjacency(complex);
  std::vector<ElemMorphism> morphisms;
  for (const DualEdge& e : dual.edges)
    morphisms.push_back(elementary_morphisms(complex, e.a, e.b, dual.ridges[e.ridge], e.ridge).front());
  return Groupoid(complex.cubes(), std::move(morphisms));
}

Groupoid tribar_groupoid() {
  // Box corners: bit 0 = x, bit 1 = y, bit 2 = z (the long axis).
  auto corner_map = [](auto f) {
    std::vector<Point> images(8);
    for (unsigned a = 0; a < 8; ++a) {
      auto [x, y, z] = f(a & 1u, (a >> 1) & 1u, (a >> 2) & 1u);
      images[a] = x | (y << 1) | (z << 2);
    }
    return Perm(std::move(images));
  };
  // Half turn about x, half turn about y, then a quarter turn about z.
  const Perm ab = corner_map([](unsigned x, unsigned y, unsigned z) {
    return std::tuple{x, 1 - y, 1 - z};
  });
  const Perm bc = corner_map([](unsigned x, unsigned y, unsigned z) {
    return std::tuple{1 - x, y, 1 - z};
  });
  const Perm ca = corner_map([](unsigned x, unsigned y, unsigned z) {
    return std::tuple{y, 1 - x, z};
  });

  std::vector<std::vector<Vertex>> labels(3, std::vector<Vertex>(8));
  for (Vertex o = 0; o < 3; ++o)
    for (Vertex s = 0; s < 8; ++s) labels[o][s] = 8 * o + s;
  return Groupoid(std::move(labels), {ElemMorphism{0, 1, 0, ab}, ElemMorphism{1, 2, 1, bc},
                                      ElemMorphism{2, 0, 2, ca}});
}

// --------------------------------------------------------------- transport

std::vector<std::size_t> TransportPath::serialize() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    out.push_back(objects[i]);
    if (i < ridges.size()) out.push_back(ridges[i]);
  }
  return out;
}

TransportPath transport(const Groupoid& g, const std::vector<std::size_t>& objects,
                        const std::vector<std::size_t>& ridges) {
  if (objects.empty() || objects.size() != ridges.size() + 1)
    throw Error(Errc::BrokenPath, "a path needs one more object than ridges");
  if (objects.front() >= g.object_count())
    throw Error(Errc::BrokenPath, "object out of range");
  Perm acc = Perm::identity(g.slot_count());
  for (std::size_t i = 0; i < ridges.size(); ++i) {
    auto step = g.find_step(objects[i], objects[i + 1], ridges[i]);
    if (!step)
      throw Error(Errc::BrokenPath, "step " + std::to_string(i) + " (" + std::to_string(objects[i]) +
                                        " -> " + std::to_string(objects[i + 1]) + " via ridge " +
                                        std::to_string(ridges[i]) + ") is not a flip");
    acc = compose(acc, g.step_map(*step));
  }
  return TransportPath{objects, ridges, std::move(acc)};
}

TransportPath transport(const Groupoid& g, const std::vector<std::size_t>& alternating) {
  if (alternating.size() % 2 == 0)
    throw Error(Errc::BrokenPath, "alternating path list must have odd length");
  std::vector<std::size_t> objects, ridges;
  for (std::size_t i = 0; i < alternating.size(); ++i)
    (i % 2 == 0 ? objects : ridges).push_back(alternating[i]);
  return transport(g, objects, ridges);
}

TransportPath concat(const TransportPath& first, const TransportPath& second) {
  if (first.target() != second.source())
    throw Error(Errc::BrokenPath, "paths are not composable");
  TransportPath out = first;
  out.objects.insert(out.objects.end(), second.objects.begin() + 1, second.objects.end());
  out.ridges.insert(out.ridges.end(), second.ridges.begin(), second.ridges.end());
  out.map = compose(first.map, second.map);
  return out;
}

TransportPath reversed(const TransportPath& path) {
  TransportPath out{{path.objects.rbegin(), path.objects.rend()},
                    {path.ridges.rbegin(), path.ridges.rend()},
                    path.map.inverse()};
  return out;
}

Pattern Pattern::identity(const Groupoid& g, std::size_t object) {
  return Pattern{object, g.labels(object)};
}

Pattern transport_pattern(const Groupoid& g, const Pattern& p, const TransportPath& t) {
  if (p.object != t.source())
    throw Error(Errc::BaseMismatch, "pattern lives on object " + std::to_string(p.object) +
                                        ", path starts at " + std::to_string(t.source()));
  const auto& from = g.labels(t.source());
  const auto& to = g.labels(t.target());
  Pattern out{t.target(), {}};
  for (Vertex v : p.labelling) {
    auto it = std::find(from.begin(), from.end(), v);
    if (it == from.end()) throw Error(Errc::BaseMismatch, "pattern vertex not on its object");
    out.labelling.push_back(to[t.map[static_cast<std::size_t>(it - from.begin())]]);
  }
  return out;
}

}  // namespace cgroupoid
