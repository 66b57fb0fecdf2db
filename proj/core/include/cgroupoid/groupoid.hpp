#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "cgroupoid/complex.hpp"
#include "cgroupoid/perm.hpp"

namespace cgroupoid {

/// Elementary morphism (flip) from `source` to `target` across shared face `ridge`.
/// `slot_map[i]` is the target slot receiving source slot i.
struct ElemMorphism {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t ridge = 0;
  Perm slot_map;

  friend bool operator==(const ElemMorphism&, const ElemMorphism&) = default;
};

/// Groupoid presented by objects with labelled slots and a multigraph of
/// elementary morphisms. Each stored morphism may be traversed backwards through
/// its inverse.
class Groupoid {
 public:
  struct Step {
    std::size_t morphism;
    bool forward;
    std::size_t to;
    std::size_t ridge;
  };

  /// Every object carries the same number of slots; labels name the slots (vertex
  /// ids for complexes, cells for puzzles). Throws Errc::DegreeMismatch or
  /// Errc::NotAdjacent on malformed input.
  Groupoid(std::vector<std::vector<Vertex>> object_labels, std::vector<ElemMorphism> morphisms);

  std::size_t object_count() const noexcept { return labels_.size(); }
  std::size_t slot_count() const noexcept { return slots_; }
  const std::vector<Vertex>& labels(std::size_t object) const { return labels_[object]; }
  const std::vector<ElemMorphism>& morphisms() const noexcept { return morphisms_; }

  /// Outgoing steps ordered by ridge id, then morphism index.
  const std::vector<Step>& steps_from(std::size_t object) const { return steps_[object]; }
  const Perm& step_map(const Step& step) const;
  std::optional<Step> find_step(std::size_t from, std::size_t to, std::size_t ridge) const;

  /// The flip from -> to across `ridge`, in that direction. Throws Errc::NotAdjacent.
  ElemMorphism flip(std::size_t from, std::size_t to, std::size_t ridge) const;
  /// Slot map of a morphism rewritten as label -> label.
  std::map<Vertex, Vertex> label_bijection(const ElemMorphism& m) const;

  /// Component id per object; ids are assigned in order of first object.
  std::vector<std::size_t> components() const;
  bool is_connected() const;

 private:
  std::size_t slots_ = 0;
  std::vector<std::vector<Vertex>> labels_;
  std::vector<ElemMorphism> morphisms_;
  std::vector<Perm> inverses_;
  std::vector<std::vector<Step>> steps_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Step> step_index_;
};

/// Every poset isomorphism between two adjacent facets fixing the shared ridge
/// pointwise. For simplices and cubes this is a single flip. Throws
/// Errc::NotAdjacent if `ridge` is not a codimension-1 face of both.
std::vector<ElemMorphism> elementary_morphisms(const SimplicialComplex& complex, std::size_t a,
                                               std::size_t b, const VertexSet& ridge,
                                               std::size_t ridge_id = 0);
std::vector<ElemMorphism> elementary_morphisms(const CubicalComplex& complex, std::size_t a,
                                               std::size_t b, const VertexSet& ridge,
                                               std::size_t ridge_id = 0);

/// Joswig groupoid: facets as objects, flips across ridges as morphisms.
Groupoid build_groupoid(const SimplicialComplex& complex);
/// Cubical counterpart; slots are corner addresses.
Groupoid build_groupoid(const CubicalComplex& complex);

/// Three objects A, B, C (8 box corners each, labelled 0-7, 8-15, 16-23) joined by
/// side-to-side isometries A->B, B->C, C->A whose loop composite is a quarter turn
/// about the long axis.
Groupoid tribar_groupoid();

/// Object sequence with the ridge crossed at each step and the accumulated slot
/// map from the first object to the last.
struct TransportPath {
  std::vector<std::size_t> objects;
  std::vector<std::size_t> ridges;
  Perm map;

  std::size_t source() const { return objects.front(); }
  std::size_t target() const { return objects.back(); }
  std::size_t length() const { return ridges.size(); }
  /// Alternating object/ridge list: [o0, r0, o1, r1, ..., om].
  std::vector<std::size_t> serialize() const;
};

/// Composes the flips along a path (left-to-right). Throws Errc::BrokenPath when a
/// consecutive pair is not adjacent through the listed ridge.
TransportPath transport(const Groupoid& g, const std::vector<std::size_t>& objects,
                        const std::vector<std::size_t>& ridges);
/// Parses the alternating serialization.
TransportPath transport(const Groupoid& g, const std::vector<std::size_t>& alternating);

TransportPath concat(const TransportPath& first, const TransportPath& second);
TransportPath reversed(const TransportPath& path);

/// Symmetry-breaking pattern: reference slot r is drawn on vertex labelling[r] of
/// `object`.
struct Pattern {
  std::size_t object = 0;
  std::vector<Vertex> labelling;

  static Pattern identity(const Groupoid& g, std::size_t object);
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Throws Errc::BaseMismatch unless the path starts at the pattern's object.
Pattern transport_pattern(const Groupoid& g, const Pattern& p, const TransportPath& t);

}  // namespace cgroupoid
