#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotmoves {

// Darts are dense integers. Vertex v owns darts 4v..4v+3, listed in
// counterclockwise rotation order, so the rotation system is implicit in the
// numbering. Opposite slots (4v, 4v+2) and (4v+1, 4v+3) carry the two strands
// passing through the crossing.
using Dart = int;

constexpr Dart kNoDart = -1;

inline Dart rot1(Dart d) { return (d & ~3) | ((d + 1) & 3); }
inline Dart rot3(Dart d) { return (d & ~3) | ((d + 3) & 3); }
inline Dart opposite(Dart d) { return d ^ 2; }
inline int vertex_of(Dart d) { return d >> 2; }
inline int slot_of(Dart d) { return d & 3; }

struct Face {
  int id = -1;
  std::vector<Dart> boundary;  // face-permutation orbit, starts at min dart
  int degree() const { return static_cast<int>(boundary.size()); }
};

// A generic closed curve on the sphere as a 4-valent combinatorial map.
// The 0-crossing circle is the special case with no darts at all; its two
// faces get the synthetic ids 0 (left of the curve) and 1 (right).
class CurveMap {
 public:
  CurveMap() = default;  // the embedded circle
  CurveMap(std::vector<Dart> twins, Dart basepoint);

  int crossings() const { return static_cast<int>(twin_.size()) / 4; }
  int dart_count() const { return static_cast<int>(twin_.size()); }
  Dart twin(Dart d) const { return twin_[d]; }
  Dart strand_next(Dart d) const { return opposite(twin_[d]); }
  Dart face_next(Dart d) const { return rot3(twin_[d]); }

  Dart basepoint() const { return basepoint_; }
  bool is_forward(Dart d) const { return forward_[d]; }

  // Outer-face mark: a dart whose left face holds the point at infinity.
  // For the circle the anchor is the synthetic face id 0 or 1 instead.
  std::optional<int> outer_anchor() const { return outer_; }
  void clear_outer() { outer_.reset(); }
  void set_outer_anchor(int anchor);

  // Forward darts from the basepoint, in traversal order (2n entries).
  const std::vector<Dart>& traversal() const { return traversal_; }

  std::vector<Face> faces() const;
  int face_id_of(Dart d) const;  // index into faces()

  // Orientation-respecting smoothing of every crossing; each circle is the
  // set of forward darts it traverses, in order. The plain circle gives one
  // empty entry.
  std::vector<std::vector<Dart>> smooth_all() const;

  int whitney_index(int outer_face_id) const;

  // Same map with the outer mark moved to the given face.
  CurveMap remark_outer_face(int face_id) const;

  // Test helper: same curve traversed the other way round.
  CurveMap reversed() const;

  // Renumbers vertices in first-visit order and rotates each vertex's slots
  // so slot 0 is the first-visit out-dart. Two maps are equal as based
  // oriented curves iff their keys match. `dart_map` (old->new), if given,
  // receives the renumbering.
  std::vector<int> canonical_key(std::vector<Dart>* dart_map = nullptr) const;

  void validate() const;  // throws std::logic_error on structural breakage

 private:
  std::vector<Dart> twin_;
  Dart basepoint_ = kNoDart;
  std::optional<int> outer_;
  std::vector<bool> forward_;
  std::vector<Dart> traversal_;

  void index_traversal();
};

bool same_curve(const CurveMap& a, const CurveMap& b);

}  // namespace knotmoves
