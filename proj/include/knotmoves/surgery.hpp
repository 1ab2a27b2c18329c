#pragma once

#include <vector>

#include "knotmoves/curve_map.hpp"

namespace knotmoves {

// Twin-rewiring primitives shared by the diagram move engine and the
// curve-level reduction search. Creations append one or two vertices and keep
// all existing dart ids; deletions compact the vertex table.

struct Surgery {
  CurveMap map;
  // old vertex id -> new vertex id, -1 for removed vertices (deletions only)
  std::vector<int> vertex_map;
  // vertices appended by a creation, in old-map terms none existed
  std::vector<int> new_vertices;
};

// Inserts a kink in the middle of the anchor dart's edge; the monogon lands
// in the face left (or right) of the anchor. Anchor kNoDart kinks the plain
// circle.
Surgery kink_create(const CurveMap& m, Dart anchor, bool left_side);

// Deletes the crossing of a monogon face (anchor names the face).
Surgery kink_delete(const CurveMap& m, Dart monogon_anchor);

// Checks the anchor names a bigon with two distinct crossings.
void check_bigon(const CurveMap& m, Dart bigon_anchor, Dart orbit[2]);

// Deletes both crossings of a bigon face.
Surgery bigon_delete(const CurveMap& m, Dart bigon_anchor);

// Pushes a finger of a's edge across the common face into b's edge, creating
// two crossings. Requires face(a) == face(b) and distinct edges. The first
// new vertex is the one a's edge meets first.
Surgery finger_create(const CurveMap& m, Dart a, Dart b);

// Boundary darts of the trigon the anchor names, starting at the anchor.
// Throws InapplicableMove if the face is not a trigon with three distinct
// crossings.
void check_trigon(const CurveMap& m, Dart anchor, Dart orbit[3]);

// Triangle move: slides the side carrying the anchor dart across the
// opposite crossing. No vertices are added or removed; the created trigon is
// anchored at `created_anchor` (the image of the anchor), and replaying the
// move there undoes it exactly.
Surgery trigon_flip(const CurveMap& m, Dart anchor, Dart* created_anchor = nullptr);

}  // namespace knotmoves
