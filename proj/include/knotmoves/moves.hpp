#pragma once

#include <string>
#include <vector>

#include "knotmoves/diagram.hpp"

namespace knotmoves {

enum class MoveKind { RI, RII, RIII };
enum class MoveDir { Create, Delete, None };
enum class RIIClass { Matched, Unmatched };

struct ReidemeisterMove {
  MoveKind kind{};
  MoveDir dir = MoveDir::None;

  // site
  Dart face_anchor = kNoDart;  // delete-RI, delete-RII, RIII (orbit start)
  Dart create_at = kNoDart;    // create-RI anchor (kNoDart: the circle)
  bool left_side = false;      // create-RI side
  Dart create_a = kNoDart;     // create-RII: pushed (over) edge
  Dart create_b = kNoDart;     // create-RII: crossed (under) edge

  // classification
  int r1_sign = 0;          // sign of the created/deleted crossing
  RIIClass r2_class{};      // matched <=> parallel strands
  int r3_sign = 0;          // sign of the created trigon

  std::string str() const;  // one script line
};

using MoveScript = std::vector<ReidemeisterMove>;

// matched iff exactly one of the two bigon boundary darts runs with the
// curve orientation (parallel strands).
RIIClass classify_rii(const KnotDiagram& d, Dart bigon_anchor);
RIIClass classify_rii_create(const KnotDiagram& d, Dart a, Dart b);

// (-1)^q for a trigon face: order the sides by first encounter from the
// basepoint, orient the boundary to realize that cyclic order, count sides
// where the curve agrees. Requires the basepoint off the trigon's sides.
int triangle_sign(const CurveMap& m, Dart trigon_anchor);

// Same sign computed from any admissible basepoint (the value does not
// depend on the choice).
int triangle_sign_anybase(const CurveMap& m, Dart trigon_anchor);

// Sign of the trigon the move would create (positive/negative RIII).
int classify_riii(const KnotDiagram& d, Dart trigon_anchor);

struct AppliedMove {
  KnotDiagram result;
  ReidemeisterMove classified;  // input move with classification filled in
  ReidemeisterMove inverse;     // undoes the move, anchored in `result`
};

AppliedMove apply_move(const KnotDiagram& d, const ReidemeisterMove& m);

// Every applicable delete-RI, delete-RII and RIII (face scan with over/under
// admissibility), plus create-RI anchored on each (edge, side, sign) and
// create-RII on each ordered pair of same-face darts. Fully classified.
std::vector<ReidemeisterMove> enumerate_moves(const KnotDiagram& d);
std::vector<ReidemeisterMove> enumerate_delete_moves(const KnotDiagram& d);

struct ScriptRun {
  KnotDiagram result;
  std::vector<ReidemeisterMove> trace;  // classified moves, in order
};

// Fails at the first inapplicable move, reporting its index.
ScriptRun run_script(const KnotDiagram& start, const MoveScript& script);

struct ScriptError : InapplicableMove {
  int index;
  ScriptError(int index, const std::string& what)
      : InapplicableMove("move " + std::to_string(index) + ": " + what), index(index) {}
};

std::string script_to_text(const MoveScript& s);
MoveScript script_from_text(const std::string& text);

}  // namespace knotmoves
