#pragma once

#include <iosfwd>
#include <string>

#include "knotmoves/diagram.hpp"

namespace knotmoves {

// Line-oriented diagram file:
//   curve <n>
//   dart <id> twin <id> vnext <id> snext <id>
//   basepoint <dart-id>            (-1 for the circle)
//   outer <dart-id>                (optional; face id 0|1 for the circle)
//   over <crossing-label> <dart-id>  (diagrams only, one per crossing)
// '#' starts a comment. Foreign dart numberings are accepted and normalized.

std::string write_curve(const CurveMap& m);
std::string write_diagram(const KnotDiagram& d);

CurveMap read_curve(const std::string& text);
KnotDiagram read_diagram(const std::string& text);

// true if the text carries over/under data (or has no crossings)
bool looks_like_diagram(const std::string& text);

}  // namespace knotmoves
