#pragma once

#include <string>
#include <vector>

#include "knotmoves/curve_map.hpp"
#include "knotmoves/gauss_code.hpp"

namespace knotmoves {

// A knot diagram: spherical curve plus over/under data. Crossings carry
// stable labels; moves that create crossings allocate fresh ones.
class KnotDiagram {
 public:
  KnotDiagram() = default;  // the trivial diagram
  KnotDiagram(CurveMap map, std::vector<int> over_parity, std::vector<int> labels);

  const CurveMap& map() const { return map_; }
  int crossings() const { return map_.crossings(); }

  // Which strand pair ({4v,4v+2} parity 0, {4v+1,4v+3} parity 1) is over.
  int over_parity(int vertex) const { return over_parity_[vertex]; }
  bool is_over_dart(Dart d) const { return (slot_of(d) & 1) == over_parity_[vertex_of(d)]; }
  int label(int vertex) const { return labels_[vertex]; }
  int vertex_by_label(int label) const;  // -1 if absent
  int next_label() const { return next_label_; }

  int crossing_sign(int vertex) const;  // +1 / -1
  int writhe() const;
  bool is_trivial() const { return map_.crossings() == 0; }

  GaussCode code() const;  // canonical code with over/under annotations

  std::vector<int> canonical_key() const;

  // internal bookkeeping for the move engine
  friend class MoveEngineAccess;

 private:
  CurveMap map_;
  std::vector<int> over_parity_;
  std::vector<int> labels_;
  int next_label_ = 1;
};

// Over-strand = the passage visited second from the basepoint; always a
// diagram of the trivial knot.
KnotDiagram ascending_diagram(const CurveMap& map);

// Standard closure of a braid word (letters +-i, i in 1..strands-1) into a
// one-component diagram. Positive letters put the strand moving toward the
// higher position on top.
KnotDiagram from_braid(const std::vector<int>& word, int strands);

bool is_trivial_diagram(const KnotDiagram& d);

bool same_diagram(const KnotDiagram& a, const KnotDiagram& b);

}  // namespace knotmoves
