#pragma once

#include <string>
#include <vector>

#include "knotmoves/curve_map.hpp"

namespace knotmoves {

// Double-occurrence word, optionally annotated with over/under.
struct GaussCode {
  enum Annot { kNone = 0, kOver = 1, kUnder = 2 };
  struct Sym {
    int label = 0;
    Annot annot = kNone;
    bool operator==(const Sym&) const = default;
  };
  std::vector<Sym> syms;

  bool operator==(const GaussCode&) const = default;
  bool annotated() const;
  void check_double_occurrence() const;  // throws ParseError
  static GaussCode parse(const std::string& text);
  std::string str() const;
};

// Realizes a double-occurrence word as a spherical curve by exhaustive
// backtracking over the per-crossing rotation choices, first hit in canonical
// order. Throws NotRealizable when no spherical embedding exists.
CurveMap build_from_gauss_code(const GaussCode& code);

// All spherical embeddings of the code, in the same canonical order.
std::vector<CurveMap> all_embeddings(const GaussCode& code);

// Labels in first-visit order from the basepoint.
GaussCode canonical_code(const CurveMap& map);

}  // namespace knotmoves
