#pragma once

#include <string>
#include <vector>

#include "knotmoves/invariants.hpp"

namespace knotmoves {

// The spiral family: the curve r = 2 + cos(n theta/(n+1)) with n^2 double
// points, its ascending diagram D_n, and the minimal unknotting script of
// length n(n^2+5)/6.

std::vector<int> dn_braid_word(int n);  // on n+1 strands

CurveMap gamma_curve(int n);   // n >= 2; outer mark on the outermost face
KnotDiagram dn_diagram(int n);

// Script from D_n to the trivial diagram: n RI deletions of positive
// crossings, n(n-1)/2 unmatched RII deletions, n(n-1)(n-2)/6 positive RIII
// moves.
MoveScript unknotting_script(int n);

// The same deformation run the other way, applicable to the trivial diagram.
MoveScript construction_script(int n);

struct TheoremReport {
  int n = 0;
  int count_r1 = 0, count_r2 = 0, count_r3 = 0;
  long long script_length = 0;
  long long expected_length = 0;
  bool endpoint_ok = false;
  bool counts_ok = false;
  bool classes_ok = false;   // only RI+ / unmatched RII / positive RIII deletes
  bool prop31_ok = false;    // tracked D_n values match the closed forms
  bool reduction_ok = true;  // independent oracle agreement (when run)
  bool reduction_ran = false;
  MinimalityCertificate certificate;
  InvariantState dn_state;
  bool ok() const {
    return endpoint_ok && counts_ok && classes_ok && prop31_ok && reduction_ok &&
           certificate.valid;
  }
  std::string str() const;
};

struct VerifyOptions {
  int reduction_bound = 0;  // run the reduction oracle when n <= bound
  ReduceOptions reduce{};
};

TheoremReport verify_theorem(int n, const VerifyOptions& opts = {});

// Curves K_0 (figure eight), K_1 (circle), K_{i+1} (circle with i kinks).
CurveMap base_curve(int i);

}  // namespace knotmoves
