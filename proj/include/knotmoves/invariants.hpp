#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotmoves/moves.hpp"

namespace knotmoves {

// All half-integer invariants are kept doubled so the arithmetic stays
// integral: a2 = 2(J+/2+St), b2 = 2(J-/2+St).
struct InvariantState {
  long long a2 = 0;
  long long b2 = 0;
  long long w = 0;
  long long n = 0;

  long long bm2() const { return b2 - w; }  // 2(J-/2+St-w/2)
  long long bp2() const { return b2 + w; }  // 2(J-/2+St+w/2)
  bool operator==(const InvariantState&) const = default;
};

struct MoveDelta {
  int da2 = 0;
  int db2 = 0;
  int dw = 0;
};

// Jump of (a2, b2, w) under a classified move. Stated for the create
// direction in the tables; deletes negate.
MoveDelta move_delta(const ReidemeisterMove& m);

InvariantState track(InvariantState start, const std::vector<ReidemeisterMove>& trace);

struct ReduceOptions {
  long long state_budget = 1000000;  // plateau-search cap
  bool alternate_tiebreak = false;   // second, independent search order
};

// (a2, b2) of a spherical curve by reducing it to the plain circle with
// monogon/bigon deletions and triangle moves, inverting the tracked jumps.
// Throws ReductionFailed when the search budget runs out.
struct ReduceResult {
  long long a2 = 0;
  long long b2 = 0;
  int moves_used = 0;
};
ReduceResult reduce_and_compute(const CurveMap& map, const ReduceOptions& opts = {});

InvariantState invariants_of_diagram(const KnotDiagram& d, const ReduceOptions& opts = {});

// cowrithe x = 4 c2 - (J+/2 + St); doubled value returned.
long long cowrithe2(const KnotDiagram& d, long long c2, const ReduceOptions& opts = {});

// The pair (x + n/2 - w/2, x + n/2 + w/2), doubled.
struct CorollaryPair {
  long long lo2 = 0;  // 2(x + n/2 - w/2)
  long long hi2 = 0;  // 2(x + n/2 + w/2)
};
CorollaryPair corollary_quantities(const KnotDiagram& d, long long c2,
                                   const ReduceOptions& opts = {});

struct BoundReport {
  InvariantState from, to;
  long long gap_a = 0;   // |delta (J+/2+St)|
  long long gap_bm = 0;  // |delta (J-/2+St-w/2)|
  long long gap_bp = 0;  // |delta (J-/2+St+w/2)|
  long long lower_bound = 0;
  std::string str() const;
};

BoundReport lower_bound(const KnotDiagram& d1, const KnotDiagram& d2,
                        const ReduceOptions& opts = {});

enum class TrackedQuantity { A, BM, BP };

struct MinimalityCertificate {
  bool valid = false;
  TrackedQuantity quantity{};
  int unit = 0;                     // the common per-move jump, +1 or -1
  std::vector<int> per_move;        // jumps of the certifying quantity
  long long total = 0;
  std::vector<int> offending;      // move indices breaking each candidate
  std::string str(const std::vector<ReidemeisterMove>& trace) const;
};

MinimalityCertificate minimality_certificate(const KnotDiagram& start, const MoveScript& s);

std::string quantity_name(TrackedQuantity q);
std::string half_str(long long doubled);  // exact halves, never decimals

}  // namespace knotmoves
