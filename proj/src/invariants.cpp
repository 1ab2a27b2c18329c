#include "knotmoves/invariants.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "knotmoves/surgery.hpp"

namespace knotmoves {

MoveDelta move_delta(const ReidemeisterMove& m) {
  MoveDelta d;
  switch (m.kind) {
    case MoveKind::RI:
      if (m.r1_sign != 1 && m.r1_sign != -1) throw InapplicableMove("unclassified RI move");
      d = {0, -1, m.r1_sign};
      break;
    case MoveKind::RII:
      d = m.r2_class == RIIClass::Matched ? MoveDelta{2, 0, 0} : MoveDelta{0, -2, 0};
      break;
    case MoveKind::RIII:
      if (m.r3_sign != 1 && m.r3_sign != -1) throw InapplicableMove("unclassified RIII move");
      return {2 * m.r3_sign, 2 * m.r3_sign, 0};
  }
  if (m.dir == MoveDir::Delete) return {-d.da2, -d.db2, -d.dw};
  if (m.dir == MoveDir::Create) return d;
  throw InapplicableMove("RI/RII move without a direction");
}

namespace {

int crossing_change(const ReidemeisterMove& m) {
  if (m.kind == MoveKind::RIII) return 0;
  int step = m.kind == MoveKind::RI ? 1 : 2;
  return m.dir == MoveDir::Create ? step : -step;
}

}  // namespace

InvariantState track(InvariantState s, const std::vector<ReidemeisterMove>& trace) {
  for (const ReidemeisterMove& m : trace) {
    MoveDelta d = move_delta(m);
    s.a2 += d.da2;
    s.b2 += d.db2;
    s.w += d.dw;
    s.n += crossing_change(m);
    if (s.a2 - s.b2 != s.n)
      throw std::logic_error("invariant drift: a2 - b2 != n after a move");
  }
  return s;
}

namespace {

std::string key_of(const CurveMap& m) {
  std::vector<int> key = m.canonical_key();
  return std::string(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(int));
}

struct CurveMove {
  enum Kind { Monogon, Bigon, Flip } kind;
  Dart anchor;
};

// deletable faces and trigon flips, in a deterministic order
std::vector<CurveMove> deletions_of(const CurveMap& m, bool alternate) {
  std::vector<CurveMove> out;
  for (const Face& f : m.faces()) {
    if (f.degree() == 1) out.push_back({CurveMove::Monogon, f.boundary[0]});
    if (f.degree() == 2 && vertex_of(f.boundary[0]) != vertex_of(f.boundary[1]))
      out.push_back({CurveMove::Bigon, f.boundary[0]});
  }
  std::stable_sort(out.begin(), out.end(), [](const CurveMove& a, const CurveMove& b) {
    return a.kind < b.kind;  // monogons first
  });
  if (alternate) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<CurveMove> flips_of(const CurveMap& m, bool alternate) {
  std::vector<CurveMove> out;
  for (const Face& f : m.faces()) {
    if (f.degree() != 3) continue;
    int a = vertex_of(f.boundary[0]), b = vertex_of(f.boundary[1]), c = vertex_of(f.boundary[2]);
    if (a == b || b == c || a == c) continue;
    for (Dart anchor : f.boundary) out.push_back({CurveMove::Flip, anchor});
  }
  if (alternate) std::reverse(out.begin(), out.end());
  return out;
}

struct Reducer {
  ReduceOptions opts;
  long long expanded = 0;
  long long a2 = 0, b2 = 0;  // accumulated jumps of the performed moves
  int moves = 0;

  void bump() {
    if (++expanded > opts.state_budget)
      throw ReductionFailed("reduction search budget exhausted");
  }

  void apply_deletion(CurveMap& cur, const CurveMove& mv) {
    if (mv.kind == CurveMove::Monogon) {
      // deleting a monogon is the reverse cusp: J-/2+St gains 1/2
      b2 += 1;
      cur = kink_delete(cur, mv.anchor).map;
    } else {
      Dart orbit[2];
      check_bigon(cur, mv.anchor, orbit);
      bool parallel = cur.is_forward(orbit[0]) != cur.is_forward(orbit[1]);
      if (parallel)
        a2 -= 2;  // direct self-tangency, delete direction
      else
        b2 += 2;  // inverse self-tangency, delete direction
      cur = bigon_delete(cur, mv.anchor).map;
    }
    ++moves;
  }

  void apply_flip(CurveMap& cur, Dart anchor) {
    Dart created = kNoDart;
    Surgery s = trigon_flip(cur, anchor, &created);
    int sign = triangle_sign_anybase(s.map, created);
    a2 += 2 * sign;
    b2 += 2 * sign;
    cur = std::move(s.map);
    ++moves;
  }

  // shortest flip sequence to a state with a deletable face
  std::vector<Dart> find_plateau_path(const CurveMap& start) {
    struct Node {
      CurveMap map;
      int parent;
      Dart via;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::string> seen;
    nodes.push_back({start, -1, kNoDart});
    seen.insert(key_of(start));
    for (size_t qi = 0; qi < nodes.size(); ++qi) {
      bump();
      CurveMap cur = nodes[qi].map;  // copy: nodes may reallocate
      for (const CurveMove& mv : flips_of(cur, opts.alternate_tiebreak)) {
        Surgery s = trigon_flip(cur, mv.anchor);
        std::string key = key_of(s.map);
        if (!seen.insert(key).second) continue;
        bool goal = !deletions_of(s.map, false).empty();
        nodes.push_back({std::move(s.map), static_cast<int>(qi), mv.anchor});
        if (goal) {
          std::vector<Dart> path;
          for (int at = static_cast<int>(nodes.size()) - 1; nodes[at].parent >= 0;
               at = nodes[at].parent)
            path.push_back(nodes[at].via);
          std::reverse(path.begin(), path.end());
          return path;
        }
      }
    }
    throw ReductionFailed("no deletable face reachable by triangle moves");
  }

  ReduceResult run(CurveMap cur) {
    while (cur.crossings() > 0) {
      bump();
      auto dels = deletions_of(cur, opts.alternate_tiebreak);
      if (!dels.empty()) {
        apply_deletion(cur, dels.front());
        continue;
      }
      for (Dart anchor : find_plateau_path(cur)) apply_flip(cur, anchor);
    }
    // performed moves lead from the input to the plain circle at (0, 0)
    return ReduceResult{-a2, -b2, moves};
  }
};

}  // namespace

ReduceResult reduce_and_compute(const CurveMap& map, const ReduceOptions& opts) {
  Reducer r;
  r.opts = opts;
  return r.run(map);
}

InvariantState invariants_of_diagram(const KnotDiagram& d, const ReduceOptions& opts) {
  ReduceResult r = reduce_and_compute(d.map(), opts);
  InvariantState s;
  s.a2 = r.a2;
  s.b2 = r.b2;
  s.w = d.writhe();
  s.n = d.crossings();
  if (s.a2 - s.b2 != s.n) throw std::logic_error("reduction broke a2 - b2 = n");
  return s;
}

long long cowrithe2(const KnotDiagram& d, long long c2, const ReduceOptions& opts) {
  InvariantState s = invariants_of_diagram(d, opts);
  return 8 * c2 - s.a2;  // doubled x = 2(4 c2) - 2(J+/2+St)
}

CorollaryPair corollary_quantities(const KnotDiagram& d, long long c2,
                                   const ReduceOptions& opts) {
  InvariantState s = invariants_of_diagram(d, opts);
  long long x2 = 8 * c2 - s.a2;
  return CorollaryPair{x2 + s.n - s.w, x2 + s.n + s.w};
}

BoundReport lower_bound(const KnotDiagram& d1, const KnotDiagram& d2,
                        const ReduceOptions& opts) {
  BoundReport r;
  r.from = invariants_of_diagram(d1, opts);
  r.to = invariants_of_diagram(d2, opts);
  r.gap_a = std::abs(r.from.a2 - r.to.a2) / 2;
  r.gap_bm = std::abs(r.from.bm2() - r.to.bm2()) / 2;
  r.gap_bp = std::abs(r.from.bp2() - r.to.bp2()) / 2;
  r.lower_bound = std::max({r.gap_a, r.gap_bm, r.gap_bp});
  return r;
}

std::string quantity_name(TrackedQuantity q) {
  switch (q) {
    case TrackedQuantity::A: return "J+/2+St";
    case TrackedQuantity::BM: return "J-/2+St-w/2";
    case TrackedQuantity::BP: return "J-/2+St+w/2";
  }
  return "?";
}

std::string half_str(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string BoundReport::str() const {
  std::ostringstream o;
  auto line = [&](TrackedQuantity q, long long s, long long e, long long gap) {
    o << "quantity=" << quantity_name(q) << " start=" << half_str(s) << " end=" << half_str(e)
      << " gap=" << gap << '\n';
  };
  line(TrackedQuantity::A, from.a2, to.a2, gap_a);
  line(TrackedQuantity::BM, from.bm2(), to.bm2(), gap_bm);
  line(TrackedQuantity::BP, from.bp2(), to.bp2(), gap_bp);
  o << "lower_bound=" << lower_bound << '\n';
  return o.str();
}

namespace {

int quantity_jump(TrackedQuantity q, const MoveDelta& d) {
  switch (q) {
    case TrackedQuantity::A: return d.da2 / 2;
    case TrackedQuantity::BM: return (d.db2 - d.dw) / 2;
    case TrackedQuantity::BP: return (d.db2 + d.dw) / 2;
  }
  return 0;
}

std::string kind_token(const ReidemeisterMove& m) {
  switch (m.kind) {
    case MoveKind::RI:
      return std::string(m.r1_sign >= 0 ? "RI+" : "RI-") +
             (m.dir == MoveDir::Create ? "cre" : "del");
    case MoveKind::RII:
      return std::string(m.r2_class == RIIClass::Matched ? "RIIm-" : "RIIu-") +
             (m.dir == MoveDir::Create ? "cre" : "del");
    case MoveKind::RIII:
      return m.r3_sign >= 0 ? "RIII+" : "RIII-";
  }
  return "?";
}

}  // namespace

MinimalityCertificate minimality_certificate(const KnotDiagram& start, const MoveScript& s) {
  ScriptRun run = run_script(start, s);
  MinimalityCertificate best;
  best.valid = false;
  size_t fewest = run.trace.size() + 1;
  for (TrackedQuantity q : {TrackedQuantity::BM, TrackedQuantity::BP, TrackedQuantity::A}) {
    MinimalityCertificate c;
    c.quantity = q;
    int unit = 0;
    for (const ReidemeisterMove& m : run.trace) {
      int jump = quantity_jump(q, move_delta(m));
      c.per_move.push_back(jump);
      c.total += jump;
      if (unit == 0 && (jump == 1 || jump == -1)) unit = jump;
    }
    if (unit == 0) unit = 1;
    c.unit = unit;
    for (int i = 0; i < static_cast<int>(c.per_move.size()); ++i)
      if (c.per_move[i] != unit) c.offending.push_back(i);
    c.valid = c.offending.empty() && !run.trace.empty();
    if (c.valid) return c;
    if (c.offending.size() < fewest) {
      fewest = c.offending.size();
      best = c;
    }
  }
  return best;
}

std::string MinimalityCertificate::str(const std::vector<ReidemeisterMove>& trace) const {
  std::ostringstream o;
  for (size_t i = 0; i < per_move.size() && i < trace.size(); ++i) {
    int jump = per_move[i];
    o << i << ' ' << kind_token(trace[i]) << ' ' << (jump >= 0 ? "+" : "")
      << jump << '\n';
  }
  o << "certified=" << (valid ? "true" : "false") << '\n';
  return o.str();
}

}  // namespace knotmoves
