#include "knotmoves/moves.hpp"

#include <algorithm>
#include <sstream>

#include "knotmoves/surgery.hpp"

namespace knotmoves {

namespace {

CurveMap rebased(const CurveMap& m, Dart basepoint) {
  std::vector<Dart> twins(m.dart_count());
  for (Dart d = 0; d < m.dart_count(); ++d) twins[d] = m.twin(d);
  CurveMap out(std::move(twins), basepoint);
  if (auto o = m.outer_anchor()) out.set_outer_anchor(*o);
  return out;
}

bool on_side_edge(const CurveMap& m, Dart d, const Dart g[3]) {
  for (int k = 0; k < 3; ++k)
    if (d == g[k] || d == m.twin(g[k])) return true;
  return false;
}

int triangle_sign_at(const CurveMap& m, const Dart g[3]) {
  // ranks of the side edges by first encounter along the curve
  int rank[3] = {-1, -1, -1};
  const auto& order = m.traversal();
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    Dart e = order[i];
    for (int k = 0; k < 3; ++k)
      if ((e == g[k] || e == m.twin(g[k])) && rank[k] < 0) rank[k] = i;
  }
  int idx[3] = {0, 1, 2};
  std::sort(idx, idx + 3, [&](int x, int y) { return rank[x] < rank[y]; });
  // orient the boundary so the sides appear in encounter order
  bool along_orbit = (idx[0] + 1) % 3 == idx[1];
  int q = 0;
  for (int k = 0; k < 3; ++k) {
    bool agree = m.is_forward(g[k]);
    if (!along_orbit) agree = !agree;
    q += agree ? 1 : 0;
  }
  return q % 2 == 0 ? 1 : -1;
}

struct DiagramTables {
  std::vector<int> over, labels;
};

DiagramTables remap_tables(const KnotDiagram& d, const Surgery& s) {
  DiagramTables t;
  t.over.resize(s.map.crossings());
  t.labels.resize(s.map.crossings());
  for (int v = 0; v < d.crossings(); ++v) {
    int nv = s.vertex_map[v];
    if (nv < 0) continue;
    t.over[nv] = d.over_parity(v);
    t.labels[nv] = d.label(v);
  }
  return t;
}

int parity_for_sign(const CurveMap& m, int vertex, int want_sign) {
  // crossing sign with over-parity 0, flipped if the other parity is needed
  Dart over = 4 * vertex;
  if (!m.is_forward(over)) over = opposite(over);
  Dart under = 4 * vertex + 1;
  if (!m.is_forward(under)) under = opposite(under);
  int sign0 = rot3(over) == under ? 1 : -1;
  return sign0 == want_sign ? 0 : 1;
}

Dart created_monogon_anchor(bool left_side, int new_vertex) {
  // left layout: loop at slots 2,3 with the monogon at slot 2; right layout:
  // loop at 1,2 with the monogon at slot 1
  return 4 * new_vertex + (left_side ? 2 : 1);
}

}  // namespace

RIIClass classify_rii(const KnotDiagram& d, Dart bigon_anchor) {
  Dart orbit[2];
  check_bigon(d.map(), bigon_anchor, orbit);
  bool f0 = d.map().is_forward(orbit[0]);
  bool f1 = d.map().is_forward(orbit[1]);
  return f0 != f1 ? RIIClass::Matched : RIIClass::Unmatched;
}

RIIClass classify_rii_create(const KnotDiagram& d, Dart a, Dart b) {
  if (a < 0 || b < 0 || a >= d.map().dart_count() || b >= d.map().dart_count())
    throw InapplicableMove("bad RII anchors");
  bool fa = d.map().is_forward(a);
  bool fb = d.map().is_forward(b);
  return fa != fb ? RIIClass::Matched : RIIClass::Unmatched;
}

int triangle_sign(const CurveMap& m, Dart trigon_anchor) {
  Dart g[3];
  check_trigon(m, trigon_anchor, g);
  if (on_side_edge(m, m.basepoint(), g))
    throw InapplicableMove("basepoint lies on the trigon boundary");
  return triangle_sign_at(m, g);
}

int triangle_sign_anybase(const CurveMap& m, Dart trigon_anchor) {
  Dart g[3];
  check_trigon(m, trigon_anchor, g);
  if (!on_side_edge(m, m.basepoint(), g)) return triangle_sign_at(m, g);
  for (Dart d : m.traversal()) {
    if (on_side_edge(m, d, g)) continue;
    return triangle_sign_at(rebased(m, d), g);
  }
  throw InapplicableMove("no basepoint available off the trigon");
}

namespace {

void check_riii_admissible(const KnotDiagram& d, const Dart g[3]) {
  // one strand must run over both others; cyclic over-patterns are clasps
  bool over[3];
  for (int k = 0; k < 3; ++k) {
    int v = vertex_of(g[k]);
    over[k] = d.over_parity(v) == (slot_of(g[k]) & 1);
  }
  if (over[0] == over[1] && over[1] == over[2])
    throw InapplicableMove("trigon over-pattern admits no RIII move");
}

}  // namespace

int classify_riii(const KnotDiagram& d, Dart trigon_anchor) {
  Dart g[3];
  check_trigon(d.map(), trigon_anchor, g);
  check_riii_admissible(d, g);
  Dart created = kNoDart;
  Surgery s = trigon_flip(d.map(), trigon_anchor, &created);
  return triangle_sign_anybase(s.map, created);
}

AppliedMove apply_move(const KnotDiagram& d, const ReidemeisterMove& m) {
  AppliedMove out;
  out.classified = m;
  const CurveMap& map = d.map();
  switch (m.kind) {
    case MoveKind::RI: {
      if (m.dir == MoveDir::Create) {
        if (m.r1_sign != 1 && m.r1_sign != -1)
          throw InapplicableMove("create-RI needs a sign");
        Surgery s = kink_create(map, m.create_at, m.left_side);
        DiagramTables t = remap_tables(d, s);
        int v = s.new_vertices[0];
        t.over[v] = parity_for_sign(s.map, v, m.r1_sign);
        t.labels[v] = d.next_label();
        out.result = KnotDiagram(s.map, t.over, t.labels);
        out.inverse.kind = MoveKind::RI;
        out.inverse.dir = MoveDir::Delete;
        out.inverse.face_anchor = created_monogon_anchor(m.left_side, v);
        out.inverse.r1_sign = m.r1_sign;
        return out;
      }
      if (m.dir != MoveDir::Delete) throw InapplicableMove("RI move needs a direction");
      Dart x = m.face_anchor;
      if (x < 0 || x >= map.dart_count() || map.face_next(x) != x)
        throw InapplicableMove("RI delete site is not a monogon");
      int v = vertex_of(x);
      out.classified.r1_sign = d.crossing_sign(v);
      // the through strand: partners of the two loop darts
      Dart thru_a = opposite(x), thru_b = opposite(rot1(x));
      bool right_side = map.is_forward(thru_a);
      Dart c_in = right_side ? thru_b : thru_a;
      Surgery s = kink_delete(map, x);
      DiagramTables t = remap_tables(d, s);
      out.result = KnotDiagram(s.map, t.over, t.labels);
      out.inverse.kind = MoveKind::RI;
      out.inverse.dir = MoveDir::Create;
      out.inverse.r1_sign = out.classified.r1_sign;
      out.inverse.left_side = !right_side;
      if (s.map.crossings() == 0) {
        out.inverse.create_at = kNoDart;
      } else {
        Dart far_end = map.twin(c_in);
        out.inverse.create_at = 4 * s.vertex_map[vertex_of(far_end)] + slot_of(far_end);
      }
      return out;
    }
    case MoveKind::RII: {
      if (m.dir == MoveDir::Create) {
        out.classified.r2_class = classify_rii_create(d, m.create_a, m.create_b);
        Surgery s = finger_create(map, m.create_a, m.create_b);
        DiagramTables t = remap_tables(d, s);
        int v1 = s.new_vertices[0], v2 = s.new_vertices[1];
        t.over[v1] = 1;  // the pushed strand sits at slots {1,3} of both crossings
        t.over[v2] = 1;
        t.labels[v1] = d.next_label();
        t.labels[v2] = d.next_label() + 1;
        out.result = KnotDiagram(s.map, t.over, t.labels);
        out.inverse.kind = MoveKind::RII;
        out.inverse.dir = MoveDir::Delete;
        out.inverse.face_anchor = 4 * v1;  // bigon orbit is {x0, y1}
        out.inverse.r2_class = out.classified.r2_class;
        return out;
      }
      if (m.dir != MoveDir::Delete) throw InapplicableMove("RII move needs a direction");
      Dart orbit[2];
      check_bigon(map, m.face_anchor, orbit);
      int u1 = vertex_of(orbit[0]), u2 = vertex_of(orbit[1]);
      bool e1_over_u1 = d.over_parity(u1) == (slot_of(orbit[0]) & 1);
      bool e1_over_u2 = d.over_parity(u2) == (slot_of(map.twin(orbit[0])) & 1);
      if (e1_over_u1 != e1_over_u2)
        throw InapplicableMove("bigon strands interleave over and under");
      out.classified.r2_class = classify_rii(d, m.face_anchor);
      Dart over_dart = e1_over_u1 ? orbit[0] : orbit[1];
      Dart under_dart = e1_over_u1 ? orbit[1] : orbit[0];
      auto strand_entry = [&](Dart side) {
        // dart pointing into the bigon along the strand's travel direction
        return map.is_forward(side) ? map.twin(opposite(side))
                                    : map.twin(opposite(map.twin(side)));
      };
      Dart over_in = strand_entry(over_dart), under_in = strand_entry(under_dart);
      Surgery s = bigon_delete(map, m.face_anchor);
      DiagramTables t = remap_tables(d, s);
      out.result = KnotDiagram(s.map, t.over, t.labels);
      out.inverse.kind = MoveKind::RII;
      out.inverse.dir = MoveDir::Create;
      out.inverse.r2_class = out.classified.r2_class;
      if (s.map.crossings() > 0 && s.vertex_map[vertex_of(over_in)] >= 0 &&
          s.vertex_map[vertex_of(under_in)] >= 0) {
        out.inverse.create_a = 4 * s.vertex_map[vertex_of(over_in)] + slot_of(over_in);
        out.inverse.create_b = 4 * s.vertex_map[vertex_of(under_in)] + slot_of(under_in);
      } else {
        out.inverse.create_a = out.inverse.create_b = kNoDart;  // not representable
      }
      return out;
    }
    case MoveKind::RIII: {
      Dart g[3];
      check_trigon(map, m.face_anchor, g);
      check_riii_admissible(d, g);
      Dart created = kNoDart;
      Surgery s = trigon_flip(map, m.face_anchor, &created);
      out.classified.r3_sign = triangle_sign_anybase(s.map, created);
      DiagramTables t = remap_tables(d, s);
      out.result = KnotDiagram(s.map, t.over, t.labels);
      out.inverse.kind = MoveKind::RIII;
      out.inverse.face_anchor = created;
      out.inverse.r3_sign = -out.classified.r3_sign;
      return out;
    }
  }
  throw InapplicableMove("unknown move kind");
}

std::vector<ReidemeisterMove> enumerate_delete_moves(const KnotDiagram& d) {
  std::vector<ReidemeisterMove> out;
  const CurveMap& m = d.map();
  for (const Face& f : m.faces()) {
    if (f.degree() == 1 && m.crossings() > 0) {
      ReidemeisterMove mv;
      mv.kind = MoveKind::RI;
      mv.dir = MoveDir::Delete;
      mv.face_anchor = f.boundary[0];
      mv.r1_sign = d.crossing_sign(vertex_of(f.boundary[0]));
      out.push_back(mv);
    } else if (f.degree() == 2) {
      Dart a = f.boundary[0];
      try {
        Dart orbit[2];
        check_bigon(m, a, orbit);
        int u1 = vertex_of(orbit[0]), u2 = vertex_of(orbit[1]);
        bool e1_over_u1 = d.over_parity(u1) == (slot_of(orbit[0]) & 1);
        bool e1_over_u2 = d.over_parity(u2) == (slot_of(m.twin(orbit[0])) & 1);
        if (e1_over_u1 != e1_over_u2) continue;
        ReidemeisterMove mv;
        mv.kind = MoveKind::RII;
        mv.dir = MoveDir::Delete;
        mv.face_anchor = a;
        mv.r2_class = classify_rii(d, a);
        out.push_back(mv);
      } catch (const InapplicableMove&) {
      }
    } else if (f.degree() == 3) {
      Dart a = f.boundary[0];
      try {
        ReidemeisterMove mv;
        mv.kind = MoveKind::RIII;
        mv.dir = MoveDir::None;
        mv.face_anchor = a;
        mv.r3_sign = classify_riii(d, a);
        out.push_back(mv);
      } catch (const InapplicableMove&) {
      }
    }
  }
  return out;
}

std::vector<ReidemeisterMove> enumerate_moves(const KnotDiagram& d) {
  std::vector<ReidemeisterMove> out = enumerate_delete_moves(d);
  const CurveMap& m = d.map();
  if (m.crossings() == 0) {
    for (int side = 0; side < 2; ++side)
      for (int sign = -1; sign <= 1; sign += 2) {
        ReidemeisterMove mv;
        mv.kind = MoveKind::RI;
        mv.dir = MoveDir::Create;
        mv.create_at = kNoDart;
        mv.left_side = side == 0;
        mv.r1_sign = sign;
        out.push_back(mv);
      }
    return out;
  }
  for (Dart e : m.traversal()) {
    for (int side = 0; side < 2; ++side)
      for (int sign = -1; sign <= 1; sign += 2) {
        ReidemeisterMove mv;
        mv.kind = MoveKind::RI;
        mv.dir = MoveDir::Create;
        mv.create_at = e;
        mv.left_side = side == 0;
        mv.r1_sign = sign;
        out.push_back(mv);
      }
  }
  for (const Face& f : m.faces()) {
    for (Dart a : f.boundary)
      for (Dart b : f.boundary) {
        if (a == b || b == m.twin(a)) continue;
        ReidemeisterMove mv;
        mv.kind = MoveKind::RII;
        mv.dir = MoveDir::Create;
        mv.create_a = a;
        mv.create_b = b;
        mv.r2_class = classify_rii_create(d, a, b);
        out.push_back(mv);
      }
  }
  return out;
}

ScriptRun run_script(const KnotDiagram& start, const MoveScript& script) {
  ScriptRun run;
  run.result = start;
  for (int i = 0; i < static_cast<int>(script.size()); ++i) {
    try {
      AppliedMove a = apply_move(run.result, script[i]);
      run.result = std::move(a.result);
      run.trace.push_back(a.classified);
    } catch (const InapplicableMove& e) {
      throw ScriptError(i, e.what());
    }
  }
  return run;
}

std::string ReidemeisterMove::str() const {
  std::ostringstream o;
  switch (kind) {
    case MoveKind::RI:
      if (dir == MoveDir::Create)
        o << (r1_sign >= 0 ? "RI+" : "RI-") << " create at " << create_at << ' '
          << (left_side ? "left" : "right");
      else
        o << "RI delete face " << face_anchor;
      break;
    case MoveKind::RII:
      if (dir == MoveDir::Create)
        o << "RII create " << create_a << ' ' << create_b;
      else
        o << "RII delete face " << face_anchor;
      break;
    case MoveKind::RIII:
      o << "RIII face " << face_anchor;
      break;
  }
  return o.str();
}

std::string script_to_text(const MoveScript& s) {
  std::string out;
  for (const ReidemeisterMove& m : s) {
    out += m.str();
    out += '\n';
  }
  return out;
}

MoveScript script_from_text(const std::string& text) {
  MoveScript script;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    ReidemeisterMove m;
    auto fail = [&](const std::string& why) {
      throw ParseError("script line " + std::to_string(lineno) + ": " + why);
    };
    auto expect = [&](const std::string& word) {
      std::string tok;
      if (!(ls >> tok) || tok != word) fail("expected '" + word + "'");
    };
    if (head == "RI+" || head == "RI-") {
      m.kind = MoveKind::RI;
      m.dir = MoveDir::Create;
      m.r1_sign = head == "RI+" ? 1 : -1;
      expect("create");
      expect("at");
      std::string side;
      if (!(ls >> m.create_at >> side)) fail("bad create-RI line");
      if (side != "left" && side != "right") fail("side must be left or right");
      m.left_side = side == "left";
    } else if (head == "RI") {
      m.kind = MoveKind::RI;
      m.dir = MoveDir::Delete;
      expect("delete");
      expect("face");
      if (!(ls >> m.face_anchor)) fail("bad delete-RI line");
    } else if (head == "RII") {
      m.kind = MoveKind::RII;
      std::string what;
      if (!(ls >> what)) fail("bad RII line");
      if (what == "create") {
        m.dir = MoveDir::Create;
        if (!(ls >> m.create_a >> m.create_b)) fail("bad create-RII line");
      } else if (what == "delete") {
        m.dir = MoveDir::Delete;
        expect("face");
        if (!(ls >> m.face_anchor)) fail("bad delete-RII line");
      } else {
        fail("RII needs create or delete");
      }
    } else if (head == "RIII") {
      m.kind = MoveKind::RIII;
      m.dir = MoveDir::None;
      expect("face");
      if (!(ls >> m.face_anchor)) fail("bad RIII line");
    } else {
      fail("unknown move '" + head + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
    script.push_back(m);
  }
  return script;
}

}  // namespace knotmoves
