#include "knotmoves/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "knotmoves/errors.hpp"

namespace knotmoves {

namespace {

Surgery finish_creation(const CurveMap& m, std::vector<Dart> twins, Dart basepoint,
                        std::optional<int> outer, std::vector<int> new_vertices) {
  Surgery s;
  s.map = CurveMap(std::move(twins), basepoint);
  if (outer) s.map.set_outer_anchor(*outer);
  s.vertex_map.resize(m.crossings());
  std::iota(s.vertex_map.begin(), s.vertex_map.end(), 0);
  s.new_vertices = std::move(new_vertices);
  return s;
}

// Removes the marked vertices, splicing the strands straight through them.
Surgery delete_vertices(const CurveMap& m, const std::vector<bool>& dead) {
  const int nv = m.crossings();
  Surgery s;
  s.vertex_map.assign(nv, -1);
  int alive = 0;
  for (int v = 0; v < nv; ++v)
    if (!dead[v]) s.vertex_map[v] = alive++;
  if (alive == 0) {
    s.map = CurveMap{};
    return s;
  }
  auto remap = [&](Dart d) { return 4 * s.vertex_map[vertex_of(d)] + slot_of(d); };
  std::vector<Dart> twins(4 * alive, kNoDart);
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (dead[vertex_of(d)]) continue;
    Dart e = m.twin(d);
    while (dead[vertex_of(e)]) e = m.twin(opposite(e));
    twins[remap(d)] = remap(e);
  }
  Dart b = m.basepoint();
  while (dead[vertex_of(b)]) b = m.strand_next(b);
  s.map = CurveMap(std::move(twins), remap(b));
  if (auto o = m.outer_anchor(); o && !dead[vertex_of(*o)])
    s.map.set_outer_anchor(remap(*o));
  return s;
}

}  // namespace

Surgery kink_create(const CurveMap& m, Dart anchor, bool left_side) {
  if (m.crossings() == 0) {
    if (anchor != kNoDart) throw InapplicableMove("circle has no darts to anchor on");
    Surgery s;
    // the rest of the circle is the one big edge; the loop takes two slots
    std::vector<Dart> twins = left_side ? std::vector<Dart>{1, 0, 3, 2}
                                        : std::vector<Dart>{3, 2, 1, 0};
    Dart basepoint = left_side ? 1 : 3;
    s.map = CurveMap(std::move(twins), basepoint);
    if (auto o = m.outer_anchor()) {
      if (left_side)
        s.map.set_outer_anchor(*o == 0 ? 1 : 0);  // big remnant of left face is {1,3}
      else
        s.map.set_outer_anchor(*o == 0 ? 3 : 0);
    }
    s.new_vertices = {0};
    return s;
  }
  if (anchor < 0 || anchor >= m.dart_count()) throw InapplicableMove("bad kink anchor");
  const int v = m.crossings();
  const Dart w0 = 4 * v, w1 = w0 + 1, w2 = w0 + 2, w3 = w0 + 3;
  std::vector<Dart> twins(m.dart_count() + 4);
  for (Dart d = 0; d < m.dart_count(); ++d) twins[d] = m.twin(d);
  Dart t = m.twin(anchor);
  twins[anchor] = w0;
  twins[w0] = anchor;
  if (left_side) {  // slots: arriving edge, onward edge, loop, loop
    twins[w1] = t;
    twins[t] = w1;
    twins[w2] = w3;
    twins[w3] = w2;
  } else {  // slots: arriving edge, loop, loop, onward edge
    twins[w3] = t;
    twins[t] = w3;
    twins[w1] = w2;
    twins[w2] = w1;
  }
  return finish_creation(m, std::move(twins), m.basepoint(), m.outer_anchor(), {v});
}

Surgery kink_delete(const CurveMap& m, Dart anchor) {
  if (m.crossings() == 0 || anchor < 0 || anchor >= m.dart_count())
    throw InapplicableMove("monogon anchor out of range");
  if (m.face_next(anchor) != anchor) throw InapplicableMove("face is not a monogon");
  std::vector<bool> dead(m.crossings(), false);
  dead[vertex_of(anchor)] = true;
  return delete_vertices(m, dead);
}

void check_bigon(const CurveMap& m, Dart anchor, Dart orbit[2]) {
  if (m.crossings() == 0 || anchor < 0 || anchor >= m.dart_count())
    throw InapplicableMove("bigon anchor out of range");
  Dart d2 = m.face_next(anchor);
  if (d2 == anchor || m.face_next(d2) != anchor)
    throw InapplicableMove("face is not a bigon");
  if (vertex_of(anchor) == vertex_of(d2))
    throw InapplicableMove("degenerate bigon with a repeated crossing");
  orbit[0] = anchor;
  orbit[1] = d2;
}

Surgery bigon_delete(const CurveMap& m, Dart anchor) {
  Dart orbit[2];
  check_bigon(m, anchor, orbit);
  std::vector<bool> dead(m.crossings(), false);
  dead[vertex_of(orbit[0])] = true;
  dead[vertex_of(orbit[1])] = true;
  return delete_vertices(m, dead);
}

Surgery finger_create(const CurveMap& m, Dart a, Dart b) {
  if (m.crossings() == 0) throw InapplicableMove("cannot anchor a finger on the circle");
  if (a < 0 || b < 0 || a >= m.dart_count() || b >= m.dart_count())
    throw InapplicableMove("finger anchor out of range");
  if (a == b || b == m.twin(a))
    throw InapplicableMove("finger needs two distinct edges");
  bool shared = false;
  for (Dart x = m.face_next(a); ; x = m.face_next(x)) {
    if (x == b) shared = true;
    if (x == a) break;
  }
  if (!shared) throw InapplicableMove("finger anchors must lie on a common face");

  const int v1 = m.crossings(), v2 = v1 + 1;
  const Dart x0 = 4 * v1, x1 = x0 + 1, x2 = x0 + 2, x3 = x0 + 3;
  const Dart y0 = 4 * v2, y1 = y0 + 1, y2 = y0 + 2, y3 = y0 + 3;
  std::vector<Dart> twins(m.dart_count() + 8);
  for (Dart d = 0; d < m.dart_count(); ++d) twins[d] = m.twin(d);
  Dart ta = m.twin(a), tb = m.twin(b);
  auto link = [&](Dart p, Dart q) {
    twins[p] = q;
    twins[q] = p;
  };
  link(a, x3);   // pushed edge, tail piece
  link(x1, y1);  // finger arc over the crossed edge
  link(y3, ta);  // pushed edge, far piece
  link(b, y0);   // crossed edge, tail piece
  link(y2, x0);  // crossed edge, middle (one bigon side)
  link(x2, tb);  // crossed edge, far piece
  return finish_creation(m, std::move(twins), m.basepoint(), m.outer_anchor(), {v1, v2});
}

void check_trigon(const CurveMap& m, Dart anchor, Dart orbit[3]) {
  if (m.crossings() == 0 || anchor < 0 || anchor >= m.dart_count())
    throw InapplicableMove("trigon anchor out of range");
  orbit[0] = anchor;
  orbit[1] = m.face_next(anchor);
  orbit[2] = m.face_next(orbit[1]);
  if (orbit[1] == anchor || orbit[2] == anchor || m.face_next(orbit[2]) != anchor)
    throw InapplicableMove("face is not a trigon");
  int a = vertex_of(orbit[0]), b = vertex_of(orbit[1]), c = vertex_of(orbit[2]);
  if (a == b || b == c || a == c)
    throw InapplicableMove("degenerate trigon with a repeated crossing");
}

Surgery trigon_flip(const CurveMap& m, Dart anchor, Dart* created_anchor) {
  Dart g[3];
  check_trigon(m, anchor, g);
  const int nd = m.dart_count();
  // relabeling of the 12 site darts; the new twin table is rho T rho^-1
  std::vector<Dart> rho(nd), inv(nd);
  std::iota(rho.begin(), rho.end(), 0);
  for (int k = 0; k < 3; ++k) {
    Dart gk = g[k], gn = g[(k + 1) % 3];
    rho[gk] = opposite(gk);
    rho[opposite(gk)] = rot1(gn);
    rho[rot1(gn)] = rot3(gn);
    rho[rot3(gn)] = gk;
  }
  for (Dart d = 0; d < nd; ++d) inv[rho[d]] = d;
  std::vector<Dart> twins(nd);
  for (Dart d = 0; d < nd; ++d) twins[d] = rho[m.twin(inv[d])];

  Dart b = m.basepoint();
  bool b_local = vertex_of(b) == vertex_of(g[0]) || vertex_of(b) == vertex_of(g[1]) ||
                 vertex_of(b) == vertex_of(g[2]);
  if (b_local) {
    bool on_side = false;
    for (int k = 0; k < 3; ++k)
      if (b == g[k] || b == rot1(g[k])) on_side = true;
    // side darts ride with the strand isotopy; stub darts just relabel
    b = on_side ? rho[m.twin(b)] : rho[b];
  }
  Surgery s;
  s.map = CurveMap(std::move(twins), b);
  if (auto o = m.outer_anchor()) {
    bool o_local = vertex_of(*o) == vertex_of(g[0]) || vertex_of(*o) == vertex_of(g[1]) ||
                   vertex_of(*o) == vertex_of(g[2]);
    if (!o_local) s.map.set_outer_anchor(*o);
  }
  s.vertex_map.resize(m.crossings());
  std::iota(s.vertex_map.begin(), s.vertex_map.end(), 0);
  if (created_anchor) *created_anchor = opposite(anchor);
  return s;
}

}  // namespace knotmoves
