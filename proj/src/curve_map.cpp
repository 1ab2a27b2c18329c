#include "knotmoves/curve_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace knotmoves {

CurveMap::CurveMap(std::vector<Dart> twins, Dart basepoint)
    : twin_(std::move(twins)), basepoint_(basepoint) {
  index_traversal();
  validate();
}

void CurveMap::set_outer_anchor(int anchor) {
  if (crossings() == 0) {
    if (anchor != 0 && anchor != 1) throw std::logic_error("circle outer mark must be 0 or 1");
  } else if (anchor < 0 || anchor >= dart_count()) {
    throw std::logic_error("outer anchor out of range");
  }
  outer_ = anchor;
}

void CurveMap::index_traversal() {
  forward_.assign(twin_.size(), false);
  traversal_.clear();
  if (twin_.empty()) return;
  Dart d = basepoint_;
  do {
    if (d < 0 || d >= dart_count() || forward_[d])
      throw std::logic_error("curve traversal is not a simple cycle");
    forward_[d] = true;
    traversal_.push_back(d);
    d = strand_next(d);
  } while (d != basepoint_);
}

void CurveMap::validate() const {
  const int nd = dart_count();
  if (nd % 4 != 0) throw std::logic_error("dart count not a multiple of 4");
  for (Dart d = 0; d < nd; ++d) {
    Dart t = twin_[d];
    if (t < 0 || t >= nd || t == d || twin_[t] != d)
      throw std::logic_error("twin is not a fixed-point-free involution");
  }
  if (nd == 0) {
    if (basepoint_ != kNoDart) throw std::logic_error("circle with a basepoint dart");
    return;
  }
  if (static_cast<int>(traversal_.size()) * 2 != nd)
    throw std::logic_error("curve does not traverse every edge once");
  // genus check: V - E + F = 2
  int f = static_cast<int>(faces().size());
  if (crossings() - 2 * crossings() + f != 2)
    throw std::logic_error("map is not spherical");
}

std::vector<Face> CurveMap::faces() const {
  std::vector<Face> out;
  if (twin_.empty()) {
    out.push_back(Face{0, {}});
    out.push_back(Face{1, {}});
    out[0].boundary = {};
    out[1].boundary = {};
    return out;
  }
  const int nd = dart_count();
  std::vector<bool> seen(nd, false);
  for (Dart d = 0; d < nd; ++d) {
    if (seen[d]) continue;
    Face f;
    Dart x = d;
    do {
      seen[x] = true;
      f.boundary.push_back(x);
      x = face_next(x);
    } while (x != d);
    out.push_back(std::move(f));
  }
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i].id = i;
  return out;
}

int CurveMap::face_id_of(Dart d) const {
  auto fs = faces();
  for (const Face& f : fs)
    for (Dart x : f.boundary)
      if (x == d) return f.id;
  throw std::logic_error("dart not on any face");
}

std::vector<std::vector<Dart>> CurveMap::smooth_all() const {
  if (twin_.empty()) return {{}};
  const int nd = dart_count();
  std::vector<bool> seen(nd, false);
  std::vector<std::vector<Dart>> circles;
  for (Dart d : traversal_) {
    if (seen[d]) continue;
    std::vector<Dart> circle;
    Dart x = d;
    do {
      seen[x] = true;
      circle.push_back(x);
      Dart t = twin_[x];
      Dart cand = rot1(t);
      x = forward_[cand] ? cand : rot3(t);
      if (!forward_[x]) throw std::logic_error("smoothing lost orientation");
    } while (x != d);
    circles.push_back(std::move(circle));
  }
  return circles;
}

int CurveMap::whitney_index(int outer_face_id) const {
  if (twin_.empty()) return outer_face_id == 1 ? 1 : -1;
  auto fs = faces();
  if (outer_face_id < 0 || outer_face_id >= static_cast<int>(fs.size()))
    throw std::logic_error("outer face id out of range");
  auto circles = smooth_all();
  const int nc = static_cast<int>(circles.size());
  std::vector<int> circle_of_edge(dart_count(), -1);
  for (int c = 0; c < nc; ++c)
    for (Dart d : circles[c]) {
      circle_of_edge[d] = c;
      circle_of_edge[twin_[d]] = c;
    }
  std::vector<int> face_of(dart_count(), -1);
  for (const Face& f : fs)
    for (Dart d : f.boundary) face_of[d] = f.id;

  // parity of crossings with each circle along any dual path from the outer
  // face; well-defined since the circles are closed curves
  std::vector<std::vector<int>> parity(fs.size());
  std::vector<bool> visited(fs.size(), false);
  parity[outer_face_id].assign(nc, 0);
  visited[outer_face_id] = true;
  std::vector<int> queue{outer_face_id};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    for (Dart d : fs[f].boundary) {
      int g = face_of[twin_[d]];
      if (visited[g]) continue;
      visited[g] = true;
      parity[g] = parity[f];
      parity[g][circle_of_edge[d]] ^= 1;
      queue.push_back(g);
    }
  }

  int index = 0;
  for (int c = 0; c < nc; ++c) {
    int left_face = face_of[circles[c][0]];
    // anticlockwise iff the region on the circle's left is its inside
    index += parity[left_face][c] ? 1 : -1;
  }
  return index;
}

CurveMap CurveMap::remark_outer_face(int face_id) const {
  CurveMap out = *this;
  if (twin_.empty()) {
    out.set_outer_anchor(face_id);
    return out;
  }
  auto fs = faces();
  if (face_id < 0 || face_id >= static_cast<int>(fs.size()))
    throw std::logic_error("no such face");
  out.set_outer_anchor(fs[face_id].boundary.front());
  return out;
}

CurveMap CurveMap::reversed() const {
  if (twin_.empty()) {
    CurveMap out = *this;
    if (outer_) out.outer_ = 1 - *outer_;  // left and right swap
    return out;
  }
  CurveMap out(twin_, twin_[basepoint_]);
  out.outer_ = outer_;
  return out;
}

std::vector<int> CurveMap::canonical_key(std::vector<Dart>* dart_map) const {
  const int nd = dart_count();
  std::vector<Dart> to_new(nd, kNoDart);
  int next_vertex = 0;
  const int steps = static_cast<int>(traversal_.size());
  for (int i = 1; i <= steps; ++i) {
    // crossings are visited at the tails of traversal_[1], traversal_[2], ...
    Dart d = traversal_[i % steps];
    int v = vertex_of(d);
    if (to_new[4 * v] != kNoDart) continue;
    // slot 0 of the renumbered vertex = first-visit out-dart
    for (int k = 0; k < 4; ++k) {
      Dart x = (d & ~3) | ((d + k) & 3);
      to_new[x] = 4 * next_vertex + k;
    }
    ++next_vertex;
  }
  std::vector<int> key(nd + 1, 0);
  for (Dart d = 0; d < nd; ++d) key[to_new[d]] = to_new[twin_[d]];
  key[nd] = nd == 0 ? kNoDart : to_new[basepoint_];
  if (dart_map) *dart_map = std::move(to_new);
  return key;
}

bool same_curve(const CurveMap& a, const CurveMap& b) {
  return a.canonical_key() == b.canonical_key();
}

}  // namespace knotmoves
