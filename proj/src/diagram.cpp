#include "knotmoves/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotmoves/errors.hpp"

namespace knotmoves {

KnotDiagram::KnotDiagram(CurveMap map, std::vector<int> over_parity, std::vector<int> labels)
    : map_(std::move(map)), over_parity_(std::move(over_parity)), labels_(std::move(labels)) {
  const size_t n = static_cast<size_t>(map_.crossings());
  if (over_parity_.size() != n || labels_.size() != n)
    throw std::logic_error("diagram tables do not match the crossing count");
  for (int l : labels_) next_label_ = std::max(next_label_, l + 1);
}

int KnotDiagram::vertex_by_label(int label) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
    if (labels_[v] == label) return v;
  return -1;
}

int KnotDiagram::crossing_sign(int v) const {
  Dart over = 4 * v + over_parity_[v];
  if (!map_.is_forward(over)) over = opposite(over);
  Dart under = 4 * v + (1 - over_parity_[v]);
  if (!map_.is_forward(under)) under = opposite(under);
  // positive when the under strand leaves one rotation step clockwise of the
  // over strand
  return rot3(over) == under ? 1 : -1;
}

int KnotDiagram::writhe() const {
  int w = 0;
  for (int v = 0; v < crossings(); ++v) w += crossing_sign(v);
  return w;
}

GaussCode KnotDiagram::code() const {
  GaussCode code = canonical_code(map_);
  const auto& order = map_.traversal();
  const int steps = static_cast<int>(order.size());
  for (int i = 1; i <= steps; ++i) {
    Dart d = order[i % steps];
    bool over = is_over_dart(d);
    code.syms[i - 1].annot = over ? GaussCode::kOver : GaussCode::kUnder;
  }
  return code;
}

std::vector<int> KnotDiagram::canonical_key() const {
  std::vector<Dart> to_new;
  std::vector<int> key = map_.canonical_key(&to_new);
  std::vector<int> over_bits(crossings(), 0);
  for (int v = 0; v < crossings(); ++v) {
    Dart d = to_new[4 * v + over_parity_[v]];
    over_bits[vertex_of(d)] = slot_of(d) & 1;
  }
  key.insert(key.end(), over_bits.begin(), over_bits.end());
  return key;
}

KnotDiagram ascending_diagram(const CurveMap& map) {
  const auto& order = map.traversal();
  const int steps = static_cast<int>(order.size());
  const int n = map.crossings();
  std::vector<int> over(n, -1), labels(n, 0), seen(n, 0);
  int next = 1;
  for (int i = 1; i <= steps; ++i) {
    Dart d = order[i % steps];
    int v = vertex_of(d);
    if (!seen[v]) {
      seen[v] = 1;
      labels[v] = next++;
    } else {
      over[v] = slot_of(d) & 1;  // second passage goes over
    }
  }
  return KnotDiagram(map, over, labels);
}

KnotDiagram from_braid(const std::vector<int>& word, int strands) {
  if (strands < 1) throw ParseError("braid needs at least one strand");
  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw ParseError("braid letter out of range: " + std::to_string(letter));
  }
  if (word.empty()) {
    if (strands != 1) throw ParseError("empty braid word closes to a link, not a knot");
    return KnotDiagram{};
  }

  const int m = static_cast<int>(word.size());
  // crossing c has slots (tr, tl, bl, br) = (4c, 4c+1, 4c+2, 4c+3), listed
  // counterclockwise with the braid drawn upward
  std::vector<Dart> twins(4 * m, kNoDart);
  std::vector<int> over(m), labels(m);
  std::vector<Dart> up(strands, kNoDart);      // dangling top dart per position
  std::vector<Dart> bottom(strands, kNoDart);  // first bottom dart per position
  auto connect = [&](Dart a, Dart b) {
    twins[a] = b;
    twins[b] = a;
  };
  for (int c = 0; c < m; ++c) {
    int letter = word[c];
    int pos = (letter > 0 ? letter : -letter) - 1;
    Dart tr = 4 * c, tl = 4 * c + 1, bl = 4 * c + 2, br = 4 * c + 3;
    if (up[pos] == kNoDart) bottom[pos] = bl; else connect(up[pos], bl);
    if (up[pos + 1] == kNoDart) bottom[pos + 1] = br; else connect(up[pos + 1], br);
    up[pos] = tl;
    up[pos + 1] = tr;
    over[c] = letter > 0 ? 0 : 1;  // parity 0 = the rising "/" strand
    labels[c] = c + 1;
  }
  for (int p = 0; p < strands; ++p) {
    if (up[p] == kNoDart) throw ParseError("strand " + std::to_string(p + 1) + " is a free loop");
    connect(up[p], bottom[p]);
  }
  Dart basepoint = up[0];  // closure edge of position 1, pointing up the braid
  int orbit = 0;
  Dart d = basepoint;
  do {
    ++orbit;
    d = opposite(twins[d]);
  } while (d != basepoint && orbit <= 2 * m);
  if (orbit != 2 * m) throw ParseError("braid closure is not a knot");
  CurveMap map(std::move(twins), basepoint);
  return KnotDiagram(std::move(map), std::move(over), std::move(labels));
}

bool is_trivial_diagram(const KnotDiagram& d) { return d.is_trivial(); }

bool same_diagram(const KnotDiagram& a, const KnotDiagram& b) {
  return a.canonical_key() == b.canonical_key();
}

}  // namespace knotmoves
