#include "knotmoves/formats.hpp"

#include <map>
#include <sstream>

#include "knotmoves/errors.hpp"

namespace knotmoves {

namespace {

void write_map_lines(std::ostringstream& o, const CurveMap& m) {
  o << "curve " << m.crossings() << '\n';
  for (Dart d = 0; d < m.dart_count(); ++d)
    o << "dart " << d << " twin " << m.twin(d) << " vnext " << rot1(d) << " snext "
      << m.strand_next(d) << '\n';
  o << "basepoint " << m.basepoint() << '\n';
  if (auto outer = m.outer_anchor()) o << "outer " << *outer << '\n';
}

struct RawDart {
  int twin = kNoDart, vnext = kNoDart, snext = kNoDart;
};

struct RawFile {
  int n = -1;
  std::map<int, RawDart> darts;
  int basepoint = kNoDart;
  std::optional<int> outer;
  std::vector<std::pair<int, int>> overs;  // (label, dart)
};

RawFile scan(const std::string& text) {
  RawFile raw;
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
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "curve") {
      if (!(ls >> raw.n) || raw.n < 0) fail("bad crossing count");
    } else if (head == "dart") {
      int id;
      RawDart d;
      std::string tw, vn, sn;
      if (!(ls >> id >> tw >> d.twin >> vn >> d.vnext >> sn >> d.snext) || tw != "twin" ||
          vn != "vnext" || sn != "snext")
        fail("bad dart line");
      if (!raw.darts.emplace(id, d).second) fail("duplicate dart id");
    } else if (head == "basepoint") {
      if (!(ls >> raw.basepoint)) fail("bad basepoint line");
    } else if (head == "outer") {
      int v;
      if (!(ls >> v)) fail("bad outer line");
      raw.outer = v;
    } else if (head == "over") {
      int label, dart;
      if (!(ls >> label >> dart)) fail("bad over line");
      raw.overs.emplace_back(label, dart);
    } else {
      fail("unknown directive '" + head + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (raw.n < 0) throw ParseError("missing 'curve <n>' header");
  if (static_cast<int>(raw.darts.size()) != 4 * raw.n)
    throw ParseError("expected " + std::to_string(4 * raw.n) + " darts, got " +
                     std::to_string(raw.darts.size()));
  return raw;
}

struct Normalized {
  CurveMap map;
  std::map<int, Dart> to_new;
};

Normalized normalize(const RawFile& raw) {
  Normalized out;
  if (raw.n == 0) {
    if (raw.basepoint != kNoDart) throw ParseError("the circle has basepoint -1");
    out.map = CurveMap{};
    if (raw.outer) {
      if (*raw.outer != 0 && *raw.outer != 1) throw ParseError("circle outer mark must be 0 or 1");
      out.map.set_outer_anchor(*raw.outer);
    }
    return out;
  }
  auto dart_at = [&](int id) -> const RawDart& {
    auto it = raw.darts.find(id);
    if (it == raw.darts.end()) throw ParseError("dart " + std::to_string(id) + " referenced but not defined");
    return it->second;
  };
  for (auto& [id, d] : raw.darts) {
    if (d.twin == id || dart_at(d.twin).twin != id)
      throw ParseError("twin is not a fixed-point-free involution at dart " + std::to_string(id));
    // rotation orbits must have length four
    int x = id, steps = 0;
    do {
      x = dart_at(x).vnext;
      if (++steps > 4) break;
    } while (x != id);
    if (steps != 4) throw ParseError("vnext orbit of dart " + std::to_string(id) + " is not a 4-cycle");
    int expect = dart_at(dart_at(dart_at(id).twin).vnext).vnext;
    if (d.snext != expect)
      throw ParseError("snext of dart " + std::to_string(id) + " does not cross the vertex transversally");
  }
  // renumber: vertices by minimal dart id, slots along vnext from that dart
  int next_vertex = 0;
  for (auto& [id, d] : raw.darts) {
    if (out.to_new.count(id)) continue;
    int x = id;
    for (int k = 0; k < 4; ++k) {
      if (out.to_new.count(x)) throw ParseError("vnext orbits overlap at dart " + std::to_string(x));
      out.to_new[x] = 4 * next_vertex + k;
      x = dart_at(x).vnext;
    }
    ++next_vertex;
  }
  std::vector<Dart> twins(4 * raw.n);
  for (auto& [id, d] : raw.darts) twins[out.to_new[id]] = out.to_new[d.twin];
  if (!raw.darts.count(raw.basepoint)) throw ParseError("basepoint names no dart");
  try {
    out.map = CurveMap(std::move(twins), out.to_new[raw.basepoint]);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("not a spherical knot curve: ") + e.what());
  }
  if (raw.outer) {
    if (!raw.darts.count(*raw.outer)) throw ParseError("outer mark names no dart");
    out.map.set_outer_anchor(out.to_new[*raw.outer]);
  }
  return out;
}

}  // namespace

std::string write_curve(const CurveMap& m) {
  std::ostringstream o;
  write_map_lines(o, m);
  return o.str();
}

std::string write_diagram(const KnotDiagram& d) {
  std::ostringstream o;
  write_map_lines(o, d.map());
  for (int v = 0; v < d.crossings(); ++v)
    o << "over " << d.label(v) << ' ' << 4 * v + d.over_parity(v) << '\n';
  return o.str();
}

CurveMap read_curve(const std::string& text) { return normalize(scan(text)).map; }

KnotDiagram read_diagram(const std::string& text) {
  RawFile raw = scan(text);
  Normalized norm = normalize(raw);
  if (raw.n == 0) return KnotDiagram{};
  std::vector<int> over(raw.n, -1), labels(raw.n, 0);
  for (auto& [label, dart] : raw.overs) {
    auto it = norm.to_new.find(dart);
    if (it == norm.to_new.end()) throw ParseError("over line names missing dart " + std::to_string(dart));
    int v = vertex_of(it->second);
    if (over[v] >= 0) throw ParseError("crossing has two over lines");
    over[v] = slot_of(it->second) & 1;
    labels[v] = label;
  }
  for (int v = 0; v < raw.n; ++v)
    if (over[v] < 0) throw ParseError("crossing without over/under data");
  return KnotDiagram(norm.map, over, labels);
}

bool looks_like_diagram(const std::string& text) {
  RawFile raw = scan(text);
  return raw.n == 0 || !raw.overs.empty();
}

}  // namespace knotmoves
