#include "knotmoves/gauss_code.hpp"

#include <map>
#include <sstream>

#include "knotmoves/errors.hpp"

namespace knotmoves {

bool GaussCode::annotated() const {
  for (const Sym& s : syms)
    if (s.annot != kNone) return true;
  return false;
}

void GaussCode::check_double_occurrence() const {
  std::map<int, int> count;
  for (const Sym& s : syms) ++count[s.label];
  for (auto& [label, c] : count)
    if (c != 2) throw ParseError("label " + std::to_string(label) + " occurs " +
                                 std::to_string(c) + " times");
  if (annotated()) {
    std::map<int, int> over;
    for (const Sym& s : syms) {
      if (s.annot == kNone) throw ParseError("mixed annotated and bare labels");
      if (s.annot == kOver) ++over[s.label];
    }
    for (auto& [label, c] : count)
      if (over[label] != 1)
        throw ParseError("label " + std::to_string(label) + " lacks one over and one under");
  }
}

GaussCode GaussCode::parse(const std::string& text) {
  GaussCode code;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Sym s;
    size_t pos = 0;
    if (tok[0] == 'O' || tok[0] == 'o') {
      s.annot = kOver;
      pos = 1;
    } else if (tok[0] == 'U' || tok[0] == 'u') {
      s.annot = kUnder;
      pos = 1;
    }
    try {
      s.label = std::stoi(tok.substr(pos));
    } catch (const std::exception&) {
      throw ParseError("bad gauss code token '" + tok + "'");
    }
    code.syms.push_back(s);
  }
  code.check_double_occurrence();
  return code;
}

std::string GaussCode::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < syms.size(); ++i) {
    if (i) out << ' ';
    if (syms[i].annot == kOver) out << 'O';
    if (syms[i].annot == kUnder) out << 'U';
    out << syms[i].label;
  }
  return out.str();
}

namespace {

// Wires the map for one vector of per-crossing rotation choices.
// Passage k leaves crossing c(k) along edge e_k; edge e_k ends at passage
// k+1. With first/second passages i < j of a crossing, choice 0 lays the
// slots (f_i, f_j, b_{i-1}, b_{j-1}) counterclockwise, choice 1 swaps the
// second strand's ends.
struct CodeShape {
  int n = 0;
  std::vector<int> first, second;   // per crossing index, passage positions
  std::vector<int> crossing_at;     // per passage, dense crossing index
  std::vector<int> passage_rank;    // per passage: 0 first visit, 1 second
};

CodeShape shape_of(const GaussCode& code) {
  CodeShape s;
  std::map<int, int> index;
  const int len = static_cast<int>(code.syms.size());
  s.crossing_at.resize(len);
  s.passage_rank.resize(len);
  for (int k = 0; k < len; ++k) {
    int label = code.syms[k].label;
    auto it = index.find(label);
    if (it == index.end()) {
      index[label] = s.n;
      s.first.push_back(k);
      s.second.push_back(-1);
      s.crossing_at[k] = s.n;
      s.passage_rank[k] = 0;
      ++s.n;
    } else {
      s.second[it->second] = k;
      s.crossing_at[k] = it->second;
      s.passage_rank[k] = 1;
    }
  }
  return s;
}

CurveMap wire(const CodeShape& s, unsigned choices, bool* spherical) {
  const int n = s.n;
  const int len = 2 * n;
  // darts 4c+slot; out-darts per passage and in-darts per arriving edge
  std::vector<Dart> out_dart(len), in_dart(len);
  for (int c = 0; c < n; ++c) {
    bool flip = (choices >> c) & 1u;
    int i = s.first[c], j = s.second[c];
    out_dart[i] = 4 * c + 0;
    in_dart[i] = 4 * c + 2;  // back-dart of edge e_{i-1}
    out_dart[j] = flip ? 4 * c + 3 : 4 * c + 1;
    in_dart[j] = flip ? 4 * c + 1 : 4 * c + 3;
  }
  std::vector<Dart> twins(4 * n);
  for (int k = 0; k < len; ++k) {
    int next = (k + 1) % len;
    twins[out_dart[k]] = in_dart[next];
    twins[in_dart[next]] = out_dart[k];
  }
  // count face orbits without building a CurveMap (genus test)
  std::vector<bool> seen(4 * n, false);
  int f = 0;
  for (Dart d = 0; d < 4 * n; ++d) {
    if (seen[d]) continue;
    ++f;
    Dart x = d;
    do {
      seen[x] = true;
      x = rot3(twins[x]);
    } while (x != d);
  }
  *spherical = (f == n + 2);
  if (!*spherical) return CurveMap{};
  return CurveMap(std::move(twins), out_dart[len - 1]);
}

}  // namespace

CurveMap build_from_gauss_code(const GaussCode& code) {
  code.check_double_occurrence();
  if (code.syms.empty()) return CurveMap{};
  CodeShape s = shape_of(code);
  if (s.n > 24) throw NotRealizable("code too large for the exhaustive embedder");
  for (unsigned choices = 0; choices < (1u << s.n); ++choices) {
    bool spherical = false;
    CurveMap m = wire(s, choices, &spherical);
    if (spherical) return m;
  }
  throw NotRealizable("no spherical embedding: " + code.str());
}

std::vector<CurveMap> all_embeddings(const GaussCode& code) {
  code.check_double_occurrence();
  if (code.syms.empty()) return {CurveMap{}};
  CodeShape s = shape_of(code);
  std::vector<CurveMap> out;
  for (unsigned choices = 0; choices < (1u << s.n); ++choices) {
    bool spherical = false;
    CurveMap m = wire(s, choices, &spherical);
    if (spherical) out.push_back(std::move(m));
  }
  if (out.empty()) throw NotRealizable("no spherical embedding: " + code.str());
  return out;
}

GaussCode canonical_code(const CurveMap& map) {
  GaussCode code;
  const auto& order = map.traversal();
  const int steps = static_cast<int>(order.size());
  std::vector<int> label(map.crossings(), 0);
  int next = 1;
  for (int i = 1; i <= steps; ++i) {
    Dart d = order[i % steps];
    int v = vertex_of(d);
    if (label[v] == 0) label[v] = next++;
    code.syms.push_back({label[v], GaussCode::kNone});
  }
  return code;
}

}  // namespace knotmoves
