#include "knotmoves/dn_family.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "knotmoves/surgery.hpp"

namespace knotmoves {

std::vector<int> dn_braid_word(int n) {
  if (n < 2) throw std::invalid_argument("the family starts at n = 2");
  std::vector<int> word;
  word.reserve(n * n);
  for (int block = 1; block <= n; ++block)
    for (int m = 1; m <= n; ++m) word.push_back(m <= n - block + 1 ? -m : m);
  return word;
}

CurveMap gamma_curve(int n) {
  KnotDiagram d = from_braid(dn_braid_word(n), n + 1);
  CurveMap m = d.map();
  // the outermost region lies right of the basepoint strand
  m.set_outer_anchor(m.twin(m.basepoint()));
  return m;
}

KnotDiagram dn_diagram(int n) { return ascending_diagram(gamma_curve(n)); }

namespace {

std::string diagram_key(const KnotDiagram& d) {
  std::vector<int> key = d.canonical_key();
  return std::string(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(int));
}

// Depth-first search over delete-direction moves of the three certified
// kinds. Every such move raises J-/2+St-w/2 by one, so any completed path
// has the theorem's length and type counts.
struct ScriptSearch {
  std::unordered_set<std::string> failed;
  MoveScript moves;
  MoveScript inverses;

  bool admissible(const ReidemeisterMove& m) const {
    switch (m.kind) {
      case MoveKind::RI: return m.r1_sign == 1;
      case MoveKind::RII: return m.r2_class == RIIClass::Unmatched;
      case MoveKind::RIII: return m.r3_sign == 1;
    }
    return false;
  }

  bool dfs(const KnotDiagram& d) {
    if (d.is_trivial()) return true;
    std::string key = diagram_key(d);
    if (failed.count(key)) return false;
    for (const ReidemeisterMove& cand : enumerate_delete_moves(d)) {
      if (!admissible(cand)) continue;
      AppliedMove a = apply_move(d, cand);
      moves.push_back(a.classified);
      inverses.push_back(a.inverse);
      if (dfs(a.result)) return true;
      moves.pop_back();
      inverses.pop_back();
    }
    failed.insert(key);
    return false;
  }
};

struct ScriptPair {
  MoveScript unknotting;
  MoveScript construction;
};

const ScriptPair& scripts_for(int n) {
  static std::mutex mu;
  static std::unordered_map<int, ScriptPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  ScriptSearch search;
  if (!search.dfs(dn_diagram(n)))
    throw std::logic_error("no certified unknotting sequence found for n=" + std::to_string(n));
  ScriptPair pair;
  pair.unknotting = search.moves;
  pair.construction.assign(search.inverses.rbegin(), search.inverses.rend());
  for (const ReidemeisterMove& m : pair.construction)
    if (m.kind == MoveKind::RII && m.dir == MoveDir::Create && m.create_a == kNoDart)
      throw std::logic_error("construction step lost its anchors");
  return cache.emplace(n, std::move(pair)).first->second;
}

}  // namespace

MoveScript unknotting_script(int n) {
  if (n < 2) throw std::invalid_argument("the family starts at n = 2");
  return scripts_for(n).unknotting;
}

MoveScript construction_script(int n) {
  if (n < 2) throw std::invalid_argument("the family starts at n = 2");
  return scripts_for(n).construction;
}

CurveMap base_curve(int i) {
  if (i < 0) throw std::invalid_argument("base curves are indexed from 0");
  if (i == 0) return build_from_gauss_code(GaussCode::parse("1 1"));
  CurveMap m;  // K_1 is the plain circle; K_{i+1} adds i kinks
  for (int k = 0; k < i - 1; ++k) m = kink_create(m, m.basepoint(), true).map;
  return m;
}

TheoremReport verify_theorem(int n, const VerifyOptions& opts) {
  if (n < 3) throw std::invalid_argument("the theorem needs n >= 3");
  TheoremReport r;
  r.n = n;
  r.expected_length = static_cast<long long>(n) * (static_cast<long long>(n) * n + 5) / 6;

  KnotDiagram dn = dn_diagram(n);
  MoveScript script = unknotting_script(n);
  r.script_length = static_cast<long long>(script.size());

  ScriptRun run = run_script(dn, script);
  r.endpoint_ok = run.result.is_trivial();

  r.classes_ok = true;
  long long da2 = 0, db2 = 0, dw = 0, dn_count = 0;
  for (const ReidemeisterMove& m : run.trace) {
    switch (m.kind) {
      case MoveKind::RI:
        ++r.count_r1;
        if (m.dir != MoveDir::Delete || m.r1_sign != 1) r.classes_ok = false;
        break;
      case MoveKind::RII:
        ++r.count_r2;
        if (m.dir != MoveDir::Delete || m.r2_class != RIIClass::Unmatched) r.classes_ok = false;
        break;
      case MoveKind::RIII:
        ++r.count_r3;
        if (m.r3_sign != 1) r.classes_ok = false;
        break;
    }
    MoveDelta d = move_delta(m);
    da2 += d.da2;
    db2 += d.db2;
    dw += d.dw;
    dn_count += m.kind == MoveKind::RI ? -1 : m.kind == MoveKind::RII ? -2 : 0;
  }
  r.counts_ok = r.count_r1 == n && r.count_r2 == n * (n - 1) / 2 &&
                r.count_r3 == n * (n - 1) * (n - 2) / 6 &&
                r.script_length == r.expected_length;

  // the script ends on the trivial diagram at (0,0,0,0)
  r.dn_state.a2 = -da2;
  r.dn_state.b2 = -db2;
  r.dn_state.w = -dw;
  r.dn_state.n = -dn_count;
  InvariantState end = track(r.dn_state, run.trace);
  long long c1 = n, c3 = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  r.prop31_ok = end == InvariantState{} && r.dn_state.bm2() == -2 * r.expected_length &&
                r.dn_state.a2 == -2 * c3 && r.dn_state.w == dn.writhe() &&
                r.dn_state.w == c1 && r.dn_state.n == dn.crossings();

  r.certificate = minimality_certificate(dn, script);

  if (n <= opts.reduction_bound) {
    r.reduction_ran = true;
    ReduceResult red = reduce_and_compute(dn.map(), opts.reduce);
    r.reduction_ok = red.a2 == r.dn_state.a2 && red.b2 == r.dn_state.b2;
  }
  return r;
}

std::string TheoremReport::str() const {
  std::ostringstream o;
  o << "n=" << n << '\n';
  o << "script_length=" << script_length << " expected=" << expected_length << '\n';
  o << "counts RI=" << count_r1 << " RII=" << count_r2 << " RIII=" << count_r3 << '\n';
  o << "endpoint_trivial=" << (endpoint_ok ? "true" : "false") << '\n';
  o << "move_classes_ok=" << (classes_ok ? "true" : "false") << '\n';
  o << "J-/2+St-w/2 = " << half_str(dn_state.bm2()) << '\n';
  o << "J+/2+St = " << half_str(dn_state.a2) << '\n';
  o << "writhe = " << dn_state.w << '\n';
  o << "prop_values_ok=" << (prop31_ok ? "true" : "false") << '\n';
  o << "certificate quantity=" << quantity_name(certificate.quantity)
    << " certified=" << (certificate.valid ? "true" : "false") << '\n';
  o << "lower_bound=" << (certificate.valid ? script_length : 0) << '\n';
  if (reduction_ran)
    o << "reduction_oracle=" << (reduction_ok ? "agrees" : "DISAGREES") << '\n';
  o << "ok=" << (ok() ? "true" : "false") << '\n';
  return o.str();
}

}  // namespace knotmoves
