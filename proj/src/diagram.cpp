#include "gpretzel/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gpretzel/builder.hpp"
#include "gpretzel/errors.hpp"

namespace gpretzel {

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops,
                 std::optional<std::vector<int>> signs)
    : crossings_(std::move(crossings)), free_loops_(free_loops), signs_(std::move(signs)) {
  if (free_loops_ < 0) throw InputError("negative free loop count");
  if (crossings_.empty() && free_loops_ == 0) throw InputError("diagram has no components");
  const int n = arc_count();
  std::vector<int> seen(n, 0);
  arc_darts_.assign(n, {});
  for (int c = 0; c < crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      int lab = crossings_[c].slots[s];
      if (lab < 1 || lab > n) {
        throw InputError("arc label " + std::to_string(lab) + " outside 1.." + std::to_string(n));
      }
      if (seen[lab - 1] >= 2) {
        throw InputError("arc label " + std::to_string(lab) + " appears more than twice");
      }
      arc_darts_[lab - 1][seen[lab - 1]++] = Dart{c, s};
    }
  }
  for (int lab = 1; lab <= n; ++lab) {
    if (seen[lab - 1] != 2) {
      throw InputError("arc label " + std::to_string(lab) + " appears " +
                       std::to_string(seen[lab - 1]) + " time(s), expected 2");
    }
  }
  if (signs_) {
    if (static_cast<int>(signs_->size()) != crossing_count()) {
      throw InputError("sign count does not match crossing count");
    }
    for (int s : *signs_) {
      if (s != 1 && s != -1) throw InputError("crossing sign must be +1 or -1");
    }
    for (int lab = 1; lab <= n; ++lab) {
      const auto& ends = arc_darts_[lab - 1];
      if (is_outgoing(ends[0]) == is_outgoing(ends[1])) {
        throw InputError("arc " + std::to_string(lab) + " is not consistently oriented");
      }
    }
  }
}

const std::vector<int>& Diagram::signs() const {
  if (!signs_) throw InputError("diagram is unoriented");
  return *signs_;
}

std::array<Dart, 2> Diagram::darts_of(int label) const { return arc_darts_.at(label - 1); }

bool Diagram::is_outgoing(Dart d) const {
  int sign = signs().at(d.crossing);
  switch (d.slot) {
    case 0: return false;
    case 2: return true;
    case 1: return sign > 0;
    default: return sign < 0;
  }
}

Diagram Diagram::with_extra_free_loops(int k) const {
  return Diagram(crossings_, free_loops_ + k, signs_);
}

Diagram Diagram::forget_orientation() const { return Diagram(crossings_, free_loops_); }

namespace {

Dart other_end(const Diagram& d, Dart x) {
  auto ends = d.darts_of(d.crossings()[x.crossing].slots[x.slot]);
  return ends[0] == x ? ends[1] : ends[0];
}

// Walks the component entered at `start`; returns the sequence of entry darts.
std::vector<Dart> walk(const Diagram& d, Dart start) {
  std::vector<Dart> entries;
  Dart entry = start;
  do {
    entries.push_back(entry);
    Dart exit{entry.crossing, (entry.slot + 2) % 4};
    entry = other_end(d, exit);
  } while (!(entry == start));
  return entries;
}

std::vector<std::vector<Dart>> all_walks(const Diagram& d) {
  std::vector<std::vector<bool>> used(d.crossing_count(), std::vector<bool>(4, false));
  std::vector<std::vector<Dart>> result;
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (used[c][s]) continue;
      Dart start{c, s};
      if (d.is_oriented() && d.is_outgoing(start)) start = Dart{c, (s + 2) % 4};
      auto w = walk(d, start);
      for (Dart e : w) {
        used[e.crossing][e.slot] = true;
        used[e.crossing][(e.slot + 2) % 4] = true;
      }
      result.push_back(std::move(w));
    }
  }
  return result;
}

}  // namespace

int components(const Diagram& d) {
  return static_cast<int>(all_walks(d).size()) + d.free_loops();
}

std::vector<std::vector<int>> component_arcs(const Diagram& d) {
  std::vector<std::vector<int>> out;
  for (const auto& w : all_walks(d)) {
    std::vector<int> arcs;
    for (Dart e : w) arcs.push_back(d.crossings()[e.crossing].slots[(e.slot + 2) % 4]);
    out.push_back(std::move(arcs));
  }
  return out;
}

int writhe(const Diagram& d) {
  if (!d.is_oriented()) throw InputError("writhe requires an oriented diagram");
  int w = 0;
  for (int s : d.signs()) w += s;
  return w;
}

namespace {

std::array<int, 4> rotate(const std::array<int, 4>& s, int k) {
  return {s[k % 4], s[(k + 1) % 4], s[(k + 2) % 4], s[(k + 3) % 4]};
}

}  // namespace

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.crossings().size());
  if (d.is_oriented()) {
    std::vector<int> signs;
    for (int c = 0; c < d.crossing_count(); ++c) {
      int sign = d.signs()[c];
      // The incoming end of the old over-strand becomes slot 0.
      out.push_back({rotate(d.crossings()[c].slots, sign > 0 ? 3 : 1)});
      signs.push_back(-sign);
    }
    return Diagram(std::move(out), d.free_loops(), std::move(signs));
  }
  for (const auto& x : d.crossings()) {
    const auto& s = x.slots;
    auto under = std::minmax(s[0], s[2]);
    auto over = std::minmax(s[1], s[3]);
    out.push_back({rotate(s, under < over ? 1 : 3)});
  }
  return Diagram(std::move(out), d.free_loops());
}

Diagram reverse_component(const Diagram& d, int component) {
  if (!d.is_oriented()) throw InputError("reverse_component requires an oriented diagram");
  auto comps = component_arcs(d);
  if (component < 0 || component >= static_cast<int>(comps.size())) {
    throw InputError("component index out of range");
  }
  std::vector<bool> in_comp(d.arc_count() + 1, false);
  for (int lab : comps[component]) in_comp[lab] = true;
  std::vector<Crossing> out;
  std::vector<int> signs;
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto s = d.crossings()[c].slots;
    bool under = in_comp[s[0]];
    bool over = in_comp[s[1]];
    int sign = d.signs()[c];
    if (under != over) sign = -sign;
    if (under) s = rotate(s, 2);
    out.push_back({s});
    signs.push_back(sign);
  }
  return Diagram(std::move(out), d.free_loops(), std::move(signs));
}

Diagram canonical(const Diagram& d) {
  Diagram c = DiagramBuilder::from_diagram(d).finalize();
  return d.is_oriented() ? c : c.forget_orientation();
}

std::vector<Face> faces(const Diagram& d) {
  std::vector<std::vector<bool>> used(d.crossing_count(), std::vector<bool>(4, false));
  std::vector<Face> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (used[c][s]) continue;
      Face f;
      Dart dep{c, s};
      while (!used[dep.crossing][dep.slot]) {
        used[dep.crossing][dep.slot] = true;
        f.darts.push_back(dep);
        Dart arr = other_end(d, dep);
        dep = Dart{arr.crossing, (arr.slot + 3) % 4};
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

bool is_planar(const Diagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return true;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int lab = 1; lab <= d.arc_count(); ++lab) {
    auto e = d.darts_of(lab);
    parent[find(e[0].crossing)] = find(e[1].crossing);
  }
  int pieces = 0;
  for (int i = 0; i < n; ++i) pieces += find(i) == i;
  int f = static_cast<int>(faces(d).size());
  return n - 2 * n + f == 2 * pieces;
}

// ---------------------------------------------------------------------------
// Reidemeister moves

namespace {

Diagram finish(const DiagramBuilder& b, const Diagram& original) {
  Diagram r = b.finalize();
  return original.is_oriented() ? r : r.forget_orientation();
}

void wire(DiagramBuilder& b, Port from, Port to, bool directed) {
  if (directed) {
    b.connect_directed(from, to);
  } else {
    b.connect(from, to);
  }
}

Diagram add_kink(const Diagram& d, int arc, bool positive, int variant) {
  if (variant != 0 && variant != 1) throw InputError("kink variant must be 0 or 1");
  DiagramBuilder b = DiagramBuilder::from_diagram(d);
  const bool directed = d.is_oriented();
  Port tail{-1, -1};
  Port head{-1, -1};
  if (arc == 0) {
    if (d.free_loops() == 0) throw InputError("no free loop to place a kink on");
    b.add_free_loops(-1);
  } else {
    if (arc < 1 || arc > d.arc_count()) throw InputError("arc " + std::to_string(arc) + " does not exist");
    auto ends = d.darts_of(arc);
    Dart t = ends[0];
    Dart h = ends[1];
    if (directed && !d.is_outgoing(t)) std::swap(t, h);
    tail = {t.crossing, t.slot};
    head = {h.crossing, h.slot};
    b.disconnect(tail);
  }
  int x = b.add_crossing();
  // Strand enters at `in`, leaves at `out`; the loop runs from `la` to `lb`.
  int in, out, la, lb;
  if (positive) {
    if (variant == 0) { in = 0; out = 1; la = 2; lb = 3; }
    else { in = 3; out = 2; la = 1; lb = 0; }
  } else {
    if (variant == 0) { in = 0; out = 3; la = 2; lb = 1; }
    else { in = 1; out = 2; la = 3; lb = 0; }
  }
  wire(b, Port{x, la}, Port{x, lb}, directed);
  if (arc == 0) {
    wire(b, Port{x, out}, Port{x, in}, directed);
  } else {
    wire(b, tail, Port{x, in}, directed);
    wire(b, Port{x, out}, head, directed);
  }
  return finish(b, d);
}

struct FaceEdge {
  Dart dep;
  Dart arr;
  int label;
};

FaceEdge face_edge(const Diagram& d, const Face& f, int i) {
  Dart dep = f.darts.at(i);
  return {dep, other_end(d, dep), d.crossings()[dep.crossing].slots[dep.slot]};
}

Diagram add_bigon(const Diagram& d, const Face& f, int ia, int ib, bool a_over) {
  int n = static_cast<int>(f.darts.size());
  if (ia < 0 || ib < 0 || ia >= n || ib >= n || ia == ib) throw InputError("R2 needs two distinct face edges");
  FaceEdge a = face_edge(d, f, ia);
  FaceEdge bb = face_edge(d, f, ib);
  if (a.label == bb.label) throw InputError("R2 edges must be different arcs");
  DiagramBuilder b = DiagramBuilder::from_diagram(d);
  Port aS{a.dep.crossing, a.dep.slot}, aE{a.arr.crossing, a.arr.slot};
  Port bS{bb.dep.crossing, bb.dep.slot}, bE{bb.arr.crossing, bb.arr.slot};
  b.disconnect(aS);
  b.disconnect(bS);
  int x = b.add_crossing();
  int y = b.add_crossing();
  // Geometric slots with b as the under-strand:
  //   X = [b_mid, a_mid, b_end, a1], Y = [b_start, a_mid, b_mid, a2].
  int r = a_over ? 0 : 3;
  auto P = [&](int node, int k) { return Port{node, (k + r) % 4}; };
  bool oriented = d.is_oriented();
  bool a_fwd = !oriented || d.is_outgoing(a.dep);
  bool b_fwd = !oriented || d.is_outgoing(bb.dep);
  auto strand = [&](Port p, Port q, bool fwd) {
    if (fwd) {
      wire(b, p, q, oriented);
    } else {
      wire(b, q, p, oriented);
    }
  };
  strand(aS, P(x, 3), a_fwd);
  strand(P(x, 1), P(y, 1), a_fwd);
  strand(P(y, 3), aE, a_fwd);
  strand(bS, P(y, 0), b_fwd);
  strand(P(y, 2), P(x, 0), b_fwd);
  strand(P(x, 2), bE, b_fwd);
  return finish(b, d);
}

// Line k of a triangle face runs through crossing c_k (port s_k) and
// c_{k+1} (port t_{k+1}).
struct TriangleLine {
  Dart p_int, q_int;
};

bool triangle_lines(const Diagram& d, const Face& f, std::array<TriangleLine, 3>& lines) {
  if (f.darts.size() != 3) return false;
  std::array<int, 3> cs{};
  for (int k = 0; k < 3; ++k) {
    FaceEdge e = face_edge(d, f, k);
    lines[k] = {e.dep, e.arr};
    cs[k] = e.dep.crossing;
  }
  if (cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2]) return false;
  for (int k = 0; k < 3; ++k) {
    bool over_p = lines[k].p_int.slot % 2 == 1;
    bool over_q = lines[k].q_int.slot % 2 == 1;
    if (over_p == over_q) return true;
  }
  return false;
}

Diagram triangle_move(const Diagram& d, const Face& f) {
  std::array<TriangleLine, 3> lines;
  if (!triangle_lines(d, f, lines)) throw InputError("face does not admit an R3 move");
  DiagramBuilder b = DiagramBuilder::from_diagram(d);
  auto ext = [](Dart x) { return Port{x.crossing, (x.slot + 2) % 4}; };
  auto as_port = [](Dart x) { return Port{x.crossing, x.slot}; };
  // f maps an external port to the port that takes over its outside wire.
  std::vector<std::pair<Port, Port>> remap;
  for (const auto& l : lines) {
    remap.push_back({ext(l.p_int), as_port(l.q_int)});
    remap.push_back({ext(l.q_int), as_port(l.p_int)});
  }
  auto mapped = [&](Port p) {
    for (const auto& [from, to] : remap) {
      if (from == p) return std::optional<Port>(to);
    }
    return std::optional<Port>();
  };
  const bool oriented = d.is_oriented();
  struct Wire {
    Port from, to;
  };
  std::vector<Wire> outside;
  for (const auto& [from, to] : remap) {
    Port z = b.partner(from);
    auto zm = mapped(z);
    if (zm && (z.node < from.node || (z.node == from.node && z.index < from.index))) continue;
    Port nz = zm ? *zm : z;
    bool leaves = oriented && d.is_outgoing(Dart{from.node, from.index});
    if (!oriented || leaves) {
      outside.push_back({to, nz});
    } else {
      outside.push_back({nz, to});
    }
  }
  std::vector<Wire> inside;
  for (const auto& l : lines) {
    bool p_to_q = !oriented || d.is_outgoing(l.p_int);
    Port pe = ext(l.p_int);
    Port qe = ext(l.q_int);
    inside.push_back(p_to_q ? Wire{qe, pe} : Wire{pe, qe});
  }
  for (const auto& l : lines) {
    for (Dart x : {l.p_int, l.q_int}) {
      if (b.is_connected(as_port(x))) b.disconnect(as_port(x));
      if (b.is_connected(ext(x))) b.disconnect(ext(x));
    }
  }
  for (const auto& w : outside) wire(b, w.from, w.to, oriented);
  for (const auto& w : inside) wire(b, w.from, w.to, oriented);
  return finish(b, d);
}

bool is_kink(const Diagram& d, int c) {
  const auto& s = d.crossings().at(c).slots;
  for (int k = 0; k < 4; ++k) {
    if (s[k] == s[(k + 1) % 4]) return true;
  }
  return false;
}

bool is_removable_bigon(const Diagram& d, const Face& f) {
  if (f.darts.size() != 2) return false;
  FaceEdge e0 = face_edge(d, f, 0);
  FaceEdge e1 = face_edge(d, f, 1);
  if (e0.dep.crossing == e1.dep.crossing) return false;
  return (e0.dep.slot % 2) == (e0.arr.slot % 2) && e0.label != e1.label;
}

const Face& face_at(const std::vector<Face>& fs, int i) {
  if (i < 0 || i >= static_cast<int>(fs.size())) throw InputError("face " + std::to_string(i) + " does not exist");
  return fs[i];
}

}  // namespace

Diagram apply_reidemeister(const Diagram& d, const ReidemeisterSite& site) {
  switch (site.move) {
    case Move::R1Plus: return add_kink(d, site.arc, true, site.variant);
    case Move::R1Minus: return add_kink(d, site.arc, false, site.variant);
    case Move::R2: {
      auto fs = faces(d);
      return add_bigon(d, face_at(fs, site.face), site.edge_a, site.edge_b, site.a_over);
    }
    case Move::R3: {
      auto fs = faces(d);
      return triangle_move(d, face_at(fs, site.face));
    }
    case Move::R1Undo: {
      if (site.crossing < 0 || site.crossing >= d.crossing_count() || !is_kink(d, site.crossing)) {
        throw InputError("crossing does not carry a removable kink");
      }
      DiagramBuilder b = DiagramBuilder::from_diagram(d);
      b.dissolve(site.crossing);
      return finish(b, d);
    }
    case Move::R2Undo: {
      auto fs = faces(d);
      const Face& f = face_at(fs, site.face);
      if (!is_removable_bigon(d, f)) throw InputError("face is not a removable bigon");
      DiagramBuilder b = DiagramBuilder::from_diagram(d);
      b.dissolve(f.darts[0].crossing);
      b.dissolve(f.darts[1].crossing);
      return finish(b, d);
    }
  }
  throw InputError("unknown move");
}

std::vector<ReidemeisterSite> reidemeister_sites(const Diagram& d, Move move) {
  std::vector<ReidemeisterSite> out;
  switch (move) {
    case Move::R1Plus:
    case Move::R1Minus:
      for (int arc = d.free_loops() > 0 ? 0 : 1; arc <= d.arc_count(); ++arc) {
        for (int v = 0; v < 2; ++v) out.push_back({move, arc, v});
      }
      break;
    case Move::R2: {
      auto fs = faces(d);
      for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        int n = static_cast<int>(fs[fi].darts.size());
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i == j || face_edge(d, fs[fi], i).label == face_edge(d, fs[fi], j).label) continue;
            for (bool over : {true, false}) {
              ReidemeisterSite s;
              s.move = move;
              s.face = fi;
              s.edge_a = i;
              s.edge_b = j;
              s.a_over = over;
              out.push_back(s);
            }
          }
        }
      }
      break;
    }
    case Move::R3: {
      auto fs = faces(d);
      for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        std::array<TriangleLine, 3> lines;
        if (triangle_lines(d, fs[fi], lines)) {
          ReidemeisterSite s;
          s.move = move;
          s.face = fi;
          out.push_back(s);
        }
      }
      break;
    }
    case Move::R1Undo:
      for (int c = 0; c < d.crossing_count(); ++c) {
        if (is_kink(d, c)) {
          ReidemeisterSite s;
          s.move = move;
          s.crossing = c;
          out.push_back(s);
        }
      }
      break;
    case Move::R2Undo: {
      auto fs = faces(d);
      for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        if (is_removable_bigon(d, fs[fi])) {
          ReidemeisterSite s;
          s.move = move;
          s.face = fi;
          out.push_back(s);
        }
      }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  std::pair<std::vector<Crossing>, int> run() {
    std::vector<Crossing> xs;
    int loops = 0;
    skip_sep();
    bool wrapped = false;
    if (peek_word("PD")) {
      take_word("PD");
      skip_ws();
      expect('[');
      wrapped = true;
    }
    while (true) {
      skip_sep();
      if (at_end()) break;
      if (wrapped && peek() == ']') {
        advance();
        skip_sep();
        if (!at_end()) fail("unexpected text after PD[...]");
        wrapped = false;
        break;
      }
      if (peek_word("Loop")) {
        take_word("Loop");
        skip_ws();
        expect('[');
        skip_ws();
        expect(']');
        ++loops;
        continue;
      }
      if (peek() != 'X') fail("expected 'X[' or 'Loop[]'");
      advance();
      skip_ws();
      expect('[');
      Crossing x;
      for (int k = 0; k < 4; ++k) {
        skip_ws();
        x.slots[k] = read_int();
        skip_ws();
        if (k < 3) expect(',');
      }
      expect(']');
      xs.push_back(x);
    }
    if (wrapped) fail("missing closing ']' for PD[");
    return {std::move(xs), loops};
  }

 private:
  int read_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected arc label");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) fail("arc label too large");
      advance();
    }
    return static_cast<int>(v);
  }
  bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }
  void take_word(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  void skip_sep() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',')) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Signs implied by "slot 0 is the incoming under-strand", or nullopt when the
// code does not admit a consistent orientation under that convention.
std::optional<std::vector<int>> infer_signs(const Diagram& u) {
  const int n = u.crossing_count();
  std::vector<std::array<int, 4>> dir(n, {0, 0, 0, 0});  // +1 in, -1 out
  std::vector<std::vector<bool>> used(n, std::vector<bool>(4, false));
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (used[c][s]) continue;
      auto w = walk(u, Dart{c, s});
      int fwd = 0, back = 0;
      for (Dart e : w) {
        used[e.crossing][e.slot] = used[e.crossing][(e.slot + 2) % 4] = true;
        if (e.slot == 0) ++fwd;
        if (e.slot == 2) ++back;
      }
      if (fwd > 0 && back > 0) return std::nullopt;
      bool forward = back == 0;
      for (Dart e : w) {
        dir[e.crossing][e.slot] = forward ? 1 : -1;
        dir[e.crossing][(e.slot + 2) % 4] = forward ? -1 : 1;
      }
    }
  }
  std::vector<int> signs(n);
  for (int c = 0; c < n; ++c) signs[c] = dir[c][3] > 0 ? 1 : -1;
  return signs;
}

}  // namespace

Diagram parse_pd(std::string_view text, int extra_free_loops) {
  auto [xs, loops] = PdParser(text).run();
  Diagram unoriented(xs, loops + extra_free_loops);
  auto signs = infer_signs(unoriented);
  if (!signs) return unoriented;
  return Diagram(std::move(xs), loops + extra_free_loops, std::move(signs));
}

std::string emit_pd(const Diagram& d) {
  std::string out;
  for (const auto& x : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(x.slots[0]) + "," + std::to_string(x.slots[1]) + "," +
           std::to_string(x.slots[2]) + "," + std::to_string(x.slots[3]) + "]";
  }
  for (int k = 0; k < d.free_loops(); ++k) {
    if (!out.empty()) out += ' ';
    out += "Loop[]";
  }
  return out;
}

std::string emit_gauss(const Diagram& d) {
  if (!d.is_oriented()) throw InputError("Gauss code requires an oriented diagram");
  if (components(d) != 1) throw InputError("Gauss code is emitted for knots only");
  if (d.crossing_count() == 0) return "";
  Dart start = d.darts_of(1)[0];
  if (d.is_outgoing(start)) start = d.darts_of(1)[1];
  std::string out;
  for (Dart e : walk(d, start)) {
    if (!out.empty()) out += ' ';
    out += e.slot % 2 == 1 ? 'O' : 'U';
    out += std::to_string(e.crossing + 1);
    out += d.signs()[e.crossing] > 0 ? '+' : '-';
  }
  return out;
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings()) j["crossings"].push_back(x.slots);
  j["arc_count"] = d.arc_count();
  j["free_loops"] = d.free_loops();
  j["components"] = components(d);
  if (d.is_oriented()) {
    j["signs"] = d.signs();
    j["writhe"] = writhe(d);
  } else {
    j["signs"] = nullptr;
    j["writhe"] = nullptr;
  }
  return j;
}

}  // namespace gpretzel
