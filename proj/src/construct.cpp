#include "gpretzel/construct.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "gpretzel/builder.hpp"
#include "gpretzel/errors.hpp"
#include "gpretzel/invariants.hpp"

namespace gpretzel {

// ---------------------------------------------------------------------------
// Tangles

Tangle::Tangle(int strands, std::vector<BraidLetter> word) : strands_(strands), word_(std::move(word)) {
  if (strands_ < 1) throw InputError("a tangle needs at least one strand");
  for (const auto& l : word_) {
    if (l.position < 0 || l.position + 1 >= strands_) {
      throw InputError("braid letter at position " + std::to_string(l.position) + " outside " +
                       std::to_string(strands_) + " strands");
    }
  }
}

std::vector<int> Tangle::permutation() const {
  std::vector<int> at(strands_);  // at[pos] = starting strand now at pos
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : word_) std::swap(at[l.position], at[l.position + 1]);
  std::vector<int> perm(strands_);
  for (int pos = 0; pos < strands_; ++pos) perm[at[pos]] = pos;
  return perm;
}

Tangle Tangle::inverse() const {
  std::vector<BraidLetter> w(word_.rbegin(), word_.rend());
  for (auto& l : w) l.left_over = !l.left_over;
  return Tangle(strands_, std::move(w));
}

namespace {

Tangle twist_layer(int r, const TwistConvention& conv) {
  std::vector<BraidLetter> w;
  if (conv.direction == WrapDirection::LeftToRight) {
    for (int i = 0; i + 1 < r; ++i) w.push_back({i, conv.wrapper_over});
  } else {
    for (int i = r - 2; i >= 0; --i) w.push_back({i, !conv.wrapper_over});
  }
  return Tangle(r, std::move(w));
}

}  // namespace

Tangle twist_tangle(int r, int n, const TwistConvention& conv) {
  if (r < 1) throw InputError("twist tangle needs r >= 1, got " + std::to_string(r));
  Tangle layer = twist_layer(r, conv);
  if (n < 0) layer = layer.inverse();
  std::vector<BraidLetter> w;
  for (int k = 0; k < std::abs(n); ++k) w.insert(w.end(), layer.word().begin(), layer.word().end());
  return Tangle(r, std::move(w));
}

namespace {

// Braid crossing ports, counterclockwise from an under end.
struct BraidPorts {
  int nw, sw, se, ne;
};

BraidPorts braid_ports(bool left_over) {
  return left_over ? BraidPorts{3, 0, 1, 2} : BraidPorts{0, 1, 2, 3};
}

// Wires `top` (left to right) through the braid and returns the ports left
// dangling at the bottom.
std::vector<Port> embed_braid(DiagramBuilder& b, const Tangle& t, std::vector<Port> current,
                              bool directed) {
  auto link = [&](Port from, Port to) {
    if (directed) {
      b.connect_directed(from, to);
    } else {
      b.connect(from, to);
    }
  };
  for (const auto& l : t.word()) {
    int x = b.add_crossing();
    BraidPorts p = braid_ports(l.left_over);
    link(current[l.position], Port{x, p.nw});
    link(current[l.position + 1], Port{x, p.ne});
    current[l.position] = Port{x, p.sw};
    current[l.position + 1] = Port{x, p.se};
  }
  return current;
}

}  // namespace

// ---------------------------------------------------------------------------
// Projections

namespace {

// Arcs [a,b] and [c,d] drawn as semicircles meet at x = (cd - ab) / (c + d - a - b).
struct Fraction {
  long long num;
  long long den;  // > 0
};

Fraction meet_x(int a, int b, int c, int d) {
  long long num = static_cast<long long>(c) * d - static_cast<long long>(a) * b;
  long long den = static_cast<long long>(c) + d - a - b;
  return den < 0 ? Fraction{-num, -den} : Fraction{num, den};
}

bool interleave(int a, int b, int c, int d) { return (a < c && c < b && b < d) || (c < a && a < d && d < b); }

}  // namespace

GraphProjection::GraphProjection(std::vector<ProjectionVertex> vertices,
                                 std::vector<std::array<int, 2>> edges,
                                 std::vector<ProjectionCrossing> crossings)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), crossings_(std::move(crossings)) {
  std::map<int, int> pos;
  std::set<int> ids;
  int next = 0;
  for (const auto& v : vertices_) {
    if (!ids.insert(v.id).second) throw InputError("duplicate vertex id " + std::to_string(v.id));
    for (int h : v.halfedges) {
      if (h < 0) throw InputError("negative half-edge id " + std::to_string(h));
      if (!pos.emplace(h, next++).second) {
        throw InputError("half-edge " + std::to_string(h) + " listed at more than one vertex slot");
      }
    }
  }
  const int max_h = pos.empty() ? -1 : pos.rbegin()->first;
  position_.assign(max_h + 1, -1);
  for (auto [h, p] : pos) position_[h] = p;

  std::vector<int> used(max_h + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (int h : edges_[e]) {
      if (h < 0 || h > max_h || position_[h] < 0) {
        throw InputError("edge " + std::to_string(e) + " uses unknown half-edge " + std::to_string(h));
      }
      if (++used[h] > 1) throw InputError("half-edge " + std::to_string(h) + " belongs to two edges");
    }
  }
  for (auto [h, p] : pos) {
    if (used[h] != 1) throw InputError("half-edge " + std::to_string(h) + " belongs to no edge");
  }

  auto span = [&](int e) {
    int a = position_[edges_[e][0]];
    int b = position_[edges_[e][1]];
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  std::set<std::pair<int, int>> given;
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    const auto& x = crossings_[k];
    if (x.over_edge < 0 || x.over_edge >= edge_count() || x.under_edge < 0 || x.under_edge >= edge_count() ||
        x.over_edge == x.under_edge) {
      throw InputError("crossing " + std::to_string(k) + " names invalid edges");
    }
    auto key = std::minmax(x.over_edge, x.under_edge);
    if (!given.insert(key).second) {
      throw InputError("edges " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                       " cross more than once");
    }
    auto [a, b] = span(x.over_edge);
    auto [c, d] = span(x.under_edge);
    if (!interleave(a, b, c, d)) {
      throw InputError("edges " + std::to_string(x.over_edge) + " and " + std::to_string(x.under_edge) +
                       " do not interleave on the spine and cannot cross");
    }
  }
  for (int e = 0; e < edge_count(); ++e) {
    for (int f = e + 1; f < edge_count(); ++f) {
      auto [a, b] = span(e);
      auto [c, d] = span(f);
      if (interleave(a, b, c, d) && !given.count({e, f})) {
        throw InputError("edges " + std::to_string(e) + " and " + std::to_string(f) +
                         " cross in the spine layout but no over/under is given");
      }
    }
  }

  along_edge_.assign(edges_.size(), {});
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    along_edge_[crossings_[k].over_edge].push_back(static_cast<int>(k));
    along_edge_[crossings_[k].under_edge].push_back(static_cast<int>(k));
  }
  for (int e = 0; e < edge_count(); ++e) {
    auto [a, b] = span(e);
    auto key = [&](int k) {
      const auto& x = crossings_[k];
      int other = x.over_edge == e ? x.under_edge : x.over_edge;
      auto [c, d] = span(other);
      return meet_x(a, b, c, d);
    };
    auto& list = along_edge_[e];
    std::sort(list.begin(), list.end(), [&](int p, int q) {
      Fraction fp = key(p);
      Fraction fq = key(q);
      return fp.num * fq.den < fq.num * fp.den;
    });
    if (position_[edges_[e][0]] > position_[edges_[e][1]]) std::reverse(list.begin(), list.end());
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
      const auto& x = crossings_[list[i]];
      const auto& pos_given = x.over_edge == e ? x.pos_over : x.pos_under;
      if (pos_given && *pos_given != i) {
        throw InputError("crossing " + std::to_string(list[i]) + " is number " + std::to_string(i) +
                         " along edge " + std::to_string(e) + ", not " + std::to_string(*pos_given));
      }
    }
  }
}

int GraphProjection::valence(int vertex_index) const {
  return static_cast<int>(vertices_.at(vertex_index).halfedges.size());
}

int GraphProjection::spine_position(int halfedge) const { return position_.at(halfedge); }

const std::vector<int>& GraphProjection::crossings_along(int edge) const { return along_edge_.at(edge); }

GraphProjection GraphProjection::from_json(const nlohmann::json& j) {
  try {
    std::vector<ProjectionVertex> vs;
    for (const auto& v : j.at("vertices")) {
      vs.push_back({v.at("id").get<int>(), v.at("halfedges").get<std::vector<int>>()});
    }
    std::vector<std::array<int, 2>> es;
    for (const auto& e : j.at("edges")) es.push_back(e.get<std::array<int, 2>>());
    std::vector<ProjectionCrossing> xs;
    if (j.contains("crossings")) {
      for (const auto& x : j.at("crossings")) {
        ProjectionCrossing c;
        c.over_edge = x.at("over_edge").get<int>();
        c.under_edge = x.at("under_edge").get<int>();
        if (x.contains("pos_over") && !x.at("pos_over").is_null()) c.pos_over = x.at("pos_over").get<int>();
        if (x.contains("pos_under") && !x.at("pos_under").is_null()) c.pos_under = x.at("pos_under").get<int>();
        xs.push_back(c);
      }
    }
    return GraphProjection(std::move(vs), std::move(es), std::move(xs));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed projection JSON: ") + e.what());
  }
}

nlohmann::json GraphProjection::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices_) j["vertices"].push_back({{"id", v.id}, {"halfedges", v.halfedges}});
  j["edges"] = edges_;
  j["crossings"] = nlohmann::json::array();
  for (int k = 0; k < static_cast<int>(crossings_.size()); ++k) {
    const auto& x = crossings_[k];
    auto idx = [&](int e) {
      const auto& l = along_edge_[e];
      return static_cast<int>(std::find(l.begin(), l.end(), k) - l.begin());
    };
    j["crossings"].push_back({{"over_edge", x.over_edge},
                              {"under_edge", x.under_edge},
                              {"pos_over", idx(x.over_edge)},
                              {"pos_under", idx(x.under_edge)}});
  }
  return j;
}

GraphProjection mirror_projection(const GraphProjection& g) {
  std::vector<ProjectionVertex> vs(g.vertices().rbegin(), g.vertices().rend());
  for (auto& v : vs) std::reverse(v.halfedges.begin(), v.halfedges.end());
  std::vector<ProjectionCrossing> xs;
  for (const auto& x : g.crossings()) xs.push_back({x.over_edge, x.under_edge, std::nullopt, std::nullopt});
  return GraphProjection(std::move(vs), g.edges(), std::move(xs));
}

GraphProjection preset_theta(int edges) {
  if (edges < 1) throw InputError("theta graph needs at least one edge");
  ProjectionVertex left{0, {}};
  ProjectionVertex right{1, {}};
  std::vector<std::array<int, 2>> es;
  for (int k = 0; k < edges; ++k) {
    es.push_back({2 * k, 2 * k + 1});
    left.halfedges.insert(left.halfedges.begin(), 2 * k);
    right.halfedges.push_back(2 * k + 1);
  }
  return GraphProjection({left, right}, es, {});
}

GraphProjection preset_ngon(int sides) {
  if (sides < 1) throw InputError("n-gon needs at least one side");
  if (sides == 1) return GraphProjection({{0, {0, 1}}}, {{0, 1}}, {});
  std::vector<ProjectionVertex> vs;
  std::vector<std::array<int, 2>> es;
  const int closing = sides - 1;
  for (int j = 0; j < sides; ++j) es.push_back({2 * j, 2 * j + 1});
  // Side j joins vertex j (half-edge 2j) to vertex j+1 (2j+1); the closing
  // side runs over everything from vertex 0 (2*closing) to the last vertex.
  vs.push_back({0, {2 * closing, 0}});
  for (int j = 1; j + 1 < sides; ++j) vs.push_back({j, {2 * (j - 1) + 1, 2 * j}});
  vs.push_back({closing, {2 * (closing - 1) + 1, 2 * closing + 1}});
  return GraphProjection(std::move(vs), std::move(es), {});
}

GraphProjection preset_k4(K4Drawing drawing, bool over) {
  std::vector<std::array<int, 2>> es = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}};
  std::vector<ProjectionVertex> vs;
  std::vector<ProjectionCrossing> xs;
  auto cross = [&](int top, int bottom) {
    ProjectionCrossing x;
    x.over_edge = top;
    x.under_edge = bottom;
    xs.push_back(x);
  };
  if (drawing == K4Drawing::Planar) {
    vs = {{1, {2, 4, 0}}, {2, {1, 8, 6}}, {4, {9, 5, 11}}, {3, {7, 10, 3}}};
    for (int e : {2, 4, 5}) over ? cross(3, e) : cross(e, 3);
  } else {
    vs = {{1, {4, 2, 0}}, {2, {1, 8, 6}}, {3, {7, 3, 10}}, {4, {11, 9, 5}}};
    over ? cross(1, 4) : cross(4, 1);
  }
  return GraphProjection(std::move(vs), std::move(es), std::move(xs));
}

// ---------------------------------------------------------------------------
// Graph-pretzel construction

Diagram build_graph_pretzel(const GraphProjection& g, const TwistSpec& t, const Calibration& cal) {
  if (static_cast<int>(t.params.size()) != g.vertex_count()) {
    throw InputError("twist list has " + std::to_string(t.params.size()) + " entries for " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  DiagramBuilder b;
  const int max_h = [&] {
    int m = -1;
    for (const auto& v : g.vertices()) {
      for (int h : v.halfedges) m = std::max(m, h);
    }
    return m;
  }();
  // Junction port 0 faces the edge drawing, port 1 the twist braid.
  std::vector<int> top(max_h + 1, -1);
  std::vector<int> bottom(max_h + 1, -1);
  for (const auto& v : g.vertices()) {
    for (int h : v.halfedges) {
      top[h] = b.add_junction();
      bottom[h] = b.add_junction();
    }
  }

  // Crossings of the drawing above the spine and of its reflection below.
  const int nx = static_cast<int>(g.crossings().size());
  std::vector<int> top_node(nx);
  std::vector<int> bottom_node(nx);
  for (int k = 0; k < nx; ++k) {
    top_node[k] = b.add_crossing();
    bottom_node[k] = b.add_crossing();
  }
  auto left_end = [&](int e) {
    return std::min(g.spine_position(g.edges()[e][0]), g.spine_position(g.edges()[e][1]));
  };
  // Ports of edge e at crossing k: {toward left end, toward right end}.
  // With `first` the arc whose left end lies further left and `second` the
  // other, the counterclockwise order is
  //   above: [second_right, first_left, second_left, first_right]
  //   below: [first_right, second_left, first_left, second_right]
  // rotated by one when the strand at positions 0 and 2 is the over-strand.
  enum Role { FirstLeft, FirstRight, SecondLeft, SecondRight };
  auto edge_ports = [&](int k, int e, bool upper) -> std::pair<int, int> {
    const auto& x = g.crossings()[k];
    int other = x.over_edge == e ? x.under_edge : x.over_edge;
    int first = left_end(e) < left_end(other) ? e : other;
    bool first_over = x.over_edge == first;
    if (!upper && cal.twist.mirror_copy_switched) first_over = !first_over;
    std::array<Role, 4> ring = upper ? std::array{SecondRight, FirstLeft, SecondLeft, FirstRight}
                                     : std::array{FirstRight, SecondLeft, FirstLeft, SecondRight};
    bool first_at_even = !upper;
    int shift = first_at_even == first_over ? 1 : 0;
    auto find = [&](Role role) {
      int i = static_cast<int>(std::find(ring.begin(), ring.end(), role) - ring.begin());
      return (i - shift + 4) % 4;
    };
    return e == first ? std::pair{find(FirstLeft), find(FirstRight)}
                      : std::pair{find(SecondLeft), find(SecondRight)};
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    int h_left = g.edges()[e][0];
    int h_right = g.edges()[e][1];
    std::vector<int> order = g.crossings_along(e);
    if (g.spine_position(h_left) > g.spine_position(h_right)) {
      std::swap(h_left, h_right);
      std::reverse(order.begin(), order.end());
    }
    for (bool upper : {true, false}) {
      const auto& nodes = upper ? top_node : bottom_node;
      const auto& ends = upper ? top : bottom;
      Port prev{ends[h_left], 0};
      for (int k : order) {
        auto [in, out] = edge_ports(k, e, upper);
        b.connect(prev, Port{nodes[k], in});
        prev = Port{nodes[k], out};
      }
      b.connect(prev, Port{ends[h_right], 0});
    }
  }

  for (int j = 0; j < g.vertex_count(); ++j) {
    const auto& hs = g.vertices()[j].halfedges;
    if (hs.empty()) continue;
    Tangle tw = twist_tangle(static_cast<int>(hs.size()), t.params[j], cal.twist);
    std::vector<Port> current;
    for (int h : hs) current.push_back(Port{top[h], 1});
    auto out = embed_braid(b, tw, std::move(current), false);
    for (std::size_t k = 0; k < hs.size(); ++k) b.connect(out[k], Port{bottom[hs[k]], 1});
  }

  Diagram d = b.finalize();
  if (!is_planar(d)) throw InternalError("graph-pretzel construction produced a non-planar map");
  return d;
}

const Calibration& default_calibration() {
  static const Calibration cal{{WrapDirection::RightToLeft, true, false}, K4Drawing::Planar, true};
  return cal;
}

std::vector<Calibration> calibrate() {
  std::vector<Calibration> found;
  const LaurentPoly target = closed_form_jones(1);
  for (auto drawing : {K4Drawing::Planar, K4Drawing::CrossedDiagonals}) {
    for (bool k4_over : {true, false}) {
      for (auto dir : {WrapDirection::RightToLeft, WrapDirection::LeftToRight}) {
        for (bool wrapper_over : {true, false}) {
          for (bool switched : {false, true}) {
            Calibration c{{dir, wrapper_over, switched}, drawing, k4_over};
            Diagram k0 = build_kn(0, c);
            if (components(k0) != 1 || !jones(k0).is_one()) continue;
            Diagram k1 = build_kn(1, c);
            if (components(k1) == 1 && jones(k1) == target) found.push_back(c);
          }
        }
      }
    }
  }
  return found;
}

std::string describe(const Calibration& cal) {
  std::string s = cal.k4_drawing == K4Drawing::Planar ? "k4=planar" : "k4=crossed";
  s += cal.k4_over ? "/over" : "/under";
  s += cal.twist.direction == WrapDirection::LeftToRight ? " wrap=left-to-right" : " wrap=right-to-left";
  s += cal.twist.wrapper_over ? "/over" : "/under";
  s += cal.twist.mirror_copy_switched ? " mirror-copy=switched" : " mirror-copy=same";
  return s;
}

namespace {

TwistSpec k4_params(const GraphProjection& g, const std::array<int, 4>& by_id) {
  TwistSpec t;
  for (const auto& v : g.vertices()) t.params.push_back(by_id.at(v.id - 1));
  return t;
}

}  // namespace

TwistSpec twists_by_id(const GraphProjection& g, const std::vector<int>& params) {
  if (static_cast<int>(params.size()) != g.vertex_count()) {
    throw InputError("expected " + std::to_string(g.vertex_count()) + " twist parameters, got " +
                     std::to_string(params.size()));
  }
  std::vector<int> ids;
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  TwistSpec t;
  for (int id : ids) {
    auto at = std::lower_bound(sorted.begin(), sorted.end(), id) - sorted.begin();
    t.params.push_back(params[at]);
  }
  return t;
}

Diagram build_kn(int n, const Calibration& cal) {
  if (n < 0) throw InputError("family index must be nonnegative");
  GraphProjection g = preset_k4(cal.k4_drawing, cal.k4_over);
  return build_graph_pretzel(g, k4_params(g, {-2, 2, -(3 * n + 1), 3}), cal);
}

Diagram permute_params(const TwistSpec& t, const std::array<int, 4>& sigma, const Calibration& cal) {
  if (t.params.size() != 4) throw InputError("K4 needs four twist parameters");
  std::array<bool, 4> seen{};
  std::array<int, 4> by_id{};
  for (int k = 0; k < 4; ++k) {
    if (sigma[k] < 0 || sigma[k] > 3 || seen[sigma[k]]) throw InputError("not a permutation of four");
    seen[sigma[k]] = true;
    by_id[k] = t.params[sigma[k]];
  }
  GraphProjection g = preset_k4(cal.k4_drawing, cal.k4_over);
  return build_graph_pretzel(g, k4_params(g, by_id), cal);
}

Diagram build_braid_closure(const Tangle& braid) {
  DiagramBuilder b;
  std::vector<int> closure;
  std::vector<Port> top;
  for (int k = 0; k < braid.strands(); ++k) {
    closure.push_back(b.add_junction());
    top.push_back(Port{closure.back(), 1});
  }
  auto bottom = embed_braid(b, braid, top, true);
  for (int k = 0; k < braid.strands(); ++k) b.connect_directed(bottom[k], Port{closure[k], 0});
  return b.finalize();
}

Diagram build_torus_braid_closure(int strands, int layers) {
  if (strands < 1) throw InputError("torus closure needs at least one strand");
  std::vector<BraidLetter> layer;
  for (int i = 0; i + 1 < strands; ++i) layer.push_back({i, false});
  Tangle one(strands, layer);
  if (layers < 0) one = one.inverse();
  std::vector<BraidLetter> w;
  for (int k = 0; k < std::abs(layers); ++k) w.insert(w.end(), one.word().begin(), one.word().end());
  return build_braid_closure(Tangle(strands, std::move(w)));
}

Diagram build_classical_pretzel(const std::vector<int>& params) {
  if (params.empty()) throw InputError("pretzel needs at least one column");
  DiagramBuilder b;
  const int cols = static_cast<int>(params.size());
  // Per column: top-left, top-right, bottom-left, bottom-right junctions;
  // port 1 faces the column.
  std::vector<std::array<int, 4>> j(cols);
  for (int c = 0; c < cols; ++c) {
    for (int& x : j[c]) x = b.add_junction();
    std::vector<BraidLetter> w(std::abs(params[c]), BraidLetter{0, params[c] < 0});
    auto out = embed_braid(b, Tangle(2, std::move(w)), {Port{j[c][0], 1}, Port{j[c][1], 1}}, false);
    b.connect(out[0], Port{j[c][2], 1});
    b.connect(out[1], Port{j[c][3], 1});
  }
  for (int c = 0; c < cols; ++c) {
    int next = (c + 1) % cols;
    b.connect(Port{j[c][1], 0}, Port{j[next][0], 0});
    b.connect(Port{j[c][3], 0}, Port{j[next][2], 0});
  }
  return b.finalize();
}

int bridge_upper_bound(const GraphProjection& g) { return g.edge_count(); }

namespace {

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto rest = name.substr(prefix.size());
  int v = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || p != rest.data() + rest.size()) {
    throw InputError("bad preset parameter in '" + std::string(name) + "'");
  }
  return v;
}

}  // namespace

std::optional<GraphProjection> projection_preset(std::string_view name) {
  if (name == "theta2") return preset_theta(2);
  if (name == "k4") return preset_k4(default_calibration().k4_drawing, default_calibration().k4_over);
  if (auto i = parse_suffix(name, "theta:")) return preset_theta(*i);
  if (auto i = parse_suffix(name, "ngon:")) return preset_ngon(*i);
  return std::nullopt;
}

bool is_family_preset(std::string_view name) { return name.substr(0, 3) == "kn:"; }

int family_index(std::string_view name) {
  auto n = parse_suffix(name, "kn:");
  if (!n) throw InputError("not a family preset: '" + std::string(name) + "'");
  if (*n < 0) throw InputError("family index must be nonnegative");
  return *n;
}

}  // namespace gpretzel
