#include "doctest.h"

#include <algorithm>

#include "gpretzel/construct.hpp"
#include "gpretzel/errors.hpp"
#include "gpretzel/invariants.hpp"

using namespace gpretzel;

namespace {

const TwistConvention kConv = default_calibration().twist;

int sum_abs_twists(const GraphProjection& g, const std::vector<int>& p) {
  int s = 0;
  for (int v = 0; v < g.vertex_count(); ++v) s += std::abs(p[v]) * (g.valence(v) - 1);
  return s;
}

}  // namespace

TEST_CASE("twist tangles") {
  Tangle t = twist_tangle(8, 1, kConv);
  CHECK(t.crossing_count() == 7);
  auto perm = t.permutation();
  // One layer moves every strand one place cyclically.
  for (int k = 0; k < 8; ++k) CHECK(std::count(perm.begin(), perm.end(), k) == 1);
  CHECK(twist_tangle(3, 3, kConv).permutation() == std::vector<int>{0, 1, 2});
  CHECK(twist_tangle(4, -2, kConv).crossing_count() == 6);
  CHECK(twist_tangle(4, 0, kConv).crossing_count() == 0);
  Tangle inv = twist_tangle(5, 1, kConv).inverse();
  CHECK(inv.word() == twist_tangle(5, -1, kConv).word());
}

TEST_CASE("projection validation") {
  // Half-edge used twice.
  CHECK_THROWS_AS(GraphProjection({{0, {0, 1}}, {1, {1}}}, {{0, 1}}, {}), InputError);
  // Interleaving edges without over/under data.
  CHECK_THROWS_AS(GraphProjection({{0, {0}}, {1, {2}}, {2, {1}}, {3, {3}}}, {{0, 1}, {2, 3}}, {}), InputError);
  CHECK_NOTHROW(GraphProjection({{0, {0}}, {1, {2}}, {2, {1}}, {3, {3}}}, {{0, 1}, {2, 3}}, {{0, 1, std::nullopt, std::nullopt}}));
}

TEST_CASE("projection JSON round trip") {
  GraphProjection g = preset_k4(K4Drawing::Planar, true);
  GraphProjection h = GraphProjection::from_json(g.to_json());
  CHECK(h.to_json() == g.to_json());
  CHECK(g.crossings().size() == 3);
  CHECK_THROWS_AS(GraphProjection::from_json(nlohmann::json::parse(R"({"vertices": 3})")), InputError);
}

TEST_CASE("crossing count of graph-pretzel builds") {
  for (const char* name : {"theta2", "theta:3", "theta:4", "ngon:3", "ngon:4", "k4"}) {
    GraphProjection g = *projection_preset(name);
    std::vector<int> p;
    for (int v = 0; v < g.vertex_count(); ++v) p.push_back((v * 5 + 2) % 7 - 3);
    Diagram d = build_graph_pretzel(g, {p});
    CAPTURE(name);
    CHECK(d.crossing_count() == 2 * static_cast<int>(g.crossings().size()) + sum_abs_twists(g, p));
    CHECK(is_planar(d));
  }
}

TEST_CASE("family diagrams") {
  for (int n = 0; n <= 4; ++n) {
    Diagram d = build_kn(n);
    CHECK(components(d) == 1);
    CHECK(d.crossing_count() == 6 * n + 22);
    CHECK(writhe(d) == 2 * n - 2);
    CHECK(is_planar(d));
  }
  CHECK_THROWS_AS(build_kn(-1), InputError);
}

TEST_CASE("default calibration is among the candidates that pass") {
  auto cands = calibrate();
  CHECK(std::find(cands.begin(), cands.end(), default_calibration()) != cands.end());
  CHECK(cands.size() == 2);
}

TEST_CASE("k4 twists are assigned by vertex id") {
  GraphProjection g = preset_k4(K4Drawing::Planar, true);
  TwistSpec t = twists_by_id(g, {10, 20, 30, 40});
  for (int v = 0; v < 4; ++v) CHECK(t.params[v] == 10 * g.vertices()[v].id);
  CHECK(permute_params({{-2, 2, -4, 3}}, {0, 1, 2, 3}) == build_kn(1));
  CHECK_THROWS_AS(permute_params({{1, 2, 3, 4}}, {0, 0, 1, 2}), InputError);
}

TEST_CASE("mirror projection is an involution") {
  GraphProjection g = preset_k4(K4Drawing::Planar, true);
  CHECK(mirror_projection(mirror_projection(g)).to_json() == g.to_json());
}

TEST_CASE("torus and pretzel builders") {
  CHECK(components(build_torus_braid_closure(2, 3)) == 1);
  CHECK(components(build_torus_braid_closure(2, 4)) == 2);
  CHECK(components(build_torus_braid_closure(3, 3)) == 3);
  CHECK(writhe(build_torus_braid_closure(3, 4)) == 8);
  Diagram p = build_classical_pretzel({1, 1, 1});
  CHECK(p.crossing_count() == 3);
  CHECK(components(p) == 1);
  CHECK(components(build_classical_pretzel({2, 2})) == 2);
}

TEST_CASE("presets by name") {
  CHECK(projection_preset("theta:5")->edge_count() == 5);
  CHECK(projection_preset("ngon:4")->vertex_count() == 4);
  CHECK_FALSE(projection_preset("cube").has_value());
  CHECK(is_family_preset("kn:3"));
  CHECK(family_index("kn:3") == 3);
  CHECK_THROWS_AS(family_index("kn:x"), InputError);
}
