#include "doctest.h"

#include "gpretzel/errors.hpp"
#include "gpretzel/diagram.hpp"

using namespace gpretzel;

namespace {

const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kHopf = "X[4,1,3,2] X[2,3,1,4]";

}  // namespace

TEST_CASE("parse and emit PD") {
  Diagram d = parse_pd(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.is_oriented());
  CHECK(emit_pd(d) == kTrefoil);
  CHECK(parse_pd(emit_pd(d)) == d);
  CHECK(parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]") == d);
  CHECK(parse_pd("Loop[] Loop[]").free_loops() == 2);
  CHECK(parse_pd(kTrefoil, 1).free_loops() == 1);
}

TEST_CASE("malformed PD is rejected") {
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,5,2,4] X[3,1,4,6]"), InputError);
  CHECK_THROWS_AS(parse_pd("X[1,1,1,1]"), InputError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,2,1]"), ParseError);
}

TEST_CASE("components and writhe") {
  Diagram t = parse_pd(kTrefoil);
  CHECK(components(t) == 1);
  CHECK(writhe(t) == 3);
  Diagram h = parse_pd(kHopf);
  CHECK(components(h) == 2);
  CHECK(std::abs(writhe(h)) == 2);
  CHECK(writhe(reverse_component(h, 0)) == -writhe(h));
  CHECK(components(Diagram::unknot()) == 1);
  CHECK_THROWS_AS(writhe(t.forget_orientation()), InputError);
}

TEST_CASE("mirror is an involution and negates writhe") {
  Diagram t = parse_pd(kTrefoil);
  CHECK(mirror(mirror(t)) == t);
  CHECK(writhe(mirror(t)) == -writhe(t));
}

TEST_CASE("Gauss code of the trefoil alternates") {
  std::string g = emit_gauss(parse_pd(kTrefoil));
  CHECK(g.size() > 0);
  int overs = 0;
  for (char c : g) overs += c == 'O';
  CHECK(overs == 3);
  CHECK_THROWS_AS(emit_gauss(parse_pd(kHopf)), InputError);
}

TEST_CASE("faces satisfy Euler's formula") {
  Diagram t = parse_pd(kTrefoil);
  CHECK(faces(t).size() == 5);
  CHECK(is_planar(t));
  CHECK(is_planar(parse_pd(kHopf)));
  // Gauss code O1 O2 U1 U2 (virtual trefoil) has no planar realisation.
  CHECK_FALSE(is_planar(parse_pd("X[2,4,3,1] X[3,1,4,2]")));
}

TEST_CASE("canonical relabelling keeps the diagram type") {
  Diagram t = parse_pd("X[2,6,3,5] X[4,2,5,1] X[6,4,1,3]");
  Diagram c = canonical(t);
  CHECK(components(c) == 1);
  CHECK(writhe(c) == writhe(t));
  CHECK(canonical(c) == c);
}

TEST_CASE("Reidemeister moves keep the diagram planar") {
  Diagram t = parse_pd(kTrefoil);
  for (Move m : {Move::R1Plus, Move::R1Minus, Move::R2, Move::R3}) {
    auto sites = reidemeister_sites(t, m);
    for (const auto& s : sites) {
      Diagram u = apply_reidemeister(t, s);
      CHECK(is_planar(u));
      CHECK(components(u) == 1);
    }
  }
  ReidemeisterSite kink;
  kink.move = Move::R1Plus;
  kink.arc = 1;
  Diagram k = apply_reidemeister(t, kink);
  CHECK(k.crossing_count() == 4);
  CHECK(writhe(k) == writhe(t) + 1);
  auto undo = reidemeister_sites(k, Move::R1Undo);
  REQUIRE_FALSE(undo.empty());
  CHECK(apply_reidemeister(k, undo[0]).crossing_count() == 3);
}

TEST_CASE("R2 then its undo restores the crossing count") {
  Diagram t = parse_pd(kTrefoil);
  auto sites = reidemeister_sites(t, Move::R2);
  REQUIRE_FALSE(sites.empty());
  Diagram u = apply_reidemeister(t, sites[0]);
  CHECK(u.crossing_count() == 5);
  auto undo = reidemeister_sites(u, Move::R2Undo);
  REQUIRE_FALSE(undo.empty());
  CHECK(apply_reidemeister(u, undo[0]).crossing_count() == 3);
}

TEST_CASE("JSON export") {
  auto j = to_json(parse_pd(kTrefoil));
  CHECK(j["components"] == 1);
  CHECK(j["writhe"] == 3);
  CHECK(j["crossings"].size() == 3);
}
