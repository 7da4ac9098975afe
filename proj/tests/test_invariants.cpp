#include "doctest.h"

#include "gpretzel/construct.hpp"
#include "gpretzel/errors.hpp"
#include "gpretzel/invariants.hpp"

using namespace gpretzel;

namespace {

LaurentPoly A(long c, int e) { return LaurentPoly::monomial(Var::A, c, e); }
LaurentPoly Q(const char* s) { return LaurentPoly::parse(s, Var::q); }
LaurentPoly T(const char* s) { return LaurentPoly::parse(s, Var::t); }

const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

// Independent expansion of the closed form: coefficient lists written out.
LaurentPoly closed_form_by_hand(int n) {
  LaurentPoly tail(Var::q);
  const std::pair<int, int> terms[] = {{0, 1}, {-1, -1}, {-3, 1}, {-4, -2}, {-5, 1}, {-7, -1}, {-8, 1}};
  for (auto [e, c] : terms) tail.add_term(4 * e, c);
  LaurentPoly head = LaurentPoly::monomial(Var::q, 1, 4 * (3 * n + 2)) - LaurentPoly::monomial(Var::q, 1, 8);
  return head * tail + LaurentPoly::constant(Var::q, 1);
}

}  // namespace

TEST_CASE("bracket of small diagrams") {
  CHECK(bracket_fast(Diagram::unknot()).is_one());
  CHECK(bracket_fast(parse_pd("Loop[] Loop[]")) == LaurentPoly::loop_value());
  // Hopf link: <H> = -A^4 - A^-4
  CHECK(bracket_statesum(parse_pd("X[4,1,3,2] X[2,3,1,4]")) == A(-1, 4) + A(-1, -4));
  CHECK(bracket_fast(parse_pd("X[4,1,3,2] X[2,3,1,4]")) == A(-1, 4) + A(-1, -4));
  // One-crossing kinks: -A^3 or -A^-3
  LaurentPoly k1 = bracket_statesum(parse_pd("X[1,1,2,2]"));
  LaurentPoly k2 = bracket_statesum(parse_pd("X[1,2,2,1]"));
  CHECK(((k1 == A(-1, 3) && k2 == A(-1, -3)) || (k1 == A(-1, -3) && k2 == A(-1, 3))));
}

TEST_CASE("Jones of the trefoil and figure eight") {
  CHECK(jones(parse_pd(kTrefoil)) == Q("-q^4 + q^3 + q"));
  CHECK(jones(parse_pd(kFigureEight)) == Q("q^2 - q + 1 - q^-1 + q^-2"));
  CHECK(jones(mirror(parse_pd(kTrefoil))) == Q("-q^-4 + q^-3 + q^-1"));
}

TEST_CASE("state sum is the same for every worker count") {
  Diagram d = build_classical_pretzel({-2, 3, 5});
  LaurentPoly one = bracket_statesum(d, 16, 1);
  for (int w : {2, 3, 7}) CHECK(bracket_statesum(d, 16, w) == one);
  CHECK(bracket_fast(d) == one);
  CHECK_THROWS_AS(bracket_statesum(d, 4), InputError);
}

TEST_CASE("frontier order visits every crossing once") {
  Diagram d = build_kn(2);
  auto order = frontier_order(d);
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < d.crossing_count(); ++k) CHECK(sorted[k] == k);
  CHECK(frontier_width(d) <= 12);
}

TEST_CASE("disjoint union multiplies by the loop value") {
  Diagram d = parse_pd(kFigureEight);
  CHECK(bracket_fast(d.with_extra_free_loops(1)) == bracket_fast(d) * LaurentPoly::loop_value());
}

TEST_CASE("Alexander polynomial") {
  CHECK(alexander(parse_pd(kTrefoil)) == T("t - 1 + t^-1"));
  CHECK(alexander(build_classical_pretzel({1, 1, 1})) == T("t - 1 + t^-1"));
  CHECK(alexander(parse_pd(kFigureEight)) == T("-t + 3 - t^-1"));
  CHECK(alexander(Diagram::unknot()).is_one());
  CHECK(alexander(build_classical_pretzel({-3, 5, 7})).is_one());
  CHECK_THROWS_AS(alexander(parse_pd("X[4,1,3,2] X[2,3,1,4]")), InputError);
  CHECK_THROWS_AS(alexander(parse_pd(kTrefoil).forget_orientation()), InputError);
}

TEST_CASE("Conway from Alexander") {
  CHECK(conway_from_alexander(T("t - 1 + t^-1")) == LaurentPoly::parse("1 + z^2", Var::z));
  CHECK(conway_from_alexander(T("-t + 3 - t^-1")) == LaurentPoly::parse("1 - z^2", Var::z));
  CHECK(conway_from_alexander(T("1")).is_one());
}

TEST_CASE("closed form Jones") {
  CHECK(closed_form_jones(0).is_one());
  CHECK(closed_form_jones(1) == Q("q^5 - q^4 - q + 2 - q^-1 + q^-2 + q^-5 - q^-6"));
  for (int n = 0; n <= 10; ++n) CHECK(closed_form_jones(n) == closed_form_by_hand(n));
}

TEST_CASE("family Jones and Alexander") {
  for (int n = 0; n <= 2; ++n) {
    Diagram d = build_kn(n);
    CHECK(jones(d) == closed_form_by_hand(n));
    CHECK(alexander(d).is_one());
  }
}

TEST_CASE("recurrences and their negative controls") {
  CHECK(bracket_recurrence_check(2));
  CHECK(bracket_recurrence_check(3));
  LaurentPoly b0 = family_bracket(0), b1 = family_bracket(1), b2 = family_bracket(2);
  CHECK(bracket_recurrence_holds(b2, b1, b0));
  LaurentPoly bad = b2;
  bad.add_term(b2.max_exponent(), 1);
  CHECK_FALSE(bracket_recurrence_holds(bad, b1, b0));
  CHECK(conway_recurrence_check(3));
  LaurentPoly one = LaurentPoly::constant(Var::z, 1);
  CHECK_FALSE(conway_recurrence_holds(one, one, LaurentPoly::monomial(Var::z, 1, 1), one));
  CHECK_THROWS_AS(bracket_recurrence_check(1), InputError);
}
