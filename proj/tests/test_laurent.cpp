#include "doctest.h"

#include "gpretzel/errors.hpp"
#include "gpretzel/laurent.hpp"

using namespace gpretzel;

namespace {

LaurentPoly A(long c, int e) { return LaurentPoly::monomial(Var::A, c, e); }
LaurentPoly P(const char* s, Var v = Var::A) { return LaurentPoly::parse(s, v); }

}  // namespace

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = A(3, 2) + A(-3, 2);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  CHECK(p.to_string() == "0");
}

TEST_CASE("ring axioms on sample polynomials") {
  LaurentPoly a = P("A^3 - 2*A^-1 + 5");
  LaurentPoly b = P("-A^2 + A^-4");
  LaurentPoly c = P("7*A - A^-7");
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a - a == LaurentPoly(Var::A));
  CHECK(a * LaurentPoly::constant(Var::A, 1) == a);
}

TEST_CASE("loop value squared") {
  // (-A^2 - A^-2)^2 = A^4 + 2 + A^-4
  CHECK(LaurentPoly::loop_value().pow(2) == A(1, 4) + A(2, 0) + A(1, -4));
  CHECK(LaurentPoly::loop_value().pow(0).is_one());
}

TEST_CASE("coefficients grow past 64 bits") {
  LaurentPoly p = A(1, 1) + A(1, 0);
  LaurentPoly big = p.pow(80);
  Integer binom = 1;
  for (int k = 1; k <= 40; ++k) binom = binom * (81 - k) / k;
  CHECK(big.coefficient(40) == binom);
  CHECK(big.value_at_one() == Integer(1) << 80);
}

TEST_CASE("text round trip") {
  for (const char* s : {"q^5 - q^4 - q + 2 - q^-1 + q^-2 + q^-5 - q^-6", "-q^-1/2 - q^-5/2", "1", "0"}) {
    CHECK(P(s, Var::q).to_string() == s);
  }
  CHECK(P("-A^4 - A^-4").to_string() == "-A^4 - A^-4");
  CHECK(P("t - 1 + t^-1", Var::t).to_string() == "t - 1 + t^-1");
  CHECK_THROWS_AS(P("A^"), ParseError);
  CHECK_THROWS_AS(P("A^1/4"), InputError);
}

TEST_CASE("mixed variables are rejected") {
  CHECK_THROWS_AS(A(1, 1) + LaurentPoly::monomial(Var::q, 1, 4), InputError);
}

TEST_CASE("A to q substitution") {
  // A^4 -> q^-1, A^-2 -> q^1/2
  CHECK(substitute_A_to_q(A(1, 4)) == P("q^-1", Var::q));
  CHECK(substitute_A_to_q(A(-2, -2)).to_string() == "-2*q^1/2");
}

TEST_CASE("inversion and exact division") {
  LaurentPoly a = P("A^3 - 2*A^-1 + 5");
  CHECK(invert_variable(invert_variable(a)) == a);
  CHECK(invert_variable(a) == P("A^-3 - 2*A + 5"));
  LaurentPoly d = LaurentPoly::loop_value();
  CHECK(divide_exact(a * d, d) == a);
  CHECK_THROWS_AS(divide_exact(a, d), InputError);
}
