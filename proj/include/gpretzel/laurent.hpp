#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace gpretzel {

using Integer = mpz_class;

/// Polynomial variables used by the invariants: Kauffman A, Jones q,
/// Conway z and Alexander t.
enum class Var { A, q, z, t };

/// Exponents of a variable are stored as integers in units of 1/scale.
/// A and z need integer powers only, q quarter powers (A = q^{-1/4}),
/// t half powers (links).
constexpr int exponent_scale(Var v) noexcept {
  switch (v) {
    case Var::A: return 1;
    case Var::q: return 4;
    case Var::t: return 2;
    case Var::z: return 1;
  }
  return 1;
}

char var_symbol(Var v) noexcept;

/// Exact single-variable Laurent polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Integer>;  // scaled exponent -> coeff

  explicit LaurentPoly(Var var = Var::A) : var_(var) {}

  static LaurentPoly constant(Var var, const Integer& c);
  /// c * var^(scaled_exponent / scale)
  static LaurentPoly monomial(Var var, const Integer& c,
                              std::int64_t scaled_exponent);
  /// -A^2 - A^-2, the value of a disjoint crossing-free circle.
  static LaurentPoly loop_value();

  Var var() const noexcept { return var_; }
  int scale() const noexcept { return exponent_scale(var_); }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of var^(scaled_exponent / scale); zero if absent.
  Integer coefficient(std::int64_t scaled_exponent) const;
  /// Requires !is_zero().
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// Sum of coefficients (value at var = 1).
  Integer value_at_one() const;

  /// Adds c * var^(scaled_exponent/scale) in place.
  void add_term(std::int64_t scaled_exponent, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplies by var^(scaled_delta / scale).
  LaurentPoly shifted(std::int64_t scaled_delta) const;
  LaurentPoly scaled_by(const Integer& c) const;
  LaurentPoly pow(unsigned k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Canonical text: descending exponents, e.g. "q^5 - q^4 + 2 - q^-1/4".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, Var var);

 private:
  void require_same_var(const LaurentPoly& other, const char* op) const;

  Var var_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// A^k -> q^{-k/4}.
LaurentPoly substitute_A_to_q(const LaurentPoly& p);
/// Negates every exponent (the mirror substitution var -> var^-1).
LaurentPoly invert_variable(const LaurentPoly& p);
/// Exact quotient p / d; throws InputError when d does not divide p.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

}  // namespace gpretzel
