#include "gpretzel/laurent.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gpretzel/errors.hpp"

namespace gpretzel {

char var_symbol(Var v) noexcept {
  switch (v) {
    case Var::A: return 'A';
    case Var::q: return 'q';
    case Var::z: return 'z';
    case Var::t: return 't';
  }
  return '?';
}

LaurentPoly LaurentPoly::constant(Var var, const Integer& c) {
  return monomial(var, c, 0);
}

LaurentPoly LaurentPoly::monomial(Var var, const Integer& c,
                                  std::int64_t scaled_exponent) {
  LaurentPoly p(var);
  p.add_term(scaled_exponent, c);
  return p;
}

LaurentPoly LaurentPoly::loop_value() {
  LaurentPoly p(Var::A);
  p.add_term(2, -1);
  p.add_term(-2, -1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Integer LaurentPoly::coefficient(std::int64_t scaled_exponent) const {
  auto it = terms_.find(scaled_exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw InputError("degree of the zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw InputError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::value_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(std::int64_t scaled_exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(scaled_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_same_var(const LaurentPoly& other,
                                   const char* op) const {
  if (var_ != other.var_) {
    throw InputError(std::string("variable mismatch in ") + op + ": " +
                     var_symbol(var_) + " vs " + var_symbol(other.var_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_var(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_var(other, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_var(b, "mul");
  LaurentPoly r(a.var_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t scaled_delta) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + scaled_delta, c);
  return r;
}

LaurentPoly LaurentPoly::scaled_by(const Integer& c) const {
  LaurentPoly r(var_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(var_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

std::string exponent_text(std::int64_t scaled, int scale) {
  std::int64_t g = std::gcd(scaled < 0 ? -scaled : scaled, std::int64_t{scale});
  std::int64_t num = scaled / g;
  std::int64_t den = scale / g;
  std::string s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var_symbol(var_);
    if (e != scale()) out += "^" + exponent_text(e, scale());
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Var var) : text_(text), var_(var) {}

  LaurentPoly run() {
    LaurentPoly result(var_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
    }
    return result;
  }

 private:
  void parse_term(LaurentPoly& acc, int sign) {
    Integer coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits());
      skip_ws();
      if (peek() == '*') {
        advance();
        skip_ws();
        expect_var();
      } else if (peek() == var_symbol(var_)) {
        expect_var();
      } else {
        acc.add_term(0, coeff * sign);
        return;
      }
    } else {
      expect_var();
    }
    std::int64_t scaled = acc.scale();
    skip_ws();
    if (peek() == '^') {
      advance();
      skip_ws();
      scaled = read_exponent(acc.scale());
    }
    acc.add_term(scaled, coeff * sign);
  }

  std::int64_t read_exponent(int scale) {
    bool braced = false;
    if (peek() == '{' || peek() == '(') {
      braced = true;
      advance();
      skip_ws();
    }
    std::int64_t s = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') s = -1;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::int64_t num = std::stoll(read_digits());
    std::int64_t den = 1;
    if (peek() == '/') {
      advance();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent denominator");
      den = std::stoll(read_digits());
      if (den == 0) fail("zero exponent denominator");
    }
    if (braced) {
      skip_ws();
      if (peek() != '}' && peek() != ')') fail("unclosed exponent");
      advance();
    }
    if ((num * scale) % den != 0) {
      fail("exponent " + std::to_string(s * num) + "/" + std::to_string(den) +
           " not representable for variable " + var_symbol(var_));
    }
    return s * num * scale / den;
  }

  void expect_var() {
    if (peek() != var_symbol(var_)) {
      fail(std::string("expected variable '") + var_symbol(var_) + "'");
    }
    advance();
  }

  std::string read_digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      d += peek();
      advance();
    }
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
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
  Var var_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, Var var) {
  return PolyParser(text, var).run();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly substitute_A_to_q(const LaurentPoly& p) {
  if (p.var() != Var::A) throw InputError("substitute_A_to_q expects a polynomial in A");
  LaurentPoly r(Var::q);
  // A^k = q^{-k/4}; q exponents are stored in quarters.
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

LaurentPoly invert_variable(const LaurentPoly& p) {
  LaurentPoly r(p.var());
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (p.var() != d.var()) throw InputError("variable mismatch in divide");
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  LaurentPoly quotient(p.var());
  LaurentPoly rem = p;
  const std::int64_t dtop = d.max_exponent();
  const std::int64_t dlow = d.min_exponent();
  const Integer& lead = d.terms().rbegin()->second;
  while (!rem.is_zero()) {
    std::int64_t rtop = rem.max_exponent();
    if (rtop - dtop < rem.min_exponent() - dlow) break;
    const Integer& rc = rem.terms().rbegin()->second;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) break;
    Integer c = rc / lead;
    std::int64_t shift = rtop - dtop;
    quotient.add_term(shift, c);
    rem -= d.shifted(shift).scaled_by(c);
  }
  if (!rem.is_zero()) throw InputError("polynomial division is not exact");
  return quotient;
}

}  // namespace gpretzel
