#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "smc/polynomial.hpp"

namespace smc {

// Text grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := '(' expr ')' | coeff | var ('^' nat)?
//   coeff  := nat ('/' posnat)?
// Whitespace is insignificant. Variables must be declared in the ring.
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse_poly: " + msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial parse_expr() {
    Polynomial sum = Polynomial::zero(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = (c == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = parse_term();
      sum = (sign < 0) ? sum - t : sum + t;
      first = false;
      char n = peek();
      if (n != '+' && n != '-') break;
    }
    return sum;
  }

  Polynomial parse_term() {
    Polynomial prod = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        prod = prod * parse_factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        prod = prod * parse_factor();  // implicit multiplication
      } else {
        break;
      }
    }
    return prod;
  }

  Polynomial parse_factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_coeff();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = parse_ident();
      int idx = ring_->var_index(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      int exp = 1;
      if (peek() == '^') {
        ++pos_;
        exp = parse_nat("exponent");
      }
      return Polynomial::variable(ring_, idx, exp);
    }
    fail("expected factor");
  }

  Polynomial parse_coeff() {
    Int num(parse_digits("integer"));
    if (peek() == '/') {
      ++pos_;
      Int den(parse_digits("denominator"));
      if (den == 0) fail("zero denominator");
      return Polynomial::constant(ring_, Rational(num, den));
    }
    return Polynomial::constant(ring_, Rational(num));
  }

  std::string parse_digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  int parse_nat(const char* what) {
    std::string d = parse_digits(what);
    if (d.size() > 3) fail(std::string(what) + " too large");
    return std::stoi(d);
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

namespace detail {

inline void format_rational(std::ostream& os, const Rational& r) {
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
}

}  // namespace detail

// Canonical rendering: terms in ascending ring order, monomial factors in
// ring variable order, unit coefficients suppressed. parse(format(p)) == p.
inline std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const PolyRing& ring = *p.ring();
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& t = *it;
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      detail::format_rational(os, c);
      wrote = true;
    }
    for (int i = 0; i < ring.nvars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring.var(i).name;
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace smc
