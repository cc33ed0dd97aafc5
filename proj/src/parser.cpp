#include "pcurv/parser.hpp"

#include <cctype>
#include <stdexcept>

#include "pcurv/errors.hpp"

namespace pcurv {

namespace {

// Exponents are bounded to keep a typo from allocating the universe.
constexpr unsigned long kMaxExponent = 1u << 20;

RatFun rf_const(const Rational& q) {
  RatFun f;
  if (q != 0) f.num = RatPoly(std::vector<Rational>{q});
  return f;
}

RatFun rf_add(const RatFun& a, const RatFun& b) {
  return RatFun{a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFun rf_sub(const RatFun& a, const RatFun& b) {
  return RatFun{a.num * b.den - b.num * a.den, a.den * b.den};
}

RatFun rf_mul(const RatFun& a, const RatFun& b) {
  return RatFun{a.num * b.num, a.den * b.den};
}

RatFun rf_div(const RatFun& a, const RatFun& b) {
  if (b.num.is_zero()) throw ZeroDenominator();
  return RatFun{a.num * b.den, a.den * b.num};
}

RatFun rf_neg(const RatFun& a) { return RatFun{-a.num, a.den}; }

RatFun rf_pow(RatFun base, unsigned long e) {
  RatFun acc = rf_const(Rational(1));
  while (e > 0) {
    if (e & 1) acc = rf_mul(acc, base);
    e >>= 1;
    if (e > 0) base = rf_mul(base, base);
  }
  return acc;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFun run() {
    RatFun f = expr();
    skip_ws();
    if (!eof() && peek() == ';') {
      ++pos_;
      RatFun den = expr();
      skip_ws();
      f = rf_div(f, den);
    }
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return f;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                      peek() == '\r'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos_);
  }

  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    RatFun f = term();
    if (neg) f = rf_neg(f);
    for (;;) {
      if (accept('+'))
        f = rf_add(f, term());
      else if (accept('-'))
        f = rf_sub(f, term());
      else
        return f;
    }
  }

  RatFun term() {
    RatFun f = factor();
    for (;;) {
      if (accept('*'))
        f = rf_mul(f, factor());
      else if (accept('/'))
        f = rf_div(f, factor());
      else
        return f;
    }
  }

  RatFun factor() {
    skip_ws();
    if (accept('-')) return rf_neg(factor());
    RatFun f = atom();
    if (accept('^')) {
      const unsigned long e = natural_small();
      f = rf_pow(f, e);
    }
    return f;
  }

  RatFun atom() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFun f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == 'x') {
      ++pos_;
      RatFun f;
      f.num = RatPoly(std::vector<Rational>{Rational(0), Rational(1)});
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return rf_const(Rational(natural_big()));
    fail("expected a number, 'x', or '('");
  }

  Integer natural_big() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    return Integer(digits);
  }

  unsigned long natural_small() {
    const std::size_t at = pos_;
    const Integer n = natural_big();
    if (n > static_cast<long>(kMaxExponent))
      throw SyntaxError("exponent too large", at);
    return mpz_get_ui(n.get_mpz_t());
  }
};

}  // namespace

RatFun parse_ratfun(const std::string& input) {
  Parser p(input);
  RatFun f = p.run();
  if (f.den.is_zero()) throw ZeroDenominator();  // defensive; rf_div guards
  return f;
}

IntPoly parse_intpoly(const std::string& input) {
  const RatFun f = parse_ratfun(input);
  if (f.den.degree() != 0)
    throw std::invalid_argument("input is not a polynomial");
  const RatPoly q = scalar_mul(f.num, Rational(Rational(1) / f.den[0]));
  std::vector<Integer> c(q.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (denominator(q[i]) != 1)
      throw std::invalid_argument(
          "polynomial must have integer coefficients");
    c[i] = numerator(q[i]);
  }
  return IntPoly(std::move(c));
}

std::string to_string(const RatFun& f, const std::string& var) {
  if (f.num.is_zero()) return "0";
  const std::string num = to_string(f.num, var);
  if (f.den.degree() == 0 && f.den[0] == 1) return num;
  return "(" + num + ") / (" + to_string(f.den, var) + ")";
}

}  // namespace pcurv
