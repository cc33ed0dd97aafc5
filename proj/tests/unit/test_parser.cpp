// Expression parsing for rational functions: grammar coverage, exactness of
// the field arithmetic, error positions, and string round trips.

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include <pcurv/errors.hpp>
#include <pcurv/integer.hpp>
#include <pcurv/parser.hpp>
#include <pcurv/poly.hpp>

using namespace pcurv;

namespace {

IntPoly ip(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

// Value equality of two parsed fractions: cross-multiplied comparison,
// independent of representation.
bool same_value(const RatFun& f, const RatFun& g) {
  return f.num * g.den == g.num * f.den;
}

bool parses_to(const std::string& s, const std::string& t) {
  return same_value(parse_ratfun(s), parse_ratfun(t));
}

}  // namespace

TEST_CASE("polynomials and precedence") {
  const RatFun f = parse_ratfun("1+2*x^2");
  CHECK(f.den == RatPoly(Rational(1)));
  CHECK(f.num == to_rat(ip({1, 0, 2})));

  // Unary minus binds around the whole power: -x^2 = -(x^2).
  CHECK(parse_ratfun("-x^2").num == to_rat(ip({0, 0, -1})));
  CHECK(parses_to("2-x", "-(x-2)"));
  CHECK(parses_to("(x+1)^3", "x^3+3*x^2+3*x+1"));
  CHECK(parses_to("x^0", "1"));
  CHECK(parses_to("2^5", "32"));
  CHECK(parses_to(" 1\t+ 2 *  x ", "2*x+1"));  // whitespace is free
  CHECK(parses_to("+x", "x"));                 // leading plus
  CHECK(parses_to("--x", "x"));                // factor := '-' factor
}

TEST_CASE("division is exact field arithmetic") {
  CHECK(parses_to("3/2*x", "(3*x)/2"));  // '*' and '/' associate left
  CHECK(parses_to("1/(1/x)", "x"));
  CHECK(parses_to("(x^2-1)/(x-1)", "(x+1)"));  // same rational function
  CHECK(parses_to("1/2/3", "1/6"));
  const RatFun q = parse_ratfun("(2*x+1)/(x^2+x+1)");
  CHECK(q.num == to_rat(ip({1, 2})));
  CHECK(q.den == to_rat(ip({1, 1, 1})));
}

TEST_CASE("two-part form P ; Q") {
  const RatFun f = parse_ratfun("x^2-3*x+2 ; 2*x");
  CHECK(f.num == to_rat(ip({2, -3, 1})));
  CHECK(f.den == to_rat(ip({0, 2})));
  CHECK(parses_to("1;x", "1/x"));
  CHECK_THROWS_AS(parse_ratfun("1;0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_ratfun("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_ratfun("1;2;3"), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun(";x"), SyntaxError);
}

TEST_CASE("syntax errors carry a sensible position") {
  CHECK_THROWS_AS(parse_ratfun(""), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun("x+"), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun("(x"), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun("y"), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun("x^(2)"), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun("x^"), SyntaxError);
  CHECK_THROWS_AS(parse_ratfun("2x"), SyntaxError);  // implicit product
  try {
    parse_ratfun("x+*3");
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.position >= 2);
    CHECK(e.position <= 4);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  // The exponent cap rejects absurd powers with the position of the number.
  CHECK_THROWS_AS(parse_ratfun("x^1048577"), SyntaxError);
  CHECK_NOTHROW(parse_ratfun("x^64"));
}

TEST_CASE("integer-polynomial parsing") {
  CHECK(parse_intpoly("2*x^2-6*x+4") == ip({4, -6, 2}));
  CHECK(parse_intpoly("(2*x+2)/2") == ip({1, 1}));
  CHECK(parse_intpoly("-5") == ip({-5}));
  // Constant denominators must divide every coefficient.
  CHECK_THROWS_AS(parse_intpoly("x/2+1/3"), std::invalid_argument);
  // Nonconstant denominators are not polynomials at all.
  CHECK_THROWS_AS(parse_intpoly("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_intpoly("x+"), SyntaxError);
}

TEST_CASE("string round trips") {
  for (const std::string s : {"(3*x-4)/(2*x^2-6*x+4)", "x", "-x^3+x-1",
                              "1/2", "x^2-3818929", "(x+2)/(2*x^2+x-1)"}) {
    const RatFun f = parse_ratfun(s);
    const RatFun back = parse_ratfun(to_string(f));
    CHECK(same_value(f, back));
  }
  CHECK(to_string(ip({2, -3, 1})) == "x^2 - 3*x + 2");
  CHECK(to_string(IntPoly()) == "0");
  CHECK(to_string(ip({0, 1}), "w") == "w");
}
