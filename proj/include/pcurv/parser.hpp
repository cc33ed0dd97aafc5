#ifndef PCURV_PARSER_HPP
#define PCURV_PARSER_HPP

/* Plain-text syntax for rational functions in one variable x:
     expr   := ['+'|'-'] term (('+'|'-') term)*
     term   := factor (('*'|'/') factor)*
     factor := '-' factor | atom ['^' natural]
     atom   := natural | 'x' | '(' expr ')'
   and the two-part input "P ; Q" stands for P/Q.  Whitespace is free; all
   arithmetic is exact rational-function arithmetic, so "3/2*x" and
   "(3*x)/2" agree.  Errors carry the offending input position. */

#include <string>

#include "pcurv/poly.hpp"

namespace pcurv {

// A raw parsed fraction; den is nonzero but the pair is not reduced.
struct RatFun {
  RatPoly num;
  RatPoly den{std::vector<Rational>{Rational(1)}};
};

// Throws SyntaxError on malformed input, ZeroDenominator when a division by
// the zero function occurs (including "P ; 0").
RatFun parse_ratfun(const std::string& input);

// Parses an expression that must denote a polynomial with integer
// coefficients (a constant denominator that divides every coefficient).
// Throws SyntaxError on malformed input, std::invalid_argument when the
// value is not an integer polynomial.
IntPoly parse_intpoly(const std::string& input);

std::string to_string(const RatFun& f, const std::string& var = "x");

}  // namespace pcurv

#endif
