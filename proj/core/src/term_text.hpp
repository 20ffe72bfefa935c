#pragma once

#include <sstream>
#include <string>

#include "qw22/laurent.hpp"

namespace qw22::detail {

// One "coeff * body" term joined by " + " / " - ". Monomial coefficients carry
// their sign into the joiner and are omitted when equal to one; multi-term
// coefficients are parenthesized. A unit body prints the coefficient alone.
inline void append_poly_term(std::ostringstream& os, bool first,
                             const LaurentPoly& c, const std::string& body,
                             bool body_is_unit) {
  bool negative = false;
  std::string mag;
  bool mag_is_one = false;
  if (c.is_monomial()) {
    negative = c.terms()[0].second < 0;
    const LaurentPoly m = negative ? -c : c;
    mag = m.to_string();
    mag_is_one = m == LaurentPoly::one(c.profile());
  } else {
    mag = "(" + c.to_string() + ")";
  }
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (body_is_unit) {
    os << mag;
  } else if (mag_is_one) {
    os << body;
  } else {
    os << mag << " * " << body;
  }
}

}  // namespace qw22::detail
