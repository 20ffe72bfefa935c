#pragma once

// Surface syntax for elements:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*          juxtaposition multiplies
//   factor := atom ['^' ['-'] int]
//   atom   := int | 'q' | 'p' | 'T' | 'L[' int ']' | 'W[' int ']'
//           | '(' expr ')' | 'qbr(' expr ',' expr ';' expr ',' expr ')'
// Whitespace is ignored. Products are evaluated as a left fold.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qw22/algebra.hpp"

namespace qw22 {

struct Expression {
  enum class Kind {
    integer,
    q,
    p,
    generator,
    product,
    sum,
    difference,
    negation,
    power,
    qbracket
  };

  Kind kind = Kind::integer;
  Integer value;            // integer
  GeneratorSymbol gen;      // generator
  std::int64_t exponent = 0;  // power
  std::vector<Expression> children;

  /// Prefix form, e.g. (product L[2] L[1]).
  std::string to_string() const;
};

/// Throws ParseError with a 1-based line and column, or ArithmeticBoundError
/// for generator indices beyond the cap.
Expression parse_expression(std::string_view text);

/// Evaluates in the given deformation. `p` needs the generalized profile;
/// negative powers need a unit (a signed monomial scalar times a T-power).
Element evaluate(const Expression& e, Deformation profile = Deformation::standard);

/// parse_expression followed by evaluate.
Element parse_element(std::string_view text,
                      Deformation profile = Deformation::standard);

}  // namespace qw22
