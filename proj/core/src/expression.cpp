#include "qw22/expression.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "qw22/errors.hpp"

namespace qw22 {

std::string Expression::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::integer:
      return value.get_str();
    case Kind::q:
      return "q";
    case Kind::p:
      return "p";
    case Kind::generator:
      return gen.to_string();
    case Kind::power:
      os << "(^ " << children[0].to_string() << ' ' << exponent << ')';
      return os.str();
    case Kind::product:
      os << "(product";
      break;
    case Kind::sum:
      os << "(sum";
      break;
    case Kind::difference:
      os << "(difference";
      break;
    case Kind::negation:
      os << "(negate";
      break;
    case Kind::qbracket:
      os << "(qbr";
      break;
  }
  for (const auto& c : children) os << ' ' << c.to_string();
  os << ')';
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size()
               ? "expected '" + std::string(1, c) + "' but found '" +
                     std::string(1, text_[pos_]) + "'"
               : "expected '" + std::string(1, c) + "' at end of input");
    }
  }

  bool lookahead_word(std::string_view w) {
    skip_ws();
    return text_.substr(pos_, w.size()) == w;
  }

  bool starts_atom() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'p' ||
           c == 'T' || c == 'L' || c == 'W' || c == '(';
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t small_int() {
    const bool negative = accept('-');
    const Integer v(digits());
    const Integer signed_v = negative ? Integer(-v) : v;
    if (!signed_v.fits_slong_p()) {
      throw ArithmeticBoundError("integer " + signed_v.get_str() +
                                 " does not fit in 64 bits");
    }
    return signed_v.get_si();
  }

  Expression node(Expression::Kind kind, std::vector<Expression> children) {
    Expression e;
    e.kind = kind;
    e.children = std::move(children);
    return e;
  }

  Expression parse_expr() {
    Expression acc;
    if (accept('-')) {
      acc = node(Expression::Kind::negation, {parse_term()});
    } else {
      acc = parse_term();
    }
    for (;;) {
      if (accept('+')) {
        acc = node(Expression::Kind::sum, {std::move(acc), parse_term()});
      } else if (accept('-')) {
        acc = node(Expression::Kind::difference, {std::move(acc), parse_term()});
      } else {
        return acc;
      }
    }
  }

  Expression parse_term() {
    Expression acc = parse_factor();
    for (;;) {
      if (accept('*')) {
        acc = node(Expression::Kind::product, {std::move(acc), parse_factor()});
      } else if (starts_atom()) {
        acc = node(Expression::Kind::product, {std::move(acc), parse_factor()});
      } else {
        return acc;
      }
    }
  }

  Expression parse_factor() {
    Expression base = parse_atom();
    if (!accept('^')) return base;
    Expression e = node(Expression::Kind::power, {std::move(base)});
    e.exponent = small_int();
    return e;
  }

  GeneratorSymbol indexed(GenKind kind) {
    expect('[');
    const std::size_t at = pos_;
    const std::int64_t n = small_int();
    if (n > kIndexCap || n < -kIndexCap) {
      pos_ = at;
      throw ArithmeticBoundError("index " + std::to_string(n) +
                                 " exceeds the cap 2^20");
    }
    expect(']');
    return kind == GenKind::L ? GeneratorSymbol::L(n) : GeneratorSymbol::W(n);
  }

  Expression parse_atom() {
    const char c = peek();
    Expression e;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = Expression::Kind::integer;
      e.value = Integer(digits());
      return e;
    }
    if (lookahead_word("qbr")) {
      pos_ += 3;
      expect('(');
      std::vector<Expression> parts;
      parts.push_back(parse_expr());
      expect(',');
      parts.push_back(parse_expr());
      expect(';');
      parts.push_back(parse_expr());
      expect(',');
      parts.push_back(parse_expr());
      expect(')');
      return node(Expression::Kind::qbracket, std::move(parts));
    }
    switch (c) {
      case 'q':
        ++pos_;
        e.kind = Expression::Kind::q;
        return e;
      case 'p':
        ++pos_;
        e.kind = Expression::Kind::p;
        return e;
      case 'T':
        ++pos_;
        e.kind = Expression::Kind::generator;
        e.gen = GeneratorSymbol::T();
        return e;
      case 'L':
      case 'W':
        ++pos_;
        e.kind = Expression::Kind::generator;
        e.gen = indexed(c == 'L' ? GenKind::L : GenKind::W);
        return e;
      case '(': {
        ++pos_;
        Expression inner = parse_expr();
        expect(')');
        return inner;
      }
      case '\0':
        fail("unexpected end of input");
      default:
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

LaurentPoly require_scalar(const Element& x, VarProfile vp) {
  if (!x.is_scalar()) {
    throw Error("q-bracket coefficients must be scalars, got " + x.to_string());
  }
  return x.scalar_part(vp);
}

Element invert_power(const Element& x, std::int64_t e) {
  if (x.size() == 1) {
    const auto& [w, c] = *x.terms().begin();
    if (w.is_torus() && c.is_unit()) {
      NormalWord t;
      t.t_exp = detail::checked_mul(w.t_exp, e);
      return Element::term(t, c.pow(e));
    }
  }
  throw UnsupportedInverseError("negative power of " + x.to_string() +
                                ", which is not a unit");
}

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

Element evaluate(const Expression& e, Deformation profile) {
  using K = Expression::Kind;
  const VarProfile vp = var_profile(profile);
  switch (e.kind) {
    case K::integer:
      return Element::scalar(LaurentPoly::constant(e.value, vp));
    case K::q:
      return Element::scalar(LaurentPoly::q(vp));
    case K::p:
      if (profile != Deformation::generalized) {
        throw UnsupportedProfileError("p needs the generalized profile");
      }
      return Element::scalar(LaurentPoly::p());
    case K::generator:
      return element_from(e.gen, profile);
    case K::product:
      return multiply(evaluate(e.children[0], profile),
                      evaluate(e.children[1], profile), profile);
    case K::sum:
      return evaluate(e.children[0], profile) + evaluate(e.children[1], profile);
    case K::difference:
      return evaluate(e.children[0], profile) - evaluate(e.children[1], profile);
    case K::negation:
      return -evaluate(e.children[0], profile);
    case K::power: {
      const Element base = evaluate(e.children[0], profile);
      if (e.exponent < 0) return invert_power(base, e.exponent);
      return power(base, e.exponent, profile);
    }
    case K::qbracket: {
      const Element x = evaluate(e.children[0], profile);
      const Element y = evaluate(e.children[1], profile);
      return q_bracket(x, y, require_scalar(evaluate(e.children[2], profile), vp),
                       require_scalar(evaluate(e.children[3], profile), vp),
                       profile);
    }
  }
  return {};
}

Element parse_element(std::string_view text, Deformation profile) {
  return evaluate(parse_expression(text), profile);
}

}  // namespace qw22
