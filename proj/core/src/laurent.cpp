#include "qw22/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "qw22/errors.hpp"

namespace qw22 {

using detail::checked_add;
using detail::checked_mul;

std::string_view to_string(VarProfile profile) {
  return profile == VarProfile::one_var ? "one-var" : "two-var";
}

LaurentPoly LaurentPoly::constant(const Integer& c, VarProfile profile) {
  return monomial(c, 0, 0, profile);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t q_exp,
                                  std::int64_t p_exp, VarProfile profile) {
  if (profile == VarProfile::one_var && p_exp != 0) {
    throw UnsupportedProfileError("p appears in a one-variable polynomial");
  }
  LaurentPoly r(profile);
  if (c != 0) r.terms_.emplace_back(Monomial{q_exp, p_exp}, c);
  return r;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms,
                                    VarProfile profile) {
  LaurentPoly r(profile);
  r.terms_ = std::move(terms);
  r.canonicalize();
  return r;
}

void LaurentPoly::canonicalize() {
  if (profile_ == VarProfile::one_var) {
    for (const auto& [m, c] : terms_) {
      if (m.p_exp != 0) {
        throw UnsupportedProfileError("p appears in a one-variable polynomial");
      }
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  terms_ = std::move(merged);
}

void LaurentPoly::require_same_profile(const LaurentPoly& other) const {
  if (profile_ != other.profile_) {
    throw UnsupportedProfileError(
        "mixing one-variable and two-variable polynomials");
  }
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// Sorted merge of two canonical term lists; sign = +1 or -1 for the rhs.
std::vector<LaurentPoly::Term> merge_terms(
    const std::vector<LaurentPoly::Term>& a,
    const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Integer(-b[j].second));
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].second + b[j].second)
                           : Integer(a[i].second - b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_profile(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_profile(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_profile(b);
  LaurentPoly r(a.profile_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.terms_.emplace_back(
          Monomial{checked_add(ma.q_exp, mb.q_exp),
                   checked_add(ma.p_exp, mb.p_exp)},
          ca * cb);
    }
  }
  if (a.terms_.size() > 1 && b.terms_.size() > 1) r.canonicalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::shifted(std::int64_t q_shift,
                                 std::int64_t p_shift) const {
  if (profile_ == VarProfile::one_var && p_shift != 0) {
    throw UnsupportedProfileError("p shift of a one-variable polynomial");
  }
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.first.q_exp = checked_add(t.first.q_exp, q_shift);
    t.first.p_exp = checked_add(t.first.p_exp, p_shift);
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return LaurentPoly(profile_);
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    if (!is_unit()) {
      throw UnsupportedInverseError(
          "negative power of a non-unit Laurent polynomial");
    }
    const auto& [m, c] = terms_[0];
    std::int64_t e = exponent;
    Integer sign = (c < 0 && (e % 2 != 0)) ? -1 : 1;
    return monomial(sign, checked_mul(m.q_exp, e), checked_mul(m.p_exp, e),
                    profile_);
  }
  if (is_monomial()) {
    const auto& [m, c] = terms_[0];
    Integer cp;
    mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(),
               static_cast<unsigned long>(exponent));
    return monomial(cp, checked_mul(m.q_exp, exponent),
                    checked_mul(m.p_exp, exponent), profile_);
  }
  LaurentPoly result = one(profile_);
  LaurentPoly base = *this;
  std::int64_t e = exponent;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute_p(std::int64_t q_power) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    out.emplace_back(
        Monomial{checked_add(m.q_exp, checked_mul(m.p_exp, q_power)), 0}, c);
  }
  return from_terms(std::move(out), VarProfile::one_var);
}

LaurentPoly LaurentPoly::as_two_var() const {
  LaurentPoly r = *this;
  r.profile_ = VarProfile::two_var;
  return r;
}

namespace {

Rational rational_pow(const Rational& base, std::int64_t e) {
  Rational b = base;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  Rational result = 1;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& q_val,
                               const std::optional<Rational>& p_val) const {
  if (q_val == 0) throw DomainError("evaluation at q = 0");
  if (profile_ == VarProfile::two_var) {
    if (!p_val) throw DomainError("two-variable polynomial needs a value for p");
    if (*p_val == 0) throw DomainError("evaluation at p = 0");
  } else if (p_val) {
    throw UnsupportedProfileError("p given for a one-variable polynomial");
  }
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = Rational(c) * rational_pow(q_val, m.q_exp);
    if (m.p_exp != 0) term *= rational_pow(*p_val, m.p_exp);
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

namespace {

void append_power(std::ostringstream& os, char var, std::int64_t e) {
  os << var;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    const bool has_q = m.q_exp != 0;
    const bool has_p = m.p_exp != 0;
    if (!has_q && !has_p) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    if (has_q) append_power(os, 'q', m.q_exp);
    if (has_q && has_p) os << '*';
    if (has_p) append_power(os, 'p', m.p_exp);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& poly) {
  return os << poly.to_string();
}

namespace {

// poly   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' ['-'] digits)?
// atom   := digits | 'q' | 'p' | '(' poly ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, VarProfile profile)
      : text_(text), profile_(profile) {}

  LaurentPoly run() {
    LaurentPoly r = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t parse_exponent() {
    bool neg = accept('-');
    Integer v = parse_digits();
    if (!v.fits_slong_p()) fail("exponent out of range");
    std::int64_t e = v.get_si();
    return neg ? -e : e;
  }

  LaurentPoly parse_poly() {
    LaurentPoly acc(profile_);
    bool neg = accept('-');
    LaurentPoly t = parse_term();
    acc = neg ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly parse_term() {
    LaurentPoly acc = parse_factor();
    while (accept('*')) acc *= parse_factor();
    return acc;
  }

  LaurentPoly parse_factor() {
    LaurentPoly base = parse_atom();
    if (accept('^')) return base.pow(parse_exponent());
    return base;
  }

  LaurentPoly parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = parse_poly();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'q') {
      ++pos_;
      return LaurentPoly::q(profile_);
    }
    if (c == 'p') {
      if (profile_ != VarProfile::two_var) fail("'p' in a one-variable polynomial");
      ++pos_;
      return LaurentPoly::p();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LaurentPoly::constant(parse_digits(), profile_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  VarProfile profile_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, VarProfile profile) {
  return PolyParser(text, profile).run();
}

LaurentPoly q_int(std::int64_t n, VarProfile profile) {
  LaurentPoly r(profile);
  if (n == 0) return r;
  const std::int64_t k = n > 0 ? n : -n;
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(k));
  if (profile == VarProfile::one_var) {
    // q^{k-1} + q^{k-3} + ... + q^{1-k}, antisymmetric in n
    const Integer sign = n > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < k; ++i) {
      terms.emplace_back(Monomial{k - 1 - 2 * i, 0}, sign);
    }
    return LaurentPoly::from_terms(std::move(terms), profile);
  }
  // (q^k - p^k)/(q - p) = sum_{i<k} q^i p^{k-1-i};
  // for n = -k: (q^-k - p^-k)/(q - p) = -(qp)^-k [k]
  for (std::int64_t i = 0; i < k; ++i) {
    if (n > 0) {
      terms.emplace_back(Monomial{i, k - 1 - i}, 1);
    } else {
      terms.emplace_back(Monomial{i - k, -1 - i}, -1);
    }
  }
  return LaurentPoly::from_terms(std::move(terms), profile);
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

bool q_identity_check(std::int64_t m, std::int64_t n) {
  const LaurentPoly qm = q_int(m);
  const LaurentPoly qn = q_int(n);
  const bool difference =
      qm.shifted(n) - qn.shifted(m) == q_int(detail::checked_sub(m, n));
  const bool sum = qm.shifted(-n) + qn.shifted(m) == q_int(checked_add(m, n));
  return difference && sum;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto bad = [&] { return ParseError("invalid rational '" + s + "'", 1, 1); };
  if (s.empty()) throw bad();
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) {
      return std::isdigit(c);
    });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw DomainError("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qw22
