#include "qw22/algebra.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "qw22/errors.hpp"
#include "term_text.hpp"

namespace qw22 {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::string_view to_string(Deformation profile) {
  return profile == Deformation::standard ? "standard" : "generalized";
}

Deformation parse_deformation(std::string_view name) {
  if (name == "standard") return Deformation::standard;
  if (name == "generalized") return Deformation::generalized;
  throw UnknownIdentifierError("unknown profile '" + std::string(name) + "'");
}

GeneratorSymbol GeneratorSymbol::L(std::int64_t n) {
  return {GenKind::L, detail::check_index(n)};
}

GeneratorSymbol GeneratorSymbol::W(std::int64_t n) {
  return {GenKind::W, detail::check_index(n)};
}

std::string GeneratorSymbol::to_string() const {
  switch (kind) {
    case GenKind::T:
      return "T";
    case GenKind::Tinv:
      return "T^-1";
    case GenKind::L:
      return "L[" + std::to_string(index) + "]";
    case GenKind::W:
      return "W[" + std::to_string(index) + "]";
  }
  return "?";
}

std::string to_string(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += g.to_string();
  }
  return out;
}

NormalWord NormalWord::torus_free() const {
  NormalWord r = *this;
  r.t_exp = 0;
  return r;
}

Word NormalWord::expand() const {
  Word w;
  const std::int64_t d = t_exp < 0 ? -t_exp : t_exp;
  const auto t = t_exp < 0 ? GeneratorSymbol::Tinv() : GeneratorSymbol::T();
  w.insert(w.end(), static_cast<std::size_t>(d), t);
  for (const auto& [idx, k] : l_block) {
    w.insert(w.end(), static_cast<std::size_t>(k), GeneratorSymbol{GenKind::L, idx});
  }
  for (const auto& [idx, k] : w_block) {
    w.insert(w.end(), static_cast<std::size_t>(k), GeneratorSymbol{GenKind::W, idx});
  }
  return w;
}

namespace {

void append_block(std::string& out, char name, const std::vector<Power>& block) {
  for (const auto& [idx, k] : block) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '[' + std::to_string(idx) + ']';
    if (k != 1) out += '^' + std::to_string(k);
  }
}

}  // namespace

std::string NormalWord::to_string() const {
  std::string out;
  if (t_exp == 1) {
    out = "T";
  } else if (t_exp != 0) {
    out = "T^" + std::to_string(t_exp);
  }
  append_block(out, 'L', l_block);
  append_block(out, 'W', w_block);
  return out.empty() ? "1" : out;
}

bool is_normal(const Word& word) {
  enum { kTorus, kL, kW } phase = kTorus;
  bool seen_t = false;
  bool seen_tinv = false;
  std::int64_t last = 0;
  for (const auto& g : word) {
    switch (g.kind) {
      case GenKind::T:
      case GenKind::Tinv:
        if (phase != kTorus) return false;
        (g.kind == GenKind::T ? seen_t : seen_tinv) = true;
        if (seen_t && seen_tinv) return false;
        break;
      case GenKind::L:
        if (phase == kW) return false;
        if (phase == kL && g.index < last) return false;
        phase = kL;
        last = g.index;
        break;
      case GenKind::W:
        if (phase == kW && g.index < last) return false;
        phase = kW;
        last = g.index;
        break;
    }
  }
  return true;
}

NormalWord to_normal_word(const Word& word) {
  if (!is_normal(word)) {
    throw std::invalid_argument("word is not in normal order: " + to_string(word));
  }
  NormalWord nw;
  for (const auto& g : word) {
    switch (g.kind) {
      case GenKind::T:
        ++nw.t_exp;
        break;
      case GenKind::Tinv:
        --nw.t_exp;
        break;
      case GenKind::L:
      case GenKind::W: {
        auto& block = g.kind == GenKind::L ? nw.l_block : nw.w_block;
        if (!block.empty() && block.back().index == g.index) {
          ++block.back().mult;
        } else {
          block.push_back({g.index, 1});
        }
        break;
      }
    }
  }
  return nw;
}

// ---------------------------------------------------------------- Element

Element Element::unit(VarProfile profile) {
  return term(NormalWord{}, LaurentPoly::one(profile));
}

Element Element::scalar(const LaurentPoly& c) { return term(NormalWord{}, c); }

Element Element::term(const NormalWord& word, const LaurentPoly& c) {
  Element x;
  x.add_term(word, c);
  return x;
}

bool Element::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

LaurentPoly Element::scalar_part(VarProfile profile) const {
  return coefficient(NormalWord{}, profile);
}

LaurentPoly Element::coefficient(const NormalWord& word, VarProfile profile) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? LaurentPoly(profile) : it->second;
}

void Element::add_term(const NormalWord& word, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element Element::scaled(const LaurentPoly& c) const {
  Element r;
  for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
  return r;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    detail::append_poly_term(os, first, c, w.to_string(), w.is_unit());
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& x) {
  return os << x.to_string();
}

void NumericElement::add_term(const NormalWord& word, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string NumericElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (w.is_unit()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << w.to_string();
    } else {
      os << mag.get_str() << " * " << w.to_string();
    }
  }
  return os.str();
}

Element element_from(const GeneratorSymbol& g, Deformation profile) {
  if (g.is_torus() && profile == Deformation::generalized) {
    throw UnsupportedProfileError(
        "T is not defined for the generalized deformation");
  }
  if (g.kind == GenKind::L || g.kind == GenKind::W) detail::check_index(g.index);
  return Element::term(to_normal_word(Word{g}),
                       LaurentPoly::one(var_profile(profile)));
}

Element element_from(const Word& w, Deformation profile) {
  return normalize(w, profile);
}

Element element_from(const LaurentPoly& scalar) { return Element::scalar(scalar); }

// ---------------------------------------------------------- rewrite engine

namespace {

struct Rewrite {
  Word replacement;  // replaces the reducible pair
  LaurentPoly coeff;
};

using Rewrites = std::vector<Rewrite>;

bool is_lw(const GeneratorSymbol& g) {
  return g.kind == GenKind::L || g.kind == GenKind::W;
}

// q-integer times q^shift: the bracket correction prefactors.
LaurentPoly shifted_q_int(std::int64_t n, std::int64_t q_shift,
                          std::int64_t p_shift, VarProfile vp) {
  return q_int(n, vp).shifted(q_shift, p_shift);
}

// Returns true and fills `out` iff the adjacent pair (x, y) is reducible.
bool rule_standard(const GeneratorSymbol& x, const GeneratorSymbol& y,
                   Rewrites& out) {
  constexpr auto vp = VarProfile::one_var;
  if ((x.kind == GenKind::T && y.kind == GenKind::Tinv) ||
      (x.kind == GenKind::Tinv && y.kind == GenKind::T)) {
    out.push_back({Word{}, LaurentPoly::one(vp)});
    return true;
  }
  if (is_lw(x) && y.is_torus()) {
    // (R2)/(R3) with m = +-1: X_n T^{+-1} = q^{+-2(n+1)} T^{+-1} X_n
    const std::int64_t e = checked_mul(2, checked_add(x.index, 1));
    out.push_back({Word{y, x}, LaurentPoly::q_pow(y.kind == GenKind::T ? e : -e)});
    return true;
  }
  const std::int64_t n = x.index;
  const std::int64_t m = y.index;
  if (x.kind == GenKind::L && y.kind == GenKind::L && n > m) {
    // (R4) solved for L_n L_m
    const std::int64_t d = checked_sub(m, n);
    out.push_back({Word{y, x}, LaurentPoly::q_pow(checked_mul(2, d))});
    out.push_back({Word{GeneratorSymbol::L(checked_add(m, n))},
                   shifted_q_int(d, d, 0, vp)});
    return true;
  }
  if (x.kind == GenKind::W && y.kind == GenKind::L) {
    // (R5) solved for W_m L_n; here x = W_m, y = L_n
    const std::int64_t wm = x.index;
    const std::int64_t ln = y.index;
    const std::int64_t d = checked_sub(ln, wm);
    out.push_back({Word{y, x}, LaurentPoly::q_pow(checked_mul(2, d))});
    out.push_back({Word{GeneratorSymbol::W(checked_add(wm, ln))},
                   -shifted_q_int(checked_sub(wm, ln), d, 0, vp)});
    return true;
  }
  if (x.kind == GenKind::W && y.kind == GenKind::W && n > m) {
    // (R6)
    out.push_back({Word{y, x}, LaurentPoly::q_pow(checked_mul(2, checked_sub(m, n)))});
    return true;
  }
  return false;
}

bool rule_generalized(const GeneratorSymbol& x, const GeneratorSymbol& y,
                      Rewrites& out) {
  constexpr auto vp = VarProfile::two_var;
  const std::int64_t n = x.index;
  const std::int64_t m = y.index;
  if (x.kind == GenKind::L && y.kind == GenKind::L && n > m) {
    // q^{n-m} L_n L_m - p^{n-m} L_m L_n = -[n-m]^c L_{m+n}
    const std::int64_t d = checked_sub(n, m);
    out.push_back({Word{y, x}, LaurentPoly::monomial(1, -d, d, vp)});
    out.push_back({Word{GeneratorSymbol::L(checked_add(m, n))},
                   -shifted_q_int(d, -d, 0, vp)});
    return true;
  }
  if (x.kind == GenKind::W && y.kind == GenKind::L) {
    // q^{n-m} L_n W_m - p^{n-m} W_m L_n = -[n-m]^c W_{m+n}; x = W_m, y = L_n
    const std::int64_t d = checked_sub(y.index, x.index);
    out.push_back({Word{y, x}, LaurentPoly::monomial(1, d, -d, vp)});
    out.push_back({Word{GeneratorSymbol::W(checked_add(x.index, y.index))},
                   shifted_q_int(d, 0, -d, vp)});
    return true;
  }
  if (x.kind == GenKind::W && y.kind == GenKind::W && n > m) {
    const std::int64_t d = checked_sub(n, m);
    out.push_back({Word{y, x}, LaurentPoly::monomial(1, -d, d, vp)});
    return true;
  }
  return false;
}

}  // namespace

Element normalize(const Word& w, Deformation profile) {
  const VarProfile vp = var_profile(profile);
  for (const auto& g : w) {
    if (g.is_torus() && profile == Deformation::generalized) {
      throw UnsupportedProfileError(
          "T is not defined for the generalized deformation");
    }
    if (is_lw(g)) detail::check_index(g.index);
  }
  auto rule = profile == Deformation::standard ? rule_standard : rule_generalized;

  // Pending words keyed by content so that equal words merge (and cancel)
  // before being rewritten further.
  std::map<Word, LaurentPoly> pending;
  pending.emplace(w, LaurentPoly::one(vp));
  Element result;
  Rewrites rewrites;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& word = node.key();
    const LaurentPoly& coeff = node.mapped();
    if (coeff.is_zero()) continue;

    std::size_t i = 0;
    rewrites.clear();
    for (; i + 1 < word.size(); ++i) {
      if (rule(word[i], word[i + 1], rewrites)) break;
    }
    if (rewrites.empty()) {
      result.add_term(to_normal_word(word), coeff);
      continue;
    }
    for (auto& rw : rewrites) {
      Word next;
      next.reserve(word.size() + 1);
      next.insert(next.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), rw.replacement.begin(), rw.replacement.end());
      next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(i + 2), word.end());
      LaurentPoly c = coeff * rw.coeff;
      auto [it, inserted] = pending.try_emplace(std::move(next), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

Element multiply(const NormalWord& a, const NormalWord& b, Deformation profile) {
  Word w = a.expand();
  Word wb = b.expand();
  w.insert(w.end(), wb.begin(), wb.end());
  return normalize(w, profile);
}

Element multiply(const Element& x, const Element& y, Deformation profile) {
  Element result;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const LaurentPoly c = ca * cb;
      if (c.is_zero()) continue;
      const auto image = multiply(a, b, profile);
      for (const auto& [w, cw] : image.terms()) {
        result.add_term(w, c * cw);
      }
    }
  }
  return result;
}

Element power(const Element& x, std::int64_t r, Deformation profile) {
  if (r < 0) throw UnsupportedInverseError("negative power of an element");
  Element acc = Element::unit(var_profile(profile));
  for (std::int64_t i = 0; i < r; ++i) acc = multiply(acc, x, profile);
  return acc;
}

Element q_bracket(const Element& x, const Element& y, const LaurentPoly& alpha,
                  const LaurentPoly& beta, Deformation profile) {
  return multiply(x, y, profile).scaled(alpha) -
         multiply(y, x, profile).scaled(beta);
}

NumericElement evaluate(const Element& x, const Rational& q_val,
                        const std::optional<Rational>& p_val) {
  NumericElement r;
  for (const auto& [w, c] : x.terms()) r.add_term(w, c.evaluate(q_val, p_val));
  return r;
}

NumericElement classical_limit(const Element& x) {
  NumericElement r;
  for (const auto& [w, c] : x.terms()) {
    const std::optional<Rational> p_val =
        c.profile() == VarProfile::two_var ? std::optional<Rational>(1)
                                           : std::nullopt;
    r.add_term(w, c.evaluate(1, p_val));
  }
  return r;
}

Element specialize_to_standard(const Element& x) {
  Element r;
  for (const auto& [w, c] : x.terms()) r.add_term(w, c.substitute_p(-1));
  return r;
}

}  // namespace qw22
