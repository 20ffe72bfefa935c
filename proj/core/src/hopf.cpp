#include "qw22/hopf.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qw22/errors.hpp"
#include "term_text.hpp"

namespace qw22 {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

constexpr auto kStd = Deformation::standard;
constexpr auto kVp = VarProfile::one_var;

LaurentPoly one() { return LaurentPoly::one(kVp); }

NormalWord torus(std::int64_t d) {
  NormalWord w;
  w.t_exp = d;
  return w;
}

Word torus_word(std::int64_t d) {
  return Word(static_cast<std::size_t>(d < 0 ? -d : d),
              d < 0 ? GeneratorSymbol::Tinv() : GeneratorSymbol::T());
}

void require_standard(const LaurentPoly& c) {
  if (c.profile() != kVp) {
    throw UnsupportedProfileError(
        "Hopf operations are defined for the standard profile only");
  }
}

}  // namespace

// ---------------------------------------------------------- TensorElement

TensorElement TensorElement::pure(const NormalWord& a, const NormalWord& b,
                                  const LaurentPoly& c) {
  TensorElement t;
  t.add_term(a, b, c);
  return t;
}

TensorElement TensorElement::unit() { return pure({}, {}, one()); }

TensorElement TensorElement::outer(const Element& x, const Element& y) {
  TensorElement t;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) t.add_term(a, b, ca * cb);
  }
  return t;
}

void TensorElement::add_term(const NormalWord& a, const NormalWord& b,
                             const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement TensorElement::scaled(const LaurentPoly& c) const {
  TensorElement t;
  for (const auto& [k, coeff] : terms_) t.add_term(k.first, k.second, coeff * c);
  return t;
}

TensorElement TensorElement::flipped() const {
  TensorElement t;
  for (const auto& [k, c] : terms_) t.add_term(k.second, k.first, c);
  return t;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    detail::append_poly_term(
        os, first, c,
        "(" + k.first.to_string() + ") (x) (" + k.second.to_string() + ")",
        false);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TensorElement& t) {
  return os << t.to_string();
}

void TripleTensor::add_term(const Key& key, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TripleTensor& TripleTensor::operator-=(const TripleTensor& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

std::string TripleTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    detail::append_poly_term(os, first, c,
                             "(" + k[0].to_string() + ") (x) (" +
                                 k[1].to_string() + ") (x) (" +
                                 k[2].to_string() + ")",
                             false);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------- structure maps

TensorElement tensor_multiply(const TensorElement& u, const TensorElement& v) {
  TensorElement r;
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      const LaurentPoly c = cu * cv;
      const Element left = multiply(ku.first, kv.first, kStd);
      const Element right = multiply(ku.second, kv.second, kStd);
      for (const auto& [a, ca] : left.terms()) {
        for (const auto& [b, cb] : right.terms()) r.add_term(a, b, c * ca * cb);
      }
    }
  }
  return r;
}

TensorElement coproduct(const GeneratorSymbol& g) {
  switch (g.kind) {
    case GenKind::T:
      return TensorElement::pure(torus(1), torus(1), one());
    case GenKind::Tinv:
      return TensorElement::pure(torus(-1), torus(-1), one());
    case GenKind::L:
    case GenKind::W: {
      // X_n (x) T^n + T^n (x) X_n
      const NormalWord x = to_normal_word(Word{g});
      TensorElement t = TensorElement::pure(x, torus(g.index), one());
      t.add_term(torus(g.index), x, one());
      return t;
    }
  }
  return {};
}

Element antipode(const GeneratorSymbol& g) {
  switch (g.kind) {
    case GenKind::T:
      return Element::term(torus(-1), one());
    case GenKind::Tinv:
      return Element::term(torus(1), one());
    case GenKind::L:
    case GenKind::W: {
      // -T^-n X_n T^-n
      Word w = torus_word(-g.index);
      w.push_back(g);
      const Word tail = torus_word(-g.index);
      w.insert(w.end(), tail.begin(), tail.end());
      return -normalize(w, kStd);
    }
  }
  return {};
}

TensorElement coproduct(const Word& w) {
  TensorElement acc = TensorElement::unit();
  for (const auto& g : w) acc = tensor_multiply(acc, coproduct(g));
  return acc;
}

Element antipode(const Word& w) {
  Element acc = Element::unit(kVp);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    acc = multiply(acc, antipode(*it), kStd);
  }
  return acc;
}

LaurentPoly counit(const Word& w) {
  const bool torus_only =
      std::all_of(w.begin(), w.end(), [](const auto& g) { return g.is_torus(); });
  return torus_only ? one() : LaurentPoly(kVp);
}

TensorElement coproduct(const Element& x) {
  TensorElement r;
  for (const auto& [w, c] : x.terms()) {
    require_standard(c);
    r += coproduct(w.expand()).scaled(c);
  }
  return r;
}

Element antipode(const Element& x) {
  Element r;
  for (const auto& [w, c] : x.terms()) {
    require_standard(c);
    r += antipode(w.expand()).scaled(c);
  }
  return r;
}

LaurentPoly counit(const Element& x) {
  LaurentPoly r(kVp);
  for (const auto& [w, c] : x.terms()) {
    require_standard(c);
    if (w.is_torus()) r += c;
  }
  return r;
}

Element multiply_out(const TensorElement& t) {
  Element r;
  for (const auto& [k, c] : t.terms()) {
    r += multiply(k.first, k.second, kStd).scaled(c);
  }
  return r;
}

Element apply_counit_right(const TensorElement& t) {
  Element r;
  for (const auto& [k, c] : t.terms()) {
    if (k.second.is_torus()) r.add_term(k.first, c);
  }
  return r;
}

Element apply_counit_left(const TensorElement& t) {
  Element r;
  for (const auto& [k, c] : t.terms()) {
    if (k.first.is_torus()) r.add_term(k.second, c);
  }
  return r;
}

TripleTensor coproduct_right(const TensorElement& t) {
  TripleTensor r;
  for (const auto& [k, c] : t.terms()) {
    const auto image = coproduct(k.second.expand());
    for (const auto& [kb, cb] : image.terms()) {
      r.add_term({k.first, kb.first, kb.second}, c * cb);
    }
  }
  return r;
}

TripleTensor coproduct_left(const TensorElement& t) {
  TripleTensor r;
  for (const auto& [k, c] : t.terms()) {
    const auto image = coproduct(k.first.expand());
    for (const auto& [ka, ca] : image.terms()) {
      r.add_term({ka.first, ka.second, k.second}, c * ca);
    }
  }
  return r;
}

TensorElement antipode_right(const TensorElement& t) {
  TensorElement r;
  for (const auto& [k, c] : t.terms()) {
    const auto image = antipode(k.second.expand());
    for (const auto& [b, cb] : image.terms()) {
      r.add_term(k.first, b, c * cb);
    }
  }
  return r;
}

TensorElement antipode_left(const TensorElement& t) {
  TensorElement r;
  for (const auto& [k, c] : t.terms()) {
    const auto image = antipode(k.first.expand());
    for (const auto& [a, ca] : image.terms()) {
      r.add_term(a, k.second, c * ca);
    }
  }
  return r;
}

// ---------------------------------------------------------- closed forms

namespace {

GeneratorSymbol power_generator(PowerGen gen, std::int64_t n) {
  return gen == PowerGen::L ? GeneratorSymbol::L(n) : GeneratorSymbol::W(n);
}

Word repeat(const GeneratorSymbol& g, std::int64_t r) {
  return Word(static_cast<std::size_t>(r), g);
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TensorElement coproduct_power_closed_form(PowerGen gen, std::int64_t n,
                                          std::int64_t r) {
  if (r < 0) throw std::invalid_argument("closed form needs r >= 0");
  const GeneratorSymbol x = power_generator(gen, n);
  TensorElement t;
  for (std::int64_t i = 0; i <= r; ++i) {
    // X_n^{r-i} T^{in} (x) T^{(r-i)n} X_n^i
    const Element left =
        normalize(concat(repeat(x, r - i), torus_word(checked_mul(i, n))), kStd);
    const Element right =
        normalize(concat(torus_word(checked_mul(r - i, n)), repeat(x, i)), kStd);
    t += TensorElement::outer(left, right)
             .scaled(LaurentPoly::constant(binomial(r, i), kVp));
  }
  return t;
}

Element antipode_power_closed_form(PowerGen gen, std::int64_t n, std::int64_t r) {
  if (r < 0) throw std::invalid_argument("closed form needs r >= 0");
  const GeneratorSymbol x = power_generator(gen, n);
  const std::int64_t shift = -checked_mul(r, n);
  const Word w = concat(concat(torus_word(shift), repeat(x, r)), torus_word(shift));
  const Element body = normalize(w, kStd);
  return r % 2 == 0 ? body : -body;
}

std::variant<TensorElement, Element> power_closed_form(PowerMap map, PowerGen gen,
                                                       std::int64_t n,
                                                       std::int64_t r) {
  if (map == PowerMap::delta) return coproduct_power_closed_form(gen, n, r);
  return antipode_power_closed_form(gen, n, r);
}

// ---------------------------------------------------------- relations

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::R2:
      return "R2";
    case Relation::R3:
      return "R3";
    case Relation::R4:
      return "R4";
    case Relation::R5:
      return "R5";
    case Relation::R6:
      return "R6";
  }
  return "?";
}

Relation parse_relation(std::string_view name) {
  for (auto r : {Relation::R2, Relation::R3, Relation::R4, Relation::R5,
                 Relation::R6}) {
    if (to_string(r) == name) return r;
  }
  throw UnknownIdentifierError("unknown relation '" + std::string(name) + "'");
}

RelationSides relation_sides(Relation rel, std::int64_t m, std::int64_t n) {
  using G = GeneratorSymbol;
  RelationSides s;
  switch (rel) {
    case Relation::R2:
    case Relation::R3: {
      const G x = rel == Relation::R2 ? G::L(n) : G::W(n);
      const Word tm = torus_word(m);
      s.lhs.emplace_back(one(), concat(tm, Word{x}));
      const std::int64_t e = -checked_mul(2, checked_mul(checked_add(n, 1), m));
      s.rhs.emplace_back(LaurentPoly::q_pow(e), concat(Word{x}, tm));
      break;
    }
    case Relation::R4:
    case Relation::R5:
    case Relation::R6: {
      const std::int64_t d = checked_sub(n, m);
      G first_n = rel == Relation::R6 ? G::W(n) : G::L(n);
      G second_m = rel == Relation::R4 ? G::L(m) : G::W(m);
      s.lhs.emplace_back(LaurentPoly::q_pow(d), Word{first_n, second_m});
      s.lhs.emplace_back(-LaurentPoly::q_pow(-d), Word{second_m, first_n});
      if (rel == Relation::R4) {
        s.rhs.emplace_back(q_int(-d), Word{G::L(checked_add(m, n))});
      } else if (rel == Relation::R5) {
        s.rhs.emplace_back(q_int(-d), Word{G::W(checked_add(m, n))});
      }
      break;
    }
  }
  return s;
}

namespace {

template <typename Map>
auto apply_linear(const WordCombination& combo, Map&& map) {
  using Result = decltype(map(Word{}));
  Result r{};
  if constexpr (std::is_same_v<Result, LaurentPoly>) r = LaurentPoly(kVp);
  for (const auto& [c, w] : combo) {
    if constexpr (std::is_same_v<Result, LaurentPoly>) {
      r += map(w) * c;
    } else {
      r += map(w).scaled(c);
    }
  }
  return r;
}

std::string side_label(Relation rel, std::int64_t m, std::int64_t n) {
  return std::string(to_string(rel)) + "(m=" + std::to_string(m) +
         ",n=" + std::to_string(n) + ")";
}

}  // namespace

AxiomResult check_relation_preserved(HopfMap map, Relation rel, std::int64_t m,
                                     std::int64_t n) {
  const RelationSides sides = relation_sides(rel, m, n);
  switch (map) {
    case HopfMap::delta: {
      auto f = [](const Word& w) { return coproduct(w); };
      TensorElement diff = apply_linear(sides.lhs, f) - apply_linear(sides.rhs, f);
      if (diff.is_zero()) return {true, {}};
      return {false, "Delta " + side_label(rel, m, n) + ": lhs - rhs = " +
                         diff.to_string()};
    }
    case HopfMap::counit: {
      auto f = [](const Word& w) { return counit(w); };
      LaurentPoly diff = apply_linear(sides.lhs, f) - apply_linear(sides.rhs, f);
      if (diff.is_zero()) return {true, {}};
      return {false, "eps " + side_label(rel, m, n) + ": lhs - rhs = " +
                         diff.to_string()};
    }
    case HopfMap::antipode: {
      auto f = [](const Word& w) { return antipode(w); };
      Element diff = apply_linear(sides.lhs, f) - apply_linear(sides.rhs, f);
      if (diff.is_zero()) return {true, {}};
      return {false, "S " + side_label(rel, m, n) + ": lhs - rhs = " +
                         diff.to_string()};
    }
  }
  return {false, "unknown map"};
}

// ---------------------------------------------------------- axiom checks

const std::vector<std::string_view>& axiom_ids() {
  static const std::vector<std::string_view> ids = {
      "coassoc",         "counit-left",
      "counit-right",    "antipode-left",
      "antipode-right",  "s-squared",
      "delta-hom",       "s-antihom",
      "counit-hom",      "relation-preservation",
      "cocommutativity-witness", "commutativity-witness"};
  return ids;
}

namespace {

AxiomResult equal_or_witness(const auto& lhs, const auto& rhs,
                             const std::string& what) {
  auto diff = lhs;
  diff -= rhs;
  if (diff.is_zero()) return {true, {}};
  return {false, what + ": lhs - rhs = " + diff.to_string()};
}

AxiomResult check_unary(std::string_view axiom, const Element& x) {
  if (axiom == "coassoc") {
    const TensorElement d = coproduct(x);
    return equal_or_witness(coproduct_right(d), coproduct_left(d),
                            "(1 (x) Delta)Delta vs (Delta (x) 1)Delta on " +
                                x.to_string());
  }
  if (axiom == "counit-left") {
    // (1 (x) eps) Delta(x) = x (x) 1
    return equal_or_witness(apply_counit_right(coproduct(x)), x,
                            "(1 (x) eps)Delta vs id on " + x.to_string());
  }
  if (axiom == "counit-right") {
    return equal_or_witness(apply_counit_left(coproduct(x)), x,
                            "(eps (x) 1)Delta vs id on " + x.to_string());
  }
  if (axiom == "antipode-left") {
    // m (1 (x) S) Delta(x) = eps(x) 1
    return equal_or_witness(multiply_out(antipode_right(coproduct(x))),
                            Element::scalar(counit(x)),
                            "m(1 (x) S)Delta vs eps on " + x.to_string());
  }
  if (axiom == "antipode-right") {
    return equal_or_witness(multiply_out(antipode_left(coproduct(x))),
                            Element::scalar(counit(x)),
                            "m(S (x) 1)Delta vs eps on " + x.to_string());
  }
  if (axiom == "s-squared") {
    return equal_or_witness(antipode(antipode(x)), x,
                            "S^2 vs id on " + x.to_string());
  }
  if (axiom == "cocommutativity-witness") {
    const TensorElement d = coproduct(x);
    const TensorElement flipped = d.flipped();
    if (flipped == d) return {false, {}};
    return {true, "Delta(" + x.to_string() + ") = " + d.to_string() +
                      " but P(Delta) = " + flipped.to_string()};
  }
  throw std::invalid_argument("axiom '" + std::string(axiom) +
                              "' does not take a single element");
}

AxiomResult check_binary(std::string_view axiom, const Element& x,
                         const Element& y) {
  if (axiom == "delta-hom") {
    return equal_or_witness(coproduct(multiply(x, y, kStd)),
                            tensor_multiply(coproduct(x), coproduct(y)),
                            "Delta(xy) vs Delta(x)Delta(y) for x = " +
                                x.to_string() + ", y = " + y.to_string());
  }
  if (axiom == "s-antihom") {
    return equal_or_witness(antipode(multiply(x, y, kStd)),
                            multiply(antipode(y), antipode(x), kStd),
                            "S(xy) vs S(y)S(x) for x = " + x.to_string() +
                                ", y = " + y.to_string());
  }
  if (axiom == "commutativity-witness") {
    const Element xy = multiply(x, y, kStd);
    const Element yx = multiply(y, x, kStd);
    if (xy == yx) return {false, {}};
    return {true, "xy = " + xy.to_string() + " but yx = " + yx.to_string()};
  }
  throw std::invalid_argument("axiom '" + std::string(axiom) +
                              "' does not take a pair of elements");
}

AxiomResult check_indices(std::string_view axiom, IndexPair idx) {
  std::vector<HopfMap> maps;
  if (axiom == "delta-hom") {
    maps = {HopfMap::delta};
  } else if (axiom == "s-antihom") {
    maps = {HopfMap::antipode};
  } else if (axiom == "counit-hom") {
    maps = {HopfMap::counit};
  } else if (axiom == "relation-preservation") {
    maps = {HopfMap::delta, HopfMap::counit, HopfMap::antipode};
  } else {
    throw std::invalid_argument("axiom '" + std::string(axiom) +
                                "' does not take an index pair");
  }
  for (auto map : maps) {
    for (auto rel : {Relation::R2, Relation::R3, Relation::R4, Relation::R5,
                     Relation::R6}) {
      AxiomResult r = check_relation_preserved(map, rel, idx.m, idx.n);
      if (!r.holds) return r;
    }
  }
  return {true, {}};
}

}  // namespace

AxiomResult check_axiom(std::string_view axiom, const AxiomInput& input) {
  const auto& ids = axiom_ids();
  if (std::find(ids.begin(), ids.end(), axiom) == ids.end()) {
    throw UnknownIdentifierError("unknown axiom '" + std::string(axiom) + "'");
  }
  if (const auto* x = std::get_if<Element>(&input)) return check_unary(axiom, *x);
  if (const auto* xy = std::get_if<std::pair<Element, Element>>(&input)) {
    return check_binary(axiom, xy->first, xy->second);
  }
  return check_indices(axiom, std::get<IndexPair>(input));
}

}  // namespace qw22
