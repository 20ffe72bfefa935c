#include "qw22/oscillator.hpp"

#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "qw22/errors.hpp"
#include "term_text.hpp"

namespace qw22 {

using detail::checked_add;
using detail::checked_sub;

std::string_view to_string(OscProfile profile) {
  switch (profile) {
    case OscProfile::classical:
      return "classical";
    case OscProfile::q_deformed:
      return "q-deformed";
    case OscProfile::two_param:
      return "two-param";
  }
  return "?";
}

OscProfile parse_osc_profile(std::string_view name) {
  if (name == "classical") return OscProfile::classical;
  if (name == "q-deformed") return OscProfile::q_deformed;
  if (name == "two-param") return OscProfile::two_param;
  throw UnknownIdentifierError("unknown oscillator profile '" +
                               std::string(name) + "'");
}

// ---------------------------------------------------------- ModuleVector

ModuleVector ModuleVector::basis(std::int64_t k, int eps, VarProfile profile) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
  detail::check_index(k);
  ModuleVector v;
  v.add_term({k, eps}, LaurentPoly::one(profile));
  return v;
}

void ModuleVector::add_term(const FockLabel& label, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
  for (const auto& [l, c] : rhs.terms_) add_term(l, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
  for (const auto& [l, c] : rhs.terms_) add_term(l, -c);
  return *this;
}

ModuleVector ModuleVector::scaled(const LaurentPoly& c) const {
  ModuleVector r;
  for (const auto& [l, coeff] : terms_) r.add_term(l, coeff * c);
  return r;
}

std::string ModuleVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    detail::append_poly_term(
        os, first, c,
        "|" + std::to_string(l.k) + "," + std::to_string(l.eps) + ">", false);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ModuleVector& v) {
  return os << v.to_string();
}

// ---------------------------------------------------------- ladder action

LaurentPoly ladder_weight(std::int64_t k, OscProfile profile) {
  switch (profile) {
    case OscProfile::classical:
      return LaurentPoly::constant(Integer(static_cast<long>(k)));
    case OscProfile::q_deformed:
      return q_int(k).shifted(k);
    case OscProfile::two_param:
      return q_int(k, VarProfile::two_var).shifted(0, -k);
  }
  return {};
}

ModuleVector apply_creation_power(std::int64_t e, const ModuleVector& v) {
  ModuleVector r;
  for (const auto& [l, c] : v.terms()) {
    r.add_term({detail::check_index(checked_add(l.k, e)), l.eps}, c);
  }
  return r;
}

ModuleVector apply_ladder(Ladder op, const ModuleVector& v, OscProfile profile) {
  ModuleVector r;
  for (const auto& [l, c] : v.terms()) {
    switch (op) {
      case Ladder::a_dag:
        r.add_term({detail::check_index(checked_add(l.k, 1)), l.eps}, c);
        break;
      case Ladder::a:
        r.add_term({detail::check_index(checked_sub(l.k, 1)), l.eps},
                   c * ladder_weight(l.k, profile));
        break;
      case Ladder::b:
        if (l.eps == 1) r.add_term({l.k, 0}, c);
        break;
      case Ladder::b_dag:
        if (l.eps == 0) r.add_term({l.k, 1}, c);
        break;
    }
  }
  return r;
}

ModuleVector apply_generator(const GeneratorSymbol& g, const ModuleVector& v,
                             OscProfile profile) {
  if (g.is_torus()) {
    throw UnsupportedGeneratorError(g.to_string() +
                                    " has no action on the oscillator module");
  }
  ModuleVector x = apply_ladder(Ladder::a, v, profile);
  if (g.kind == GenKind::W) x = apply_ladder(Ladder::b_dag, x, profile);
  return apply_creation_power(checked_add(g.index, 1), x);
}

ModuleVector apply_word(const Word& w, const ModuleVector& v, OscProfile profile) {
  ModuleVector x = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    x = apply_generator(*it, x, profile);
  }
  return x;
}

ModuleVector apply_element(const Element& x, const ModuleVector& v,
                           OscProfile profile) {
  ModuleVector r;
  for (const auto& [w, c] : x.terms()) {
    if (w.t_exp != 0) {
      throw UnsupportedGeneratorError("T has no action on the oscillator module");
    }
    if (c.profile() != var_profile(profile) ||
        (profile == OscProfile::classical && !c.is_constant())) {
      throw UnsupportedProfileError(
          "coefficient " + c.to_string() + " does not belong to the " +
          std::string(to_string(profile)) + " profile");
    }
    r += apply_word(w.expand(), v, profile).scaled(c);
  }
  return r;
}

// ---------------------------------------------------------- relations

namespace {

using Op = std::function<ModuleVector(const ModuleVector&)>;

// Linear combination of operators.
using OpSum = std::vector<std::pair<LaurentPoly, Op>>;

struct Identity {
  std::string name;
  OpSum lhs;
  OpSum rhs;
};

Op ladder_op(Ladder l, OscProfile p) {
  return [l, p](const ModuleVector& v) { return apply_ladder(l, v, p); };
}

Op creation_op(std::int64_t e) {
  return [e](const ModuleVector& v) { return apply_creation_power(e, v); };
}

Op gen_op(GeneratorSymbol g, OscProfile p) {
  return [g, p](const ModuleVector& v) { return apply_generator(g, v, p); };
}

// Operator product; the rightmost factor acts first.
Op product(std::vector<Op> factors) {
  return [factors = std::move(factors)](const ModuleVector& v) {
    ModuleVector x = v;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = (*it)(x);
    return x;
  };
}

Op identity_op() {
  return [](const ModuleVector& v) { return v; };
}

Op zero_op() {
  return [](const ModuleVector&) { return ModuleVector(); };
}

ModuleVector apply_sum(const OpSum& s, const ModuleVector& v) {
  ModuleVector r;
  for (const auto& [c, op] : s) r += op(v).scaled(c);
  return r;
}

std::vector<Identity> identities(const OscRelation& rel, OscProfile p) {
  using K = OscRelation::Kind;
  const VarProfile vp = var_profile(p);
  const LaurentPoly one = LaurentPoly::one(vp);
  const LaurentPoly zero(vp);
  auto qp = [&](std::int64_t e) { return LaurentPoly::monomial(1, e, 0, vp); };
  auto pp = [&](std::int64_t e) {
    return LaurentPoly::monomial(1, 0, e, VarProfile::two_var);
  };
  const Op a = ladder_op(Ladder::a, p);
  const Op ad = ladder_op(Ladder::a_dag, p);
  const Op b = ladder_op(Ladder::b, p);
  const Op bd = ladder_op(Ladder::b_dag, p);
  const std::int64_t m = rel.m;
  const std::int64_t n = rel.n;

  switch (rel.kind) {
    case K::boson:
      return {{"a a+ - a+ a = 1",
               {{one, product({a, ad})}, {-one, product({ad, a})}},
               {{one, identity_op()}}}};
    case K::qboson:
      return {{"q^-1 a a+ - q a+ a = 1",
               {{qp(-1), product({a, ad})}, {-qp(1), product({ad, a})}},
               {{one, identity_op()}}}};
    case K::gboson:
      return {{"p a a+ - q a+ a = 1",
               {{pp(1), product({a, ad})}, {-qp(1), product({ad, a})}},
               {{one, identity_op()}}}};
    case K::fermion:
      return {{"b b+ + b+ b = 1",
               {{one, product({b, bd})}, {one, product({bd, b})}},
               {{one, identity_op()}}},
              {"b^2 = 0", {{one, product({b, b})}}, {{one, zero_op()}}},
              {"(b+)^2 = 0", {{one, product({bd, bd})}}, {{one, zero_op()}}}};
    case K::cross: {
      std::vector<Identity> out;
      const std::pair<const char*, Op> bosons[] = {{"a", a}, {"a+", ad}};
      const std::pair<const char*, Op> fermions[] = {{"b", b}, {"b+", bd}};
      for (const auto& [bn, bo] : bosons) {
        for (const auto& [fn, fo] : fermions) {
          out.push_back({std::string("[") + bn + ", " + fn + "] = 0",
                         {{one, product({bo, fo})}, {-one, product({fo, bo})}},
                         {{one, zero_op()}}});
        }
      }
      return out;
    }
    case K::qd:
      return {{"q^-n a (a+)^n - q^n (a+)^n a = [n] (a+)^(n-1)",
               {{qp(-n), product({a, creation_op(n)})},
                {-qp(n), product({creation_op(n), a})}},
               {{q_int(n, vp), creation_op(checked_sub(n, 1))}}}};
    case K::gqd:
      return {{"p^n a (a+)^n - q^n (a+)^n a = [n]^c (a+)^(n-1)",
               {{pp(n), product({a, creation_op(n)})},
                {-qp(n), product({creation_op(n), a})}},
               {{q_int(n, vp), creation_op(checked_sub(n, 1))}}}};
    case K::LE: {
      const LaurentPoly c = LaurentPoly::constant(
          Integer(static_cast<long>(checked_sub(n, m))), vp);
      const Op Lm = gen_op(GeneratorSymbol::L(m), p);
      const Op Ln = gen_op(GeneratorSymbol::L(n), p);
      const Op Wm = gen_op(GeneratorSymbol::W(m), p);
      const Op Wn = gen_op(GeneratorSymbol::W(n), p);
      const std::int64_t s = checked_add(m, n);
      return {{"[L_m, L_n] = (n-m) L_{m+n}",
               {{one, product({Lm, Ln})}, {-one, product({Ln, Lm})}},
               {{c, gen_op(GeneratorSymbol::L(s), p)}}},
              {"[L_m, W_n] = (n-m) W_{m+n}",
               {{one, product({Lm, Wn})}, {-one, product({Wn, Lm})}},
               {{c, gen_op(GeneratorSymbol::W(s), p)}}},
              {"[W_m, W_n] = 0",
               {{one, product({Wm, Wn})}, {-one, product({Wn, Wm})}},
               {{zero, zero_op()}}}};
    }
    case K::qLE:
    case K::gq: {
      // First index on the left: alpha X_m Y_n - beta Y_n X_m.
      const bool g = rel.kind == K::gq;
      const std::int64_t d = checked_sub(m, n);
      const LaurentPoly alpha = qp(d);
      const LaurentPoly beta = g ? pp(d) : qp(-d);
      const LaurentPoly c = g ? -q_int(d, vp) : q_int(-d, vp);
      const Op Lm = gen_op(GeneratorSymbol::L(m), p);
      const Op Ln = gen_op(GeneratorSymbol::L(n), p);
      const Op Wm = gen_op(GeneratorSymbol::W(m), p);
      const Op Wn = gen_op(GeneratorSymbol::W(n), p);
      const std::int64_t s = checked_add(m, n);
      return {{"[L_m, L_n] bracket",
               {{alpha, product({Lm, Ln})}, {-beta, product({Ln, Lm})}},
               {{c, gen_op(GeneratorSymbol::L(s), p)}}},
              {"[L_m, W_n] bracket",
               {{alpha, product({Lm, Wn})}, {-beta, product({Wn, Lm})}},
               {{c, gen_op(GeneratorSymbol::W(s), p)}}},
              {"[W_m, W_n] bracket",
               {{alpha, product({Wm, Wn})}, {-beta, product({Wn, Wm})}},
               {{zero, zero_op()}}}};
    }
  }
  return {};
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UnknownIdentifierError("malformed relation '" + std::string(whole) +
                                 "'");
  }
  return detail::check_index(v);
}

}  // namespace

OscRelation OscRelation::parse(std::string_view text) {
  using K = Kind;
  static const std::pair<std::string_view, K> plain[] = {
      {"boson", K::boson},     {"qboson", K::qboson}, {"gboson", K::gboson},
      {"fermion", K::fermion}, {"cross", K::cross}};
  for (const auto& [name, kind] : plain) {
    if (text == name) return {kind, 0, 0};
  }
  static const std::pair<std::string_view, K> indexed[] = {
      {"qd", K::qd}, {"gqd", K::gqd}, {"LE", K::LE}, {"qLE", K::qLE}, {"gq", K::gq}};
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw UnknownIdentifierError("unknown relation '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, open);
  const std::string_view args = text.substr(open + 1, text.size() - open - 2);
  for (const auto& [name, kind] : indexed) {
    if (head != name) continue;
    const auto comma = args.find(',');
    const bool unary = kind == K::qd || kind == K::gqd;
    if (unary != (comma == std::string_view::npos)) break;
    if (unary) return {kind, 0, parse_int(args, text)};
    return {kind, parse_int(args.substr(0, comma), text),
            parse_int(args.substr(comma + 1), text)};
  }
  throw UnknownIdentifierError("unknown relation '" + std::string(text) + "'");
}

std::string OscRelation::to_string() const {
  switch (kind) {
    case Kind::boson:
      return "boson";
    case Kind::qboson:
      return "qboson";
    case Kind::gboson:
      return "gboson";
    case Kind::fermion:
      return "fermion";
    case Kind::cross:
      return "cross";
    case Kind::qd:
      return "qd(" + std::to_string(n) + ")";
    case Kind::gqd:
      return "gqd(" + std::to_string(n) + ")";
    case Kind::LE:
      return "LE(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::qLE:
      return "qLE(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::gq:
      return "gq(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  return "?";
}

bool OscRelation::compatible(OscProfile profile) const {
  switch (kind) {
    case Kind::fermion:
    case Kind::cross:
      return true;
    case Kind::boson:
    case Kind::LE:
      return profile == OscProfile::classical;
    case Kind::qboson:
    case Kind::qd:
    case Kind::qLE:
      return profile == OscProfile::q_deformed;
    case Kind::gboson:
    case Kind::gqd:
    case Kind::gq:
      return profile == OscProfile::two_param;
  }
  return false;
}

Verdict check_relation(const OscRelation& rel, OscProfile profile,
                       std::int64_t lo, std::int64_t hi) {
  if (!rel.compatible(profile)) {
    throw UnsupportedProfileError("relation " + rel.to_string() +
                                  " does not belong to the " +
                                  std::string(to_string(profile)) + " profile");
  }
  const auto ids = identities(rel, profile);
  for (std::int64_t k = lo; k <= hi; ++k) {
    for (int eps = 0; eps <= 1; ++eps) {
      const ModuleVector v = ModuleVector::basis(k, eps, var_profile(profile));
      for (const auto& id : ids) {
        const ModuleVector diff = apply_sum(id.lhs, v) - apply_sum(id.rhs, v);
        if (!diff.is_zero()) {
          return {false, rel.to_string() + ": " + id.name + " fails on |" +
                             std::to_string(k) + "," + std::to_string(eps) +
                             ">, lhs - rhs = " + diff.to_string()};
        }
      }
    }
  }
  return {true, ""};
}

Verdict oracle_consistency(const Word& w, OscProfile profile, std::int64_t lo,
                           std::int64_t hi) {
  for (const auto& g : w) {
    if (g.is_torus()) {
      throw UnsupportedGeneratorError("oracle words must be T-free");
    }
  }
  Element nf = normalize(w, deformation(profile));
  if (profile == OscProfile::classical) {
    Element lim;
    const NumericElement numeric = classical_limit(nf);
    for (const auto& [word, c] : numeric.terms()) {
      lim.add_term(word, LaurentPoly::constant(c.get_num()));
    }
    nf = std::move(lim);
  }
  for (std::int64_t k = lo; k <= hi; ++k) {
    for (int eps = 0; eps <= 1; ++eps) {
      const ModuleVector v = ModuleVector::basis(k, eps, var_profile(profile));
      const ModuleVector direct = apply_word(w, v, profile);
      const ModuleVector via_nf = apply_element(nf, v, profile);
      if (direct != via_nf) {
        return {false, "word " + to_string(w) + " on |" + std::to_string(k) +
                           "," + std::to_string(eps) + ">: direct " +
                           direct.to_string() + ", normal form " +
                           via_nf.to_string()};
      }
    }
  }
  return {true, ""};
}

}  // namespace qw22
