#include "qw22/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <utility>

#include "qw22/errors.hpp"
#include "qw22/hopf.hpp"
#include "qw22/oscillator.hpp"
#include "qw22/sampling.hpp"

namespace qw22 {

namespace {

constexpr auto kStd = Deformation::standard;
constexpr auto kGen = Deformation::generalized;

class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  void record(bool ok, const std::function<std::string()>& witness) {
    ++report_.cases_run;
    if (ok) return;
    if (report_.cases_failed++ == 0) report_.first_counterexample = witness();
  }

  void record(const Verdict& v) {
    record(v.holds, [&] { return v.witness; });
  }

 private:
  CheckReport& report_;
};

Element gen(const GeneratorSymbol& g, Deformation d = kStd) {
  return element_from(g, d);
}

LaurentPoly qpow(std::int64_t e, VarProfile vp = VarProfile::one_var) {
  return LaurentPoly::q_pow(e, vp);
}

LaurentPoly ppow(std::int64_t e) {
  return LaurentPoly::monomial(1, 0, e, VarProfile::two_var);
}

std::string pair_text(std::int64_t m, std::int64_t n) {
  return "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
}

void q_identities(const SuiteOptions& o, Recorder& rec) {
  const std::int64_t bound = 4 * o.max_index;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      rec.record(q_identity_check(m, n), [&] {
        return "q^n[m] - q^m[n] = [m-n] or q^-n[m] + q^m[n] = [m+n] fails at " +
               pair_text(m, n);
      });
    }
  }
  for (std::int64_t n = -bound; n <= bound; ++n) {
    const LaurentPoly two = q_int(n, VarProfile::two_var);
    rec.record(two.substitute_p(-1) == q_int(n), [&] {
      return "[n]^c at p = q^-1 differs from [n]_q for n = " + std::to_string(n);
    });
    const LaurentPoly qp = LaurentPoly::monomial(1, 1, 1, VarProfile::two_var);
    rec.record(q_int(-n, VarProfile::two_var) == -(qp.pow(-n) * two), [&] {
      return "[-n]^c = -(qp)^-n [n]^c fails for n = " + std::to_string(n);
    });
  }
}

void rewrite_assoc(const SuiteOptions& o, Recorder& rec) {
  Rng rng(o.seed);
  const WordShape shape{o.max_len, o.max_index, true};
  for (std::int64_t i = 0; i < o.cases; ++i) {
    const Element x = random_element(rng, shape);
    const Element y = random_element(rng, shape);
    const Element z = random_element(rng, shape);
    const Element lhs = multiply(multiply(x, y), z);
    const Element rhs = multiply(x, multiply(y, z));
    rec.record(lhs == rhs, [&] {
      return "(xy)z - x(yz) = " + (lhs - rhs).to_string() + " for x = " +
             x.to_string() + ", y = " + y.to_string() + ", z = " + z.to_string();
    });
  }
}

void basis_stability(const SuiteOptions& o, Recorder& rec) {
  Rng rng(o.seed);
  const NormalWordShape shape{3, 4, 4, o.max_index};
  for (std::int64_t i = 0; i < o.cases; ++i) {
    const NormalWord w = random_normal_word(rng, shape);
    const Element got = normalize(w.expand());
    rec.record(got == Element::term(w, LaurentPoly::one()), [&] {
      return "normalize(" + w.to_string() + ") = " + got.to_string();
    });
  }
}

void hopf_axioms(const SuiteOptions& o, Recorder& rec) {
  std::vector<Element> samples = {gen(GeneratorSymbol::T()),
                                  gen(GeneratorSymbol::Tinv())};
  for (std::int64_t n = -o.max_index; n <= o.max_index; ++n) {
    samples.push_back(gen(GeneratorSymbol::L(n)));
    samples.push_back(gen(GeneratorSymbol::W(n)));
  }
  Rng rng(o.seed);
  const WordShape shape{o.max_len, o.max_index, true};
  std::vector<std::pair<Element, Element>> pairs;
  for (std::int64_t i = 0; i < o.cases; ++i) {
    samples.push_back(random_element(rng, shape));
    pairs.emplace_back(random_element(rng, shape), random_element(rng, shape));
  }
  for (const auto& x : samples) {
    for (const char* id : {"coassoc", "counit-left", "counit-right",
                           "antipode-left", "antipode-right", "s-squared"}) {
      rec.record(check_axiom(id, x));
    }
  }
  for (const auto& xy : pairs) {
    rec.record(check_axiom("delta-hom", xy));
    rec.record(check_axiom("s-antihom", xy));
  }
  const Element l1 = gen(GeneratorSymbol::L(1));
  rec.record(check_axiom("cocommutativity-witness", l1).holds,
             [] { return std::string("Delta(L[1]) is symmetric"); });
  rec.record(
      check_axiom("commutativity-witness",
                  std::pair{gen(GeneratorSymbol::T()), l1})
          .holds,
      [] { return std::string("T and L[1] commute"); });
}

void closed_forms(const SuiteOptions& o, Recorder& rec) {
  for (PowerGen pg : {PowerGen::L, PowerGen::W}) {
    for (std::int64_t n = -o.max_index; n <= o.max_index; ++n) {
      const GeneratorSymbol g =
          pg == PowerGen::L ? GeneratorSymbol::L(n) : GeneratorSymbol::W(n);
      for (std::int64_t r = 0; r <= 6; ++r) {
        const Element xr = power(gen(g), r);
        const TensorElement d = coproduct(xr);
        const TensorElement dc = coproduct_power_closed_form(pg, n, r);
        rec.record(d == dc, [&] {
          return "Delta(" + g.to_string() + "^" + std::to_string(r) +
                 ") - closed form = " + (d - dc).to_string();
        });
        const Element s = antipode(xr);
        const Element sc = antipode_power_closed_form(pg, n, r);
        rec.record(s == sc, [&] {
          return "S(" + g.to_string() + "^" + std::to_string(r) +
                 ") - closed form = " + (s - sc).to_string();
        });
      }
    }
  }
}

void relation_preservation(const SuiteOptions& o, Recorder& rec) {
  for (HopfMap map : {HopfMap::delta, HopfMap::counit, HopfMap::antipode}) {
    for (Relation rel : {Relation::R2, Relation::R3, Relation::R4, Relation::R5,
                         Relation::R6}) {
      for (std::int64_t m = -o.max_index; m <= o.max_index; ++m) {
        for (std::int64_t n = -o.max_index; n <= o.max_index; ++n) {
          rec.record(check_relation_preserved(map, rel, m, n));
        }
      }
    }
  }
}

constexpr OscProfile kOscProfiles[] = {OscProfile::classical,
                                       OscProfile::q_deformed,
                                       OscProfile::two_param};

void rep_oracle(const SuiteOptions& o, Recorder& rec) {
  Rng rng(o.seed);
  const WordShape shape{o.max_len, o.max_index, false};
  for (OscProfile p : kOscProfiles) {
    for (std::int64_t i = 0; i < o.cases; ++i) {
      rec.record(oracle_consistency(random_word(rng, shape), p, o.k_lo, o.k_hi));
    }
  }
}

void osc_relations(const SuiteOptions& o, Recorder& rec) {
  using K = OscRelation::Kind;
  const std::pair<OscProfile, std::pair<K, std::pair<K, K>>> families[] = {
      {OscProfile::classical, {K::boson, {K::qd, K::LE}}},
      {OscProfile::q_deformed, {K::qboson, {K::qd, K::qLE}}},
      {OscProfile::two_param, {K::gboson, {K::gqd, K::gq}}}};
  for (const auto& [p, kinds] : families) {
    const auto& [base, indexed] = kinds;
    auto check = [&](const OscRelation& rel) {
      rec.record(check_relation(rel, p, o.k_lo, o.k_hi));
    };
    check({base, 0, 0});
    check({K::fermion, 0, 0});
    check({K::cross, 0, 0});
    for (std::int64_t n = -o.max_index; n <= o.max_index; ++n) {
      if (p != OscProfile::classical) check({indexed.first, 0, n});
      for (std::int64_t m = -o.max_index; m <= o.max_index; ++m) {
        check({indexed.second, m, n});
      }
    }
  }
}

void classical_limit_suite(const SuiteOptions& o, Recorder& rec) {
  for (std::int64_t m = -o.max_index; m <= o.max_index; ++m) {
    for (std::int64_t n = -o.max_index; n <= o.max_index; ++n) {
      const LaurentPoly a = qpow(n - m);
      const LaurentPoly b = qpow(m - n);
      const std::int64_t s = m + n;
      const struct {
        const char* name;
        Element x, y, rhs;
      } cases[] = {
          {"[L_n, L_m]", gen(GeneratorSymbol::L(n)), gen(GeneratorSymbol::L(m)),
           gen(GeneratorSymbol::L(s)).scaled(q_int(m - n))},
          {"[L_n, W_m]", gen(GeneratorSymbol::L(n)), gen(GeneratorSymbol::W(m)),
           gen(GeneratorSymbol::W(s)).scaled(q_int(m - n))},
          {"[W_n, W_m]", gen(GeneratorSymbol::W(n)), gen(GeneratorSymbol::W(m)),
           Element()},
      };
      for (const auto& c : cases) {
        const Element br = q_bracket(c.x, c.y, a, b);
        rec.record(br == c.rhs, [&] {
          return std::string(c.name) + " q-bracket at " + pair_text(m, n) +
                 " gives " + br.to_string() + ", expected " + c.rhs.to_string();
        });
        const NumericElement lim = classical_limit(br);
        NumericElement want;
        if (!c.rhs.is_zero()) {
          want.add_term(c.rhs.terms().begin()->first, Rational(m - n));
        }
        rec.record(lim == want, [&] {
          return std::string(c.name) + " classical limit at " + pair_text(m, n) +
                 " gives " + lim.to_string() + ", expected " + want.to_string();
        });
      }
    }
  }
}

void generalized_recovery(const SuiteOptions& o, Recorder& rec) {
  const VarProfile two = VarProfile::two_var;
  for (std::int64_t m = -o.max_index; m <= o.max_index; ++m) {
    for (std::int64_t n = -o.max_index; n <= o.max_index; ++n) {
      const std::int64_t s = m + n;
      const struct {
        const char* name;
        GeneratorSymbol x, y, out;
        bool zero;
      } cases[] = {
          {"[L_n, L_m]", GeneratorSymbol::L(n), GeneratorSymbol::L(m),
           GeneratorSymbol::L(s), false},
          {"[L_n, W_m]", GeneratorSymbol::L(n), GeneratorSymbol::W(m),
           GeneratorSymbol::W(s), false},
          {"[W_n, W_m]", GeneratorSymbol::W(n), GeneratorSymbol::W(m),
           GeneratorSymbol::W(s), true},
      };
      for (const auto& c : cases) {
        const Element g = q_bracket(gen(c.x, kGen), gen(c.y, kGen),
                                    qpow(n - m, two), ppow(n - m), kGen);
        const Element want =
            c.zero ? Element() : gen(c.out, kGen).scaled(-q_int(n - m, two));
        rec.record(g == want, [&] {
          return std::string(c.name) + " generalized bracket at " +
                 pair_text(m, n) + " gives " + g.to_string() + ", expected " +
                 want.to_string();
        });
        const Element spec = specialize_to_standard(g);
        const Element st =
            q_bracket(gen(c.x), gen(c.y), qpow(n - m), qpow(m - n));
        rec.record(spec == st, [&] {
          return std::string(c.name) + " at p = q^-1, " + pair_text(m, n) +
                 ": " + spec.to_string() + " vs standard " + st.to_string();
        });
      }
    }
  }
}

struct SuiteDef {
  std::string_view name;
  std::string_view profile;
  void (*run)(const SuiteOptions&, Recorder&);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"q-identities", "one-var, two-var", q_identities},
      {"rewrite-assoc", "standard", rewrite_assoc},
      {"basis-stability", "standard", basis_stability},
      {"hopf-axioms", "standard", hopf_axioms},
      {"closed-forms", "standard", closed_forms},
      {"relation-preservation", "standard", relation_preservation},
      {"rep-oracle", "classical, q-deformed, two-param", rep_oracle},
      {"osc-relations", "classical, q-deformed, two-param", osc_relations},
      {"classical-limit", "standard", classical_limit_suite},
      {"generalized-recovery", "generalized", generalized_recovery},
  };
  return defs;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& d : suites()) out.push_back(d.name);
    return out;
  }();
  return names;
}

CheckReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& d : suites()) {
    if (d.name != name) continue;
    CheckReport report;
    report.suite = std::string(d.name);
    report.profile = std::string(d.profile);
    report.bounds = options;
    Recorder rec(report);
    const auto start = std::chrono::steady_clock::now();
    d.run(options, rec);
    report.wall_time_s = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return report;
  }
  throw UnknownIdentifierError("unknown suite '" + std::string(name) + "'");
}

std::vector<CheckReport> run_check(std::string_view name,
                                   const SuiteOptions& options) {
  if (name != "all") return {run_suite(name, options)};
  std::vector<CheckReport> out;
  for (const auto n : suite_names()) out.push_back(run_suite(n, options));
  return out;
}

}  // namespace qw22
