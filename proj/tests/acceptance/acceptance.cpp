// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
//
//   qw22_acceptance                 run every criterion
//   qw22_acceptance --criterion N   run criterion N only (exit 1 if it fails)

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qw22/algebra.hpp"
#include "qw22/hopf.hpp"
#include "qw22/laurent.hpp"
#include "qw22/oscillator.hpp"
#include "qw22/sampling.hpp"

using namespace qw22;

namespace {

// Counts checks and keeps the first failure.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  void check(const Verdict& v) {
    check(v.holds, [&] { return v.witness; });
  }
};

Element g(const GeneratorSymbol& s, Deformation d = Deformation::standard) {
  return element_from(s, d);
}

LaurentPoly qpow(std::int64_t e, VarProfile vp = VarProfile::one_var) {
  return LaurentPoly::q_pow(e, vp);
}

std::string at(std::int64_t m, std::int64_t n) {
  return " at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
}

void q_identities(Tally& t) {
  for (std::int64_t m = -16; m <= 16; ++m) {
    for (std::int64_t n = -16; n <= 16; ++n) {
      const LaurentPoly qm = q_int(m);
      const LaurentPoly qn = q_int(n);
      t.check(qm * qpow(n) - qn * qpow(m) == q_int(m - n),
              [&] { return "q^n[m] - q^m[n] != [m-n]" + at(m, n); });
      t.check(qm * qpow(-n) + qn * qpow(m) == q_int(m + n),
              [&] { return "q^-n[m] + q^m[n] != [m+n]" + at(m, n); });
    }
  }
}

void basis_stability(Tally& t) {
  Rng rng(20261016);
  const NormalWordShape shape{3, 4, 4, 6};
  for (int i = 0; i < 500; ++i) {
    const NormalWord w = random_normal_word(rng, shape);
    const Element got = normalize(w.expand());
    t.check(got == Element::term(w, LaurentPoly::one()), [&] {
      return "normalize(" + w.to_string() + ") = " + got.to_string();
    });
  }
}

void associativity(Tally& t) {
  Rng rng(31);
  const WordShape shape{4, 5, true};
  for (int i = 0; i < 300; ++i) {
    const Element x = random_element(rng, shape);
    const Element y = random_element(rng, shape);
    const Element z = random_element(rng, shape);
    const Element lhs = multiply(multiply(x, y), z);
    const Element rhs = multiply(x, multiply(y, z));
    t.check(lhs == rhs, [&] {
      return "(xy)z != x(yz) for x = " + x.to_string() + ", y = " +
             y.to_string() + ", z = " + z.to_string() + "; difference " +
             (lhs - rhs).to_string();
    });
  }
}

void relation_round_trip(Tally& t) {
  for (std::int64_t m = -8; m <= 8; ++m) {
    for (std::int64_t n = -8; n <= 8; ++n) {
      const LaurentPoly a = qpow(n - m);
      const LaurentPoly b = qpow(m - n);
      const Element ll = q_bracket(g(GeneratorSymbol::L(n)), g(GeneratorSymbol::L(m)), a, b);
      const Element lw = q_bracket(g(GeneratorSymbol::L(n)), g(GeneratorSymbol::W(m)), a, b);
      const Element ww = q_bracket(g(GeneratorSymbol::W(n)), g(GeneratorSymbol::W(m)), a, b);
      const Element l_out = g(GeneratorSymbol::L(m + n));
      const Element w_out = g(GeneratorSymbol::W(m + n));
      t.check(ll == l_out.scaled(q_int(m - n)),
              [&] { return "L-L bracket " + ll.to_string() + at(m, n); });
      t.check(lw == w_out.scaled(q_int(m - n)),
              [&] { return "L-W bracket " + lw.to_string() + at(m, n); });
      t.check(ww.is_zero(), [&] { return "W-W bracket " + ww.to_string() + at(m, n); });

      // [L_n, L_m] = (m - n) L_{m+n} classically.
      NumericElement want_l, want_w;
      want_l.add_term(l_out.terms().begin()->first, Rational(m - n));
      want_w.add_term(w_out.terms().begin()->first, Rational(m - n));
      t.check(classical_limit(ll) == want_l,
              [&] { return "classical L-L " + classical_limit(ll).to_string() + at(m, n); });
      t.check(classical_limit(lw) == want_w,
              [&] { return "classical L-W " + classical_limit(lw).to_string() + at(m, n); });
      t.check(classical_limit(ww).is_zero(), [&] { return "classical W-W" + at(m, n); });
    }
  }
}

void hopf_axioms(Tally& t) {
  std::vector<Element> gens = {g(GeneratorSymbol::T()), g(GeneratorSymbol::Tinv())};
  for (std::int64_t n = -8; n <= 8; ++n) {
    gens.push_back(g(GeneratorSymbol::L(n)));
    gens.push_back(g(GeneratorSymbol::W(n)));
  }
  const char* unary[] = {"coassoc",        "counit-left", "counit-right",
                         "antipode-left",  "antipode-right", "s-squared"};
  for (const auto& x : gens) {
    for (const char* id : unary) t.check(check_axiom(id, x));
  }
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      t.check(check_axiom("delta-hom", std::pair{x, y}));
      t.check(check_axiom("s-antihom", std::pair{x, y}));
    }
  }
  Rng rng(5);
  const WordShape shape{3, 4, true};
  for (int i = 0; i < 200; ++i) {
    const Element x = random_element(rng, shape);
    const Element y = random_element(rng, shape);
    for (const char* id : unary) t.check(check_axiom(id, x));
    t.check(check_axiom("delta-hom", std::pair{x, y}));
    t.check(check_axiom("s-antihom", std::pair{x, y}));
  }
  // Exhibited violations: Delta(L_1) != P Delta(L_1), T L_1 != L_1 T.
  const Element l1 = g(GeneratorSymbol::L(1));
  const TensorElement d = coproduct(l1);
  t.check(d != d.flipped(), [] { return std::string("Delta(L[1]) is symmetric"); });
  const Element tl = multiply(g(GeneratorSymbol::T()), l1);
  const Element lt = multiply(l1, g(GeneratorSymbol::T()));
  t.check(tl != lt, [] { return std::string("T and L[1] commute"); });
}

void relation_preservation(Tally& t) {
  for (HopfMap map : {HopfMap::delta, HopfMap::counit, HopfMap::antipode}) {
    for (Relation rel :
         {Relation::R2, Relation::R3, Relation::R4, Relation::R5, Relation::R6}) {
      for (std::int64_t m = -8; m <= 8; ++m) {
        for (std::int64_t n = -8; n <= 8; ++n) {
          t.check(check_relation_preserved(map, rel, m, n));
        }
      }
    }
  }
}

void closed_forms(Tally& t) {
  for (PowerGen pg : {PowerGen::L, PowerGen::W}) {
    for (std::int64_t n = -4; n <= 4; ++n) {
      const GeneratorSymbol s =
          pg == PowerGen::L ? GeneratorSymbol::L(n) : GeneratorSymbol::W(n);
      for (std::int64_t r = 0; r <= 6; ++r) {
        const Element xr = power(g(s), r);
        t.check(coproduct(xr) == coproduct_power_closed_form(pg, n, r), [&] {
          return "Delta(" + s.to_string() + "^" + std::to_string(r) + ")";
        });
        t.check(antipode(xr) == antipode_power_closed_form(pg, n, r), [&] {
          return "S(" + s.to_string() + "^" + std::to_string(r) + ")";
        });
      }
    }
  }
}

void oscillator_oracle(Tally& t) {
  using K = OscRelation::Kind;
  const std::int64_t lo = -12, hi = 12;
  const struct {
    OscProfile profile;
    K base, qd, brackets;
  } families[] = {{OscProfile::classical, K::boson, K::qd, K::LE},
                  {OscProfile::q_deformed, K::qboson, K::qd, K::qLE},
                  {OscProfile::two_param, K::gboson, K::gqd, K::gq}};
  for (const auto& f : families) {
    t.check(check_relation({f.base, 0, 0}, f.profile, lo, hi));
    t.check(check_relation({K::fermion, 0, 0}, f.profile, lo, hi));
    t.check(check_relation({K::cross, 0, 0}, f.profile, lo, hi));
    if (f.profile != OscProfile::classical) {
      for (std::int64_t n = -10; n <= 10; ++n) {
        t.check(check_relation({f.qd, 0, n}, f.profile, lo, hi));
      }
    }
    for (std::int64_t m = -6; m <= 6; ++m) {
      for (std::int64_t n = -6; n <= 6; ++n) {
        t.check(check_relation({f.brackets, m, n}, f.profile, lo, hi));
      }
    }
  }
  // [a, (a+)^n] = n (a+)^{n-1} classically, checked directly on the ladder.
  for (std::int64_t n = -10; n <= 10; ++n) {
    for (std::int64_t k = lo; k <= hi; ++k) {
      const auto v = ModuleVector::basis(k, 0);
      const auto lhs =
          apply_ladder(Ladder::a, apply_creation_power(n, v), OscProfile::classical) -
          apply_creation_power(n, apply_ladder(Ladder::a, v, OscProfile::classical));
      const auto rhs =
          apply_creation_power(n - 1, v).scaled(LaurentPoly::constant(static_cast<long>(n)));
      t.check(lhs == rhs, [&] {
        return "[a, (a+)^" + std::to_string(n) + "] on |" + std::to_string(k) + ",0>";
      });
    }
  }
}

void cross_validation(Tally& t) {
  Rng rng(9);
  const WordShape shape{5, 5, false};
  for (OscProfile p :
       {OscProfile::classical, OscProfile::q_deformed, OscProfile::two_param}) {
    for (int i = 0; i < 1000; ++i) {
      t.check(oracle_consistency(random_word(rng, shape), p, -8, 8));
    }
  }
}

void generalized_recovery(Tally& t) {
  const auto two = VarProfile::two_var;
  const auto gen = Deformation::generalized;
  for (std::int64_t m = -6; m <= 6; ++m) {
    for (std::int64_t n = -6; n <= 6; ++n) {
      const LaurentPoly a = qpow(n - m, two);
      const LaurentPoly b = LaurentPoly::monomial(1, 0, n - m, two);
      const Element br = q_bracket(g(GeneratorSymbol::L(n), gen),
                                   g(GeneratorSymbol::L(m), gen), a, b, gen);
      t.check(br == g(GeneratorSymbol::L(m + n), gen).scaled(-q_int(n - m, two)),
              [&] { return "generalized L-L bracket " + br.to_string() + at(m, n); });
      const Element std_br = q_bracket(g(GeneratorSymbol::L(n)), g(GeneratorSymbol::L(m)),
                                       qpow(n - m), qpow(m - n));
      t.check(specialize_to_standard(br) == std_br, [&] {
        return "p -> q^-1 gives " + specialize_to_standard(br).to_string() +
               " but the standard bracket is " + std_br.to_string() + at(m, n);
      });
    }
  }
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(QW22_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void cli_contract(Tally& t) {
  const Run n = run_cli("normalize \"L[2]*L[1]\"");
  t.check(n.status == 0 && n.out == "q^-2 * L[1] L[2] - q^-1 * L[3]\n",
          [&] { return "normalize printed '" + n.out + "'"; });
  const Run c = run_cli("counit \"T^2\"");
  t.check(c.status == 0 && c.out == "1\n", [&] { return "counit printed '" + c.out + "'"; });
  const Run h = run_cli("check hopf-axioms --max-index 4 --max-len 3 --seed 7");
  t.check(h.status == 0 && h.out.find("cases failed: 0\n") != std::string::npos,
          [&] { return "check hopf-axioms exited " + std::to_string(h.status); });
  const Run all = run_cli("check all");
  t.check(all.status == 0, [&] {
    std::string failing;
    std::size_t pos = 0;
    while ((pos = all.out.find("suite: ", pos)) != std::string::npos) {
      const auto eol = all.out.find('\n', pos);
      const std::string name = all.out.substr(pos + 7, eol - pos - 7);
      const auto f = all.out.find("cases failed: ", eol);
      if (f != std::string::npos && all.out.compare(f + 14, 2, "0\n") != 0) {
        failing += " " + name;
      }
      pos = eol;
    }
    return "check all exited " + std::to_string(all.status) + "; failing suites:" +
           failing;
  });
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  void (*run)(Tally&);
};

const Criterion kCriteria[] = {
    {1, "q-identities", 1, q_identities},
    {2, "basis stability", 5, basis_stability},
    {3, "associativity (confluence proxy)", 30, associativity},
    {4, "relation round-trip and classical limit", 5, relation_round_trip},
    {5, "Hopf axioms", 60, hopf_axioms},
    {6, "relation preservation", 60, relation_preservation},
    {7, "closed forms for powers", 30, closed_forms},
    {8, "oscillator oracle", 30, oscillator_oracle},
    {9, "cross-validation against the oracle", 60, cross_validation},
    {10, "generalized-profile recovery", 5, generalized_recovery},
    {11, "CLI contract", 600, cli_contract},
};

bool run(const Criterion& c) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    c.run(t);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.limit_s;
  const bool ok = error.empty() && t.failures == 0 && in_time;
  std::printf("criterion %d [%s]: %s (%ld checks, %ld failed, %.2f s, limit %.0f s)\n",
              c.id, c.name, ok ? "PASS" : "FAIL", t.checks, t.failures, secs,
              c.limit_s);
  if (!error.empty()) std::printf("  error: %s\n", error.c_str());
  if (t.failures) std::printf("  first failure: %s\n", t.first.c_str());
  if (!in_time) std::printf("  runtime limit exceeded\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_ok = true;
  bool found = false;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    found = true;
    all_ok = run(c) && all_ok;
  }
  if (!found) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_ok ? 0 : 1;
}
