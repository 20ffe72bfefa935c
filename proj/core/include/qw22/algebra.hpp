#pragma once

// Words in T^{+-1}, L_n, W_n and the rewrite engine that normal-orders them
// into the basis T^d L_{i1}^{k1}...L_{im}^{km} W_{j1}^{l1}...W_{jn}^{ln}.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qw22/laurent.hpp"

namespace qw22 {

/// standard: relations (R1)-(R6), coefficients in Z[q^{+-1}].
/// generalized: the two-parameter deformation in q and p = q^c, T-free.
enum class Deformation { standard, generalized };

std::string_view to_string(Deformation profile);
Deformation parse_deformation(std::string_view name);

constexpr VarProfile var_profile(Deformation profile) {
  return profile == Deformation::standard ? VarProfile::one_var
                                          : VarProfile::two_var;
}

enum class GenKind : std::uint8_t { T, Tinv, L, W };

struct GeneratorSymbol {
  GenKind kind = GenKind::T;
  std::int64_t index = 0;  // meaningful for L and W only

  static GeneratorSymbol T() { return {GenKind::T, 0}; }
  static GeneratorSymbol Tinv() { return {GenKind::Tinv, 0}; }
  static GeneratorSymbol L(std::int64_t n);
  static GeneratorSymbol W(std::int64_t n);

  bool is_torus() const noexcept {
    return kind == GenKind::T || kind == GenKind::Tinv;
  }

  auto operator<=>(const GeneratorSymbol&) const = default;
  bool operator==(const GeneratorSymbol&) const = default;

  std::string to_string() const;
};

using Word = std::vector<GeneratorSymbol>;

std::string to_string(const Word& word);

/// (index, multiplicity) run inside an L- or W-block.
struct Power {
  std::int64_t index = 0;
  std::int64_t mult = 1;

  auto operator<=>(const Power&) const = default;
  bool operator==(const Power&) const = default;
};

/// A basis monomial T^d (L-block) (W-block); strictly ascending indices,
/// positive multiplicities. The default value is the unit.
struct NormalWord {
  std::int64_t t_exp = 0;
  std::vector<Power> l_block;
  std::vector<Power> w_block;

  bool is_unit() const noexcept {
    return t_exp == 0 && l_block.empty() && w_block.empty();
  }
  bool is_torus() const noexcept { return l_block.empty() && w_block.empty(); }
  /// The T-free factor: this word with t_exp = 0.
  NormalWord torus_free() const;

  /// T^sign(d) repeated |d| times, then L's, then W's with multiplicity.
  Word expand() const;
  std::string to_string() const;

  auto operator<=>(const NormalWord&) const = default;
  bool operator==(const NormalWord&) const = default;
};

/// True iff the word reads as T-powers of one sign, then weakly ascending L
/// indices, then weakly ascending W indices.
bool is_normal(const Word& word);

/// Collapses a word satisfying is_normal into its NormalWord.
NormalWord to_normal_word(const Word& word);

/// Finite linear combination of NormalWords with Laurent coefficients.
class Element {
 public:
  using Terms = std::map<NormalWord, LaurentPoly>;

  Element() = default;

  static Element unit(VarProfile profile = VarProfile::one_var);
  static Element scalar(const LaurentPoly& c);
  static Element term(const NormalWord& word, const LaurentPoly& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// True iff the element is a multiple of the unit word.
  bool is_scalar() const;
  /// Coefficient of the unit word.
  LaurentPoly scalar_part(VarProfile profile) const;
  LaurentPoly coefficient(const NormalWord& word, VarProfile profile) const;

  void add_term(const NormalWord& word, const LaurentPoly& c);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  /// Scalar multiple (coefficient-wise; no reordering needed).
  Element scaled(const LaurentPoly& c) const;

  std::string to_string() const;

  bool operator==(const Element& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

/// Element of rational coefficients: the target of evaluation and the
/// classical limit.
class NumericElement {
 public:
  using Terms = std::map<NormalWord, Rational>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const NormalWord& word, const Rational& c);
  std::string to_string() const;
  bool operator==(const NumericElement& other) const {
    return terms_ == other.terms_;
  }

 private:
  Terms terms_;
};

Element element_from(const GeneratorSymbol& g,
                     Deformation profile = Deformation::standard);
Element element_from(const Word& w, Deformation profile = Deformation::standard);
Element element_from(const LaurentPoly& scalar);

/// Normal-orders a word with the deterministic leftmost-reducible strategy.
///
/// Standard profile, for adjacent pairs:
///   T T^-1 -> 1, T^-1 T -> 1;
///   X_n T^{+-1} -> q^{+-2(n+1)} T^{+-1} X_n       (X in {L, W}, from (R2)/(R3));
///   L_n L_m -> q^{2(m-n)} L_m L_n + q^{m-n}[m-n] L_{m+n}          (n > m);
///   W_m L_n -> q^{2(n-m)} L_n W_m - q^{n-m}[m-n] W_{m+n};
///   W_n W_m -> q^{2(m-n)} W_m W_n                                  (n > m).
/// The generalized profile uses the same shapes with the two-parameter
/// prefactors and rejects T.
Element normalize(const Word& w, Deformation profile = Deformation::standard);

/// Bilinear extension of concatenation followed by normalize.
Element multiply(const Element& x, const Element& y,
                 Deformation profile = Deformation::standard);
/// Product of two basis words.
Element multiply(const NormalWord& a, const NormalWord& b,
                 Deformation profile = Deformation::standard);

/// Non-negative power by repeated left multiplication.
Element power(const Element& x, std::int64_t r,
              Deformation profile = Deformation::standard);

/// alpha x y - beta y x.
Element q_bracket(const Element& x, const Element& y, const LaurentPoly& alpha,
                  const LaurentPoly& beta,
                  Deformation profile = Deformation::standard);

/// Every coefficient evaluated at q = 1 (and p = 1 for two-variable input).
NumericElement classical_limit(const Element& x);

/// Every coefficient evaluated at (q, p).
NumericElement evaluate(const Element& x, const Rational& q_val,
                        const std::optional<Rational>& p_val = std::nullopt);

/// Substitutes p -> q^-1 in every coefficient (generalized -> standard).
Element specialize_to_standard(const Element& x);

}  // namespace qw22
