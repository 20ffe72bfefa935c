#pragma once

// Comultiplication, counit and antipode of U_q (standard profile), computed
// exactly in the tensor square, plus the axiom checks.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qw22/algebra.hpp"
#include "qw22/verdict.hpp"

namespace qw22 {

/// Finite linear combination of a (x) b with a, b basis words.
class TensorElement {
 public:
  using Key = std::pair<NormalWord, NormalWord>;
  using Terms = std::map<Key, LaurentPoly>;

  static TensorElement pure(const NormalWord& a, const NormalWord& b,
                            const LaurentPoly& c);
  static TensorElement unit();
  /// x (x) y expanded bilinearly.
  static TensorElement outer(const Element& x, const Element& y);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const NormalWord& a, const NormalWord& b, const LaurentPoly& c);
  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  TensorElement scaled(const LaurentPoly& c) const;
  /// a (x) b -> b (x) a.
  TensorElement flipped() const;

  std::string to_string() const;
  bool operator==(const TensorElement& other) const {
    return terms_ == other.terms_;
  }

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TensorElement& t);

/// Flat triple tensor a (x) b (x) c, used only for coassociativity.
class TripleTensor {
 public:
  using Key = std::array<NormalWord, 3>;
  using Terms = std::map<Key, LaurentPoly>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Key& key, const LaurentPoly& c);
  TripleTensor& operator-=(const TripleTensor& rhs);
  std::string to_string() const;
  bool operator==(const TripleTensor& other) const {
    return terms_ == other.terms_;
  }

 private:
  Terms terms_;
};

/// (a (x) b)(c (x) d) = ac (x) bd, each slot normal-ordered.
TensorElement tensor_multiply(const TensorElement& u, const TensorElement& v);

/// Images of a single generator.
TensorElement coproduct(const GeneratorSymbol& g);
Element antipode(const GeneratorSymbol& g);

/// Delta on a raw word: generator images multiplied left to right.
TensorElement coproduct(const Word& w);
/// S on a raw word: images of the reversed word multiplied left to right.
Element antipode(const Word& w);
LaurentPoly counit(const Word& w);

/// Linear extensions through each basis word's generator sequence.
TensorElement coproduct(const Element& x);
Element antipode(const Element& x);
LaurentPoly counit(const Element& x);

/// m: a (x) b -> ab.
Element multiply_out(const TensorElement& t);
/// (1 (x) eps) and (eps (x) 1), landing in U_q via u (x) 1 ~ u.
Element apply_counit_right(const TensorElement& t);
Element apply_counit_left(const TensorElement& t);
/// (1 (x) Delta) and (Delta (x) 1).
TripleTensor coproduct_right(const TensorElement& t);
TripleTensor coproduct_left(const TensorElement& t);
/// (1 (x) S) and (S (x) 1).
TensorElement antipode_right(const TensorElement& t);
TensorElement antipode_left(const TensorElement& t);

enum class PowerMap { delta, antipode };
enum class PowerGen { L, W };

/// Closed forms for powers of a generator:
///   Delta(X_n^r) = sum_i C(r,i) X_n^{r-i} T^{in} (x) T^{(r-i)n} X_n^i
///   S(X_n^r)     = (-1)^r T^{-rn} X_n^r T^{-rn}
TensorElement coproduct_power_closed_form(PowerGen gen, std::int64_t n,
                                          std::int64_t r);
Element antipode_power_closed_form(PowerGen gen, std::int64_t n, std::int64_t r);
std::variant<TensorElement, Element> power_closed_form(PowerMap map, PowerGen gen,
                                                       std::int64_t n,
                                                       std::int64_t r);

// ---------------------------------------------------------- relations

enum class Relation { R2, R3, R4, R5, R6 };

std::string_view to_string(Relation rel);
Relation parse_relation(std::string_view name);

/// Linear combination of raw (unreduced) words.
using WordCombination = std::vector<std::pair<LaurentPoly, Word>>;

struct RelationSides {
  WordCombination lhs;
  WordCombination rhs;
};

/// Both sides of a defining relation at indices (m, n), as raw words:
///   R2: T^m L_n = q^{-2(n+1)m} L_n T^m, R3 likewise for W,
///   R4: q^{n-m} L_n L_m - q^{m-n} L_m L_n = [m-n] L_{m+n},
///   R5: q^{n-m} L_n W_m - q^{m-n} W_m L_n = [m-n] W_{m+n},
///   R6: q^{n-m} W_n W_m - q^{m-n} W_m W_n = 0.
RelationSides relation_sides(Relation rel, std::int64_t m, std::int64_t n);

// ---------------------------------------------------------- axiom checks

struct IndexPair {
  std::int64_t m = 0;
  std::int64_t n = 0;
};

using AxiomInput = std::variant<Element, std::pair<Element, Element>, IndexPair>;

using AxiomResult = Verdict;

/// Axiom ids:
///   coassoc, counit-left, counit-right, antipode-left, antipode-right,
///   s-squared, cocommutativity-witness             (Element input);
///   delta-hom, s-antihom, commutativity-witness    (pair of Elements);
///   delta-hom, s-antihom, counit-hom, relation-preservation
///                                                 (IndexPair: R2-R6 at (m,n)).
/// The witness checks return holds = true iff a violation was exhibited.
AxiomResult check_axiom(std::string_view axiom, const AxiomInput& input);

const std::vector<std::string_view>& axiom_ids();

/// Delta, eps or S applied to both sides of one relation.
enum class HopfMap { delta, counit, antipode };
AxiomResult check_relation_preserved(HopfMap map, Relation rel, std::int64_t m,
                                     std::int64_t n);

}  // namespace qw22
