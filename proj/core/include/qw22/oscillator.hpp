#pragma once

// Oscillator realization L_n = (a+)^{n+1} a, W_n = (a+)^{n+1} b+ a on the
// Z-graded module spanned by |k, eps>, k in Z, eps in {0, 1}. The creation
// operator a+ is invertible here, so negative powers are plain down-shifts.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "qw22/algebra.hpp"
#include "qw22/laurent.hpp"
#include "qw22/verdict.hpp"

namespace qw22 {

/// classical:  a a+ - a+ a = 1,             lambda_k = k
/// q_deformed: q^-1 a a+ - q a+ a = 1,      lambda_k = q^k [k]_q
/// two_param:  p a a+ - q a+ a = 1,         lambda_k = p^-k (q^k - p^k)/(q - p)
enum class OscProfile { classical, q_deformed, two_param };

std::string_view to_string(OscProfile profile);
OscProfile parse_osc_profile(std::string_view name);

/// Coefficient ring of the profile (classical uses integer constants).
constexpr VarProfile var_profile(OscProfile profile) {
  return profile == OscProfile::two_param ? VarProfile::two_var
                                          : VarProfile::one_var;
}

/// Rewrite-engine deformation whose normal forms the profile realizes.
constexpr Deformation deformation(OscProfile profile) {
  return profile == OscProfile::two_param ? Deformation::generalized
                                          : Deformation::standard;
}

struct FockLabel {
  std::int64_t k = 0;
  int eps = 0;

  auto operator<=>(const FockLabel&) const = default;
  bool operator==(const FockLabel&) const = default;
};

class ModuleVector {
 public:
  using Terms = std::map<FockLabel, LaurentPoly>;

  ModuleVector() = default;
  /// Basis vector |k, eps> (checked against the grade cap).
  static ModuleVector basis(std::int64_t k, int eps,
                            VarProfile profile = VarProfile::one_var);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const FockLabel& label, const LaurentPoly& c);
  ModuleVector& operator+=(const ModuleVector& rhs);
  ModuleVector& operator-=(const ModuleVector& rhs);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    return a += b;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    return a -= b;
  }
  ModuleVector scaled(const LaurentPoly& c) const;

  /// "coeff * |k,eps>" terms sorted by (k, eps); "0" when empty.
  std::string to_string() const;
  bool operator==(const ModuleVector& other) const {
    return terms_ == other.terms_;
  }

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ModuleVector& v);

enum class Ladder { a, a_dag, b, b_dag };

/// lambda_k for the profile.
LaurentPoly ladder_weight(std::int64_t k, OscProfile profile);

ModuleVector apply_ladder(Ladder op, const ModuleVector& v, OscProfile profile);
/// (a+)^e for any integer e; negative e shifts the grade down.
ModuleVector apply_creation_power(std::int64_t e, const ModuleVector& v);

/// L_n = (a+)^{n+1} a and W_n = (a+)^{n+1} b+ a, applied as ladder composites.
/// T and T^-1 throw UnsupportedGeneratorError.
ModuleVector apply_generator(const GeneratorSymbol& g, const ModuleVector& v,
                             OscProfile profile);
/// Rightmost generator acts first.
ModuleVector apply_word(const Word& w, const ModuleVector& v, OscProfile profile);
/// Linear extension over the basis words of a T-free element.
ModuleVector apply_element(const Element& x, const ModuleVector& v,
                           OscProfile profile);

/// Operator identities checkable on the module. Names:
///   boson, qboson, gboson              defining brackets of a and a+;
///   fermion                            b b+ + b+ b = 1, b^2 = (b+)^2 = 0;
///   cross                              a, a+ commute with b, b+;
///   qd(n)    q^-n a (a+)^n - q^n (a+)^n a = [n]_q (a+)^{n-1};
///   gqd(n)   p^n a (a+)^n - q^n (a+)^n a = [n]^c (a+)^{n-1};
///   LE(m,n)  the classical brackets of L_m, W_n;
///   qLE(m,n) the q-brackets [L_n, L_m], [L_n, W_m], [W_n, W_m];
///   gq(m,n)  their two-parameter counterparts.
struct OscRelation {
  enum class Kind { boson, qboson, gboson, fermion, cross, qd, gqd, LE, qLE, gq };
  Kind kind = Kind::boson;
  std::int64_t m = 0;
  std::int64_t n = 0;

  static OscRelation parse(std::string_view text);
  std::string to_string() const;
  /// Profiles on which the relation is meaningful.
  bool compatible(OscProfile profile) const;
};

/// Checks the relation on every |k, eps> with lo <= k <= hi. Throws
/// UnsupportedProfileError when the relation does not belong to the profile.
Verdict check_relation(const OscRelation& rel, OscProfile profile,
                       std::int64_t lo, std::int64_t hi);

/// rho(normalize(w)) == rho(w) on every |k, eps> with lo <= k <= hi. The
/// classical profile compares against the q = 1 limit of the standard normal
/// form.
Verdict oracle_consistency(const Word& w, OscProfile profile, std::int64_t lo,
                           std::int64_t hi);

}  // namespace qw22
