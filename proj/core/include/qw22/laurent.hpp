#pragma once

// Exact Laurent polynomials over the integers in q (one-variable profile) or
// in q and p (two-variable profile, p standing for q^c).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qw22 {

enum class VarProfile { one_var, two_var };

std::string_view to_string(VarProfile profile);

using Integer = mpz_class;
/// Reduced fraction with positive denominator (gmp keeps it canonical).
using Rational = mpq_class;

/// Exponent vector q^q_exp * p^p_exp. Ordered lexicographically on (q, p).
struct Monomial {
  std::int64_t q_exp = 0;
  std::int64_t p_exp = 0;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Sparse canonical Laurent polynomial with arbitrary-precision coefficients.
///
/// Terms are kept sorted by monomial with no zero coefficients, so equality is
/// structural. Exponent arithmetic is checked and throws ArithmeticBoundError
/// instead of wrapping. Binary operations require both operands to share a
/// VarProfile.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarProfile profile) : profile_(profile) {}

  static LaurentPoly constant(const Integer& c,
                              VarProfile profile = VarProfile::one_var);
  static LaurentPoly monomial(const Integer& c, std::int64_t q_exp,
                              std::int64_t p_exp = 0,
                              VarProfile profile = VarProfile::one_var);
  static LaurentPoly q(VarProfile profile = VarProfile::one_var) {
    return monomial(1, 1, 0, profile);
  }
  static LaurentPoly q_pow(std::int64_t e,
                           VarProfile profile = VarProfile::one_var) {
    return monomial(1, e, 0, profile);
  }
  static LaurentPoly p() { return monomial(1, 0, 1, VarProfile::two_var); }
  static LaurentPoly one(VarProfile profile = VarProfile::one_var) {
    return constant(1, profile);
  }

  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms, VarProfile profile);

  VarProfile profile() const noexcept { return profile_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// True for +-q^a p^b, the units of Z[q^{+-1}, p^{+-1}].
  bool is_unit() const;
  /// True iff the only term (if any) has exponent zero.
  bool is_constant() const;
  /// Coefficient of the given monomial (zero if absent).
  Integer coefficient(const Monomial& m) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Scales every term by q^q_shift p^p_shift.
  LaurentPoly shifted(std::int64_t q_shift, std::int64_t p_shift = 0) const;
  LaurentPoly scaled(const Integer& c) const;

  /// Non-negative powers for any operand; negative powers only for units.
  LaurentPoly pow(std::int64_t exponent) const;

  /// Substitutes p -> q^q_power, yielding a one-variable polynomial.
  LaurentPoly substitute_p(std::int64_t q_power) const;
  /// Reinterprets a one-variable polynomial in the two-variable profile.
  LaurentPoly as_two_var() const;

  /// Exact value at (q, p). p must be given iff the profile is two_var.
  Rational evaluate(const Rational& q_val,
                    const std::optional<Rational>& p_val = std::nullopt) const;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text,
                           VarProfile profile = VarProfile::one_var);

  bool operator==(const LaurentPoly& other) const {
    return profile_ == other.profile_ && terms_ == other.terms_;
  }

 private:
  void require_same_profile(const LaurentPoly& other) const;
  void canonicalize();

  VarProfile profile_ = VarProfile::one_var;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& poly);

/// q-integer. One variable: (q^n - q^-n)/(q - q^-1).
/// Two variables: (q^n - p^n)/(q - p) with p = q^c. Both divisions are exact.
LaurentPoly q_int(std::int64_t n, VarProfile profile = VarProfile::one_var);

/// Ordinary binomial coefficient as an integer.
Integer binomial(std::int64_t n, std::int64_t k);

/// Checks q^n[m] - q^m[n] = [m-n] and q^-n[m] + q^m[n] = [m+n] exactly.
bool q_identity_check(std::int64_t m, std::int64_t n);

/// Parses "a", "-a", "a/b" into a reduced rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

}  // namespace qw22
