#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace hardy {

using BigRational = boost::multiprecision::cpp_rational;

// Univariate polynomial with exact rational coefficients, stored sparsely as
// exponent -> coefficient with no zero entries.
class RationalPoly {
 public:
  RationalPoly() = default;

  static RationalPoly constant(const BigRational& c);
  static RationalPoly monomial(unsigned exponent, const BigRational& c);

  const std::map<unsigned, BigRational>& terms() const { return terms_; }
  BigRational coeff(unsigned exponent) const;
  unsigned degree() const;  // 0 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const RationalPoly& other) const { return terms_ == other.terms_; }

 private:
  std::map<unsigned, BigRational> terms_;

  void set(unsigned exponent, const BigRational& c);

  friend RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly poly_shift(const RationalPoly& a, int shift);
};

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_pow(const RationalPoly& a, unsigned k);

// p(c * x).
RationalPoly poly_scale_arg(const RationalPoly& p, const BigRational& c);
// p(q(x)).
RationalPoly poly_compose(const RationalPoly& p, const RationalPoly& q);
// x^shift * p; negative shifts require divisibility (DomainError otherwise).
RationalPoly poly_shift(const RationalPoly& a, int shift);

BigRational poly_eval(const RationalPoly& p, const BigRational& x);

// Psi(x) = (8-3x^2)^4 * Phi(x, t)|_{t = 4x/(8-3x^2)} where
// Phi(x,t) = (1+xt)^4 - (1+4t^2+t^4) * (1 + x^2/4 + x^4/64 + x^6/128)^4.
// Phi is expanded bivariately (degree 4 in t) and the substitution clears
// denominators with (8-3x^2)^4, so the result is an exact polynomial.
RationalPoly build_psi();

// The thirteen published coefficients of Psi(x)/x^8, keyed by exponent.
const std::map<unsigned, BigRational>& monster_expected_coefficients();

struct MonsterMismatch {
  unsigned exponent;  // exponent within Psi/x^8
  BigRational expected;
  BigRational actual;
};

struct MonsterReport {
  bool coefficients_match = false;
  bool support_ok = false;       // Psi supported exactly on x^8..x^32
  bool tail_dominated = false;   // sum of |coeff| over exponents >= 2 of Psi/x^8 < 50
  bool positive_on_grid = false; // Psi(k/20) > 0 exactly, k = 1..20
  std::vector<MonsterMismatch> mismatches;
  BigRational quotient_at_one;   // exact value of Psi(1)/1^8

  bool pass() const {
    return coefficients_match && support_ok && tail_dominated && positive_on_grid;
  }
};

// Compares a candidate Psi against the published coefficient table.
MonsterReport verify_monster_against(const RationalPoly& psi);

// verify_monster_against(build_psi()).
MonsterReport verify_monster();

}  // namespace hardy
