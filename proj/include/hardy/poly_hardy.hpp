#pragma once

#include <complex>
#include <vector>

#include "hardy/numerics.hpp"

namespace hardy {

// Coefficients (a_1, ..., a_n) of f(z) = sum a_k z^{k-1}.
using CoeffVec = std::vector<std::complex<double>>;

// p in [0, inf]; 0, 2, 4 and inf select closed forms where available.
class Exponent {
 public:
  Exponent(double v);  // implicit on purpose: hp_norm(v, 1.0) reads naturally
  static Exponent inf();

  bool is_inf() const { return inf_; }
  double value() const;  // finite value; +inf when is_inf()
  bool is(double v) const { return !inf_ && value_ == v; }

 private:
  Exponent(double v, bool inf) : value_(v), inf_(inf) {}
  double value_;
  bool inf_;
};

// |f(e^{it})| for the polynomial with the given coefficients.
double poly_boundary_abs(const CoeffVec& v, double t);

// The H^p quasinorm: the p-th power mean of |f| on the unit circle, with the
// sup norm at p = inf and the Mahler measure (geometric mean) at p = 0.
// Closed forms: p=2 any n (Parseval); n<=2 for p in {0, 1, 4}; p=inf via a
// dense grid plus golden refinement. Everything else is circle quadrature.
// The Mahler route for n >= 3 refuses inputs with a zero within ~1e-6 of the
// circle (NearCircleZero); quadrature may throw NonConvergence for p < 1
// when a boundary zero defeats the node budget.
double hp_norm(const CoeffVec& v, const Exponent& p, const QuadratureSpec& spec = {});

// G(lambda) = ||(1, lambda)||_{H^p} through the squared-binomial series
// sum_n binom(p/2, n)^2 lambda^{2n}, raised to 1/p. Valid for |lambda| <= 1,
// p > 0; at |lambda| = 1 terms decay like n^{-(p+2)} and the sum is truncated
// at the first term below 1e-13.
double series_g(double lambda, double p);

// p-th power mean of 1 + 2*lambda*cos(t): the quadratic-coefficient example
// (lambda, 1, lambda) whose power mean dips below 1 for 0 < p < 1. Requires
// |lambda| < 1/2 so the integrand stays positive.
double quadratic_quasinorm_p(double lambda, double p, const QuadratureSpec& spec = {});

}  // namespace hardy
