#include "hardy/poly_hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_coeffs(const CoeffVec& v) {
  if (v.empty()) throw DomainError("hp_norm: coefficient vector must be nonempty");
  for (const auto& a : v) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw NonFinite("hp_norm: coefficients must be finite");
    }
  }
}

bool all_zero(const CoeffVec& v) {
  for (const auto& a : v) {
    if (a != std::complex<double>(0.0, 0.0)) return false;
  }
  return true;
}

double sup_norm_on_circle(const CoeffVec& v) {
  constexpr int kGrid = 4096;
  double best = -1.0;
  int best_j = 0;
  for (int j = 0; j < kGrid; ++j) {
    const double t = kTwoPi * j / kGrid;
    const double val = poly_boundary_abs(v, t);
    if (val > best) {
      best = val;
      best_j = j;
    }
  }
  const double h = kTwoPi / kGrid;
  const double center = kTwoPi * best_j / kGrid;
  const auto refined = maximize_1d(
      [&](double t) { return poly_boundary_abs(v, t); },
      {center - h, center + h, 1e-12});
  return std::max(best, refined.value);
}

double mahler_c2(const CoeffVec& v) {
  return std::max(std::abs(v[0]), std::abs(v[1]));
}

double elliptic_h1_c2(const CoeffVec& v) {
  const double big = std::max(std::abs(v[0]), std::abs(v[1]));
  const double small = std::min(std::abs(v[0]), std::abs(v[1]));
  const double k = small / big;
  return big * (2.0 * (k + 1.0) / std::numbers::pi) *
         elliptic_e(2.0 * std::sqrt(k) / (k + 1.0));
}

double h4_c2(const CoeffVec& v) {
  const double a = std::norm(v[0]);  // |a_1|^2
  const double b = std::norm(v[1]);
  return std::pow(a * a + 4.0 * a * b + b * b, 0.25);
}

}  // namespace

Exponent::Exponent(double v) : value_(v), inf_(false) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError("Exponent: p must be finite and >= 0 (use Exponent::inf())");
  }
}

Exponent Exponent::inf() {
  return Exponent(std::numeric_limits<double>::infinity(), true);
}

double Exponent::value() const { return value_; }

double poly_boundary_abs(const CoeffVec& v, double t) {
  const std::complex<double> w = std::polar(1.0, t);
  std::complex<double> f = v.back();
  for (std::size_t k = v.size() - 1; k-- > 0;) f = f * w + v[k];
  return std::abs(f);
}

double hp_norm(const CoeffVec& v, const Exponent& p, const QuadratureSpec& spec) {
  validate_coeffs(v);
  if (all_zero(v)) return 0.0;
  const std::size_t n = v.size();

  if (n == 1) return std::abs(v[0]);  // constant boundary modulus

  if (p.is_inf()) return sup_norm_on_circle(v);

  if (p.is(2.0)) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return std::sqrt(s);
  }

  if (n == 2) {
    if (p.is(0.0)) return mahler_c2(v);
    if (p.is(1.0)) return elliptic_h1_c2(v);
    if (p.is(4.0)) return h4_c2(v);
    // Generic p through the squared-binomial series: it converges for every
    // modulus ratio up to and including 1, whereas quadrature of |f|^p with
    // p < 1 can exhaust its node budget when a zero sits near the circle.
    const double m1 = std::abs(v[0]);
    const double m2 = std::abs(v[1]);
    const double big = std::max(m1, m2);
    return big * series_g(std::min(m1, m2) / big, p.value());
  }

  if (p.is(0.0)) {
    // Mahler measure by quadrature of log|f|, gated on zeros near the circle:
    // the threshold is relative to the coefficient scale so the gate commutes
    // with scalar multiples.
    double scale = 0.0;
    for (const auto& a : v) scale = std::max(scale, std::abs(a));
    constexpr int kGrid = 4096;
    for (int j = 0; j < kGrid; ++j) {
      if (poly_boundary_abs(v, kTwoPi * j / kGrid) < 1e-6 * scale) {
        throw NearCircleZero(
            "hp_norm: Mahler quadrature needs all zeros farther than ~1e-6 "
            "from the unit circle");
      }
    }
    return std::exp(
        circle_mean([&](double t) { return std::log(poly_boundary_abs(v, t)); }, spec));
  }

  const double pv = p.value();
  const double mean =
      circle_mean([&](double t) { return std::pow(poly_boundary_abs(v, t), pv); }, spec);
  return std::pow(mean, 1.0 / pv);
}

double series_g(double lambda, double p) {
  if (!(std::abs(lambda) <= 1.0)) {
    throw DomainError("series_g: |lambda| must be <= 1");
  }
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("series_g: p must be positive and finite");
  }

  const double q = p / 2.0;
  const double l2 = lambda * lambda;
  const bool at_edge = (l2 == 1.0);
  double binom = 1.0;  // binom(q, n)
  double power = 1.0;  // lambda^{2n}
  double sum = 1.0;
  constexpr std::size_t kMaxTerms = 5'000'000;
  for (std::size_t nterm = 1; nterm < kMaxTerms; ++nterm) {
    binom *= (q - static_cast<double>(nterm) + 1.0) / static_cast<double>(nterm);
    power *= l2;
    const double term = binom * binom * power;
    sum += term;
    if (term == 0.0) break;
    if (at_edge) {
      if (term < 1e-13) break;
    } else {
      const double r = (q - static_cast<double>(nterm)) / (static_cast<double>(nterm) + 1.0);
      const double ratio = r * r * l2;
      if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-15) break;
    }
    if (nterm + 1 == kMaxTerms) {
      throw NonConvergence("series_g: term budget exhausted");
    }
  }
  return std::pow(sum, 1.0 / p);
}

double quadratic_quasinorm_p(double lambda, double p, const QuadratureSpec& spec) {
  if (!(std::abs(lambda) < 0.5)) {
    throw DomainError("quadratic_quasinorm_p: |lambda| must be < 1/2");
  }
  if (!(p > 0.0) || !(p < 1.0)) {
    throw DomainError("quadratic_quasinorm_p: p must lie in (0, 1)");
  }
  return circle_mean(
      [&](double t) { return std::pow(1.0 + 2.0 * lambda * std::cos(t), p); }, spec);
}

}  // namespace hardy
