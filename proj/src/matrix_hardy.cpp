#include "hardy/matrix_hardy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/rng.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral (not mean) over [lo, hi] by Gauss-Legendre with node doubling,
// using the same convergence contract as circle_mean: stop when successive
// estimates agree to rel_tol relative to max(|I|, spread * max|f|), accept a
// final delta within 10x of that, throw NonConvergence beyond.
double gl_integral(const std::function<double(double)>& f, double lo,
                   double hi, double rel_tol, int max_q) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double prev = 0.0;
  bool have_prev = false;
  double fmax = 0.0;
  for (int q = 16; q <= max_q; q *= 2) {
    const GlRule& rule = gauss_legendre(q);
    double sum = 0.0;
    for (int i = 0; i < q; ++i) {
      const double value = f(mid + half * rule.nodes[i]);
      fmax = std::max(fmax, std::abs(value));
      sum += rule.weights[i] * value;
    }
    const double integral = half * sum;
    if (have_prev) {
      const double scale =
          std::max(std::abs(integral), std::abs(hi - lo) * fmax);
      const double delta = std::abs(integral - prev);
      if (delta <= rel_tol * scale) return integral;
      if (2 * q > max_q) {
        if (delta <= 10.0 * rel_tol * scale) return integral;
        throw NonConvergence("Gauss-Legendre panel did not converge");
      }
    }
    prev = integral;
    have_prev = true;
  }
  return prev;
}

// Azimuthal mean of sqrt(A cos^2 + B sin^2 + C) for A >= B >= 0, C >= 0:
// the form equals (A+C)(1 - k^2 sin^2) with k^2 = (A-B)/(A+C).
double phi_mean_sqrt(double a, double b, double c) {
  const double top = a + c;
  if (top <= 0.0) return 0.0;
  const double k2 = std::clamp((a - b) / top, 0.0, 1.0);
  return (2.0 / kPi) * std::sqrt(top) * elliptic_e(std::sqrt(k2));
}

// Azimuthal mean of log sqrt(A cos^2 + B sin^2 + C), same normal form.
double phi_mean_log(double a, double b, double c) {
  return std::log(0.5 * (std::sqrt(a + c) + std::sqrt(b + c)));
}

// Mean of ||diag(s) x||^p over S^2 for s1 >= s2 >= s3 normalized to s1 = 1,
// parametrized by x = (cos(psi) cos(phi), cos(psi) sin(phi), sin(psi)) so the
// smallest singular value sits on the polar axis. Returns the p-th power mean
// already re-rooted.
double diag3_power_mean(double s2, double s3, double p,
                        const QuadratureSpec& spec) {
  const int max_q = 4096;
  if (p == 1.0) {
    const double integral = gl_integral(
        [&](double psi) {
          const double c2 = std::cos(psi) * std::cos(psi);
          const double s2sq = std::sin(psi) * std::sin(psi);
          return std::cos(psi) *
                 phi_mean_sqrt(c2, s2 * s2 * c2, s3 * s3 * s2sq);
        },
        0.0, kPi / 2.0, spec.rel_tol, max_q);
    return integral;
  }
  // Generic p > 0: the azimuth needs quadrature as well; one quarter period
  // suffices by symmetry.
  const double integral = gl_integral(
      [&](double psi) {
        const double cpsi = std::cos(psi);
        const double top = cpsi * cpsi + s3 * s3 * std::sin(psi) * std::sin(psi);
        const double bottom =
            s2 * s2 * cpsi * cpsi + s3 * s3 * std::sin(psi) * std::sin(psi);
        const double inner = gl_integral(
            [&](double phi) {
              const double sp = std::sin(phi);
              return std::pow(top - (top - bottom) * sp * sp, 0.5 * p);
            },
            0.0, kPi / 2.0, spec.rel_tol, max_q);
        return cpsi * inner * (2.0 / kPi);
      },
      0.0, kPi / 2.0, spec.rel_tol, max_q);
  return std::pow(integral, 1.0 / p);
}

// Geometric mean of ||diag(1, s2, s3) x|| over S^2, azimuth integrated in
// closed form; the polar integrand has at worst a t*log(t) endpoint term.
double diag3_geometric_mean(double s2, double s3, const QuadratureSpec& spec) {
  const double integral = gl_integral(
      [&](double psi) {
        const double c2 = std::cos(psi) * std::cos(psi);
        const double s2sq = std::sin(psi) * std::sin(psi);
        return std::cos(psi) *
               phi_mean_log(c2, s2 * s2 * c2, s3 * s3 * s2sq);
      },
      0.0, kPi / 2.0, spec.rel_tol, 4096);
  return std::exp(integral);
}

// Hardy norm of the diagonal matrix with the given descending singular
// values; the shared reduction behind both matrix_hp_norm overloads and the
// dual-norm search. sigma must be nonempty, descending, nonnegative.
double diag_hp_norm(const std::vector<double>& sigma, Exponent p,
                    const QuadratureSpec& spec) {
  const int n = static_cast<int>(sigma.size());
  const double top = sigma.front();
  if (n == 1 || p.is_inf()) return top;
  if (p.is(2.0)) {
    double sum = 0.0;
    for (double s : sigma) sum += s * s;
    return std::sqrt(sum / n);
  }
  if (p.is(4.0)) {
    const SphereMoments m = sphere_moments(n);
    double sum2 = 0.0;
    double sum4 = 0.0;
    for (double s : sigma) {
      sum2 += s * s;
      sum4 += s * s * s * s;
    }
    const double pairs = 0.5 * (sum2 * sum2 - sum4);
    return std::pow(m.alpha * sum4 + 2.0 * m.beta * pairs, 0.25);
  }
  if (top == 0.0) {
    if (p.is(0.0)) throw SingularMatrix("H^0 norm of the zero matrix diverges");
    return 0.0;
  }
  if (sigma.back() == top) return top;  // equal singular values
  if (n == 2) {
    if (p.is(0.0)) return 0.5 * (sigma[0] + sigma[1]);
    const CoeffVec pair{{0.5 * (sigma[0] + sigma[1]), 0.0},
                        {0.5 * (sigma[0] - sigma[1]), 0.0}};
    return hp_norm(pair, p, spec);
  }
  if (n == 3) {
    // x1 is uniform on [-1,1] over S^2, so rank one is elementary.
    if (sigma[1] == 0.0) {
      if (p.is(0.0)) return top / std::numbers::e;
      return top * std::pow(1.0 + p.value(), -1.0 / p.value());
    }
    const double s2 = sigma[1] / top;
    const double s3 = sigma[2] / top;
    if (p.is(0.0)) return top * diag3_geometric_mean(s2, s3, spec);
    return top * diag3_power_mean(s2, s3, p.value(), spec);
  }
  throw DomainError(
      "adaptive matrix norms cover n <= 3 beyond the closed forms; "
      "pass an explicit sphere grid for larger n");
}

double node_image_norm(const RealMatrix& a, const double* x) {
  const int n = a.dim();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += a(i, j) * x[j];
    sum += row * row;
  }
  return std::sqrt(sum);
}

// Golden-section ascent on [lo, hi] without a grid stage; assumes the caller
// brackets a maximum. Returns the best probe seen, endpoints included.
MaxResult golden_max(const std::function<double(double)>& f, double lo,
                     double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  MaxResult best{x1, f1};
  if (f2 > best.value) best = {x2, f2};
  while (b - a > tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
      if (f1 > best.value) best = {x1, f1};
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
      if (f2 > best.value) best = {x2, f2};
    }
  }
  const double flo = f(lo);
  if (flo > best.value) best = {lo, flo};
  const double fhi = f(hi);
  if (fhi > best.value) best = {hi, fhi};
  return best;
}

double reduced_dual(const RealMatrix& a, Exponent p,
                    const QuadratureSpec& spec) {
  const std::vector<double>& tau = a.singular_values();
  const int n = a.dim();
  if (n == 1) return tau[0];

  if (n == 2) {
    const auto objective = [&](double s) {
      std::vector<double> sv{1.0, s};
      return (tau[0] + tau[1] * s) / 2.0 / diag_hp_norm(sv, p, spec);
    };
    return maximize_1d(objective, {0.0, 1.0, 1e-10}).value;
  }

  if (n == 3) {
    const auto objective = [&](double s2, double s3) {
      std::vector<double> sv{1.0, std::max(s2, s3), std::min(s2, s3)};
      return (tau[0] + tau[1] * s2 + tau[2] * s3) / 3.0 /
             diag_hp_norm(sv, p, spec);
    };
    // Coarse simplex scan, then alternating golden refinements.
    double best = -1.0;
    double b2 = 0.0;
    double b3 = 0.0;
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= i; ++j) {
        const double value = objective(i / 20.0, j / 20.0);
        if (value > best) {
          best = value;
          b2 = i / 20.0;
          b3 = j / 20.0;
        }
      }
    }
    for (double h : {0.08, 0.02, 0.004, 0.001}) {
      const MaxResult m2 =
          golden_max([&](double s) { return objective(s, b3); },
                     std::max(0.0, b2 - h), std::min(1.0, b2 + h), 1e-10);
      b2 = m2.arg;
      const MaxResult m3 =
          golden_max([&](double s) { return objective(b2, s); },
                     std::max(0.0, b3 - h), std::min(1.0, b3 + h), 1e-10);
      b3 = m3.arg;
      best = std::max(best, m3.value);
    }
    return best;
  }

  // Coordinate ascent from the all-ones corner; each sweep refines one
  // coordinate of (s2..sn) by golden section on [0,1].
  std::vector<double> s(static_cast<std::size_t>(n), 1.0);
  const auto objective = [&]() {
    std::vector<double> sorted(s);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double num = 0.0;
    for (int i = 0; i < n; ++i) num += tau[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
    return num / n / diag_hp_norm(sorted, p, spec);
  };
  double best = objective();
  for (int sweep = 0; sweep < 8; ++sweep) {
    for (int i = 1; i < n; ++i) {
      const MaxResult m = golden_max(
          [&](double si) {
            s[static_cast<std::size_t>(i)] = si;
            return objective();
          },
          0.0, 1.0, 1e-9);
      s[static_cast<std::size_t>(i)] = m.arg;
      best = std::max(best, m.value);
    }
  }
  return best;
}

double brute_dual(const RealMatrix& a, Exponent p, std::size_t trials,
                  std::uint64_t seed) {
  Rng rng(seed);
  double best = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const RealMatrix b = random_gaussian_matrix(rng, a.dim());
    if (b.is_zero()) continue;
    const double denom = matrix_hp_norm(b, p);
    best = std::max(best, std::abs(matrix_inner(a, b)) / denom);
  }
  return best;
}

}  // namespace

SphereMoments sphere_moments(int n) {
  if (n < 2) throw DomainError("sphere moments need dimension >= 2");
  const double denom = static_cast<double>(n) * (n + 2);
  return {n, 3.0 / denom, 1.0 / denom};
}

double matrix_h4_closed(const RealMatrix& a) {
  return diag_hp_norm(a.singular_values(), 4.0, {});
}

double matrix_inner(const RealMatrix& a, const RealMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("matrix inner product needs equal dimensions");
  }
  double sum = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sum += a(i, j) * b(i, j);
  }
  return sum / n;
}

double matrix_hp_norm(const RealMatrix& a, Exponent p,
                      const QuadratureSpec& spec) {
  spec.validate();
  return diag_hp_norm(a.singular_values(), p, spec);
}

double matrix_hp_norm(const RealMatrix& a, Exponent p, const SphereGrid& grid) {
  if (grid.dimension != a.dim()) {
    throw DimensionMismatch("sphere grid dimension must match the matrix");
  }
  if (p.is_inf()) return a.singular_values()[0];
  if (p.is(0.0)) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = node_image_norm(a, grid.node(i));
      if (r == 0.0) {
        throw SingularMatrix("grid node lies in the matrix kernel");
      }
      sum += grid.weights[i] * std::log(r);
    }
    return std::exp(sum);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sum += grid.weights[i] * std::pow(node_image_norm(a, grid.node(i)), p.value());
  }
  return std::pow(sum, 1.0 / p.value());
}

double matrix_dual_norm(const RealMatrix& a, Exponent p, DualMethod method,
                        std::size_t brute_trials, std::uint64_t seed) {
  if (a.is_zero()) throw ZeroMatrix("dual norm of the zero matrix");
  if (method == DualMethod::brute) return brute_dual(a, p, brute_trials, seed);
  if (p.is(2.0)) return matrix_hp_norm(a, 2.0);  // self-dual
  return reduced_dual(a, p, {});
}

std::pair<std::complex<double>, std::complex<double>> complex_pair_of_2x2(
    const RealMatrix& m) {
  if (m.dim() != 2) {
    throw DimensionMismatch("complex pair form needs a 2x2 matrix");
  }
  const std::complex<double> a{0.5 * (m(0, 0) + m(1, 1)),
                               0.5 * (m(1, 0) - m(0, 1))};
  const std::complex<double> b{0.5 * (m(0, 0) - m(1, 1)),
                               0.5 * (m(1, 0) + m(0, 1))};
  return {a, b};
}

RealMatrix matrix_of_complex_pair(std::complex<double> a,
                                  std::complex<double> b) {
  return RealMatrix(2, {a.real() + b.real(), b.imag() - a.imag(),
                        a.imag() + b.imag(), a.real() - b.real()});
}

}  // namespace hardy
