#include "hardy/harmonic_schwarz.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/matrix_hardy.hpp"
#include "hardy/poly_hardy.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> boundary_g(const DualDirection& d, double t) {
  const std::complex<double> z = std::polar(1.0, t);
  const std::complex<double> w = d.gamma * z + d.delta * std::conj(z);
  return w / std::abs(w);
}

// Mean of g(e^{it}) e^{i k t} over the circle, one quadrature per component.
std::complex<double> fourier_mean(const DualDirection& d, int k,
                                  const QuadratureSpec& spec) {
  const double re = circle_mean(
      [&](double t) { return (boundary_g(d, t) * std::polar(1.0, k * t)).real(); },
      spec);
  const double im = circle_mean(
      [&](double t) { return (boundary_g(d, t) * std::polar(1.0, k * t)).imag(); },
      spec);
  return {re, im};
}

// Solves X M = R for X given symmetric positive definite M close to the
// identity; Gauss elimination with partial pivoting on M^T = M.
RealMatrix solve_right(const RealMatrix& r, const RealMatrix& m) {
  const int n = m.dim();
  std::vector<double> lhs = m.entries();
  std::vector<double> rhs = transpose(r).entries();  // columns are rows of r
  const auto at = [n](std::vector<double>& v, int i, int j) -> double& {
    return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  };
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(at(lhs, row, col)) > std::abs(at(lhs, pivot, col))) pivot = row;
    }
    if (std::abs(at(lhs, pivot, col)) < 1e-14) {
      throw SingularMatrix("grid second moments are singular");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(at(lhs, col, j), at(lhs, pivot, j));
        std::swap(at(rhs, col, j), at(rhs, pivot, j));
      }
    }
    for (int row = col + 1; row < n; ++row) {
      const double factor = at(lhs, row, col) / at(lhs, col, col);
      for (int j = col; j < n; ++j) at(lhs, row, j) -= factor * at(lhs, col, j);
      for (int j = 0; j < n; ++j) at(rhs, row, j) -= factor * at(rhs, col, j);
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int j = 0; j < n; ++j) {
      double sum = at(rhs, col, j);
      for (int k = col + 1; k < n; ++k) sum -= at(lhs, col, k) * at(rhs, k, j);
      at(rhs, col, j) = sum / at(lhs, col, col);
    }
  }
  // rhs now holds X^T; transpose back.
  std::vector<double> x(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      x[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
        static_cast<std::size_t>(j)] = at(rhs, j, i);
    }
  }
  return RealMatrix(n, std::move(x));
}

}  // namespace

SchwarzPair disk_extremal_derivative(const DualDirection& d,
                                     const QuadratureSpec& spec) {
  if (!std::isfinite(std::abs(d.gamma)) || !std::isfinite(std::abs(d.delta))) {
    throw NonFinite("direction entries must be finite");
  }
  if (std::abs(std::abs(d.gamma) - std::abs(d.delta)) < 1e-9) {
    throw DegenerateDirection(
        "boundary map needs |gamma| != |delta| to avoid a zero of g");
  }
  return {fourier_mean(d, -1, spec), fourier_mean(d, +1, spec)};
}

Admissibility schwarz_admissible(const SchwarzPair& pair,
                                 const QuadratureSpec& spec) {
  const CoeffVec coeffs{pair.alpha, pair.beta};
  if (pair.alpha == 0.0 && pair.beta == 0.0) return {true, 0.0};
  const double dual = dual_norm_c2(coeffs, 1.0, spec).value;
  return {dual <= 1.0 + 1e-9, dual};
}

CorollaryReport check_corollaries(const SchwarzPair& pair,
                                  const QuadratureSpec& spec) {
  CorollaryReport report;
  const double ma = std::abs(pair.alpha);
  const double mb = std::abs(pair.beta);
  report.modulus_sum_slack = 4.0 / kPi - (ma + mb);
  report.parseval_slack = 1.0 - (ma * ma + mb * mb);
  report.h4_slack = 1.0 - hp_norm({pair.alpha, pair.beta}, 4.0, spec);
  report.vacuous = !schwarz_admissible(pair, spec).admissible;
  return report;
}

RealMatrix ball_extremal_derivative(const RealMatrix& b,
                                    const SphereGrid& grid) {
  const int n = b.dim();
  if (grid.dimension != n) {
    throw DimensionMismatch("sphere grid dimension must match the matrix");
  }
  if (b.singular_values().back() <= 1e-9) {
    throw SingularMatrix("boundary map Bx/||Bx|| needs a nonsingular B");
  }
  std::vector<double> raw(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  std::vector<double> moments(raw.size(), 0.0);
  std::vector<double> image(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double* x = grid.node(k);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += b(i, j) * x[j];
      image[static_cast<std::size_t>(i)] = row;
      norm2 += row * row;
    }
    const double scale = grid.weights[k] * n;
    const double inv_norm = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::size_t idx = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(j);
        raw[idx] += scale * image[static_cast<std::size_t>(i)] * inv_norm * x[j];
        moments[idx] += scale * x[i] * x[j];
      }
    }
  }
  return solve_right(RealMatrix(n, std::move(raw)), RealMatrix(n, std::move(moments)));
}

RealMatrix ball_extremal_derivative(const RealMatrix& b) {
  const int n = b.dim();
  if (n > 3) {
    throw DomainError(
        "grid refinement covers n <= 3; pass an explicit sphere grid");
  }
  // Equispaced circle rules converge with the Fourier decay of the boundary
  // data, product rules on S^2 with its polynomial degree; both ladders end
  // well past the 3e-7 stability target for reasonably conditioned B.
  const std::vector<std::size_t> ladder =
      n == 2 ? std::vector<std::size_t>{64, 128, 256, 512, 1024, 2048}
             : std::vector<std::size_t>{16, 24, 32, 48, 64, 96};
  RealMatrix prev = RealMatrix::zero(n);
  bool have_prev = false;
  for (std::size_t quality : ladder) {
    RealMatrix current = ball_extremal_derivative(b, sphere_grid(n, quality));
    if (have_prev) {
      std::vector<double> diff = current.entries();
      const std::vector<double>& p = prev.entries();
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= p[i];
      if (frobenius_norm(RealMatrix(n, std::move(diff))) <= 3e-7) {
        return current;
      }
    }
    prev = current;
    have_prev = true;
  }
  throw NonConvergence("extremal derivative did not stabilize on the grid ladder");
}

Admissibility ball_admissible(const RealMatrix& a) {
  if (a.is_zero()) return {true, 0.0};
  const double dual = matrix_dual_norm(a, 1.0);
  return {dual <= 1.0 + 1e-7, dual};
}

}  // namespace hardy
