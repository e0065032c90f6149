#pragma once

#include <complex>

#include "hardy/dual_poly.hpp"
#include "hardy/numerics.hpp"
#include "hardy/real_matrix.hpp"

namespace hardy {

// Wirtinger derivatives (alpha, beta) at 0 of a harmonic self-map of the disk.
struct SchwarzPair {
  std::complex<double> alpha;
  std::complex<double> beta;
};

// Boundary direction (gamma, delta) selecting the unimodular boundary map
// g(z) = (gamma z + delta conj(z)) / |gamma z + delta conj(z)| on |z| = 1.
struct DualDirection {
  std::complex<double> gamma;
  std::complex<double> delta;
};

// Derivative pair of the harmonic extension of g: the Fourier coefficients of
// e^{it} and e^{-it} in the boundary values. Throws DegenerateDirection when
// |gamma| is too close to |delta| for g to be defined on the whole circle.
SchwarzPair disk_extremal_derivative(const DualDirection& d,
                                     const QuadratureSpec& spec = {});

// A pair (or matrix) is the derivative at 0 of some harmonic self-map exactly
// when its dual H^1 norm is at most 1; dual_h1 reports the computed norm.
struct Admissibility {
  bool admissible = false;
  double dual_h1 = 0.0;
};

Admissibility schwarz_admissible(const SchwarzPair& pair,
                                 const QuadratureSpec& spec = {});

// Slacks of the classical consequences of admissibility:
//   |alpha| + |beta| <= 4/pi,  |alpha|^2 + |beta|^2 <= 1,  H^4 norm <= 1.
// vacuous marks a pair that is not admissible, where the slacks say nothing.
struct CorollaryReport {
  double modulus_sum_slack = 0.0;
  double parseval_slack = 0.0;
  double h4_slack = 0.0;
  bool vacuous = false;
};

CorollaryReport check_corollaries(const SchwarzPair& pair,
                                  const QuadratureSpec& spec = {});

// Derivative at 0 of the harmonic extension of x -> Bx/||Bx|| on the sphere:
// n times its first spherical-harmonic moment, read off the grid and
// calibrated against the grid's own second moments so that B = I maps to the
// identity exactly. Throws SingularMatrix when B is numerically singular.
RealMatrix ball_extremal_derivative(const RealMatrix& b, const SphereGrid& grid);

// Same, refining an internal grid until two consecutive results agree to
// about 3e-7 in the Frobenius norm; covers n = 2 and n = 3.
RealMatrix ball_extremal_derivative(const RealMatrix& b);

Admissibility ball_admissible(const RealMatrix& a);

}  // namespace hardy
