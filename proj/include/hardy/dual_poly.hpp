#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hardy/numerics.hpp"
#include "hardy/poly_hardy.hpp"

namespace hardy {

// Dual Hardy norm of a length-2 coefficient vector, reported together with
// the reduced coordinate lambda of the input and the maximizing t of
// (1 + lambda*t) / ||(1,t)||_{H^p} over t in [0,1].
struct DualNormResult {
  double value = 0.0;
  double witness_t = 0.0;
  double lambda = 0.0;
};

// (scale, lambda) with scale = max(|a1|,|a2|), lambda = min/max in [0,1].
// Any norm invariant under coordinate phases and swaps then satisfies
// N(xi) = scale * N((1, lambda)). Throws ZeroVector / DimensionMismatch.
std::pair<double, double> reduce_to_lambda(const CoeffVec& xi);

// sup{|<xi,eta>| : ||eta||_{H^p} <= 1}; the search domain [0,1] suffices
// because the objective at t > 1 is dominated by its value at 1/t.
// Zero input returns {0, 0, 0}.
DualNormResult dual_norm_c2(const CoeffVec& xi, Exponent p,
                            const QuadratureSpec& spec = {});

// sup over theta of (b - r*sin(theta)) / (a - r*cos(theta)) for 0 < r < a:
// equals (a*b + r*sqrt(a^2 + b^2 - r^2)) / (a^2 - r^2).
double tangent_sup(double a, double b, double r);

// (3 + 2*sqrt(1 + 5*lambda^2)) / 5, an upper bound for the H^1 dual norm of
// (1, lambda) on (0, 1].
double gstar_upper_bound(double lambda);

struct RatioRow {
  double lambda = 0.0;
  double gstar = 0.0;  // ||(1,lambda)||_{H^1_*}
  double f = 0.0;      // ||(1,lambda)||_{H^4} = (1+4l^2+l^4)^{1/4}
  double ratio = 0.0;  // gstar / f
};

struct RatioSweep {
  std::vector<RatioRow> rows;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double argmax_lambda = 0.0;
};

// Uniform lambda grid on [0,1] with grid_size >= 2 points.
RatioSweep ratio_sweep(std::size_t grid_size);

struct BprReport {
  double min_slack = 0.0;  // min of G(lambda) - (3 - sqrt(4 - lambda^2))
  double argmin_lambda = 0.0;
};

// Slack of the Ramanujan-type lower bound for G on the given grid.
BprReport check_bpr(const std::vector<double>& lambda_grid);

// T(lambda) = 1 + lambda^2/4 + lambda^4/64 + lambda^6/128, the sextic
// squeezed between G and the H^4 dual norm on [0,1].
double sextic_bound(double lambda);

struct TwoSidesReport {
  double min_left_gap = 0.0;  // min of T(lambda) - G(lambda)
  double argmin_left = 0.0;
  double min_right_gap = 0.0;  // min of F*(lambda) - T(lambda)
  double argmin_right = 0.0;
  // Secondary check: the explicit witness t = 4*lambda/(8 - 3*lambda^2)
  // already pushes the H^4 dual objective above T(lambda).
  double min_witness_gap = 0.0;
  double argmin_witness = 0.0;
};

TwoSidesReport check_two_sides(const std::vector<double>& lambda_grid);

}  // namespace hardy
