#include "hardy/dual_poly.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

void validate_pair(const CoeffVec& xi) {
  if (xi.size() != 2) {
    throw DimensionMismatch("dual norms on coefficient vectors need exactly 2 entries");
  }
  for (const auto& c : xi) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw NonFinite("coefficient vector has a non-finite entry");
    }
  }
}

double h4_of_t(double t) {
  const double t2 = t * t;
  return std::pow(1.0 + 4.0 * t2 + t2 * t2, 0.25);
}

}  // namespace

std::pair<double, double> reduce_to_lambda(const CoeffVec& xi) {
  validate_pair(xi);
  const double m1 = std::abs(xi[0]);
  const double m2 = std::abs(xi[1]);
  const double scale = std::max(m1, m2);
  if (scale == 0.0) {
    throw ZeroVector("cannot reduce the zero vector");
  }
  return {scale, std::min(m1, m2) / scale};
}

DualNormResult dual_norm_c2(const CoeffVec& xi, Exponent p,
                            const QuadratureSpec& spec) {
  validate_pair(xi);
  if (std::abs(xi[0]) == 0.0 && std::abs(xi[1]) == 0.0) {
    return {0.0, 0.0, 0.0};
  }
  const auto [scale, lambda] = reduce_to_lambda(xi);
  const auto objective = [&, lambda = lambda](double t) {
    const CoeffVec direction{{1.0, 0.0}, {t, 0.0}};
    return (1.0 + lambda * t) / hp_norm(direction, p, spec);
  };
  const MaxResult best = maximize_1d(objective, {0.0, 1.0, 1e-10});
  return {scale * best.value, best.arg, lambda};
}

double tangent_sup(double a, double b, double r) {
  if (!(r > 0.0) || !(r < a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("tangent_sup needs finite inputs with 0 < r < a");
  }
  return (a * b + r * std::sqrt(a * a + b * b - r * r)) / (a * a - r * r);
}

double gstar_upper_bound(double lambda) {
  if (!(lambda > 0.0) || !(lambda <= 1.0)) {
    throw DomainError("gstar_upper_bound is defined on (0, 1]");
  }
  return (3.0 + 2.0 * std::sqrt(1.0 + 5.0 * lambda * lambda)) / 5.0;
}

RatioSweep ratio_sweep(std::size_t grid_size) {
  if (grid_size < 2) {
    throw DomainError("ratio_sweep needs a grid of at least 2 points");
  }
  RatioSweep sweep;
  sweep.rows.reserve(grid_size);
  sweep.min_ratio = std::numeric_limits<double>::infinity();
  sweep.max_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double lambda =
        static_cast<double>(k) / static_cast<double>(grid_size - 1);
    RatioRow row;
    row.lambda = lambda;
    row.gstar = dual_norm_c2({{1.0, 0.0}, {lambda, 0.0}}, 1.0).value;
    row.f = h4_of_t(lambda);
    row.ratio = row.gstar / row.f;
    if (row.ratio > sweep.max_ratio) {
      sweep.max_ratio = row.ratio;
      sweep.argmax_lambda = lambda;
    }
    sweep.min_ratio = std::min(sweep.min_ratio, row.ratio);
    sweep.rows.push_back(row);
  }
  return sweep;
}

BprReport check_bpr(const std::vector<double>& lambda_grid) {
  BprReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (double lambda : lambda_grid) {
    const double g = hp_norm({{1.0, 0.0}, {lambda, 0.0}}, 1.0);
    const double slack = g - (3.0 - std::sqrt(4.0 - lambda * lambda));
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.argmin_lambda = lambda;
    }
  }
  return report;
}

double sextic_bound(double lambda) {
  const double l2 = lambda * lambda;
  return 1.0 + l2 * (1.0 / 4.0 + l2 * (1.0 / 64.0 + l2 * (1.0 / 128.0)));
}

TwoSidesReport check_two_sides(const std::vector<double>& lambda_grid) {
  TwoSidesReport report;
  report.min_left_gap = std::numeric_limits<double>::infinity();
  report.min_right_gap = std::numeric_limits<double>::infinity();
  report.min_witness_gap = std::numeric_limits<double>::infinity();
  for (double lambda : lambda_grid) {
    const double g = hp_norm({{1.0, 0.0}, {lambda, 0.0}}, 1.0);
    const double t_sextic = sextic_bound(lambda);
    const double fstar = dual_norm_c2({{1.0, 0.0}, {lambda, 0.0}}, 4.0).value;
    const double left = t_sextic - g;
    const double right = fstar - t_sextic;
    const double tw = 4.0 * lambda / (8.0 - 3.0 * lambda * lambda);
    const double witness = (1.0 + lambda * tw) / h4_of_t(tw) - t_sextic;
    if (left < report.min_left_gap) {
      report.min_left_gap = left;
      report.argmin_left = lambda;
    }
    if (right < report.min_right_gap) {
      report.min_right_gap = right;
      report.argmin_right = lambda;
    }
    if (witness < report.min_witness_gap) {
      report.min_witness_gap = witness;
      report.argmin_witness = lambda;
    }
  }
  return report;
}

}  // namespace hardy
