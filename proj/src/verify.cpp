#include "hardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <vector>

#include "hardy/dual_poly.hpp"
#include "hardy/exact_poly.hpp"
#include "hardy/harmonic_schwarz.hpp"
#include "hardy/matrix_hardy.hpp"
#include "hardy/poly_hardy.hpp"
#include "hardy/real_matrix.hpp"
#include "hardy/rng.hpp"

namespace hardy {

namespace {

std::string printf_detail(const char* fmt, double a) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), fmt, a);
  return buffer;
}

std::string printf_detail(const char* fmt, double a, double b) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), fmt, a, b);
  return buffer;
}

struct Worst {
  double max_excess = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;

  void feed(double excess) {
    max_excess = std::max(max_excess, excess);
    if (excess > 1e-9) ++violations;
  }
};

CheckResult triangle_result(const std::string& name, const Worst& w,
                            std::size_t trials) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%zu violations in %zu pairs, max excess %.3g", w.violations,
                trials, w.max_excess);
  return {name, w.violations == 0, false, buffer};
}

}  // namespace

bool suite_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.passed || c.report_only;
  });
}

std::vector<CheckResult> verify_monster_suite() {
  const MonsterReport report = verify_monster();
  std::vector<CheckResult> checks;
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%zu mismatches out of 13 coefficients",
                report.mismatches.size());
  checks.push_back({"monster-coefficients", report.coefficients_match, false, buffer});
  checks.push_back({"monster-support", report.support_ok, false,
                    "support contained in exponents 8..32"});
  checks.push_back({"monster-tail", report.tail_dominated, false,
                    "tail coefficient mass below the leading terms"});
  checks.push_back({"monster-positivity", report.positive_on_grid, false,
                    "positive at the 20 rational grid points k/20"});
  return checks;
}

std::vector<CheckResult> verify_triangle_suite(std::uint64_t seed,
                                               std::size_t trials) {
  std::vector<CheckResult> checks;
  for (double p : {0.0, 0.25, 0.5, 0.75}) {
    Rng rng(seed + static_cast<std::uint64_t>(p * 1000));
    Worst pair_worst;
    for (std::size_t t = 0; t < trials; ++t) {
      const CoeffVec u{rng.complex_normal(), rng.complex_normal()};
      const CoeffVec v{rng.complex_normal(), rng.complex_normal()};
      const CoeffVec sum{u[0] + v[0], u[1] + v[1]};
      pair_worst.feed(hp_norm(sum, p) - hp_norm(u, p) - hp_norm(v, p));
    }
    char name[64];
    std::snprintf(name, sizeof(name), "triangle-pairs-p%.2f", p);
    checks.push_back(triangle_result(name, pair_worst, trials));

    Worst matrix_worst;
    for (std::size_t t = 0; t < trials; ++t) {
      const RealMatrix a = random_gaussian_matrix(rng, 2);
      const RealMatrix b = random_gaussian_matrix(rng, 2);
      std::vector<double> entries(4);
      for (std::size_t k = 0; k < 4; ++k) entries[k] = a.entries()[k] + b.entries()[k];
      const RealMatrix sum(2, std::move(entries));
      matrix_worst.feed(matrix_hp_norm(sum, p) - matrix_hp_norm(a, p) -
                        matrix_hp_norm(b, p));
    }
    std::snprintf(name, sizeof(name), "triangle-matrices-p%.2f", p);
    checks.push_back(triangle_result(name, matrix_worst, trials));
  }
  return checks;
}

std::vector<CheckResult> verify_matrix3_suite(std::uint64_t seed,
                                              std::size_t samples) {
  Rng rng(seed);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t t = 0; t < samples; ++t) {
    const RealMatrix a = random_gaussian_matrix(rng, 3);
    const double ratio = matrix_dual_norm(a, 1.0) / matrix_h4_closed(a);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {{"matrix3-ratio-range", true, true,
           printf_detail("dual-H1 over H4 ratio in [%.6f, %.6f]; no proven bound",
                         lo, hi)}};
}

std::vector<CheckResult> verify_corollaries_suite(std::uint64_t seed,
                                                  std::size_t directions) {
  Rng rng(seed);
  double max_residual = 0.0;
  double max_norm_gap = 0.0;
  double min_sch1 = std::numeric_limits<double>::infinity();
  double min_sch2 = min_sch1;
  double min_h4 = min_sch1;
  std::size_t done = 0;
  while (done < directions) {
    const DualDirection d{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)},
                          {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}};
    const double ga = std::abs(d.gamma);
    const double de = std::abs(d.delta);
    if (ga < 0.2 || de < 0.2 || std::abs(ga - de) < 0.05) continue;
    ++done;
    const SchwarzPair pair = disk_extremal_derivative(d);
    const std::complex<double> pairing =
        d.gamma * std::conj(pair.alpha) + d.delta * std::conj(pair.beta);
    max_residual = std::max(
        max_residual, std::abs(pairing - hp_norm({d.gamma, d.delta}, 1.0)));
    max_norm_gap = std::max(
        max_norm_gap, std::abs(schwarz_admissible(pair).dual_h1 - 1.0));
    const CorollaryReport report = check_corollaries(pair);
    min_sch1 = std::min(min_sch1, report.modulus_sum_slack);
    min_sch2 = std::min(min_sch2, report.parseval_slack);
    min_h4 = std::min(min_h4, report.h4_slack);
  }
  std::vector<CheckResult> checks;
  checks.push_back({"schwarz-duality-equality", max_residual <= 1e-7, false,
                    printf_detail("max residual %.3g over %.0f directions",
                                  max_residual, static_cast<double>(directions))});
  checks.push_back({"schwarz-extremal-unit-norm", max_norm_gap <= 1e-6, false,
                    printf_detail("max deviation from 1 is %.3g", max_norm_gap)});
  checks.push_back({"corollary-modulus-sum", min_sch1 >= -1e-9, false,
                    printf_detail("min slack of 4/pi bound %.3g", min_sch1)});
  checks.push_back({"corollary-parseval", min_sch2 >= -1e-9, false,
                    printf_detail("min slack of the square-sum bound %.3g",
                                  min_sch2)});
  checks.push_back({"corollary-h4", min_h4 >= -1e-9, false,
                    printf_detail("min slack of the quartic bound %.3g", min_h4)});
  return checks;
}

std::vector<CheckResult> verify_all(std::uint64_t seed) {
  std::vector<CheckResult> checks = verify_monster_suite();
  for (auto& c : verify_triangle_suite(seed)) checks.push_back(std::move(c));
  for (auto& c : verify_matrix3_suite(seed)) checks.push_back(std::move(c));
  for (auto& c : verify_corollaries_suite(seed)) checks.push_back(std::move(c));
  return checks;
}

}  // namespace hardy
