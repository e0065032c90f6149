#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/rng.hpp"

namespace hardy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

thread_local QuadDiagnostics g_quad_diagnostics;

}  // namespace

QuadDiagnostics& quad_diagnostics() { return g_quad_diagnostics; }

void reset_quad_diagnostics() { g_quad_diagnostics = QuadDiagnostics{}; }

void QuadratureSpec::validate() const {
  if (initial_nodes < 16 || (initial_nodes & (initial_nodes - 1)) != 0) {
    throw DomainError("QuadratureSpec.initial_nodes must be a power of two >= 16");
  }
  if (max_nodes < initial_nodes) {
    throw DomainError("QuadratureSpec.max_nodes must be >= initial_nodes");
  }
  if (!(rel_tol > 0.0) || !(rel_tol < 1.0)) {
    throw DomainError("QuadratureSpec.rel_tol must lie in (0, 1)");
  }
}

double circle_mean(const std::function<double(double)>& integrand,
                   const QuadratureSpec& spec) {
  spec.validate();

  std::size_t n = spec.initial_nodes;
  double sum = 0.0;
  double fmax = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = integrand(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    sum += v;
    fmax = std::max(fmax, std::abs(v));
  }
  double estimate = sum / static_cast<double>(n);
  g_quad_diagnostics.max_nodes_used = std::max(g_quad_diagnostics.max_nodes_used, n);

  double delta = 0.0;
  bool refined = false;
  while (2 * n <= spec.max_nodes) {
    // The old nodes are a subset of the doubled grid; only midpoints are new.
    double mid = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v =
          integrand(kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n));
      mid += v;
      fmax = std::max(fmax, std::abs(v));
    }
    const double next = 0.5 * (estimate + mid / static_cast<double>(n));
    n *= 2;
    delta = std::abs(next - estimate);
    estimate = next;
    refined = true;
    g_quad_diagnostics.max_nodes_used = std::max(g_quad_diagnostics.max_nodes_used, n);
    g_quad_diagnostics.last_delta = delta;
    const double scale = std::max(std::abs(estimate), fmax);
    if (delta <= spec.rel_tol * scale) return estimate;
  }

  if (refined) {
    const double scale = std::max(std::abs(estimate), fmax);
    if (delta > 10.0 * spec.rel_tol * scale) {
      throw NonConvergence(
          "circle_mean: node budget exhausted before the estimate stabilized "
          "(integrand likely has a circle zero with small p)");
    }
  }
  return estimate;
}

double elliptic_e(double modulus) {
  if (!(modulus >= 0.0) || !(modulus <= 1.0)) {
    throw DomainError("elliptic_e: modulus must lie in [0, 1]");
  }
  if (modulus == 1.0) return 1.0;

  // AGM: a_{k+1} = (a_k+b_k)/2, b_{k+1} = sqrt(a_k b_k), c_{k+1} = (a_k-b_k)/2;
  // E = K * (1 - sum 2^{k-1} c_k^2) with K = pi / (2 * AGM limit).
  double a = 1.0;
  double b = std::sqrt(1.0 - modulus * modulus);
  double c = modulus;
  double csum = 0.5 * c * c;
  double pow2 = 0.5;
  for (int k = 0; k < 64 && std::abs(c) > 1e-17 * a; ++k) {
    c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    csum += pow2 * c * c;
  }
  const double big_k = std::numbers::pi / (2.0 * a);
  return big_k * (1.0 - csum);
}

MaxResult maximize_1d(const std::function<double(double)>& objective,
                      const Bracket1D& bracket) {
  if (!(bracket.lo < bracket.hi)) {
    throw DomainError("maximize_1d: bracket requires lo < hi");
  }
  if (!(bracket.tol > 0.0)) {
    throw DomainError("maximize_1d: bracket tol must be positive");
  }

  constexpr int kGridCells = 256;
  const double lo = bracket.lo;
  const double span = bracket.hi - bracket.lo;
  double best_x = lo;
  double best_v = objective(lo);
  int best_i = 0;
  for (int i = 1; i <= kGridCells; ++i) {
    const double x = lo + span * static_cast<double>(i) / kGridCells;
    const double v = objective(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
      best_i = i;
    }
  }

  double a = lo + span * static_cast<double>(std::max(0, best_i - 1)) / kGridCells;
  double b = lo + span * static_cast<double>(std::min(kGridCells, best_i + 1)) / kGridCells;

  constexpr double kInvPhi = 0.6180339887498949;  // 1/phi
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > bracket.tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = objective(xm);
  double arg = best_x;
  double val = best_v;
  if (fc > val) {
    val = fc;
    arg = c;
  }
  if (fd > val) {
    val = fd;
    arg = d;
  }
  if (fm > val) {
    val = fm;
    arg = xm;
  }
  return {arg, val};
}

const GlRule& gauss_legendre(int q) {
  if (q < 1) throw DomainError("gauss_legendre: q must be >= 1");

  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GlRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;

  auto rule = std::make_unique<GlRule>();
  rule->nodes.resize(static_cast<std::size_t>(q));
  rule->weights.resize(static_cast<std::size_t>(q));
  for (int i = 1; i <= q; ++i) {
    // Tricomi initial guess, then Newton on P_q.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) - 0.25) /
                        (static_cast<double>(q) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double pk =
            ((2.0 * k - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(q) * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule->nodes[static_cast<std::size_t>(i - 1)] = x;
    rule->weights[static_cast<std::size_t>(i - 1)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  const GlRule& ref = *rule;
  cache.emplace(q, std::move(rule));
  return ref;
}

SphereGrid sphere_grid(int n, std::size_t quality, std::uint64_t seed) {
  if (n < 2) throw DomainError("sphere_grid: dimension must be >= 2");
  if (quality < 1) throw DomainError("sphere_grid: quality must be >= 1");

  SphereGrid grid;
  grid.dimension = n;

  if (n == 2) {
    grid.nodes.reserve(2 * quality);
    grid.weights.assign(quality, 1.0 / static_cast<double>(quality));
    for (std::size_t j = 0; j < quality; ++j) {
      const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(quality);
      grid.nodes.push_back(std::cos(t));
      grid.nodes.push_back(std::sin(t));
    }
    return grid;
  }

  if (n == 3) {
    const auto& gl = gauss_legendre(static_cast<int>(quality));
    const std::size_t m = 2 * quality;  // azimuth count
    grid.nodes.reserve(3 * quality * m);
    grid.weights.reserve(quality * m);
    for (std::size_t i = 0; i < quality; ++i) {
      const double u = gl.nodes[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      const double w = gl.weights[i] / 2.0 / static_cast<double>(m);
      for (std::size_t j = 0; j < m; ++j) {
        // Offset keeps nodes off the coordinate planes.
        const double phi = kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(m);
        grid.nodes.push_back(s * std::cos(phi));
        grid.nodes.push_back(s * std::sin(phi));
        grid.nodes.push_back(u);
        grid.weights.push_back(w);
      }
    }
    return grid;
  }

  Rng rng(seed);
  grid.nodes.reserve(static_cast<std::size_t>(n) * quality);
  grid.weights.assign(quality, 1.0 / static_cast<double>(quality));
  for (std::size_t j = 0; j < quality; ++j) {
    double norm2 = 0.0;
    std::vector<double> v;
    do {
      v = rng.gaussian_vector(n);
      norm2 = 0.0;
      for (double x : v) norm2 += x * x;
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double x : v) grid.nodes.push_back(x * inv);
  }
  return grid;
}

}  // namespace hardy
