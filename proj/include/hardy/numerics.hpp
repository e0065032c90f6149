#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hardy {

// Controls the node-doubling trapezoid rule on the circle.
// initial_nodes must be a power of two >= 16.
struct QuadratureSpec {
  std::size_t initial_nodes = 64;
  double rel_tol = 1e-12;
  std::size_t max_nodes = std::size_t{1} << 21;

  void validate() const;  // throws DomainError on a bad field
};

// Per-thread quadrature instrumentation, reset explicitly by callers that
// want to report diagnostics (the CLI). Values accumulate across calls.
struct QuadDiagnostics {
  std::size_t max_nodes_used = 0;
  double last_delta = 0.0;
};

QuadDiagnostics& quad_diagnostics();
void reset_quad_diagnostics();

// Mean of a 2*pi-periodic integrand over one period: trapezoid rule on
// equispaced nodes, doubling the node count until successive estimates agree
// to rel_tol relative to max(|estimate|, max sampled |f|); the floor on the
// scale keeps exactly-zero means from spinning forever. Throws NonConvergence
// if max_nodes is reached with the last change still >= 10x the target.
double circle_mean(const std::function<double(double)>& integrand,
                   const QuadratureSpec& spec = {});

// Complete elliptic integral of the second kind in the *modulus* convention:
// E(k) = integral_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt, computed by the AGM
// iteration. E(0) = pi/2, E(1) = 1.
double elliptic_e(double modulus);

struct Bracket1D {
  double lo;
  double hi;
  double tol;
};

struct MaxResult {
  double arg;
  double value;
};

// Coarse 256-cell grid scan followed by golden-section refinement of the best
// cell to width <= bracket.tol. The result never falls below the best grid
// value, so multimodal objectives degrade gracefully.
MaxResult maximize_1d(const std::function<double(double)>& objective,
                      const Bracket1D& bracket);

// Quadrature grid for the normalized surface measure on S^{n-1}, stored as
// flat row-major nodes. Weights sum to 1.
struct SphereGrid {
  int dimension = 0;
  std::vector<double> nodes;    // size() * dimension entries
  std::vector<double> weights;  // size() entries

  std::size_t size() const { return weights.size(); }
  const double* node(std::size_t i) const {
    return nodes.data() + i * static_cast<std::size_t>(dimension);
  }
};

// n=2: `quality` equispaced circle nodes, uniform weights.
// n=3: product rule, Gauss-Legendre with `quality` nodes in cos(polar) times
//      2*quality equispaced (offset) azimuth angles; integrates spherical
//      polynomials of degree < quality exactly.
// n>=4: `quality` seeded samples of normalized Gaussian vectors, uniform
//       weights (Monte Carlo; no worked constants live there).
SphereGrid sphere_grid(int n, std::size_t quality, std::uint64_t seed = 0);

// Gauss-Legendre rule on [-1, 1]; results are cached per q.
struct GlRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GlRule& gauss_legendre(int q);

}  // namespace hardy
