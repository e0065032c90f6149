#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "hardy/numerics.hpp"
#include "hardy/poly_hardy.hpp"
#include "hardy/real_matrix.hpp"

namespace hardy {

// Fourth-order moments of the normalized surface measure on S^{n-1}.
struct SphereMoments {
  int dimension = 0;
  double alpha = 0.0;  // mean of x1^4 = 3/(n(n+2))
  double beta = 0.0;   // mean of x1^2 x2^2 = 1/(n(n+2))
};

SphereMoments sphere_moments(int n);

// (alpha * sum sk^4 + 2*beta * sum_{k<l} sk^2 sl^2)^{1/4} over singular values.
double matrix_h4_closed(const RealMatrix& a);

// tr(B^T A)/n, normalized so <I,I> = 1; equals the sphere mean of <Ax,Bx>.
double matrix_inner(const RealMatrix& a, const RealMatrix& b);

// (mean over the unit sphere of ||Ax||^p)^{1/p}, the geometric mean for p=0
// and the spectral norm for p=inf. Depends on A only through its singular
// values. Closed forms handle p in {2,4,inf}, n <= 2, equal singular values,
// and rank one; the remaining n=3 cases integrate the azimuth exactly
// (elliptic for p=1, logarithmic identity for p=0) and Gauss-Legendre-double
// the polar direction. Throws SingularMatrix for the zero matrix at p=0 and
// DomainError for n >= 4 off the closed forms (use the grid overload there).
double matrix_hp_norm(const RealMatrix& a, Exponent p,
                      const QuadratureSpec& spec = {});

// Same quantity evaluated on a caller-supplied grid: honest node sums for
// finite p (SingularMatrix if a p=0 node lands on the kernel), spectral norm
// for p=inf.
double matrix_hp_norm(const RealMatrix& a, Exponent p, const SphereGrid& grid);

enum class DualMethod { reduced, brute };

// sup of <A,B>/||B||_{H^p}. The reduced method aligns B's singular vectors
// with A's and optimizes the singular values (exact for p=2 by self-duality);
// the brute method is a seeded random-search lower bound.
double matrix_dual_norm(const RealMatrix& a, Exponent p,
                        DualMethod method = DualMethod::reduced,
                        std::size_t brute_trials = 100000,
                        std::uint64_t seed = 1);

// The 2x2 real matrix of x -> Ax viewed as z -> a*z + b*conj(z).
std::pair<std::complex<double>, std::complex<double>> complex_pair_of_2x2(
    const RealMatrix& a);

RealMatrix matrix_of_complex_pair(std::complex<double> a,
                                  std::complex<double> b);

}  // namespace hardy
