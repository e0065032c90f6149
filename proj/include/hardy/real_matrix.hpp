#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "hardy/rng.hpp"

namespace hardy {

// Singular value decomposition A = U * diag(sigma) * V^T with sigma sorted
// descending and U, V orthogonal (row-major storage).
struct Svd {
  int n = 0;
  std::vector<double> sigma;
  std::vector<double> u;
  std::vector<double> v;
};

// Immutable dense real n x n matrix. Entries are validated finite on
// construction; the SVD is computed lazily once and shared between copies.
class RealMatrix {
 public:
  RealMatrix(int n, std::vector<double> entries);  // row-major, n*n values

  static RealMatrix zero(int n);
  static RealMatrix identity(int n);
  static RealMatrix diagonal(const std::vector<double>& d);

  int dim() const { return n_; }
  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }
  const std::vector<double>& entries() const { return entries_; }

  bool is_zero() const;
  const Svd& svd() const;
  const std::vector<double>& singular_values() const { return svd().sigma; }

 private:
  int n_;
  std::vector<double> entries_;

  struct SvdCell {
    std::once_flag once;
    Svd value;
  };
  std::shared_ptr<SvdCell> svd_cell_;
};

// Closed form for n <= 2, one-sided Jacobi for n >= 3 (off-diagonal tolerance
// 1e-13). Reconstruction error stays below 1e-12 * ||A||_F.
Svd svd_small(const RealMatrix& a);

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);
double frobenius_norm(const RealMatrix& a);

// Seeded helpers for property suites and the brute-force dual search.
RealMatrix random_gaussian_matrix(Rng& rng, int n);
RealMatrix random_orthogonal(Rng& rng, int n);  // Gram-Schmidt on Gaussians

}  // namespace hardy
