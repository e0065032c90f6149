#include "hardy/real_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

std::size_t idx(int n, int i, int j) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(j);
}

Svd svd_1x1(double a) {
  Svd s;
  s.n = 1;
  s.sigma = {std::abs(a)};
  s.u = {a < 0.0 ? -1.0 : 1.0};
  s.v = {1.0};
  return s;
}

// 2x2 closed form through the complex representation x -> ax + b*conj(x) of the
// linear map: with a = |a|e^{i alpha}, b = |b|e^{i beta} the map factors as
// R((alpha+beta)/2) * diag(|a|+|b|, |a|-|b|) * R((alpha-beta)/2), and a
// negative second diagonal entry folds into V as a reflection.
Svd svd_2x2(const RealMatrix& m) {
  const double a_re = 0.5 * (m(0, 0) + m(1, 1));
  const double a_im = 0.5 * (m(1, 0) - m(0, 1));
  const double b_re = 0.5 * (m(0, 0) - m(1, 1));
  const double b_im = 0.5 * (m(1, 0) + m(0, 1));
  const double abs_a = std::hypot(a_re, a_im);
  const double abs_b = std::hypot(b_re, b_im);
  const double alpha = (abs_a > 0.0) ? std::atan2(a_im, a_re) : 0.0;
  const double beta = (abs_b > 0.0) ? std::atan2(b_im, b_re) : 0.0;
  const double psi = 0.5 * (alpha + beta);
  const double chi = 0.5 * (alpha - beta);

  Svd s;
  s.n = 2;
  s.sigma = {abs_a + abs_b, std::abs(abs_a - abs_b)};
  const double cp = std::cos(psi), sp = std::sin(psi);
  const double cc = std::cos(chi), sc = std::sin(chi);
  s.u = {cp, -sp, sp, cp};
  // V^T = R(chi), with the second row negated when |a| < |b|.
  const double flip = (abs_a >= abs_b) ? 1.0 : -1.0;
  s.v = {cc, flip * sc, -sc, flip * cc};
  return s;
}

Svd svd_jacobi(const RealMatrix& m) {
  const int n = m.dim();
  std::vector<double> w = m.entries();      // working columns, rotated in place
  std::vector<double> v(w.size(), 0.0);     // accumulated right rotations
  for (int i = 0; i < n; ++i) v[idx(n, i, i)] = 1.0;

  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int k = 0; k < n; ++k) {
          const double cp = w[idx(n, k, p)];
          const double cq = w[idx(n, k, q)];
          app += cp * cp;
          aqq += cq * cq;
          apq += cp * cq;
        }
        if (std::abs(apq) <= kOffTol * std::sqrt(app * aqq) || apq == 0.0) continue;
        converged = false;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = ((zeta >= 0.0) ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (int k = 0; k < n; ++k) {
          const double cp = w[idx(n, k, p)];
          const double cq = w[idx(n, k, q)];
          w[idx(n, k, p)] = cs * cp - sn * cq;
          w[idx(n, k, q)] = sn * cp + cs * cq;
          const double vp = v[idx(n, k, p)];
          const double vq = v[idx(n, k, q)];
          v[idx(n, k, p)] = cs * vp - sn * vq;
          v[idx(n, k, q)] = sn * vp + cs * vq;
        }
      }
    }
  }
  if (!converged) {
    throw NonConvergence("svd_small: Jacobi sweeps did not reach the off-diagonal tolerance");
  }

  Svd s;
  s.n = n;
  s.sigma.assign(static_cast<std::size_t>(n), 0.0);
  s.u.assign(w.size(), 0.0);
  s.v = std::move(v);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<double> norms(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double nn = 0.0;
    for (int k = 0; k < n; ++k) nn += w[idx(n, k, j)] * w[idx(n, k, j)];
    norms[static_cast<std::size_t>(j)] = std::sqrt(nn);
  }
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return norms[static_cast<std::size_t>(a)] >
                                              norms[static_cast<std::size_t>(b)]; });

  std::vector<double> v_sorted(s.v.size());
  double scale = *std::max_element(norms.begin(), norms.end());
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    const double sigma = norms[static_cast<std::size_t>(src)];
    s.sigma[static_cast<std::size_t>(j)] = sigma;
    for (int k = 0; k < n; ++k) v_sorted[idx(n, k, j)] = s.v[idx(n, k, src)];
    if (sigma > scale * 1e-290) {
      for (int k = 0; k < n; ++k) s.u[idx(n, k, j)] = w[idx(n, k, src)] / sigma;
    }
  }
  s.v = std::move(v_sorted);

  // Complete U where columns vanished (rank-deficient input): pick the
  // standard basis vector with the largest residual and orthonormalize.
  for (int j = 0; j < n; ++j) {
    double nn = 0.0;
    for (int k = 0; k < n; ++k) nn += s.u[idx(n, k, j)] * s.u[idx(n, k, j)];
    if (nn > 0.5) continue;
    std::vector<double> cand(static_cast<std::size_t>(n), 0.0);
    double best_res = -1.0;
    int best_e = 0;
    for (int e = 0; e < n; ++e) {
      std::vector<double> r(static_cast<std::size_t>(n), 0.0);
      r[static_cast<std::size_t>(e)] = 1.0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += r[static_cast<std::size_t>(k)] * s.u[idx(n, k, c)];
        for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] -= dot * s.u[idx(n, k, c)];
      }
      double res = 0.0;
      for (double x : r) res += x * x;
      if (res > best_res) {
        best_res = res;
        best_e = e;
        cand = r;
      }
    }
    (void)best_e;
    const double inv = 1.0 / std::sqrt(best_res);
    for (int k = 0; k < n; ++k) s.u[idx(n, k, j)] = cand[static_cast<std::size_t>(k)] * inv;
  }
  return s;
}

}  // namespace

RealMatrix::RealMatrix(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)), svd_cell_(std::make_shared<SvdCell>()) {
  if (n_ < 1) throw DomainError("RealMatrix: dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw DimensionMismatch("RealMatrix: entry count must equal n*n");
  }
  for (double x : entries_) {
    if (!std::isfinite(x)) throw NonFinite("RealMatrix: entries must be finite");
  }
}

RealMatrix RealMatrix::zero(int n) {
  return RealMatrix(n, std::vector<double>(static_cast<std::size_t>(n) *
                                               static_cast<std::size_t>(n),
                                           0.0));
}

RealMatrix RealMatrix::identity(int n) {
  std::vector<double> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) e[idx(n, i, i)] = 1.0;
  return RealMatrix(n, std::move(e));
}

RealMatrix RealMatrix::diagonal(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) e[idx(n, i, i)] = d[static_cast<std::size_t>(i)];
  return RealMatrix(n, std::move(e));
}

bool RealMatrix::is_zero() const {
  for (double x : entries_) {
    if (x != 0.0) return false;
  }
  return true;
}

const Svd& RealMatrix::svd() const {
  std::call_once(svd_cell_->once, [this] { svd_cell_->value = svd_small(*this); });
  return svd_cell_->value;
}

Svd svd_small(const RealMatrix& a) {
  if (a.dim() == 1) return svd_1x1(a(0, 0));
  if (a.dim() == 2) return svd_2x2(a);
  return svd_jacobi(a);
}

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("multiply: dimensions differ");
  const int n = a.dim();
  std::vector<double> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) e[idx(n, i, j)] += aik * b(k, j);
    }
  }
  return RealMatrix(n, std::move(e));
}

RealMatrix transpose(const RealMatrix& a) {
  const int n = a.dim();
  std::vector<double> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e[idx(n, j, i)] = a(i, j);
  }
  return RealMatrix(n, std::move(e));
}

double frobenius_norm(const RealMatrix& a) {
  double s = 0.0;
  for (double x : a.entries()) s += x * x;
  return std::sqrt(s);
}

RealMatrix random_gaussian_matrix(Rng& rng, int n) {
  std::vector<double> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (auto& x : e) x = rng.normal();
  return RealMatrix(n, std::move(e));
}

RealMatrix random_orthogonal(Rng& rng, int n) {
  // Gram-Schmidt on Gaussian columns; retries on (measure-zero) degeneracy.
  for (;;) {
    std::vector<std::vector<double>> cols;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      std::vector<double> c = rng.gaussian_vector(n);
      for (const auto& prev : cols) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += c[static_cast<std::size_t>(k)] * prev[static_cast<std::size_t>(k)];
        for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] -= dot * prev[static_cast<std::size_t>(k)];
      }
      double nn = 0.0;
      for (double x : c) nn += x * x;
      if (nn < 1e-12) {
        ok = false;
        break;
      }
      const double inv = 1.0 / std::sqrt(nn);
      for (auto& x : c) x *= inv;
      cols.push_back(std::move(c));
    }
    if (!ok) continue;
    std::vector<double> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) e[idx(n, i, j)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return RealMatrix(n, std::move(e));
  }
}

}  // namespace hardy
