#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "hardy/errors.hpp"
#include "hardy/real_matrix.hpp"
#include "hardy/rng.hpp"

namespace {

hardy::RealMatrix matrix_of_pair(std::complex<double> a, std::complex<double> b) {
  // Inverse of the complex-pair extraction: the map z -> az + b*conj(z).
  return hardy::RealMatrix(2, {a.real() + b.real(), b.imag() - a.imag(),
                               a.imag() + b.imag(), a.real() - b.real()});
}

void check_svd(const hardy::RealMatrix& m, double tol = 1e-12) {
  const auto& s = m.svd();
  const int n = m.dim();
  REQUIRE(static_cast<int>(s.sigma.size()) == n);

  for (int i = 0; i + 1 < n; ++i) {
    CHECK(s.sigma[i] >= s.sigma[i + 1]);
    CHECK(s.sigma[i + 1] >= 0.0);
  }

  const hardy::RealMatrix u(n, s.u);
  const hardy::RealMatrix v(n, s.v);
  const auto utu = hardy::multiply(hardy::transpose(u), u);
  const auto vtv = hardy::multiply(hardy::transpose(v), v);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double expect = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(utu(i, j) - expect) < 1e-12);
      CHECK(std::abs(vtv(i, j) - expect) < 1e-12);
    }
  }

  auto sigma = hardy::RealMatrix::diagonal(s.sigma);
  const auto rebuilt = hardy::multiply(hardy::multiply(u, sigma), hardy::transpose(v));
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) err = std::max(err, std::abs(rebuilt(i, j) - m(i, j)));
  }
  CHECK(err <= tol * std::max(1.0, hardy::frobenius_norm(m)));
}

}  // namespace

TEST_CASE("RealMatrix construction and validation") {
  CHECK_THROWS_AS(hardy::RealMatrix(2, {1.0, 2.0, 3.0}), hardy::DimensionMismatch);
  CHECK_THROWS_AS(hardy::RealMatrix(2, {1.0, 2.0, 3.0, std::nan("")}), hardy::NonFinite);
  CHECK_THROWS_AS(hardy::RealMatrix(0, {}), hardy::DomainError);

  const auto id = hardy::RealMatrix::identity(3);
  CHECK(id(0, 0) == 1.0);
  CHECK(id(0, 1) == 0.0);
  CHECK(hardy::RealMatrix::zero(2).is_zero());
  CHECK_FALSE(id.is_zero());

  const auto d = hardy::RealMatrix::diagonal({2.0, -1.0});
  CHECK(d(0, 0) == 2.0);
  CHECK(d(1, 1) == -1.0);
}

TEST_CASE("multiply and transpose") {
  const hardy::RealMatrix a(2, {1.0, 2.0, 3.0, 4.0});
  const hardy::RealMatrix b(2, {0.0, 1.0, 1.0, 0.0});
  const auto ab = hardy::multiply(a, b);
  CHECK(ab(0, 0) == 2.0);
  CHECK(ab(0, 1) == 1.0);
  CHECK(ab(1, 0) == 4.0);
  CHECK(ab(1, 1) == 3.0);
  const auto at = hardy::transpose(a);
  CHECK(at(0, 1) == 3.0);
  CHECK_THROWS_AS(hardy::multiply(a, hardy::RealMatrix::identity(3)),
                  hardy::DimensionMismatch);
}

TEST_CASE("svd of identity and projections") {
  const auto id3 = hardy::RealMatrix::identity(3);
  for (double s : id3.singular_values()) CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  check_svd(id3);

  const auto p1 = hardy::RealMatrix::diagonal({1.0, 0.0, 0.0});
  const auto& s = p1.svd();
  CHECK(s.sigma[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.sigma[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(s.sigma[2] == doctest::Approx(0.0).epsilon(1e-14));
  check_svd(p1);

  check_svd(hardy::RealMatrix::zero(3));
}

TEST_CASE("svd 2x2 closed form matches the complex pair") {
  const std::complex<double> a = std::polar(3.0, 0.4);
  const std::complex<double> b = std::polar(1.0, -1.1);
  const auto m = matrix_of_pair(a, b);
  CHECK(m.singular_values()[0] == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(m.singular_values()[1] == doctest::Approx(2.0).epsilon(1e-13));
  check_svd(m);

  // |a| < |b| exercises the reflection branch.
  check_svd(matrix_of_pair(std::polar(0.5, 2.0), std::polar(2.5, 0.3)));
  // Degenerate phases.
  check_svd(matrix_of_pair({0.0, 0.0}, {2.0, 0.0}));
  check_svd(matrix_of_pair({2.0, 0.0}, {0.0, 0.0}));
  check_svd(hardy::RealMatrix::zero(2));
}

TEST_CASE("svd random matrices") {
  hardy::Rng rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    check_svd(hardy::random_gaussian_matrix(rng, 3));
  }
  for (int trial = 0; trial < 10; ++trial) {
    check_svd(hardy::random_gaussian_matrix(rng, 5));
  }
  // Rank-one 3x3.
  hardy::RealMatrix rank1(3, {1.0, 2.0, 3.0, 2.0, 4.0, 6.0, -1.0, -2.0, -3.0});
  const auto& s = rank1.svd();
  CHECK(s.sigma[1] < 1e-12);
  CHECK(s.sigma[2] < 1e-12);
  check_svd(rank1);
}

TEST_CASE("singular values are orthogonally invariant") {
  hardy::Rng rng(777);
  const auto a = hardy::random_gaussian_matrix(rng, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto u = hardy::random_orthogonal(rng, 3);
    const auto v = hardy::random_orthogonal(rng, 3);
    const auto uav = hardy::multiply(hardy::multiply(u, a), v);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(uav.singular_values()[i] - a.singular_values()[i]) < 1e-10);
    }
  }
}

TEST_CASE("random_orthogonal produces orthogonal matrices") {
  hardy::Rng rng(9);
  for (int n : {2, 3, 4}) {
    const auto q = hardy::random_orthogonal(rng, n);
    const auto qtq = hardy::multiply(hardy::transpose(q), q);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(qtq(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}
