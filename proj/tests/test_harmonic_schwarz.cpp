#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hardy/dual_poly.hpp"
#include "hardy/errors.hpp"
#include "hardy/harmonic_schwarz.hpp"
#include "hardy/matrix_hardy.hpp"
#include "hardy/poly_hardy.hpp"
#include "hardy/real_matrix.hpp"
#include "hardy/rng.hpp"

using hardy::ball_extremal_derivative;
using hardy::disk_extremal_derivative;
using hardy::DualDirection;
using hardy::RealMatrix;
using hardy::SchwarzPair;

namespace {

constexpr double kPi = std::numbers::pi;

// A direction with both moduli in [0.2, 1.2] and modulus gap above the floor.
DualDirection random_direction(hardy::Rng& rng) {
  while (true) {
    const DualDirection d{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)},
                          {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}};
    const double ga = std::abs(d.gamma);
    const double de = std::abs(d.delta);
    if (ga < 0.2 || de < 0.2) continue;
    if (std::abs(ga - de) < 0.05) continue;
    return d;
  }
}

double h1_of(const DualDirection& d) {
  return hardy::hp_norm({d.gamma, d.delta}, 1.0);
}

}  // namespace

TEST_CASE("extremal pairs achieve equality in the duality pairing") {
  // The holomorphic rotation: boundary map is z itself.
  const SchwarzPair rot = disk_extremal_derivative({{1.0, 0.0}, {0.0, 0.0}});
  CHECK(std::abs(rot.alpha - 1.0) < 1e-12);
  CHECK(std::abs(rot.beta) < 1e-12);

  for (const DualDirection& d :
       {DualDirection{{1.0, 0.0}, {0.5, 0.0}},
        DualDirection{{1.0, 1.0}, {0.3, 0.0}}}) {
    const SchwarzPair pair = disk_extremal_derivative(d);
    const std::complex<double> pairing =
        d.gamma * std::conj(pair.alpha) + d.delta * std::conj(pair.beta);
    CHECK(std::abs(pairing - h1_of(d)) < 1e-8);
  }

  hardy::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const DualDirection d = random_direction(rng);
    const SchwarzPair pair = disk_extremal_derivative(d);
    const std::complex<double> pairing =
        d.gamma * std::conj(pair.alpha) + d.delta * std::conj(pair.beta);
    CHECK(std::abs(pairing - h1_of(d)) < 1e-7);
  }
}

TEST_CASE("extremal pairs sit on the admissibility boundary") {
  hardy::Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const DualDirection d = random_direction(rng);
    const auto [admissible, dual] =
        hardy::schwarz_admissible(disk_extremal_derivative(d));
    CHECK(admissible);
    CHECK(dual == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(disk_extremal_derivative({{1.0, 0.0}, {0.0, 1.0}}),
                  hardy::DegenerateDirection);
  CHECK_THROWS_AS(
      disk_extremal_derivative({{std::nan(""), 0.0}, {0.5, 0.0}}),
      hardy::NonFinite);
}

TEST_CASE("boundary map is odd so even Fourier modes vanish") {
  const DualDirection d{{1.0, 0.4}, {0.3, -0.2}};
  for (double t : {0.0, 0.7, 1.9, 2.8}) {
    const std::complex<double> z = std::polar(1.0, t);
    const auto g = [&](std::complex<double> w) {
      const std::complex<double> v = d.gamma * w + d.delta * std::conj(w);
      return v / std::abs(v);
    };
    CHECK(std::abs(g(-z) + g(z)) < 1e-15);
  }
  for (int mode : {0, 2, -2}) {
    const double re = hardy::circle_mean([&](double t) {
      const std::complex<double> z = std::polar(1.0, t);
      const std::complex<double> v = d.gamma * z + d.delta * std::conj(z);
      return (v / std::abs(v) * std::polar(1.0, mode * t)).real();
    });
    CHECK(std::abs(re) < 1e-10);
  }
}

TEST_CASE("derivative pair rotates with the direction") {
  hardy::Rng rng(43);
  const DualDirection base = random_direction(rng);
  const SchwarzPair ref = disk_extremal_derivative(base);
  for (int k = 0; k < 10; ++k) {
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const std::complex<double> phase = std::polar(1.0, theta);
    const SchwarzPair rotated = disk_extremal_derivative(
        {base.gamma * phase, base.delta / phase});
    CHECK(std::abs(rotated.alpha - ref.alpha * phase) < 1e-9);
    CHECK(std::abs(rotated.beta - ref.beta / phase) < 1e-9);
  }
}

TEST_CASE("corollaries of admissibility") {
  // (2/pi, 2/pi) has dual H^1 norm exactly 1 and saturates the modulus-sum
  // bound 4/pi.
  const SchwarzPair boundary{{2.0 / kPi, 0.0}, {2.0 / kPi, 0.0}};
  const auto [adm, dual] = hardy::schwarz_admissible(boundary);
  CHECK(adm);
  CHECK(dual == doctest::Approx(1.0).epsilon(1e-10));
  const auto report = hardy::check_corollaries(boundary);
  CHECK(!report.vacuous);
  CHECK(std::abs(report.modulus_sum_slack) < 1e-12);
  CHECK(report.parseval_slack > 0.0);
  CHECK(report.h4_slack > 0.0);

  // (0.9, 0.5) breaks the Parseval bound, so it cannot be admissible.
  const SchwarzPair outside{{0.9, 0.0}, {0.5, 0.0}};
  CHECK(!hardy::schwarz_admissible(outside).admissible);
  const auto bad = hardy::check_corollaries(outside);
  CHECK(bad.vacuous);
  CHECK(bad.parseval_slack < 0.0);

  // The holomorphic rotation saturates the Parseval bound instead.
  const auto rot = hardy::check_corollaries({{1.0, 0.0}, {0.0, 0.0}});
  CHECK(!rot.vacuous);
  CHECK(std::abs(rot.parseval_slack) < 1e-12);
  CHECK(std::abs(rot.h4_slack) < 1e-12);
  const auto [rot_ok, rot_norm] =
      hardy::schwarz_admissible({{1.0, 0.0}, {0.0, 0.0}});
  CHECK(rot_ok);
  CHECK(rot_norm == doctest::Approx(1.0).epsilon(1e-10));

  // The zero pair is trivially admissible with every slack positive.
  const auto zero = hardy::check_corollaries({{0.0, 0.0}, {0.0, 0.0}});
  CHECK(!zero.vacuous);
  CHECK(zero.h4_slack == 1.0);
}

TEST_CASE("ball extremal derivative on model matrices") {
  // B = I gives the identity boundary map, so A = I up to solver roundoff.
  const RealMatrix a_id = ball_extremal_derivative(RealMatrix::identity(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(a_id(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }
  // Orthogonal B keeps ||Bx|| = 1, so the boundary map is linear and A = B.
  hardy::Rng rng(44);
  const RealMatrix u = hardy::random_orthogonal(rng, 3);
  const RealMatrix a_u = ball_extremal_derivative(u);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(std::abs(a_u(i, j) - u(i, j)) < 1e-9);
  }
  // The pairing identity <B, A> = ||B||_{H^1}, with the norm computed by the
  // adaptive route, independent of the grid behind A.
  const RealMatrix b = RealMatrix::diagonal({2.0, 1.0, 1.0});
  const RealMatrix a_b = ball_extremal_derivative(b);
  CHECK(hardy::matrix_inner(b, a_b) ==
        doctest::Approx(hardy::matrix_hp_norm(b, 1.0)).epsilon(1e-7));

  CHECK_THROWS_AS(ball_extremal_derivative(RealMatrix::diagonal({1.0, 1.0, 0.0})),
                  hardy::SingularMatrix);
  CHECK_THROWS_AS(ball_extremal_derivative(RealMatrix::identity(4)),
                  hardy::DomainError);
  CHECK_THROWS_AS(
      ball_extremal_derivative(RealMatrix::identity(3), hardy::sphere_grid(2, 64)),
      hardy::DimensionMismatch);
}

TEST_CASE("disk and two-dimensional ball agree") {
  hardy::Rng rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    RealMatrix b = hardy::random_gaussian_matrix(rng, 2);
    const auto [gamma, delta] = hardy::complex_pair_of_2x2(b);
    if (std::abs(std::abs(gamma) - std::abs(delta)) < 0.05) continue;
    const SchwarzPair pair = disk_extremal_derivative({gamma, delta});
    const RealMatrix a = ball_extremal_derivative(b);
    const auto [alpha, beta] = hardy::complex_pair_of_2x2(a);
    CHECK(std::abs(alpha - pair.alpha) < 1e-7);
    CHECK(std::abs(beta - pair.beta) < 1e-7);
  }
}

TEST_CASE("ball admissibility") {
  // (3/2) P_1 has dual H^1 norm (3/2)(2/3) = 1: on the boundary.
  const auto [on_edge, edge_norm] =
      hardy::ball_admissible(RealMatrix::diagonal({1.5, 0.0, 0.0}));
  CHECK(on_edge);
  CHECK(edge_norm == doctest::Approx(1.0).epsilon(1e-7));
  const auto [too_big, big_norm] =
      hardy::ball_admissible(RealMatrix::diagonal({2.0, 2.0, 2.0}));
  CHECK(!too_big);
  CHECK(big_norm == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(hardy::ball_admissible(RealMatrix::zero(3)).admissible);
}
