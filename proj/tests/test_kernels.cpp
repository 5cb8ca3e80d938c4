#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bkm/errors.hpp"
#include "bkm/kernels.hpp"
#include "oracles/bessel_series.hpp"
#include "oracles/finite_difference.hpp"

using namespace bkm;

namespace {

// Relative accuracy, absolute where the function itself is tiny.
bool close(double got, double ref, double rel) {
  return std::abs(got - ref) <= rel * std::max(std::abs(ref), 1e-3);
}

}  // namespace

TEST_CASE("bessel_j0 examples") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-12);
  CHECK(bessel_j0(1.0) == doctest::Approx(0.76519768655797).epsilon(1e-13));
}

TEST_CASE("bessel_j1 examples") {
  CHECK(bessel_j1(0.0) == 0.0);
  CHECK(bessel_j1(1.0) == doctest::Approx(0.44005058574493).epsilon(1e-13));
  CHECK(std::abs(bessel_j1(3.8317059702075)) < 1e-12);
}

TEST_CASE("first zeros agree with bisection on the series oracle") {
  CHECK(oracle::series_zero(0, 2.0, 3.0) == doctest::Approx(2.404825557695773).epsilon(1e-15));
  CHECK(oracle::series_zero(1, 3.5, 4.0) == doctest::Approx(3.8317059702075).epsilon(1e-13));
}

TEST_CASE("Bessel functions reject invalid arguments") {
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::quiet_NaN()), InvalidArgument);
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::infinity()), InvalidArgument);
  CHECK_THROWS_AS(bessel_j1(-1.0), InvalidArgument);
}

TEST_CASE("Bessel functions match the extended-precision series across all regimes") {
  // Dense grid over the series, recurrence and asymptotic ranges.
  for (int i = 0; i <= 600; ++i) {
    const double x = 0.1 * i;
    INFO("x = " << x);
    CHECK(close(bessel_j0(x), oracle::j0(x), 1e-12));
    CHECK(close(bessel_j1(x), oracle::j1(x), 1e-12));
    CHECK(std::abs(bessel_j0(x)) <= 1.0);
  }
  // Both sides of each crossover.
  for (double x : {11.999999, 12.0, 12.000001, 24.999999, 25.0, 25.000001}) {
    CHECK(close(bessel_j0(x), oracle::j0(x), 1e-12));
    CHECK(close(bessel_j1(x), oracle::j1(x), 1e-12));
  }
}

TEST_CASE("helmholtz_general_solution") {
  const auto g2 = helmholtz_general_solution(2);
  const auto g3 = helmholtz_general_solution(3);
  CHECK(g2.value(0.0) == 1.0);
  CHECK(std::abs(g3.value(std::numbers::pi)) < 1e-15);
  CHECK(g3.value(1.0) == doctest::Approx(0.8414709848078965).epsilon(1e-14));
  CHECK(g3.value(0.0) == 1.0);
  CHECK(g3.radial_derivative(0.0) == 0.0);
  CHECK(g2.normal_derivative(0.0, 0.7) == 0.0);
  CHECK(g2.normal_derivative(1.0, 0.5) == doctest::Approx(-0.5 * bessel_j1(1.0)));
  // Taylor branch joins the closed form.
  CHECK(g3.value(0.99999e-4) == doctest::Approx(std::sin(1.00001e-4) / 1.00001e-4).epsilon(1e-12));
  CHECK(g3.radial_derivative(0.99999e-4) ==
        doctest::Approx(g3.radial_derivative(1.00001e-4)).epsilon(1e-4));
  CHECK_THROWS_AS(helmholtz_general_solution(1), InvalidArgument);
}

TEST_CASE("general solutions are annihilated by the Helmholtz operator") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.05, 10.0);
  for (int dim : {2, 3}) {
    const auto g = helmholtz_general_solution(dim);
    auto f = [&g](double r) { return g.value(std::abs(r)); };
    for (int i = 0; i < 100; ++i) {
      const double r = u(rng);
      CHECK(std::abs(oracle::radial_laplacian(f, r, 1e-3, dim) + g.value(r)) < 1e-6);
    }
  }
}

TEST_CASE("dJ0/dr = -J1 by central differences") {
  auto j0 = [](double r) { return bessel_j0(r); };
  for (int i = 0; i <= 99; ++i) {
    const double r = 0.1 + i * 0.1;
    CHECK(std::abs(oracle::central_difference(j0, r, 1e-5) + bessel_j1(r)) < 1e-8);
  }
}

TEST_CASE("mq_pair examples") {
  const auto k = mq_pair(3.0);
  CHECK(k.phi_hat(0.0) == 27.0);
  CHECK(k.phi(0.0) == 45.0);
  CHECK(k.phi_hat_normal(0.0, 0.3) == 0.0);
  CHECK(k.phi_hat_normal(0.0, -1.0) == 0.0);
  CHECK_THROWS_AS(mq_pair(0.0), InvalidArgument);
  CHECK_THROWS_AS(mq_pair(-1.0), InvalidArgument);
  CHECK_THROWS_AS(mq_pair(1.0, 4), InvalidArgument);
}

TEST_CASE("phi(0) = 6c + c^3 cross-checked against the finite-difference operator at r ~ 0") {
  const auto k = mq_pair(3.0);
  // In 2D the radial Laplacian at the origin is 2 phi_hat''(0).
  auto f = [&k](double r) { return k.phi_hat(std::abs(r)); };
  const double lap0 = 2.0 * oracle::second_derivative(f, 0.0, 1e-3);
  CHECK(lap0 + k.phi_hat(0.0) == doctest::Approx(45.0).epsilon(1e-9));
}

TEST_CASE("phi = (lap + 1) phi_hat for the multiquadric pair") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(1e-3, 5.0);
  for (int dim : {2, 3}) {
    for (double c : {1.0, 3.0, 18.0}) {
      const auto k = mq_pair(c, dim);
      auto f = [&k](double r) { return k.phi_hat(std::abs(r)); };
      for (int i = 0; i < 200; ++i) {
        const double r = u(rng);
        const double fd = oracle::radial_laplacian(f, r, 1e-3, dim) + k.phi_hat(r);
        CHECK(std::abs(fd - k.phi(r)) <= 1e-6 * std::abs(k.phi(r)));
        CHECK(std::abs(oracle::derivative(f, r, 1e-3) - k.phi_hat_radial(r)) <=
              1e-8 * std::abs(k.phi(r)));
      }
    }
  }
}

TEST_CASE("a 6(r^2 + c^2) first term is not the operator image") {
  // Regression guard: this variant differs
  // from (lap + 1) phi_hat by far more than the finite-difference error.
  const double c = 3.0;
  const double r = 1.0;
  const double s2 = r * r + c * c;
  const double literal = 6.0 * s2 + 3.0 * r * r / std::sqrt(s2) + s2 * std::sqrt(s2);
  CHECK(std::abs(literal - mq_pair(c).phi(r)) > 1.0);
}
