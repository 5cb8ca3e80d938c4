#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bkm/drm.hpp"
#include "bkm/errors.hpp"
#include "bkm/linalg.hpp"
#include "oracles/finite_difference.hpp"

using namespace bkm;

namespace {

std::vector<Point> random_points(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(u(rng), u(rng));
  return out;
}

KnotSet dirichlet_set(const std::vector<Point>& pts) {
  // Treat every point as a boundary knot; the normal is irrelevant for DRM.
  std::vector<BoundaryKnot> b;
  for (const auto& p : pts) b.push_back({p, Point(1.0, 0.0), BoundaryType::dirichlet});
  return KnotSet(b);
}

}  // namespace

TEST_CASE("single knot at the origin") {
  const auto k = mq_pair(3.0);
  InterpolationMatrix m({Point(0.0, 0.0)}, k);
  REQUIRE(m.size() == 1);
  CHECK(m.entries()(0, 0) == 45.0);

  Eigen::VectorXd rhs(1);
  rhs << 90.0;
  const auto fit = fit_particular(m, rhs);
  CHECK(fit.alpha[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(evaluate_particular(fit, Point(0.0, 0.0)) == doctest::Approx(54.0).epsilon(1e-15));

  rhs << 45.0;
  const auto unit = fit_particular(m, rhs);
  CHECK(unit.alpha[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(evaluate_particular(unit, Point(0.0, 0.0)) == doctest::Approx(27.0).epsilon(1e-15));
  CHECK(evaluate_particular_normal(unit, Point(0.0, 0.0), Point(1.0, 0.0)) == 0.0);
}

TEST_CASE("interpolation matrix is symmetric with phi(0) on the diagonal") {
  const auto k = mq_pair(0.3);
  InterpolationMatrix m(random_points(25, 1), k);
  const auto& a = m.entries();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    CHECK(a(i, i) == k.phi(0.0));
    for (Eigen::Index j = 0; j < a.cols(); ++j) CHECK(a(i, j) == a(j, i));
  }
}

TEST_CASE("zero right-hand side gives zero coefficients") {
  const auto fit =
      fit_particular(dirichlet_set(random_points(12, 2)), mq_pair(0.3), Eigen::VectorXd::Zero(12));
  for (Eigen::Index i = 0; i < fit.alpha.size(); ++i) CHECK(fit.alpha[i] == 0.0);
  CHECK(evaluate_particular(fit, Point(0.2, 0.1)) == 0.0);
}

TEST_CASE("fit reproduces the right-hand side at the knots") {
  // Seven knots on the unit circle, right-hand side = x coordinate.
  std::vector<Point> pts;
  for (int j = 0; j < 7; ++j) {
    const double t = 2.0 * 3.141592653589793 * j / 7.0;
    pts.emplace_back(std::cos(t), std::sin(t));
  }
  InterpolationMatrix m(pts, mq_pair(1.0));
  Eigen::VectorXd rhs(7);
  for (int j = 0; j < 7; ++j) rhs[j] = pts[static_cast<std::size_t>(j)].x();
  const auto fit = fit_particular(m, rhs);
  CHECK(fit.residual <= 1e-10);
  CHECK(relative_residual(m.entries(), fit.alpha, rhs) <= 1e-10);
  CHECK(fit.condition_estimate > 1.0);
}

TEST_CASE("particular solution satisfies the operator at the knots") {
  for (unsigned seed : {11u, 12u, 13u}) {
    const auto pts = random_points(30, seed);
    const auto kernel = mq_pair(0.3);
    std::mt19937 rng(seed + 100);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd rhs(30);
    for (auto& v : rhs) v = u(rng);
    const auto fit = fit_particular(dirichlet_set(pts), kernel, rhs);
    REQUIRE(fit.condition_estimate <= 1e8);
    auto up = [&fit](const Point& p) { return evaluate_particular(fit, p); };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double op = oracle::laplacian_2d(up, pts[i], 1e-3) + up(pts[i]);
      CHECK(std::abs(op - rhs[static_cast<Eigen::Index>(i)]) <= 1e-6 * rhs.cwiseAbs().maxCoeff() *
                                                                    fit.alpha.cwiseAbs().sum());
    }
  }
}

TEST_CASE("normal derivative of the particular solution matches finite differences") {
  const auto pts = random_points(10, 21);
  Eigen::VectorXd rhs(10);
  for (Eigen::Index i = 0; i < 10; ++i) rhs[i] = std::sin(static_cast<double>(i));
  const auto fit = fit_particular(dirichlet_set(pts), mq_pair(0.5), rhs);
  auto up = [&fit](const Point& p) { return evaluate_particular(fit, p); };
  const Point n(0.6, 0.8);
  for (const Point& x : {Point(0.1, 0.2), Point(-0.7, 0.4), pts[3]}) {
    const double fd = oracle::directional_derivative(up, x, n, 1e-4);
    CHECK(evaluate_particular_normal(fit, x, n) ==
          doctest::Approx(fd).epsilon(1e-7).scale(fit.alpha.cwiseAbs().sum()));
  }
}

TEST_CASE("operator coupling") {
  const auto pts = random_points(8, 31);
  InterpolationMatrix m(pts, mq_pair(0.4));
  const Eigen::Index n = m.size();

  CHECK(apply_operator_coupling(m, Eigen::MatrixXd::Zero(n, n)).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd c1 = apply_operator_coupling(m, id);
  const Eigen::MatrixXd inv = m.entries().inverse();
  CHECK((c1 - inv).cwiseAbs().maxCoeff() <= 1e-9 * inv.cwiseAbs().maxCoeff());

  const Eigen::MatrixXd c2 = apply_operator_coupling(m, 2.0 * id);
  CHECK((c2 - 2.0 * c1).cwiseAbs().maxCoeff() <= 1e-12 * c1.cwiseAbs().maxCoeff());

  // C A = B for a general B.
  std::mt19937 rng(4);
  std::normal_distribution<double> g;
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = g(rng);
  const Eigen::MatrixXd c = apply_operator_coupling(m, b);
  CHECK((c * m.entries() - b).cwiseAbs().maxCoeff() <= 1e-8 * b.cwiseAbs().maxCoeff());
}

TEST_CASE("knot permutation permutes the coefficients") {
  auto pts = random_points(9, 41);
  Eigen::VectorXd rhs(9);
  for (Eigen::Index i = 0; i < 9; ++i) rhs[i] = pts[static_cast<std::size_t>(i)].x() * 2.0 + 1.0;
  const auto kernel = mq_pair(0.3);
  const auto fit = fit_particular(dirichlet_set(pts), kernel, rhs);

  std::vector<Point> rev(pts.rbegin(), pts.rend());
  const Eigen::VectorXd rrhs = rhs.reverse();
  const auto rfit = fit_particular(dirichlet_set(rev), kernel, rrhs);
  for (Eigen::Index i = 0; i < 9; ++i) {
    CHECK(rfit.alpha[8 - i] ==
          doctest::Approx(fit.alpha[i]).epsilon(1e-9).scale(fit.alpha.cwiseAbs().maxCoeff()));
  }
  const Point probe(0.25, -0.3);
  CHECK(evaluate_particular(rfit, probe) == doctest::Approx(evaluate_particular(fit, probe)));
}

TEST_CASE("fit rejects mismatched input") {
  const auto set = dirichlet_set(random_points(5, 51));
  CHECK_THROWS_AS(fit_particular(set, mq_pair(0.3), Eigen::VectorXd::Zero(4)), InvalidArgument);
  CHECK_THROWS_AS(build_interpolation_matrix(set, mq_pair(0.3, 3)), InvalidArgument);
}

TEST_CASE("coincident centers are ill-conditioned") {
  InterpolationMatrix m({Point(0.0, 0.0), Point(0.0, 0.0)}, mq_pair(1.0));
  CHECK_THROWS_AS(m.factorize(), IllConditioned);
}
