#include <cmath>
#include <numbers>

#include "bkm/errors.hpp"
#include "bkm/kernels.hpp"

namespace bkm {

namespace {

constexpr double kSeriesLimit = 12.0;
constexpr double kAsymptoticLimit = 25.0;

void require_valid(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidArgument("Bessel argument must be finite and non-negative");
  }
}

// sum_k (-1)^k q^k / (k! (k + order)!) with q = r^2/4, times (r/2)^order.
// Accumulated in long double: the largest term near r = 12 is ~2e4.
double power_series(double r, int order) {
  const long double q = static_cast<long double>(r) * r / 4.0L;
  long double term = order == 0 ? 1.0L : static_cast<long double>(r) / 2.0L;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (static_cast<long double>(k) > q && std::fabs(term) < 1e-21L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

// Miller's backward recurrence, normalised with J0 + 2 sum_k J_2k = 1.
void backward_recurrence(double r, double& j0, double& j1) {
  const long double x = r;
  int m = static_cast<int>(r) + 40;
  if (m % 2 != 0) ++m;
  long double next = 0.0L;  // J_{k+1}
  long double curr = 1e-300L;  // J_k
  long double norm = 0.0L;
  long double j1_raw = 0.0L;
  for (int k = m; k > 0; --k) {
    const long double prev = 2.0L * k / x * curr - next;  // J_{k-1}
    next = curr;
    curr = prev;
    if (k - 1 == 1) j1_raw = curr;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0L * curr;
  }
  norm += curr;
  j0 = static_cast<double>(curr / norm);
  j1 = static_cast<double>(j1_raw / norm);
}

// Hankel expansion J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi).
void hankel_pq(double x, int order, double& p, double& q) {
  const double mu = 4.0 * order * order;
  p = 1.0;
  q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::fabs(term) > last) break;  // divergent tail
    last = std::fabs(term);
    // k odd feeds Q, k even feeds P, signs alternate in pairs.
    const int pair = (k - 1) / 2;
    const double sign = pair % 2 == 0 ? 1.0 : -1.0;
    if (k % 2 == 1) {
      q += sign * term;
    } else {
      p -= sign * term;
    }
    if (last < 1e-17) break;
  }
}

double asymptotic(double x, int order) {
  double p = 0.0;
  double q = 0.0;
  hankel_pq(x, order, p, q);
  const double c = std::cos(x);
  const double s = std::sin(x);
  double cos_chi = 0.0;
  double sin_chi = 0.0;
  if (order == 0) {  // chi = x - pi/4
    cos_chi = (c + s) / std::numbers::sqrt2;
    sin_chi = (s - c) / std::numbers::sqrt2;
  } else {  // chi = x - 3 pi/4
    cos_chi = (s - c) / std::numbers::sqrt2;
    sin_chi = -(s + c) / std::numbers::sqrt2;
  }
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_j0(double r) {
  require_valid(r);
  if (r <= kSeriesLimit) return power_series(r, 0);
  if (r < kAsymptoticLimit) {
    double j0 = 0.0;
    double j1 = 0.0;
    backward_recurrence(r, j0, j1);
    return j0;
  }
  return asymptotic(r, 0);
}

double bessel_j1(double r) {
  require_valid(r);
  if (r <= kSeriesLimit) return power_series(r, 1);
  if (r < kAsymptoticLimit) {
    double j0 = 0.0;
    double j1 = 0.0;
    backward_recurrence(r, j0, j1);
    return j1;
  }
  return asymptotic(r, 1);
}

}  // namespace bkm
