#include "bkm/kernels.hpp"

#include <cmath>

#include "bkm/errors.hpp"

namespace bkm {

GeneralSolution::GeneralSolution(int dim) : dim_(dim) {
  if (dim != 2 && dim != 3) throw InvalidArgument("general solution: dim must be 2 or 3");
}

double GeneralSolution::value(double r) const {
  if (dim_ == 2) return bessel_j0(r);
  if (r < 1e-4) {
    const double r2 = r * r;
    return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
  }
  return std::sin(r) / r;
}

double GeneralSolution::radial_derivative(double r) const {
  if (dim_ == 2) return -bessel_j1(r);
  if (r < 1e-4) return -r / 3.0 + r * r * r / 30.0;
  return (r * std::cos(r) - std::sin(r)) / (r * r);
}

GeneralSolution helmholtz_general_solution(int dim) { return GeneralSolution(dim); }

KernelPair mq_pair(double c, int dim) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("mq_pair: shape must be > 0");
  if (dim != 2 && dim != 3) throw InvalidArgument("mq_pair: dim must be 2 or 3");
  const double c2 = c * c;
  // phi_hat'' + (dim - 1) phi_hat' / r = 3 dim s + 3 r^2 / s.
  const double s_coeff = 3.0 * dim;
  KernelPair k;
  k.shape = c;
  k.dim = dim;
  k.phi_hat = [c2](double r) {
    const double s2 = r * r + c2;
    return s2 * std::sqrt(s2);
  };
  k.phi = [c2, s_coeff](double r) {
    const double s2 = r * r + c2;
    const double s = std::sqrt(s2);
    return s_coeff * s + 3.0 * r * r / s + s2 * s;
  };
  k.phi_hat_radial = [c2](double r) { return 3.0 * r * std::sqrt(r * r + c2); };
  return k;
}

}  // namespace bkm
