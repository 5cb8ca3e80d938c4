#pragma once

#include <functional>

namespace bkm {

// Bessel functions of the first kind, orders 0 and 1, for finite r >= 0.
double bessel_j0(double r);
double bessel_j1(double r);

// Non-singular radial solution of the Helmholtz operator (lap + 1):
// J0(r) in 2D, sin(r)/r in 3D.
class GeneralSolution {
 public:
  explicit GeneralSolution(int dim);

  int dim() const noexcept { return dim_; }
  double value(double r) const;
  double radial_derivative(double r) const;
  // d/dn of value, given dr/dn at the response point.
  double normal_derivative(double r, double dr_dn) const {
    return radial_derivative(r) * dr_dn;
  }

 private:
  int dim_;
};

GeneralSolution helmholtz_general_solution(int dim);

// A particular-solution basis phi_hat together with its image
// phi = (lap + 1) phi_hat. Interpolating the inhomogeneous term with phi
// yields a particular solution as the same combination of phi_hat.
struct KernelPair {
  double shape = 0.0;
  int dim = 2;
  std::function<double(double)> phi_hat;
  std::function<double(double)> phi;
  std::function<double(double)> phi_hat_radial;  // d phi_hat / dr

  double phi_hat_normal(double r, double dr_dn) const { return phi_hat_radial(r) * dr_dn; }
};

// Multiquadric pair: phi_hat = (r^2 + c^2)^{3/2}. In 2D
//   phi = 6 s + 3 r^2 / s + s^3,   s = sqrt(r^2 + c^2);
// in 3D the Laplacian contributes 9 s instead of 6 s.
KernelPair mq_pair(double c, int dim = 2);

}  // namespace bkm
