#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "bkm/geometry.hpp"

namespace bkm {

struct SpaceTimePoint {
  SpaceTimePoint(Point space_, double time_ = 0.0) : space(space_), time(time_) {}  // NOLINT

  Point space;
  double time;
};

// Euclidean distance over the concatenated (space, time) coordinates.
double timespace_distance(const SpaceTimePoint& p, const SpaceTimePoint& q);

// A radial general solution with the derivatives some kernel kinds need.
struct RadialFunction {
  std::function<double(double)> value;
  std::function<double(double)> first;   // d/dr
  std::function<double(double)> second;  // d2/dr2
};

enum class GsrKind {
  interior,            // [f(x) + rho(g(r))] r^2m g(r)
  dirichlet,           // D(x) r^2m g'(r)
  neumann,             // N(x) r^2m g(r)
  simple,              // r^2m g(r)
  wave,                // r^2m g(r) f(x, t), r measured in space-time
  extended_helmholtz,  // h(r) [f(x, t) + h(r) + (1 + 1/v^2) h_tt(r)]
  transient,           // t^2m g(r, t) f(x, t)
};

using SourceData = std::function<double(const Point& x, double t)>;

struct GsrSpec {
  GsrKind kind = GsrKind::simple;
  RadialFunction g;  // h for extended_helmholtz
  std::function<double(double r, double t)> transient_g;
  int m = 1;
  SourceData data;                        // f, D or N depending on kind
  std::function<double(double)> rho_of_g;  // interior: rho applied to g, as a function of r
  bool keep_rho_term = true;
  // Source and response sets are disjoint, so the smoothing power is unnecessary.
  bool distinct_sources = false;
  // Pre-wavelet dilation: g is evaluated at sqrt(r^2 + c^2). Zero disables it.
  double shape = 0.0;
  double wave_speed = 1.0;  // extended_helmholtz only
};

class GsrKernel {
 public:
  explicit GsrKernel(GsrSpec spec);

  const GsrSpec& spec() const noexcept { return spec_; }

  // Kernel centred at source, evaluated at response. Spatial kinds use the
  // spatial distance; wave and extended_helmholtz use the space-time one.
  double operator()(const SpaceTimePoint& response, const SpaceTimePoint& source) const;
  // Spatial kinds only: kernel value at distance r from source.
  double radial(double r, const SpaceTimePoint& source) const;

 private:
  double dilated(double r) const;
  double smoothing(double r) const;

  GsrSpec spec_;
};

GsrKernel make_gsr(GsrSpec spec);

using NodeFunction = std::function<double(const SpaceTimePoint&)>;

// u(x) = sum_k beta_k phi(x, x_k) + beta_{N+1} psi(x), with sum_k beta_k psi(x_k) = 0.
struct ConstrainedFit {
  Eigen::VectorXd beta;  // size N + 1, last entry multiplies psi
  std::vector<SpaceTimePoint> nodes;
  GsrKernel kernel;
  NodeFunction psi;
  double condition_estimate = 0.0;
  double interpolation_residual = 0.0;  // relative
  double side_condition_residual = 0.0;  // |sum_k beta_k psi(x_k)|

  double operator()(const SpaceTimePoint& x) const;
};

ConstrainedFit constrained_interpolate(std::span<const SpaceTimePoint> nodes,
                                       const GsrKernel& kernel, const NodeFunction& psi,
                                       const Eigen::VectorXd& values);
ConstrainedFit constrained_interpolate(std::span<const Point> nodes, const GsrKernel& kernel,
                                       const NodeFunction& psi, const Eigen::VectorXd& values);

}  // namespace bkm
