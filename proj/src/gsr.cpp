#include "bkm/gsr.hpp"

#include <cmath>
#include <initializer_list>

#include "bkm/errors.hpp"
#include "bkm/linalg.hpp"

namespace bkm {

namespace {

// r^2m and t^2m vanish faster than the log and pole singularities of the
// general solutions they multiply, so an exact zero factor wins.
double product(std::initializer_list<double> factors) {
  double p = 1.0;
  for (double f : factors) {
    if (f == 0.0) return 0.0;
    p *= f;
  }
  return p;
}

bool spatial(GsrKind kind) {
  return kind == GsrKind::interior || kind == GsrKind::dirichlet || kind == GsrKind::neumann ||
         kind == GsrKind::simple;
}

}  // namespace

double timespace_distance(const SpaceTimePoint& p, const SpaceTimePoint& q) {
  const double ds = radial_distance(p.space, q.space);
  return std::hypot(ds, p.time - q.time);
}

GsrKernel::GsrKernel(GsrSpec spec) : spec_(std::move(spec)) {
  if (spec_.m < 0) throw InvalidArgument("make_gsr: m must be non-negative");
  if (!(spec_.shape >= 0.0) || !std::isfinite(spec_.shape)) {
    throw InvalidArgument("make_gsr: pre-wavelet shape must be finite and >= 0");
  }
  const GsrKind kind = spec_.kind;
  if (kind == GsrKind::transient) {
    if (!spec_.transient_g) throw InvalidArgument("make_gsr: transient kind needs g(r, t)");
  } else if (!spec_.g.value) {
    throw InvalidArgument("make_gsr: general solution value is required");
  }
  if (kind == GsrKind::dirichlet && !spec_.g.first) {
    throw InvalidArgument("make_gsr: dirichlet kind needs dg/dr");
  }
  if (kind == GsrKind::extended_helmholtz) {
    if (!spec_.g.first || !spec_.g.second) {
      throw InvalidArgument("make_gsr: extended_helmholtz kind needs h' and h''");
    }
    if (!(spec_.wave_speed > 0.0)) throw InvalidArgument("make_gsr: wave speed must be > 0");
  }
  if (kind != GsrKind::simple && !spec_.data) {
    throw InvalidArgument("make_gsr: this kind needs its source data function");
  }
}

double GsrKernel::dilated(double r) const {
  return spec_.shape > 0.0 ? std::sqrt(r * r + spec_.shape * spec_.shape) : r;
}

double GsrKernel::smoothing(double r) const {
  if (spec_.distinct_sources || spec_.m == 0) return 1.0;
  return std::pow(r, 2 * spec_.m);
}

double GsrKernel::radial(double r, const SpaceTimePoint& source) const {
  const double s = dilated(r);
  switch (spec_.kind) {
    case GsrKind::interior: {
      double f = spec_.data(source.space, source.time);
      if (spec_.keep_rho_term && spec_.rho_of_g) f += spec_.rho_of_g(s);
      return product({f, smoothing(r), spec_.g.value(s)});
    }
    case GsrKind::dirichlet:
      return product({spec_.data(source.space, source.time), smoothing(r), spec_.g.first(s)});
    case GsrKind::neumann:
      return product({spec_.data(source.space, source.time), smoothing(r), spec_.g.value(s)});
    case GsrKind::simple:
      return product({smoothing(r), spec_.g.value(s)});
    default:
      throw InvalidArgument("GsrKernel::radial: kind needs space-time points");
  }
}

double GsrKernel::operator()(const SpaceTimePoint& response, const SpaceTimePoint& source) const {
  if (spatial(spec_.kind)) return radial(radial_distance(response.space, source.space), source);

  const double f = spec_.data(source.space, source.time);
  switch (spec_.kind) {
    case GsrKind::wave: {
      const double r = timespace_distance(response, source);
      return product({smoothing(r), spec_.g.value(dilated(r)), f});
    }
    case GsrKind::extended_helmholtz: {
      const double s = dilated(timespace_distance(response, source));
      const double dt = response.time - source.time;
      // d2/dt2 of h(s) with ds/dt = dt/s and d2s/dt2 = 1/s - dt^2/s^3.
      double h_tt = spec_.g.second(s);
      if (s > 0.0) {
        const double q = dt / s;
        h_tt = spec_.g.second(s) * q * q + spec_.g.first(s) * (1.0 - q * q) / s;
      }
      const double h = spec_.g.value(s);
      const double v2 = spec_.wave_speed * spec_.wave_speed;
      return h * (f + h + (1.0 + 1.0 / v2) * h_tt);
    }
    case GsrKind::transient: {
      const double r = dilated(radial_distance(response.space, source.space));
      const double tau = response.time - source.time;
      return product({smoothing(tau), spec_.transient_g(r, tau), f});
    }
    default:
      break;
  }
  throw InvalidArgument("GsrKernel: unknown kind");
}

GsrKernel make_gsr(GsrSpec spec) { return GsrKernel(std::move(spec)); }

double ConstrainedFit::operator()(const SpaceTimePoint& x) const {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  double u = beta[n] * psi(x);
  for (Eigen::Index k = 0; k < n; ++k) u += beta[k] * kernel(x, nodes[static_cast<std::size_t>(k)]);
  return u;
}

ConstrainedFit constrained_interpolate(std::span<const SpaceTimePoint> nodes,
                                       const GsrKernel& kernel, const NodeFunction& psi,
                                       const Eigen::VectorXd& values) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  if (n == 0) throw InvalidArgument("constrained_interpolate: at least one node required");
  if (values.size() != n) throw InvalidArgument("constrained_interpolate: one value per node");
  if (!psi) throw InvalidArgument("constrained_interpolate: psi is required");

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::VectorXd psi_at(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& xi = nodes[static_cast<std::size_t>(i)];
    psi_at[i] = psi(xi);
    for (Eigen::Index k = 0; k < n; ++k) a(i, k) = kernel(xi, nodes[static_cast<std::size_t>(k)]);
  }
  a.col(n).head(n) = psi_at;
  a.row(n).head(n) = psi_at.transpose();

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  rhs.head(n) = values;
  DenseLu lu(a, "bordered GSR system");

  ConstrainedFit fit{lu.solve(rhs), {nodes.begin(), nodes.end()}, kernel, psi,
                     lu.condition_estimate(), 0.0, 0.0};
  const Eigen::VectorXd r = a.topRows(n) * fit.beta - values;
  const double vmax = values.cwiseAbs().maxCoeff();
  fit.interpolation_residual = r.cwiseAbs().maxCoeff() / (vmax > 0.0 ? vmax : 1.0);
  fit.side_condition_residual = std::abs(psi_at.dot(fit.beta.head(n)));
  return fit;
}

ConstrainedFit constrained_interpolate(std::span<const Point> nodes, const GsrKernel& kernel,
                                       const NodeFunction& psi, const Eigen::VectorXd& values) {
  const std::vector<SpaceTimePoint> st(nodes.begin(), nodes.end());
  return constrained_interpolate(std::span<const SpaceTimePoint>(st), kernel, psi, values);
}

}  // namespace bkm
