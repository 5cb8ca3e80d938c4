#include "bkm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bkm/errors.hpp"

namespace bkm {

namespace {

void require_finite(std::span<const double> c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw InvalidArgument("point coordinate is not finite");
  }
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  }
}

}  // namespace

Point::Point(double x, double y) : c_{x, y, 0.0}, dim_(2) { require_finite(coords()); }

Point::Point(double x, double y, double z) : c_{x, y, z}, dim_(3) {
  require_finite(coords());
}

Point::Point(std::span<const double> coords) : dim_(static_cast<int>(coords.size())) {
  if (dim_ != 2 && dim_ != 3) throw InvalidArgument("point dimension must be 2 or 3");
  std::copy(coords.begin(), coords.end(), c_.begin());
  require_finite(this->coords());
}

double Point::norm() const noexcept {
  double s = 0.0;
  for (double v : coords()) s += v * v;
  return std::sqrt(s);
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (int i = 0; i < a.dim_; ++i) r.c_[i] += b.c_[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (int i = 0; i < a.dim_; ++i) r.c_[i] -= b.c_[i];
  return r;
}

Point operator*(double s, const Point& a) {
  Point r = a;
  for (int i = 0; i < a.dim_; ++i) r.c_[i] *= s;
  return r;
}

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

KnotSet::KnotSet(std::vector<BoundaryKnot> boundary, std::vector<Point> interior)
    : boundary_(std::move(boundary)), interior_(std::move(interior)) {
  if (boundary_.empty()) throw InvalidArgument("knot set needs at least one boundary knot");
  const int d = boundary_.front().position.dim();
  for (const auto& k : boundary_) {
    if (k.position.dim() != d || k.normal.dim() != d) {
      throw InvalidArgument("knot set mixes dimensions");
    }
    if (std::abs(k.normal.norm() - 1.0) > 1e-12) {
      throw InvalidArgument("boundary normal is not a unit vector");
    }
  }
  for (const auto& p : interior_) {
    if (p.dim() != d) throw InvalidArgument("knot set mixes dimensions");
  }
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (radial_distance(position(i), position(j)) <= kCoincidenceTolerance) {
        throw DegenerateGeometry("knots " + std::to_string(i) + " and " +
                                 std::to_string(j) + " coincide");
      }
    }
  }
}

std::size_t KnotSet::num_neumann() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      boundary_.begin(), boundary_.end(),
      [](const BoundaryKnot& k) { return k.type == BoundaryType::neumann; }));
}

const Point& KnotSet::position(std::size_t i) const {
  if (i < boundary_.size()) return boundary_[i].position;
  return interior_.at(i - boundary_.size());
}

std::vector<Point> KnotSet::positions() const {
  std::vector<Point> out = boundary_positions();
  out.insert(out.end(), interior_.begin(), interior_.end());
  return out;
}

std::vector<Point> KnotSet::boundary_positions() const {
  std::vector<Point> out;
  out.reserve(size());
  for (const auto& k : boundary_) out.push_back(k.position);
  return out;
}

Ellipse::Ellipse(Point center_, double semi_major, double semi_minor)
    : center(center_), a(semi_major), b(semi_minor) {
  if (center.dim() != 2) throw InvalidArgument("ellipse center must be 2D");
  if (!(b > 0.0) || !(a >= b) || !std::isfinite(a)) {
    throw InvalidArgument("ellipse requires a >= b > 0");
  }
}

bool Ellipse::contains(const Point& p) const {
  const double u = (p.x() - center.x()) / a;
  const double v = (p.y() - center.y()) / b;
  return u * u + v * v < 1.0;
}

KnotSet ellipse_knots(const Ellipse& e, std::size_t n, BoundaryType type) {
  if (n == 0) throw InvalidArgument("ellipse_knots: n must be at least 1");
  std::vector<BoundaryKnot> knots;
  knots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const double c = std::cos(t);
    const double s = std::sin(t);
    const Point pos(e.center.x() + e.a * c, e.center.y() + e.b * s);
    const double nx = e.b * c;
    const double ny = e.a * s;
    const double len = std::hypot(nx, ny);
    knots.push_back({pos, Point(nx / len, ny / len), type});
  }
  return KnotSet(std::move(knots));
}

double radial_distance(const Point& x, const Point& y) { return (x - y).norm(); }

double normal_projection(const Point& x, const Point& source, const Point& n) {
  const Point d = x - source;
  const double r = d.norm();
  if (r == 0.0) return 0.0;
  return dot(d, n) / r;
}

}  // namespace bkm
