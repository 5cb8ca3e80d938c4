#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace bkm {

// A point (or free vector) in two or three dimensions.
class Point {
 public:
  Point(double x, double y);
  Point(double x, double y, double z);
  explicit Point(std::span<const double> coords);

  int dim() const noexcept { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double x() const noexcept { return c_[0]; }
  double y() const noexcept { return c_[1]; }
  double z() const noexcept { return c_[2]; }
  std::span<const double> coords() const noexcept {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }

  double norm() const noexcept;

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(double s, const Point& a);
  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::array<double, 3> c_{};
  int dim_;
};

double dot(const Point& a, const Point& b);

enum class BoundaryType { dirichlet, neumann };

struct BoundaryKnot {
  Point position;
  Point normal;  // outward, unit length
  BoundaryType type = BoundaryType::dirichlet;
};

// Collocation knots: boundary knots first, then interior knots. All knot
// indices used elsewhere follow this order.
class KnotSet {
 public:
  static constexpr double kCoincidenceTolerance = 1e-12;

  explicit KnotSet(std::vector<BoundaryKnot> boundary,
                   std::vector<Point> interior = {});

  const std::vector<BoundaryKnot>& boundary() const noexcept { return boundary_; }
  const std::vector<Point>& interior() const noexcept { return interior_; }

  std::size_t num_boundary() const noexcept { return boundary_.size(); }
  std::size_t num_interior() const noexcept { return interior_.size(); }
  std::size_t size() const noexcept { return boundary_.size() + interior_.size(); }
  std::size_t num_neumann() const noexcept;
  std::size_t num_dirichlet() const noexcept { return num_boundary() - num_neumann(); }
  int dim() const noexcept { return boundary_.front().position.dim(); }

  // Position of knot i in boundary-then-interior order.
  const Point& position(std::size_t i) const;
  std::vector<Point> positions() const;
  std::vector<Point> boundary_positions() const;

 private:
  std::vector<BoundaryKnot> boundary_;
  std::vector<Point> interior_;
};

struct Ellipse {
  Ellipse(Point center, double semi_major, double semi_minor);

  Point center;
  double a;
  double b;

  bool contains(const Point& p) const;
};

// n knots at parametric angles 2*pi*k/n, all of the given boundary type.
KnotSet ellipse_knots(const Ellipse& e, std::size_t n,
                      BoundaryType type = BoundaryType::dirichlet);

double radial_distance(const Point& x, const Point& y);

// dr/dn at x for r = |x - source|; 0 when x coincides with source.
double normal_projection(const Point& x, const Point& source, const Point& n);

}  // namespace bkm
