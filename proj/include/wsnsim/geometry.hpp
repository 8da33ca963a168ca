#ifndef WSNSIM_GEOMETRY_HPP
#define WSNSIM_GEOMETRY_HPP

#include <cmath>

namespace wsnsim {

/// Planar point in meters.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(const Point& a, const Point& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double euclidean(const Point& a, const Point& b) noexcept {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace wsnsim

#endif  // WSNSIM_GEOMETRY_HPP
