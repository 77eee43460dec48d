#pragma once

#include <algorithm>
#include <cmath>

namespace unitfield {

inline constexpr double kPi = 3.14159265358979323846;

struct Point2 {
  double u = 0.0;
  double v = 0.0;
};

// Open coordinate rectangle (u0,u1) x (v0,v1).
struct Rect {
  double u0 = 0.0, u1 = 0.0, v0 = 0.0, v1 = 0.0;

  bool contains(const Point2& p) const {
    return p.u > u0 && p.u < u1 && p.v > v0 && p.v < v1;
  }
  // Distance from an interior point to the nearest side; negative outside.
  double margin(const Point2& p) const {
    return std::min(std::min(p.u - u0, u1 - p.u), std::min(p.v - v0, v1 - p.v));
  }
  double min_extent() const { return std::min(u1 - u0, v1 - v0); }
};

// Coordinate components of a tangent vector at a base point.
struct TangentVector {
  Point2 base;
  double a = 0.0;  // du component
  double b = 0.0;  // dv component
};

inline TangentVector make_vec(const Point2& p, double a, double b) { return {p, a, b}; }

// Component arithmetic; callers are responsible for matching base points.
inline TangentVector operator+(const TangentVector& x, const TangentVector& y) {
  return {x.base, x.a + y.a, x.b + y.b};
}
inline TangentVector operator-(const TangentVector& x, const TangentVector& y) {
  return {x.base, x.a - y.a, x.b - y.b};
}
inline TangentVector operator*(double c, const TangentVector& x) { return {x.base, c * x.a, c * x.b}; }

// Dense 2x2 matrix, row-major.
struct Mat2 {
  double m00 = 0.0, m01 = 0.0, m10 = 0.0, m11 = 0.0;

  double det() const { return m00 * m11 - m01 * m10; }
  double trace() const { return m00 + m11; }
  double max_abs() const {
    return std::max(std::max(std::abs(m00), std::abs(m01)), std::max(std::abs(m10), std::abs(m11)));
  }
  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
}

// Largest eigenvalue of a symmetric 2x2 matrix.
inline double sym_eigen_max(const Mat2& s) {
  double mean = 0.5 * s.trace();
  double d = std::sqrt(std::max(0.0, mean * mean - s.det()));
  return mean + d;
}

// Largest singular value via the Gram matrix; no SVD machinery needed at 2x2.
inline double largest_singular_value(const Mat2& a) {
  Mat2 g{a.m00 * a.m00 + a.m10 * a.m10, a.m00 * a.m01 + a.m10 * a.m11,
         a.m00 * a.m01 + a.m10 * a.m11, a.m01 * a.m01 + a.m11 * a.m11};
  return std::sqrt(std::max(0.0, sym_eigen_max(g)));
}

// Christoffel symbols of the second kind; g[k][i][j] with k the upper index.
struct Christoffel2 {
  double g[2][2][2] = {};
};

// Differentiation and comparison settings shared by all operations.
struct DiffConfig {
  double h = 1e-4;             // step for first-derivative stencils
  double h2 = 1e-3;            // step for second-derivative stencils
  bool richardson = false;     // extrapolate central differences to O(h^4)
  bool use_analytic = true;    // prefer analytic partials carried by a field
  double degenerate_eps = 1e-8;  // threshold on |grad| below which the frame degenerates
  double tol_closed_form = 1e-8;
  double tol_oracle = 1e-4;
};

}  // namespace unitfield
