#pragma once

#include <array>

#include "unitfield/frame.hpp"

namespace unitfield {

// A point of the unit tangent bundle: a base point together with the unit
// vector sitting over it.
struct BundlePoint {
  TangentVector xi;
  const Point2& base() const { return xi.base; }
};

// Tangent vector of the total space, split into its horizontal and vertical
// parts; both parts are identified with base tangent vectors at the anchor.
// Vectors tangent to the unit bundle have <v, xi> = 0.
struct BundleVector {
  BundlePoint at;
  TangentVector h, v;
};

enum class Lift { horizontal, vertical };

BundleVector lift_vector(const BundlePoint& at, Lift which, const TangentVector& x);

// The natural bundle metric: <X, Y> = <X.h, Y.h> + <X.v, Y.v>.
double sasaki_inner(const MetricChart& chart, const BundleVector& x, const BundleVector& y);
double sasaki_norm(const MetricChart& chart, const BundleVector& x);
// |<v-part, xi>|; zero exactly when x is tangent to the unit bundle.
double unit_tangency_defect(const MetricChart& chart, const BundleVector& x);

// Levi-Civita derivative of the bundle metric on lifted fields, evaluated at
// the bundle point `at` along the lift of Xp:
//   nabla_{X^h} Y^h = (nabla_X Y)^h - 1/2 (R(X,Y) xi)^v
//   nabla_{X^h} Y^v = 1/2 (R(xi,Y) X)^h + (nabla_X Y)^v
//   nabla_{X^v} Y^h = 1/2 (R(xi,X) Y)^h
//   nabla_{X^v} Y^v = 0
// with xi the fiber vector of `at`.
BundleVector sasaki_derivative(const MetricChart& chart, const BundlePoint& at, Lift lx,
                               const TangentVector& Xp, Lift ly, const VecField& Y,
                               const DiffConfig& cfg = {});

struct SectionalOptions {
  bool include_curvature_gradient = true;  // keep the two curvature-gradient terms
  bool use_gauss_identity = false;  // assemble R from K(<Y,Z>X - <X,Z>Y) instead of
                                    // connection coefficients
  double input_tol = 1e-6;          // orthonormality / tangency acceptance
};

// Sectional curvature of the bundle metric on the plane spanned by the
// orthonormal pair (X, Y) tangent to the unit bundle:
//   <R(X1,Y1)Y1,X1> - 3/4 |R(X1,Y1)xi|^2
//   + 1/4 |R(xi,Y2)X1 + R(xi,X2)Y1|^2 + |X2|^2 |Y2|^2 - <X2,Y2>^2
//   + 3 <R(X1,Y1)Y2,X2> - <R(xi,X2)X1, R(xi,Y2)Y1>
//   + <(nabla_{X1}R)(xi,Y2)Y1,X1> + <(nabla_{Y1}R)(xi,X2)X1,Y1>
// with X = X1^h + X2^v, Y = Y1^h + Y2^v. Throws NonOrthonormalInput if the
// pair fails the orthonormality or tangency check.
double bundle_sectional(const MetricChart& chart, const BundleVector& X, const BundleVector& Y,
                        const SectionalOptions& opts = {}, const DiffConfig& cfg = {});

// Differential of the section p -> (p, xi(p)) applied to Z:
// Z^h + (nabla_Z xi)^v at (p, xi(p)).
BundleVector pushforward(const UnitVectorField& field, const TangentVector& Z,
                         const DiffConfig& cfg = {});

// Metric induced on the image surface, in base coordinates:
// G~_ij = g_ij + <nabla_{d_i} xi, nabla_{d_j} xi>.
Mat2 induced_metric(const UnitVectorField& field, const Point2& p, const DiffConfig& cfg = {});
// Same as fields {G~_11, G~_12, G~_22}, sharing the field's derivative chains.
std::array<ScalarField, 3> induced_metric_field(const UnitVectorField& field);

// Gaussian curvature of the induced metric computed directly from point
// samples of G~ (finite differences all the way down); serves as an
// independent reference for the curvature of the image surface.
double pullback_gauss_curvature(const UnitVectorField& field, const Point2& p,
                                const DiffConfig& cfg = {});

// Adapted orthonormal frame of the image surface at (p, xi(p)):
//   t0 = e0^h,   t1 = (e1^h + lambda eta^v)/sqrt(1+lambda^2),
//   normal = (-lambda e1^h + eta^v)/sqrt(1+lambda^2).
struct ImageFrame {
  BundlePoint at;
  BundleVector t0, t1, normal;
  SingularFrame base;
};

ImageFrame image_tangent_frame(const UnitVectorField& field, const Point2& p,
                               const DiffConfig& cfg = {});

// Gram matrix of the coordinate basis (d_u, d_v, d_theta) of the bundle chart
// (u, v, theta), where theta is the fiber angle against X1. Rows and columns
// are ordered (u, v, theta).
std::array<std::array<double, 3>, 3> bundle_coordinate_gram(const MetricChart& chart,
                                                            const Point2& p, double theta,
                                                            const DiffConfig& cfg = {});

}  // namespace unitfield
