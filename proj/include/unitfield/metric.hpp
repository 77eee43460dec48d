#pragma once

#include <array>
#include <memory>
#include <utility>

#include "unitfield/scalar_field.hpp"
#include "unitfield/types.hpp"

namespace unitfield {

// Coordinate components of a vector field on a chart.
struct VecField {
  ScalarField a, b;
  bool differentiable() const { return a.differentiable() && b.differentiable(); }
  TangentVector at(const Point2& p) const { return {p, a(p), b(p)}; }
};

enum class ChartKind { semi_geodesic, general };

// A coordinate chart with a Riemannian metric on an open rectangle.
//
// semi_geodesic charts carry ds^2 = du^2 + f(u,v)^2 dv^2 with f > 0;
// general charts carry a full positive-definite coefficient matrix.
// When the coefficient fields carry analytic partials the chart exposes
// exact Christoffel-symbol and curvature fields; otherwise those quantities
// fall back to central differences at evaluation time.
class MetricChart {
 public:
  static MetricChart semi_geodesic(Rect domain, ScalarField f);
  static MetricChart general(Rect domain, ScalarField g11, ScalarField g12, ScalarField g22);

  ChartKind kind() const { return kind_; }
  const Rect& domain() const { return domain_; }
  bool analytic() const { return analytic_; }

  const ScalarField& f() const;  // semi_geodesic only
  const ScalarField& g11() const { return g11_; }
  const ScalarField& g12() const { return g12_; }
  const ScalarField& g22() const { return g22_; }

  // Orthonormal coordinate frame (X1, X2): X1 along du, X2 completed by
  // Gram-Schmidt; right-handed in chart orientation.
  const VecField& frame1() const { return x1_; }
  const VecField& frame2() const { return x2_; }

  // Christoffel symbol field, upper index k; analytic charts only.
  const ScalarField& gamma_field(int k, int i, int j) const;
  // Gaussian curvature as a field (analytic route on analytic charts,
  // finite-difference closure otherwise).
  const ScalarField& curvature_field() const { return curvature_; }

 private:
  MetricChart() = default;
  void finish();  // builds frames, gammas, curvature

  ChartKind kind_ = ChartKind::general;
  Rect domain_{};
  bool analytic_ = false;
  ScalarField f_;
  bool has_f_ = false;
  ScalarField g11_, g12_, g22_;
  VecField x1_, x2_;
  std::array<ScalarField, 6> gamma_;  // k=0:(uu,uv,vv), k=1:(uu,uv,vv)
  bool has_gamma_ = false;
  ScalarField curvature_;
};

using ChartPtr = std::shared_ptr<const MetricChart>;

// Domain checks. Throws PointOutOfDomain when p is outside the open
// rectangle, StepTooLarge when p is interior but closer than `margin` to the
// boundary or the configured steps are out of proportion to the domain.
void require_interior(const MetricChart& chart, const Point2& p, double margin = 0.0);
void require_step(const MetricChart& chart, const DiffConfig& cfg);

Mat2 metric_eval(const MetricChart& chart, const Point2& p);
std::pair<TangentVector, TangentVector> orthonormal_frame(const MetricChart& chart, const Point2& p);

double inner(const MetricChart& chart, const Point2& p, const TangentVector& x, const TangentVector& y);
double norm(const MetricChart& chart, const Point2& p, const TangentVector& x);

// Directional derivative X(phi) at p along the coordinate displacement of X.
double scalar_derivative(const MetricChart& chart, const TangentVector& X, const ScalarField& phi,
                         const Point2& p, const DiffConfig& cfg = {});

Christoffel2 christoffel(const MetricChart& chart, const Point2& p, const DiffConfig& cfg = {});

double gauss_curvature(const MetricChart& chart, const Point2& p, const DiffConfig& cfg = {});
// Always-finite-difference route, independent of any analytic chain.
double gauss_curvature_fd(const MetricChart& chart, const Point2& p, const DiffConfig& cfg = {});

// Levi-Civita derivative (nabla_X Y)(p) = X^i (d_i Y^k + Gamma^k_{im} Y^m) d_k.
TangentVector covariant_derivative(const MetricChart& chart, const TangentVector& X,
                                   const VecField& Y, const Point2& p, const DiffConfig& cfg = {});

// Curvature operator R(X,Y)Z with the sign convention
// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
// assembled from Christoffel symbols and their derivatives.
TangentVector riemann(const MetricChart& chart, const Point2& p, const TangentVector& X,
                      const TangentVector& Y, const TangentVector& Z, const DiffConfig& cfg = {});

// Two-dimensional shortcut K (<Y,Z> X - <X,Z> Y); used for cross-checks.
TangentVector riemann_gauss(const MetricChart& chart, const Point2& p, const TangentVector& X,
                            const TangentVector& Y, const TangentVector& Z,
                            const DiffConfig& cfg = {});

// (nabla_dir R)(A,B)C at p, by differentiating curvature components along
// coordinate directions with connection correction terms. A, B, C are taken
// as vectors at p extended with constant coordinate components.
TangentVector riemann_derivative(const MetricChart& chart, const Point2& p,
                                 const TangentVector& dir, const TangentVector& A,
                                 const TangentVector& B, const TangentVector& C,
                                 const DiffConfig& cfg = {});

// Gaussian curvature of the metric (E, F, G) given by point evaluations,
// using the Brioschi formula with central differences of step cfg.h2.
double brioschi_fd(const std::function<double(Point2)>& E, const std::function<double(Point2)>& F,
                   const std::function<double(Point2)>& G, const Point2& p, const DiffConfig& cfg);

// Field-level counterparts of the pointwise operations above. These build
// derivative chains once and evaluate anywhere; they require analytic inputs
// where a derivative is taken and throw Error otherwise.
ScalarField inner_field(const MetricChart& chart, const VecField& X, const VecField& Y);
ScalarField dir_derivative_field(const VecField& X, const ScalarField& phi);
VecField covariant_derivative_field(const MetricChart& chart, const VecField& X,
                                    const VecField& Y);

}  // namespace unitfield
