#pragma once

#include <memory>

#include "unitfield/metric.hpp"

namespace unitfield {

// A unit tangent vector field xi on a chart, given by its angle field omega
// against the orthonormal chart frame:
//
//   xi  = cos(omega) X1 + sin(omega) X2,    eta = J xi  (quarter turn left).
//
// Because |xi| = 1, the image of its covariant differential lies on the eta
// line, so the differential is eta (x) w for a 1-form w. The class carries
// the frame components w1 = <nabla_{X1} xi, eta>, w2 = <nabla_{X2} xi, eta>,
// the gradient norm lambda = |w|, and the adapted frame
//
//   e1 = (w1 X1 + w2 X2)/lambda   (nabla_{e1} xi = lambda eta),
//   e0 = (w2 X1 - w1 X2)/lambda   (nabla_{e0} xi = 0,  J e0 = e1),
//
// all as fields. With analytic chart and angle the fields carry exact
// derivative chains; otherwise they are finite-difference closures using the
// config passed at construction.
class UnitVectorField {
 public:
  UnitVectorField(ChartPtr chart, ScalarField omega, DiffConfig cfg = {});

  const MetricChart& chart() const { return *chart_; }
  const ChartPtr& chart_ptr() const { return chart_; }
  const ScalarField& omega() const { return omega_; }
  bool analytic() const { return analytic_; }
  const DiffConfig& config() const { return cfg_; }

  const VecField& xi() const { return xi_; }
  const VecField& eta() const { return eta_; }
  const ScalarField& w1() const { return w1_; }
  const ScalarField& w2() const { return w2_; }
  const ScalarField& lambda_field() const { return lambda_; }
  const VecField& e0_field() const { return e0_; }
  const VecField& e1_field() const { return e1_; }
  // lambda / sqrt(1 + lambda^2) and 1 / (1 + lambda^2); these ratios recur in
  // every curvature expression, so they are built once.
  const ScalarField& slope_field() const { return slope_; }
  const ScalarField& inv_one_plus_field() const { return inv1p_; }

 private:
  ChartPtr chart_;
  ScalarField omega_;
  DiffConfig cfg_;
  bool analytic_ = false;
  VecField xi_, eta_, e0_, e1_;
  ScalarField w1_, w2_, lambda_, slope_, inv1p_;
};

// Frame adapted to the gradient of the field at one point. When
// lambda < cfg.degenerate_eps the gradient direction is undefined; the chart
// frame is substituted and `degenerate` is set. `s` records the orientation
// of (e0, e1) against the chart frame: 1 when J e0 = e1 (always, with the
// construction above), 0 for the mirrored frame.
struct SingularFrame {
  TangentVector e0, e1, eta;
  double lambda = 0.0;
  int s = 1;
  bool degenerate = false;
};

inline double orientation_sign(int s) { return s % 2 == 0 ? 1.0 : -1.0; }  // (-1)^s

SingularFrame singular_frame(const UnitVectorField& field, const Point2& p,
                             const DiffConfig& cfg = {});

// Matrix of the covariant differential in the orthonormal chart frame:
// A[i][j] = <nabla_{Xj} xi, Xi>. Computed from the coordinate components of
// xi, independent of the w-form route above; rank <= 1 with top singular
// value lambda.
Mat2 nabla_xi(const UnitVectorField& field, const Point2& p, const DiffConfig& cfg = {});

// Connection scalars of the field frames at a point:
//   k     = <nabla_xi  xi,  eta>   (turning of the integral curves)
//   kappa = <nabla_eta eta, xi>
//   mu    = <nabla_{e0} e0, e1>
//   sigma = <nabla_{e1} e1, e0>
struct FrameCurvatures {
  double k = 0.0, kappa = 0.0, mu = 0.0, sigma = 0.0;
};

FrameCurvatures frame_curvatures(const UnitVectorField& field, const Point2& p,
                                 const DiffConfig& cfg = {});

// Residuals of the structural identities tying the frame scalars together;
// all vanish for exact arithmetic on a smooth unit field.
struct FrameIdentityResiduals {
  double unit_norm = 0.0;       // <xi,xi> - 1
  double orthogonality = 0.0;   // <xi,eta>
  double annihilated = 0.0;     // |nabla_{e0} xi|
  double gradient_line = 0.0;   // |nabla_{e1} xi - lambda eta|
  double gradient_norm = 0.0;   // lambda^2 - (k^2 + kappa^2)
  double curvature_link = 0.0;  // (-1)^s K - (e0(lambda) - lambda sigma)
  double max_abs() const;
};

FrameIdentityResiduals frame_identity_residuals(const UnitVectorField& field, const Point2& p,
                                                const DiffConfig& cfg = {});

// The field q -> nabla_{Y(q)} xi, built by differentiating the coordinate
// components of xi directly (not through the w-form carried by `field`).
VecField gradient_field_along(const UnitVectorField& field, const VecField& Y,
                              const DiffConfig& cfg = {});

}  // namespace unitfield
