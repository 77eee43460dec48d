#include "unitfield/frame.hpp"

#include <cmath>

#include "unitfield/errors.hpp"

namespace unitfield {

UnitVectorField::UnitVectorField(ChartPtr chart, ScalarField omega, DiffConfig cfg)
    : chart_(std::move(chart)), omega_(std::move(omega)), cfg_(cfg) {
  if (!chart_) throw BadParams("unit field needs a chart");
  const MetricChart& ch = *chart_;
  const VecField& X1 = ch.frame1();
  const VecField& X2 = ch.frame2();
  ScalarField co = cos(omega_), si = sin(omega_);
  xi_ = {co * X1.a + si * X2.a, co * X1.b + si * X2.b};
  eta_ = {co * X2.a - si * X1.a, co * X2.b - si * X1.b};

  analytic_ = ch.analytic() && omega_.differentiable();
  if (analytic_) {
    // w_j = Xj(omega) + <nabla_{Xj} X1, X2>; the connection scalar absorbs
    // all chart dependence, the angle enters only through its derivative.
    ScalarField c1 = inner_field(ch, covariant_derivative_field(ch, X1, X1), X2);
    ScalarField c2 = inner_field(ch, covariant_derivative_field(ch, X2, X1), X2);
    w1_ = dir_derivative_field(X1, omega_) + c1;
    w2_ = dir_derivative_field(X2, omega_) + c2;
  } else {
    ChartPtr cp = chart_;
    VecField xi = xi_;
    VecField eta = eta_;
    DiffConfig fc = cfg_;
    auto w_closure = [cp, xi, eta, fc](int j) {
      return ScalarField::numeric([cp, xi, eta, fc, j](double u, double v) {
        Point2 p{u, v};
        auto [x1, x2] = orthonormal_frame(*cp, p);
        TangentVector d = covariant_derivative(*cp, j == 0 ? x1 : x2, xi, p, fc);
        return inner(*cp, p, d, eta.at(p));
      });
    };
    w1_ = w_closure(0);
    w2_ = w_closure(1);
  }

  lambda_ = sqrt(w1_ * w1_ + w2_ * w2_);
  e1_ = {(w1_ * X1.a + w2_ * X2.a) / lambda_, (w1_ * X1.b + w2_ * X2.b) / lambda_};
  e0_ = {(w2_ * X1.a - w1_ * X2.a) / lambda_, (w2_ * X1.b - w1_ * X2.b) / lambda_};
  slope_ = lambda_ / sqrt(1.0 + lambda_ * lambda_);
  inv1p_ = 1.0 / (1.0 + lambda_ * lambda_);
}

SingularFrame singular_frame(const UnitVectorField& field, const Point2& p,
                             const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  require_interior(ch, p);
  SingularFrame out;
  out.eta = field.eta().at(p);
  double W1 = field.w1()(p), W2 = field.w2()(p);
  out.lambda = std::hypot(W1, W2);
  if (out.lambda < cfg.degenerate_eps) {
    auto [x1, x2] = orthonormal_frame(ch, p);
    out.e0 = x1;
    out.e1 = x2;
    out.degenerate = true;
    out.s = 1;
    return out;
  }
  auto [x1, x2] = orthonormal_frame(ch, p);
  double a1 = W1 / out.lambda, a2 = W2 / out.lambda;
  out.e1 = {p, a1 * x1.a + a2 * x2.a, a1 * x1.b + a2 * x2.b};
  out.e0 = {p, a2 * x1.a - a1 * x2.a, a2 * x1.b - a1 * x2.b};
  // Orientation of (e0, e1) against the chart orientation; the construction
  // above always lands on s = 1, but downstream formulas only assume s is
  // reported honestly, so measure it.
  double d = out.e0.a * out.e1.b - out.e0.b * out.e1.a;
  out.s = d > 0.0 ? 1 : 0;
  return out;
}

Mat2 nabla_xi(const UnitVectorField& field, const Point2& p, const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  auto [x1, x2] = orthonormal_frame(ch, p);
  TangentVector d1 = covariant_derivative(ch, x1, field.xi(), p, cfg);
  TangentVector d2 = covariant_derivative(ch, x2, field.xi(), p, cfg);
  return {inner(ch, p, d1, x1), inner(ch, p, d2, x1),
          inner(ch, p, d1, x2), inner(ch, p, d2, x2)};
}

FrameCurvatures frame_curvatures(const UnitVectorField& field, const Point2& p,
                                 const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  SingularFrame fr = singular_frame(field, p, cfg);
  TangentVector xi = field.xi().at(p);
  FrameCurvatures out;
  out.k = inner(ch, p, covariant_derivative(ch, xi, field.xi(), p, cfg), fr.eta);
  out.kappa = inner(ch, p, covariant_derivative(ch, fr.eta, field.eta(), p, cfg), xi);
  const VecField& E0 = fr.degenerate ? ch.frame1() : field.e0_field();
  const VecField& E1 = fr.degenerate ? ch.frame2() : field.e1_field();
  out.mu = inner(ch, p, covariant_derivative(ch, fr.e0, E0, p, cfg), fr.e1);
  out.sigma = inner(ch, p, covariant_derivative(ch, fr.e1, E1, p, cfg), fr.e0);
  return out;
}

double FrameIdentityResiduals::max_abs() const {
  double m = std::abs(unit_norm);
  m = std::max(m, std::abs(orthogonality));
  m = std::max(m, std::abs(annihilated));
  m = std::max(m, std::abs(gradient_line));
  m = std::max(m, std::abs(gradient_norm));
  return std::max(m, std::abs(curvature_link));
}

VecField gradient_field_along(const UnitVectorField& field, const VecField& Y,
                              const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  if (cfg.use_analytic && ch.analytic() && field.xi().differentiable() && Y.differentiable())
    return covariant_derivative_field(ch, Y, field.xi());
  ChartPtr cp = field.chart_ptr();
  VecField xi = field.xi();
  VecField Yc = Y;
  DiffConfig fc = cfg;
  auto comp = [cp, xi, Yc, fc](int c) {
    return ScalarField::numeric([cp, xi, Yc, fc, c](double u, double v) {
      Point2 p{u, v};
      TangentVector d = covariant_derivative(*cp, Yc.at(p), xi, p, fc);
      return c == 0 ? d.a : d.b;
    });
  };
  return {comp(0), comp(1)};
}

FrameIdentityResiduals frame_identity_residuals(const UnitVectorField& field, const Point2& p,
                                                const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  SingularFrame fr = singular_frame(field, p, cfg);
  FrameCurvatures fc = frame_curvatures(field, p, cfg);
  TangentVector xi = field.xi().at(p);
  FrameIdentityResiduals out;
  out.unit_norm = inner(ch, p, xi, xi) - 1.0;
  out.orthogonality = inner(ch, p, xi, fr.eta);
  out.annihilated = norm(ch, p, covariant_derivative(ch, fr.e0, field.xi(), p, cfg));
  TangentVector d1 = covariant_derivative(ch, fr.e1, field.xi(), p, cfg);
  out.gradient_line = norm(ch, p, d1 - fr.lambda * fr.eta);
  out.gradient_norm = fr.lambda * fr.lambda - (fc.k * fc.k + fc.kappa * fc.kappa);
  double K = gauss_curvature(ch, p, cfg);
  double e0l =
      fr.degenerate ? 0.0 : scalar_derivative(ch, fr.e0, field.lambda_field(), p, cfg);
  out.curvature_link = orientation_sign(fr.s) * K - (e0l - fr.lambda * fc.sigma);
  return out;
}

}  // namespace unitfield
