#include "unitfield/bundle.hpp"

#include <cmath>

#include "unitfield/errors.hpp"

namespace unitfield {

namespace {

void check_same_anchor(const BundleVector& x, const BundleVector& y) {
  const TangentVector& a = x.at.xi;
  const TangentVector& b = y.at.xi;
  if (a.base.u != b.base.u || a.base.v != b.base.v || a.a != b.a || a.b != b.b)
    throw BasePointMismatch("bundle vectors are anchored at different bundle points");
}

TangentVector zero_at(const Point2& p) { return {p, 0.0, 0.0}; }

}  // namespace

BundleVector lift_vector(const BundlePoint& at, Lift which, const TangentVector& x) {
  if (which == Lift::horizontal) return {at, x, zero_at(at.base())};
  return {at, zero_at(at.base()), x};
}

double sasaki_inner(const MetricChart& chart, const BundleVector& x, const BundleVector& y) {
  check_same_anchor(x, y);
  const Point2& p = x.at.base();
  return inner(chart, p, x.h, y.h) + inner(chart, p, x.v, y.v);
}

double sasaki_norm(const MetricChart& chart, const BundleVector& x) {
  return std::sqrt(std::max(0.0, sasaki_inner(chart, x, x)));
}

double unit_tangency_defect(const MetricChart& chart, const BundleVector& x) {
  return std::abs(inner(chart, x.at.base(), x.v, x.at.xi));
}

BundleVector sasaki_derivative(const MetricChart& chart, const BundlePoint& at, Lift lx,
                               const TangentVector& Xp, Lift ly, const VecField& Y,
                               const DiffConfig& cfg) {
  const Point2& p = at.base();
  require_interior(chart, p);
  const TangentVector& u = at.xi;
  TangentVector Yp = Y.at(p);
  BundleVector out{at, zero_at(p), zero_at(p)};
  if (lx == Lift::horizontal && ly == Lift::horizontal) {
    out.h = covariant_derivative(chart, Xp, Y, p, cfg);
    out.v = (-0.5) * riemann(chart, p, Xp, Yp, u, cfg);
  } else if (lx == Lift::horizontal && ly == Lift::vertical) {
    out.h = 0.5 * riemann(chart, p, u, Yp, Xp, cfg);
    out.v = covariant_derivative(chart, Xp, Y, p, cfg);
  } else if (lx == Lift::vertical && ly == Lift::horizontal) {
    out.h = 0.5 * riemann(chart, p, u, Xp, Yp, cfg);
  }
  return out;  // vertical-vertical: zero
}

double bundle_sectional(const MetricChart& chart, const BundleVector& X, const BundleVector& Y,
                        const SectionalOptions& opts, const DiffConfig& cfg) {
  check_same_anchor(X, Y);
  const Point2& p = X.at.base();
  require_interior(chart, p);

  double nx = sasaki_inner(chart, X, X), ny = sasaki_inner(chart, Y, Y);
  double xy = sasaki_inner(chart, X, Y);
  if (std::abs(nx - 1.0) > opts.input_tol || std::abs(ny - 1.0) > opts.input_tol ||
      std::abs(xy) > opts.input_tol)
    throw NonOrthonormalInput("sectional-curvature input pair is not orthonormal");
  if (unit_tangency_defect(chart, X) > opts.input_tol ||
      unit_tangency_defect(chart, Y) > opts.input_tol)
    throw NonOrthonormalInput("sectional-curvature input is not tangent to the unit bundle");

  const TangentVector &X1 = X.h, &X2 = X.v, &Y1 = Y.h, &Y2 = Y.v;
  const TangentVector& xi = X.at.xi;
  auto R = [&](const TangentVector& a, const TangentVector& b, const TangentVector& c) {
    return opts.use_gauss_identity ? riemann_gauss(chart, p, a, b, c, cfg)
                                   : riemann(chart, p, a, b, c, cfg);
  };
  auto dot = [&](const TangentVector& a, const TangentVector& b) { return inner(chart, p, a, b); };

  TangentVector r_hh = R(X1, Y1, Y1);
  TangentVector r_xi = R(X1, Y1, xi);
  TangentVector mixed = R(xi, Y2, X1) + R(xi, X2, Y1);

  double out = dot(r_hh, X1);
  out -= 0.75 * dot(r_xi, r_xi);
  out += 0.25 * dot(mixed, mixed);
  out += dot(X2, X2) * dot(Y2, Y2) - dot(X2, Y2) * dot(X2, Y2);
  out += 3.0 * dot(R(X1, Y1, Y2), X2);
  out -= dot(R(xi, X2, X1), R(xi, Y2, Y1));
  if (opts.include_curvature_gradient) {
    out += dot(riemann_derivative(chart, p, X1, xi, Y2, Y1, cfg), X1);
    out += dot(riemann_derivative(chart, p, Y1, xi, X2, X1, cfg), Y1);
  }
  return out;
}

BundleVector pushforward(const UnitVectorField& field, const TangentVector& Z,
                         const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  const Point2& p = Z.base;
  TangentVector grad = covariant_derivative(ch, Z, field.xi(), p, cfg);
  return {BundlePoint{field.xi().at(p)}, Z, grad};
}

Mat2 induced_metric(const UnitVectorField& field, const Point2& p, const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  BundleVector eu = pushforward(field, {p, 1.0, 0.0}, cfg);
  BundleVector ev = pushforward(field, {p, 0.0, 1.0}, cfg);
  double m01 = sasaki_inner(ch, eu, ev);
  return {sasaki_inner(ch, eu, eu), m01, m01, sasaki_inner(ch, ev, ev)};
}

std::array<ScalarField, 3> induced_metric_field(const UnitVectorField& field) {
  const MetricChart& ch = field.chart();
  // nabla_{d_i} xi = w(d_i) eta, so the correction is w(d_i) w(d_j) with the
  // coordinate components of the gradient form: d_u = sqrt(g11) X1 and
  // d_v = (g12/sqrt(g11)) X1 + sqrt(det g / g11) X2.
  ScalarField s11 = sqrt(ch.g11());
  ScalarField det = ch.g11() * ch.g22() - ch.g12() * ch.g12();
  ScalarField wu = s11 * field.w1();
  ScalarField wv = (ch.g12() / s11) * field.w1() + sqrt(det / ch.g11()) * field.w2();
  return {ch.g11() + wu * wu, ch.g12() + wu * wv, ch.g22() + wv * wv};
}

double pullback_gauss_curvature(const UnitVectorField& field, const Point2& p,
                                const DiffConfig& cfg) {
  const MetricChart& ch = field.chart();
  double reach = 2.0 * std::max(cfg.h, cfg.h2);
  if (!(cfg.use_analytic && field.analytic())) reach += cfg.h;
  require_interior(ch, p, reach);
  auto comp = [&field, &cfg](int c) {
    return std::function<double(Point2)>([&field, &cfg, c](Point2 q) {
      Mat2 m = induced_metric(field, q, cfg);
      return c == 0 ? m.m00 : (c == 1 ? m.m01 : m.m11);
    });
  };
  return brioschi_fd(comp(0), comp(1), comp(2), p, cfg);
}

ImageFrame image_tangent_frame(const UnitVectorField& field, const Point2& p,
                               const DiffConfig& cfg) {
  SingularFrame fr = singular_frame(field, p, cfg);
  BundlePoint at{field.xi().at(p)};
  double r = std::sqrt(1.0 + fr.lambda * fr.lambda);
  ImageFrame out;
  out.at = at;
  out.base = fr;
  out.t0 = {at, fr.e0, zero_at(p)};
  out.t1 = {at, (1.0 / r) * fr.e1, (fr.lambda / r) * fr.eta};
  out.normal = {at, (-fr.lambda / r) * fr.e1, (1.0 / r) * fr.eta};
  return out;
}

std::array<std::array<double, 3>, 3> bundle_coordinate_gram(const MetricChart& chart,
                                                            const Point2& p, double theta,
                                                            const DiffConfig& cfg) {
  require_interior(chart, p);
  const VecField& X1 = chart.frame1();
  const VecField& X2 = chart.frame2();
  double co = std::cos(theta), si = std::sin(theta);
  VecField Z{co * X1.a + si * X2.a, co * X1.b + si * X2.b};
  TangentVector du{p, 1.0, 0.0}, dv{p, 0.0, 1.0};
  // Vertical parts of the coordinate basis: the connection applied to the
  // constant-angle section for d_u, d_v, and the fiber turn for d_theta.
  TangentVector vu = covariant_derivative(chart, du, Z, p, cfg);
  TangentVector vv = covariant_derivative(chart, dv, Z, p, cfg);
  TangentVector vt{p, co * X2.a(p) - si * X1.a(p), co * X2.b(p) - si * X1.b(p)};

  TangentVector h[3] = {du, dv, zero_at(p)};
  TangentVector v[3] = {vu, vv, vt};
  std::array<std::array<double, 3>, 3> g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      g[i][j] = inner(chart, p, h[i], h[j]) + inner(chart, p, v[i], v[j]);
  return g;
}

}  // namespace unitfield
