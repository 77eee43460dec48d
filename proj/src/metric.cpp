#include "unitfield/metric.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "unitfield/errors.hpp"

namespace unitfield {

namespace {

std::string point_str(const Point2& p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.6g, %.6g)", p.u, p.v);
  return buf;
}

// Central difference of g at offset 0; g(s) evaluates at displacement s.
double fd1(const std::function<double(double)>& g, double h, bool richardson) {
  auto d = [&](double s) { return (g(s) - g(-s)) / (2.0 * s); };
  if (!richardson) return d(h);
  return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

double det3(double a, double b, double c, double d, double e, double f, double g, double h,
            double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

ScalarField det3f(const ScalarField& a, const ScalarField& b, const ScalarField& c,
                  const ScalarField& d, const ScalarField& e, const ScalarField& f,
                  const ScalarField& g, const ScalarField& h, const ScalarField& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

Christoffel2 christoffel_fd(const MetricChart& chart, const Point2& p, const DiffConfig& cfg) {
  const ScalarField* gs[3] = {&chart.g11(), &chart.g12(), &chart.g22()};
  double g0[3], dgc[2][3];
  for (int c = 0; c < 3; ++c) {
    g0[c] = (*gs[c])(p);
    dgc[0][c] = fd1([&](double s) { return (*gs[c])(p.u + s, p.v); }, cfg.h, cfg.richardson);
    dgc[1][c] = fd1([&](double s) { return (*gs[c])(p.u, p.v + s); }, cfg.h, cfg.richardson);
  }
  double g[2][2] = {{g0[0], g0[1]}, {g0[1], g0[2]}};
  double dg[2][2][2];
  for (int i = 0; i < 2; ++i) {
    dg[i][0][0] = dgc[i][0];
    dg[i][0][1] = dg[i][1][0] = dgc[i][1];
    dg[i][1][1] = dgc[i][2];
  }
  double det = g[0][0] * g[1][1] - g[0][1] * g[0][1];
  double ginv[2][2] = {{g[1][1] / det, -g[0][1] / det}, {-g[0][1] / det, g[0][0] / det}};
  Christoffel2 out;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0.0;
        for (int m = 0; m < 2; ++m) s += ginv[k][m] * (dg[i][m][j] + dg[j][m][i] - dg[m][i][j]);
        out.g[k][i][j] = 0.5 * s;
      }
  return out;
}

}  // namespace

MetricChart MetricChart::semi_geodesic(Rect domain, ScalarField f) {
  if (!(domain.u1 > domain.u0) || !(domain.v1 > domain.v0))
    throw BadParams("chart domain rectangle is empty");
  MetricChart c;
  c.kind_ = ChartKind::semi_geodesic;
  c.domain_ = domain;
  c.f_ = f;
  c.has_f_ = true;
  c.g11_ = ScalarField::constant(1.0);
  c.g12_ = ScalarField::constant(0.0);
  c.g22_ = f * f;
  c.finish();
  return c;
}

MetricChart MetricChart::general(Rect domain, ScalarField g11, ScalarField g12, ScalarField g22) {
  if (!(domain.u1 > domain.u0) || !(domain.v1 > domain.v0))
    throw BadParams("chart domain rectangle is empty");
  MetricChart c;
  c.kind_ = ChartKind::general;
  c.domain_ = domain;
  c.g11_ = g11;
  c.g12_ = g12;
  c.g22_ = g22;
  c.finish();
  return c;
}

void MetricChart::finish() {
  analytic_ = g11_.differentiable() && g12_.differentiable() && g22_.differentiable();

  if (kind_ == ChartKind::semi_geodesic) {
    x1_ = {ScalarField::constant(1.0), ScalarField::constant(0.0)};
    x2_ = {ScalarField::constant(0.0), 1.0 / f_};
  } else {
    ScalarField det = g11_ * g22_ - g12_ * g12_;
    ScalarField s2 = sqrt(g11_ * det);
    x1_ = {1.0 / sqrt(g11_), ScalarField::constant(0.0)};
    x2_ = {(-g12_) / s2, g11_ / s2};
  }

  if (analytic_) {
    has_gamma_ = true;
    ScalarField zero = ScalarField::constant(0.0);
    if (kind_ == ChartKind::semi_geodesic) {
      ScalarField fu = f_.du(), fv = f_.dv();
      gamma_[0] = zero;            // u: uu
      gamma_[1] = zero;            // u: uv
      gamma_[2] = -(f_ * fu);      // u: vv
      gamma_[3] = zero;            // v: uu
      gamma_[4] = fu / f_;         // v: uv
      gamma_[5] = fv / f_;         // v: vv
      curvature_ = -(fu.du()) / f_;
    } else {
      ScalarField det = g11_ * g22_ - g12_ * g12_;
      ScalarField ginv[2][2] = {{g22_ / det, -g12_ / det}, {-g12_ / det, g11_ / det}};
      ScalarField dg[2][2][2];
      dg[0][0][0] = g11_.du();
      dg[0][0][1] = dg[0][1][0] = g12_.du();
      dg[0][1][1] = g22_.du();
      dg[1][0][0] = g11_.dv();
      dg[1][0][1] = dg[1][1][0] = g12_.dv();
      dg[1][1][1] = g22_.dv();
      for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
          for (int j = i; j < 2; ++j) {
            ScalarField s = zero;
            for (int m = 0; m < 2; ++m)
              s = s + ginv[k][m] * (dg[i][m][j] + dg[j][m][i] - dg[m][i][j]);
            gamma_[k * 3 + i + j] = 0.5 * s;
          }
      ScalarField E = g11_, F = g12_, G = g22_;
      ScalarField Eu = E.du(), Ev = E.dv(), Fu = F.du(), Fv = F.dv(), Gu = G.du(), Gv = G.dv();
      ScalarField m1 = det3f(-0.5 * Ev.dv() + Fu.dv() - 0.5 * Gu.du(), 0.5 * Eu, Fu - 0.5 * Ev,
                             Fv - 0.5 * Gu, E, F,
                             0.5 * Gv, F, G);
      ScalarField m2 = det3f(zero, 0.5 * Ev, 0.5 * Gu,
                             0.5 * Ev, E, F,
                             0.5 * Gu, F, G);
      curvature_ = (m1 - m2) / (det * det);
    }
  } else {
    has_gamma_ = false;
    ScalarField E = g11_, F = g12_, G = g22_;
    DiffConfig dc;
    curvature_ = ScalarField::numeric([E, F, G, dc](double u, double v) {
      return brioschi_fd([&E](Point2 q) { return E(q); }, [&F](Point2 q) { return F(q); },
                         [&G](Point2 q) { return G(q); }, Point2{u, v}, dc);
    });
  }
}

const ScalarField& MetricChart::f() const {
  if (!has_f_) throw Error("chart carries no profile function (general coefficients)");
  return f_;
}

const ScalarField& MetricChart::gamma_field(int k, int i, int j) const {
  if (!has_gamma_) throw Error("chart carries no analytic connection coefficients");
  return gamma_[k * 3 + i + j];
}

void require_interior(const MetricChart& chart, const Point2& p, double margin) {
  if (!chart.domain().contains(p))
    throw PointOutOfDomain("point " + point_str(p) + " lies outside the chart domain");
  if (margin > 0.0 && chart.domain().margin(p) <= margin)
    throw StepTooLarge("point " + point_str(p) +
                       " is closer to the domain boundary than the stencil reach");
}

void require_step(const MetricChart& chart, const DiffConfig& cfg) {
  if (!(cfg.h > 0.0) || !(cfg.h2 > 0.0)) throw StepTooLarge("difference steps must be positive");
  double lim = 0.01 * chart.domain().min_extent();
  if (cfg.h > lim || cfg.h2 > lim)
    throw StepTooLarge("difference step exceeds 1% of the chart extent");
}

Mat2 metric_eval(const MetricChart& chart, const Point2& p) {
  require_interior(chart, p);
  double f12 = chart.g12()(p);
  return {chart.g11()(p), f12, f12, chart.g22()(p)};
}

std::pair<TangentVector, TangentVector> orthonormal_frame(const MetricChart& chart,
                                                          const Point2& p) {
  require_interior(chart, p);
  return {chart.frame1().at(p), chart.frame2().at(p)};
}

double inner(const MetricChart& chart, const Point2& p, const TangentVector& x,
             const TangentVector& y) {
  Mat2 g = metric_eval(chart, p);
  return g.m00 * x.a * y.a + g.m01 * (x.a * y.b + x.b * y.a) + g.m11 * x.b * y.b;
}

double norm(const MetricChart& chart, const Point2& p, const TangentVector& x) {
  return std::sqrt(std::max(0.0, inner(chart, p, x, x)));
}

double scalar_derivative(const MetricChart& chart, const TangentVector& X, const ScalarField& phi,
                         const Point2& p, const DiffConfig& cfg) {
  require_interior(chart, p);
  if (cfg.use_analytic && phi.differentiable()) return phi.du()(p) * X.a + phi.dv()(p) * X.b;
  require_interior(chart, p, cfg.h);
  double pu = fd1([&](double s) { return phi(p.u + s, p.v); }, cfg.h, cfg.richardson);
  double pv = fd1([&](double s) { return phi(p.u, p.v + s); }, cfg.h, cfg.richardson);
  return pu * X.a + pv * X.b;
}

Christoffel2 christoffel(const MetricChart& chart, const Point2& p, const DiffConfig& cfg) {
  require_interior(chart, p);
  if (cfg.use_analytic && chart.analytic()) {
    Christoffel2 out;
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.g[k][i][j] = chart.gamma_field(k, i, j)(p);
    return out;
  }
  require_interior(chart, p, cfg.h);
  return christoffel_fd(chart, p, cfg);
}

double gauss_curvature(const MetricChart& chart, const Point2& p, const DiffConfig& cfg) {
  require_interior(chart, p);
  if (cfg.use_analytic && chart.analytic()) return chart.curvature_field()(p);
  return gauss_curvature_fd(chart, p, cfg);
}

double gauss_curvature_fd(const MetricChart& chart, const Point2& p, const DiffConfig& cfg) {
  require_interior(chart, p, 2.0 * std::max(cfg.h, cfg.h2));
  auto E = [&chart](Point2 q) { return chart.g11()(q); };
  auto F = [&chart](Point2 q) { return chart.g12()(q); };
  auto G = [&chart](Point2 q) { return chart.g22()(q); };
  return brioschi_fd(E, F, G, p, cfg);
}

TangentVector covariant_derivative(const MetricChart& chart, const TangentVector& X,
                                   const VecField& Y, const Point2& p, const DiffConfig& cfg) {
  require_interior(chart, p);
  double dY[2][2];  // dY[i][k] = d_i Y^k
  if (cfg.use_analytic && Y.differentiable()) {
    dY[0][0] = Y.a.du()(p);
    dY[0][1] = Y.b.du()(p);
    dY[1][0] = Y.a.dv()(p);
    dY[1][1] = Y.b.dv()(p);
  } else {
    require_interior(chart, p, cfg.h);
    dY[0][0] = fd1([&](double s) { return Y.a(p.u + s, p.v); }, cfg.h, cfg.richardson);
    dY[0][1] = fd1([&](double s) { return Y.b(p.u + s, p.v); }, cfg.h, cfg.richardson);
    dY[1][0] = fd1([&](double s) { return Y.a(p.u, p.v + s); }, cfg.h, cfg.richardson);
    dY[1][1] = fd1([&](double s) { return Y.b(p.u, p.v + s); }, cfg.h, cfg.richardson);
  }
  Christoffel2 G = christoffel(chart, p, cfg);
  double Yu = Y.a(p), Yv = Y.b(p);
  double outa = X.a * dY[0][0] + X.b * dY[1][0] +
                X.a * (G.g[0][0][0] * Yu + G.g[0][0][1] * Yv) +
                X.b * (G.g[0][1][0] * Yu + G.g[0][1][1] * Yv);
  double outb = X.a * dY[0][1] + X.b * dY[1][1] +
                X.a * (G.g[1][0][0] * Yu + G.g[1][0][1] * Yv) +
                X.b * (G.g[1][1][0] * Yu + G.g[1][1][1] * Yv);
  return {p, outa, outb};
}

TangentVector riemann(const MetricChart& chart, const Point2& p, const TangentVector& X,
                      const TangentVector& Y, const TangentVector& Z, const DiffConfig& cfg) {
  require_interior(chart, p);
  double G[2][2][2];
  double dG[2][2][2][2];  // dG[i][k][a][b] = d_i Gamma^k_{ab}
  if (cfg.use_analytic && chart.analytic()) {
    for (int k = 0; k < 2; ++k)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const ScalarField& gf = chart.gamma_field(k, a, b);
          G[k][a][b] = gf(p);
          dG[0][k][a][b] = gf.du()(p);
          dG[1][k][a][b] = gf.dv()(p);
        }
  } else {
    require_interior(chart, p, 2.0 * cfg.h);
    Christoffel2 c0 = christoffel_fd(chart, p, cfg);
    Christoffel2 cup = christoffel_fd(chart, {p.u + cfg.h, p.v}, cfg);
    Christoffel2 cum = christoffel_fd(chart, {p.u - cfg.h, p.v}, cfg);
    Christoffel2 cvp = christoffel_fd(chart, {p.u, p.v + cfg.h}, cfg);
    Christoffel2 cvm = christoffel_fd(chart, {p.u, p.v - cfg.h}, cfg);
    for (int k = 0; k < 2; ++k)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          G[k][a][b] = c0.g[k][a][b];
          dG[0][k][a][b] = (cup.g[k][a][b] - cum.g[k][a][b]) / (2.0 * cfg.h);
          dG[1][k][a][b] = (cvp.g[k][a][b] - cvm.g[k][a][b]) / (2.0 * cfg.h);
        }
  }
  // R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
  //           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}
  double Xc[2] = {X.a, X.b}, Yc[2] = {Y.a, Y.b}, Zc[2] = {Z.a, Z.b};
  double out[2] = {0.0, 0.0};
  for (int l = 0; l < 2; ++l)
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double r = dG[i][l][j][k] - dG[j][l][i][k];
          for (int m = 0; m < 2; ++m) r += G[l][i][m] * G[m][j][k] - G[l][j][m] * G[m][i][k];
          out[l] += r * Xc[i] * Yc[j] * Zc[k];
        }
  return {p, out[0], out[1]};
}

TangentVector riemann_gauss(const MetricChart& chart, const Point2& p, const TangentVector& X,
                            const TangentVector& Y, const TangentVector& Z,
                            const DiffConfig& cfg) {
  double K = gauss_curvature(chart, p, cfg);
  double yz = inner(chart, p, Y, Z), xz = inner(chart, p, X, Z);
  return {p, K * (yz * X.a - xz * Y.a), K * (yz * X.b - xz * Y.b)};
}

TangentVector riemann_derivative(const MetricChart& chart, const Point2& p,
                                 const TangentVector& dir, const TangentVector& A,
                                 const TangentVector& B, const TangentVector& C,
                                 const DiffConfig& cfg) {
  bool analytic = cfg.use_analytic && chart.analytic();
  require_interior(chart, p, (analytic ? 1.0 : 3.0) * std::max(cfg.h, cfg.h2));

  // W(q) = R_q(A, B)C with the arguments extended by constant components.
  auto W = [&](const Point2& q) {
    return riemann(chart, q, {q, A.a, A.b}, {q, B.a, B.b}, {q, C.a, C.b}, cfg);
  };
  auto dW = [&](int i, int comp) {
    auto g = [&](double s) {
      Point2 q = i == 0 ? Point2{p.u + s, p.v} : Point2{p.u, p.v + s};
      TangentVector w = W(q);
      return comp == 0 ? w.a : w.b;
    };
    return fd1(g, cfg.h, cfg.richardson);
  };

  Christoffel2 G = christoffel(chart, p, cfg);
  auto nabla_const = [&](const TangentVector& V) {
    // nabla_dir of the constant-component extension of V.
    return TangentVector{
        p,
        dir.a * (G.g[0][0][0] * V.a + G.g[0][0][1] * V.b) +
            dir.b * (G.g[0][1][0] * V.a + G.g[0][1][1] * V.b),
        dir.a * (G.g[1][0][0] * V.a + G.g[1][0][1] * V.b) +
            dir.b * (G.g[1][1][0] * V.a + G.g[1][1][1] * V.b)};
  };

  TangentVector W0 = W(p);
  TangentVector nablaW = nabla_const(W0);
  nablaW.a += dir.a * dW(0, 0) + dir.b * dW(1, 0);
  nablaW.b += dir.a * dW(0, 1) + dir.b * dW(1, 1);

  TangentVector rA = riemann(chart, p, nabla_const(A), B, C, cfg);
  TangentVector rB = riemann(chart, p, A, nabla_const(B), C, cfg);
  TangentVector rC = riemann(chart, p, A, B, nabla_const(C), cfg);
  return {p, nablaW.a - rA.a - rB.a - rC.a, nablaW.b - rA.b - rB.b - rC.b};
}

ScalarField inner_field(const MetricChart& chart, const VecField& X, const VecField& Y) {
  return chart.g11() * (X.a * Y.a) + chart.g12() * (X.a * Y.b + X.b * Y.a) +
         chart.g22() * (X.b * Y.b);
}

ScalarField dir_derivative_field(const VecField& X, const ScalarField& phi) {
  return X.a * phi.du() + X.b * phi.dv();
}

VecField covariant_derivative_field(const MetricChart& chart, const VecField& X,
                                    const VecField& Y) {
  if (!chart.analytic() || !Y.differentiable())
    throw Error("field-level covariant derivative needs analytic inputs");
  const ScalarField* Yc[2] = {&Y.a, &Y.b};
  ScalarField out[2];
  for (int k = 0; k < 2; ++k) {
    ScalarField s = X.a * Yc[k]->du() + X.b * Yc[k]->dv();
    for (int m = 0; m < 2; ++m) {
      s = s + X.a * (chart.gamma_field(k, 0, m) * (*Yc[m])) +
          X.b * (chart.gamma_field(k, 1, m) * (*Yc[m]));
    }
    out[k] = s;
  }
  return {out[0], out[1]};
}

double brioschi_fd(const std::function<double(Point2)>& E, const std::function<double(Point2)>& F,
                   const std::function<double(Point2)>& G, const Point2& p,
                   const DiffConfig& cfg) {
  const double h = cfg.h, h2 = cfg.h2;
  auto d_u = [&](const std::function<double(Point2)>& f) {
    return (f({p.u + h, p.v}) - f({p.u - h, p.v})) / (2.0 * h);
  };
  auto d_v = [&](const std::function<double(Point2)>& f) {
    return (f({p.u, p.v + h}) - f({p.u, p.v - h})) / (2.0 * h);
  };
  auto d_uu = [&](const std::function<double(Point2)>& f) {
    return (f({p.u + h2, p.v}) - 2.0 * f(p) + f({p.u - h2, p.v})) / (h2 * h2);
  };
  auto d_vv = [&](const std::function<double(Point2)>& f) {
    return (f({p.u, p.v + h2}) - 2.0 * f(p) + f({p.u, p.v - h2})) / (h2 * h2);
  };
  auto d_uv = [&](const std::function<double(Point2)>& f) {
    return (f({p.u + h2, p.v + h2}) - f({p.u + h2, p.v - h2}) - f({p.u - h2, p.v + h2}) +
            f({p.u - h2, p.v - h2})) /
           (4.0 * h2 * h2);
  };
  double e = E(p), f0 = F(p), g = G(p);
  double Eu = d_u(E), Ev = d_v(E), Fu = d_u(F), Fv = d_v(F), Gu = d_u(G), Gv = d_v(G);
  double m1 = det3(-0.5 * d_vv(E) + d_uv(F) - 0.5 * d_uu(G), 0.5 * Eu, Fu - 0.5 * Ev,
                   Fv - 0.5 * Gu, e, f0,
                   0.5 * Gv, f0, g);
  double m2 = det3(0.0, 0.5 * Ev, 0.5 * Gu,
                   0.5 * Ev, e, f0,
                   0.5 * Gu, f0, g);
  double den = e * g - f0 * f0;
  return (m1 - m2) / (den * den);
}

}  // namespace unitfield
