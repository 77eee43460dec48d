#include "unitfield/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unitfield/errors.hpp"

namespace unitfield {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CurvatureReport failed_row(const Point2& p) {
  CurvatureReport r;
  r.p = p;
  r.K = r.lambda = r.k = r.kappa = r.mu = r.sigma = kNaN;
  r.omega = Mat2{kNaN, kNaN, kNaN, kNaN};
  r.k_t1m = r.det_omega = r.k_xi = r.k_xi_oracle = kNaN;
  r.resid_forms = r.resid_oracle = r.resid_identity = kNaN;
  r.resid_gradient_norm = r.resid_curvature_link = kNaN;
  return r;
}

CurvatureReport report_at(const UnitVectorField& field, const Point2& p,
                          const ReportOptions& opts) {
  try {
    return compute_report(field, p, opts);
  } catch (const Error&) {
    return failed_row(p);
  }
}

void accumulate(Stat& s, double x) {
  if (!std::isfinite(x)) return;
  if (s.count == 0) {
    s.min = s.max = x;
    s.mean = 0.0;
  }
  s.min = std::min(s.min, x);
  s.max = std::max(s.max, x);
  s.mean += x;
  ++s.count;
}

}  // namespace

std::vector<Point2> grid_points(const Rect& window, int nu, int nv) {
  if (nu < 2 || nv < 2) throw BadParams("grid resolution must be at least 2x2");
  if (!(window.u0 < window.u1) || !(window.v0 < window.v1))
    throw BadParams("grid window is empty or inverted");
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(nu) * nv);
  for (int i = 0; i < nu; ++i) {
    double u = window.u0 + i * (window.u1 - window.u0) / (nu - 1);
    for (int j = 0; j < nv; ++j) {
      double v = window.v0 + j * (window.v1 - window.v0) / (nv - 1);
      pts.push_back({u, v});
    }
  }
  return pts;
}

std::vector<CurvatureReport> evaluate_grid_serial(const UnitVectorField& field,
                                                  const Rect& window, int nu, int nv,
                                                  const ReportOptions& opts) {
  std::vector<Point2> pts = grid_points(window, nu, nv);
  std::vector<CurvatureReport> rows;
  rows.reserve(pts.size());
  for (const Point2& p : pts) rows.push_back(report_at(field, p, opts));
  return rows;
}

std::vector<CurvatureReport> evaluate_grid(const UnitVectorField& field, const Rect& window,
                                           int nu, int nv, const ReportOptions& opts) {
  std::vector<Point2> pts = grid_points(window, nu, nv);
  std::vector<CurvatureReport> rows(pts.size());
  const long total = static_cast<long>(pts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long idx = 0; idx < total; ++idx)  // row order fixed by index
    rows[static_cast<std::size_t>(idx)] =
        report_at(field, pts[static_cast<std::size_t>(idx)], opts);
  return rows;
}

GridSummary summarize(const std::vector<CurvatureReport>& rows, int nu, int nv,
                      double verdict_tol) {
  GridSummary s;
  s.nu = nu;
  s.nv = nv;
  s.n_points = static_cast<int>(rows.size());
  s.verdict_tol = verdict_tol;
  s.min_abs_om01 = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const CurvatureReport& r : rows) {
    if (!std::isfinite(r.K)) {
      ++s.n_failed;
      continue;
    }
    if (r.degenerate) ++s.n_degenerate;
    any = true;
    s.max_abs_omega = std::max(s.max_abs_omega, r.omega.max_abs());
    s.min_abs_om01 = std::min(s.min_abs_om01, std::abs(r.omega.m01));
    accumulate(s.k_xi, r.k_xi);
    accumulate(s.resid_forms, r.resid_forms);
    accumulate(s.resid_oracle, r.resid_oracle);
    accumulate(s.resid_identity, r.resid_identity);
    accumulate(s.resid_gradient_norm, r.resid_gradient_norm);
    accumulate(s.resid_curvature_link, r.resid_curvature_link);
  }
  for (Stat* st : {&s.k_xi, &s.resid_forms, &s.resid_oracle, &s.resid_identity,
                   &s.resid_gradient_norm, &s.resid_curvature_link})
    if (st->count > 0) st->mean /= st->count;
  if (!any) s.min_abs_om01 = 0.0;
  s.totally_geodesic = any && s.max_abs_omega < verdict_tol;
  return s;
}

}  // namespace unitfield
