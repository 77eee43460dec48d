#pragma once

#include <vector>

#include "unitfield/frame.hpp"
#include "unitfield/submanifold.hpp"
#include "unitfield/types.hpp"

namespace unitfield {

// Evaluation lattice over a window rectangle: nu x nv points, endpoints
// included, emitted u-major (all v for the first u, then the next u, ...).
// Throws BadParams unless nu >= 2 and nv >= 2 and the window is nonempty.
std::vector<Point2> grid_points(const Rect& window, int nu, int nv);

// One curvature report per lattice point, in lattice order.  Points whose
// evaluation throws (domain, stencil, or frame errors) are emitted as rows
// with every scalar set to NaN; callers can count them via summarize().
//
// evaluate_grid distributes rows across threads when OpenMP is enabled and
// restores lattice order on return; evaluate_grid_serial is the plain loop
// kept as a reference for testing and benchmarking.  Both produce identical
// output for identical input.
std::vector<CurvatureReport> evaluate_grid(const UnitVectorField& field, const Rect& window,
                                           int nu, int nv, const ReportOptions& opts = {});
std::vector<CurvatureReport> evaluate_grid_serial(const UnitVectorField& field,
                                                  const Rect& window, int nu, int nv,
                                                  const ReportOptions& opts = {});

struct Stat {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  int count = 0;  // values that were finite
};

struct GridSummary {
  int nu = 0, nv = 0;
  int n_points = 0;
  int n_degenerate = 0;
  int n_failed = 0;
  double max_abs_omega = 0.0;  // largest |entry| of the second fundamental form
  double min_abs_om01 = 0.0;   // smallest |off-diagonal entry|
  Stat k_xi;
  Stat resid_forms;
  Stat resid_oracle;
  Stat resid_identity;
  Stat resid_gradient_norm;
  Stat resid_curvature_link;
  bool totally_geodesic = false;  // max_abs_omega below the verdict tolerance
  double verdict_tol = 0.0;
};

// Serial, order-deterministic reduction of a report vector.
GridSummary summarize(const std::vector<CurvatureReport>& rows, int nu, int nv,
                      double verdict_tol = 1e-8);

}  // namespace unitfield
