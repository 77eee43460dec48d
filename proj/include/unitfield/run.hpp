#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitfield/grid.hpp"

namespace unitfield {

// A single analysis request: where the field comes from and what to evaluate.
// Exactly one of `scenario` / `chart_file` must be set; a chart file needs an
// omega expression along with it.
struct RunSpec {
  std::string scenario;    // catalog name, optionally "name:p1,p2"
  std::string chart_file;  // path to a chart definition file
  std::string omega;       // angle expression (chart-file runs)

  std::optional<Point2> point;  // single-point analysis
  int nu = 20, nv = 20;         // grid analysis
  double margin = 0.05;         // window inset, fraction of each domain extent

  DiffConfig cfg;
  bool with_oracle = true;
  double verdict_tol = 1e-8;  // totally-geodesic verdict threshold
};

struct ResolvedRun {
  std::string label;  // scenario canonical name, or "file:omega"
  UnitVectorField field;
  Rect window;  // grid window (scenario window, or inset chart domain)
};

// Builds the field and window a spec describes.  Throws UsageError when the
// source selection is inconsistent, and propagates parse/domain errors.
ResolvedRun resolve(const RunSpec& spec);

struct RunResult {
  std::string label;
  bool is_grid = false;
  int nu = 0, nv = 0;
  std::vector<CurvatureReport> points;
  GridSummary summary;
};

RunResult run_point(const RunSpec& spec);  // uses spec.point (required)
RunResult run_grid(const RunSpec& spec);

}  // namespace unitfield
