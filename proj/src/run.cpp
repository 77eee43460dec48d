#include "unitfield/run.hpp"

#include <utility>

#include "unitfield/catalog.hpp"
#include "unitfield/chart_file.hpp"
#include "unitfield/errors.hpp"

namespace unitfield {

namespace {

// Shrinks a rectangle by the given fraction of each extent on every side.
Rect inset(const Rect& r, double frac) {
  double du = (r.u1 - r.u0) * frac;
  double dv = (r.v1 - r.v0) * frac;
  return Rect{r.u0 + du, r.u1 - du, r.v0 + dv, r.v1 - dv};
}

}  // namespace

ResolvedRun resolve(const RunSpec& spec) {
  const bool have_scenario = !spec.scenario.empty();
  const bool have_chart = !spec.chart_file.empty();
  if (have_scenario == have_chart)
    throw UsageError("give exactly one field source: --scenario or --chart");
  if (have_chart && spec.omega.empty())
    throw UsageError("--chart needs an --omega expression");
  if (have_scenario && !spec.omega.empty())
    throw UsageError("--omega applies to --chart runs only; scenarios fix their own angle");

  if (have_scenario) {
    Scenario s = make_scenario(spec.scenario);
    UnitVectorField field(s.chart, s.field.omega(), spec.cfg);
    return ResolvedRun{s.name, std::move(field), s.window};
  }

  ChartPtr chart = load_chart_file(spec.chart_file);
  UnitVectorField field(chart, ScalarField::parse(spec.omega), spec.cfg);
  if (!(spec.margin >= 0.0 && spec.margin < 0.5))
    throw UsageError("--margin must lie in [0, 0.5)");
  Rect window = inset(chart->domain(), spec.margin);
  return ResolvedRun{spec.chart_file + ":" + spec.omega, std::move(field), window};
}

RunResult run_point(const RunSpec& spec) {
  if (!spec.point) throw UsageError("point analysis needs --point u,v");
  ResolvedRun r = resolve(spec);
  ReportOptions opts;
  opts.with_oracle = spec.with_oracle;
  opts.cfg = spec.cfg;
  RunResult out;
  out.label = r.label;
  out.is_grid = false;
  out.nu = out.nv = 1;
  out.points.push_back(compute_report(r.field, *spec.point, opts));
  out.summary = summarize(out.points, 1, 1, spec.verdict_tol);
  return out;
}

RunResult run_grid(const RunSpec& spec) {
  ResolvedRun r = resolve(spec);
  ReportOptions opts;
  opts.with_oracle = spec.with_oracle;
  opts.cfg = spec.cfg;
  RunResult out;
  out.label = r.label;
  out.is_grid = true;
  out.nu = spec.nu;
  out.nv = spec.nv;
  out.points = evaluate_grid(r.field, r.window, spec.nu, spec.nv, opts);
  out.summary = summarize(out.points, spec.nu, spec.nv, spec.verdict_tol);
  return out;
}

}  // namespace unitfield
