#include "unitfield/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

#include "unitfield/bundle.hpp"
#include "unitfield/catalog.hpp"
#include "unitfield/errors.hpp"
#include "unitfield/grid.hpp"
#include "unitfield/report.hpp"
#include "unitfield/run.hpp"
#include "unitfield/submanifold.hpp"

namespace unitfield {

namespace {

// ---------------------------------------------------------------------------
// Random sampling of (chart, angle, point) configurations.
//
// Angles are expression templates over two uniform coefficients so that every
// sample carries exact analytic partials; points are drawn from an interior
// inset of the domain so finite-difference cross-checks have stencil room.
// Everything is driven by a fixed-seed mt19937_64: repeated runs draw the
// same configurations.
// ---------------------------------------------------------------------------

struct Sampler {
  std::mt19937_64 rng;

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  int pick(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

  ChartPtr random_chart(bool constant_curvature_only = false) {
    switch (pick(constant_curvature_only ? 7 : 8)) {
      case 0: return make_chart(ChartModel::flat);
      case 1: return make_chart(ChartModel::flat_polar);
      case 2: return make_chart(ChartModel::sphere, uniform(0.9, 2.2));
      case 3: return make_chart(ChartModel::hyperbolic_exp, uniform(0.9, 2.0));
      case 4: return make_chart(ChartModel::hyperbolic_polar, uniform(0.9, 2.0));
      case 5: return make_chart(ChartModel::hyperbolic_cartesian, uniform(0.9, 2.0));
      case 6: return make_chart(ChartModel::horocycle, uniform(0.5, 1.8));
      default: return make_chart(ChartModel::variable_bump);
    }
  }

  ScalarField random_angle() {
    static const char* kTemplates[] = {
        "A",
        "A*v+B",
        "A*u+B",
        "A*u+B*v",
        "A*sin(v)+B",
        "A*sin(u)*cos(v)+B",
        "A*u*v",
    };
    expr::Params params{{"A", uniform(-2.0, 2.0)}, {"B", uniform(-2.0, 2.0)}};
    return ScalarField::parse(kTemplates[pick(7)], params);
  }

  Point2 random_point(const Rect& domain) {
    double du = 0.15 * (domain.u1 - domain.u0);
    double dv = 0.15 * (domain.v1 - domain.v0);
    return {uniform(domain.u0 + du, domain.u1 - du), uniform(domain.v0 + dv, domain.v1 - dv)};
  }

  // Draws until the adapted frame exists at the point (the closed forms and
  // the lift cross-check both need it); configurations whose derivative
  // vanishes identically are discarded after a few point attempts.
  std::pair<UnitVectorField, Point2> regular_sample() {
    for (;;) {
      UnitVectorField field(random_chart(), random_angle());
      for (int attempt = 0; attempt < 8; ++attempt) {
        Point2 p = random_point(field.chart().domain());
        if (field.lambda_field()(p) > 1e-3) return {std::move(field), p};
      }
    }
  }
};

double max3(double a, double b, double c) { return std::max(a, std::max(b, c)); }

double entry_gap(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

// ---------------------------------------------------------------------------
// Randomized ensembles
// ---------------------------------------------------------------------------

struct IdentityEnsemble {
  double gradient_norm = 0.0;   // |lambda^2 - k^2 - kappa^2|
  double curvature_link = 0.0;  // |(-1)^s K - e0(lambda) + lambda sigma|
  double forms_gap = 0.0;       // curvature-form vs frame-form entries
  double lift_fd_gap = 0.0;     // closed forms vs finite-difference lift, h=1e-4
  double lift_exact_gap = 0.0;  // closed forms vs analytic-derivative lift (subsample)
  double kxi_oracle = 0.0;      // formula vs pullback-metric curvature
  double kxi_identity = 0.0;    // k_xi - (k_t1m + det)
  int n = 0;
};

IdentityEnsemble run_identity_ensemble(int n_samples, std::uint64_t seed) {
  Sampler s(seed);
  IdentityEnsemble out;
  DiffConfig fd;  // pure finite differences: an evaluation path with no
  fd.use_analytic = false;  // shared code with the closed-form chains
  for (int i = 0; i < n_samples; ++i) {
    auto [field, p] = s.regular_sample();
    CurvatureReport rep = compute_report(field, p);
    out.gradient_norm = std::max(out.gradient_norm, std::abs(rep.resid_gradient_norm));
    out.curvature_link = std::max(out.curvature_link, std::abs(rep.resid_curvature_link));
    out.forms_gap = std::max(out.forms_gap, std::abs(rep.resid_forms));
    out.kxi_oracle = std::max(out.kxi_oracle, std::abs(rep.resid_oracle));
    out.kxi_identity = std::max(out.kxi_identity, std::abs(rep.resid_identity));

    Mat2 o_fd = second_fundamental_form(field, p, SffVariant::lift_oracle, fd);
    out.lift_fd_gap = std::max(out.lift_fd_gap, entry_gap(rep.omega, o_fd));
    if (i % 7 == 0) {  // the analytic lift is slow; a subsample suffices
      Mat2 o = second_fundamental_form(field, p, SffVariant::lift_oracle);
      out.lift_exact_gap = std::max(out.lift_exact_gap, entry_gap(rep.omega, o));
    }
    ++out.n;
  }
  return out;
}

struct SectionalEnsemble {
  double const_gap = 0.0;      // closed form vs curvature-tensor route, K constant
  double toggle_gap = 0.0;     // dropping the curvature-gradient term, K constant
  double variable_gap = 0.0;   // closed form vs full route on a varying-K chart
  double variable_toggle = 0.0;  // the term's largest contribution where K varies
};

SectionalEnsemble run_sectional_ensemble(int n_const, int n_variable, std::uint64_t seed) {
  Sampler s(seed);
  SectionalEnsemble out;
  SectionalOptions full;
  SectionalOptions truncated;
  truncated.include_curvature_gradient = false;
  for (int i = 0; i < n_const; ++i) {
    for (;;) {
      UnitVectorField field(s.random_chart(/*constant_curvature_only=*/true), s.random_angle());
      Point2 p = s.random_point(field.chart().domain());
      if (field.lambda_field()(p) <= 1e-3) continue;
      double closed = ambient_sectional(field, p);
      double direct = ambient_sectional_direct(field, p, full);
      double dropped = ambient_sectional_direct(field, p, truncated);
      out.const_gap = std::max(out.const_gap, std::abs(closed - direct));
      out.toggle_gap = std::max(out.toggle_gap, std::abs(direct - dropped));
      break;
    }
  }
  ChartPtr bump = make_chart(ChartModel::variable_bump);
  for (int i = 0; i < n_variable; ++i) {
    for (;;) {
      UnitVectorField field(bump, s.random_angle());
      Point2 p = s.random_point(bump->domain());
      if (field.lambda_field()(p) <= 1e-3) continue;
      double closed = ambient_sectional(field, p);
      double direct = ambient_sectional_direct(field, p, full);
      double dropped = ambient_sectional_direct(field, p, truncated);
      out.variable_gap = std::max(out.variable_gap, std::abs(closed - direct));
      out.variable_toggle = std::max(out.variable_toggle, std::abs(direct - dropped));
      break;
    }
  }
  return out;
}

// Fields whose integral curves are unit-speed geodesics: the u-parameter
// curves of any profile chart (angle 0), and every parallel direction of the
// flat plane.
double run_geodesic_ensemble(int n_samples, std::uint64_t seed) {
  Sampler s(seed);
  double max_det = -1e300;
  for (int i = 0; i < n_samples; ++i) {
    ChartPtr chart = s.random_chart();
    bool flat = std::abs(gauss_curvature(*chart, s.random_point(chart->domain()))) < 1e-12 &&
                chart->kind() == ChartKind::semi_geodesic;
    ScalarField omega = ScalarField::constant(0.0);
    if (flat && s.pick(2) == 0) omega = ScalarField::constant(s.uniform(-3.0, 3.0));
    UnitVectorField field(chart, std::move(omega));
    Point2 p = s.random_point(chart->domain());
    max_det = std::max(max_det, extrinsic_curvature(field, p));
  }
  return max_det;
}

// ---------------------------------------------------------------------------
// Scenario grids
// ---------------------------------------------------------------------------

struct GridEval {
  Scenario scenario;
  std::vector<CurvatureReport> rows;
  GridSummary summary;
};

GridEval eval_scenario(const std::string& spec, bool with_oracle) {
  GridEval g{make_scenario(spec), {}, {}};
  ReportOptions opts;
  opts.with_oracle = with_oracle;
  g.rows = evaluate_grid(g.scenario.field, g.scenario.window, g.scenario.nu, g.scenario.nv, opts);
  g.summary = summarize(g.rows, g.scenario.nu, g.scenario.nv);
  return g;
}

CriterionResult finish(CriterionResult c) {
  c.pass = true;
  for (const Check& ch : c.checks) c.pass = c.pass && ch.pass();
  return c;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

CriterionResult criterion_frame_identities(const IdentityEnsemble& e) {
  CriterionResult c{"frame-identities",
                    "adapted-frame scalar identities on 1000 random (chart, angle, point) "
                    "configurations",
                    {},
                    true};
  c.checks.push_back({"max |lambda^2 - k^2 - kappa^2|", e.gradient_norm, 1e-6});
  c.checks.push_back({"max |(-1)^s K - e0(lambda) + lambda*sigma|", e.curvature_link, 1e-6});
  return finish(std::move(c));
}

CriterionResult criterion_form_equivalence(const IdentityEnsemble& e) {
  CriterionResult c{"form-equivalence",
                    "both closed forms of the second fundamental form agree with each other "
                    "and with the derivative-lift evaluation on the same ensemble",
                    {},
                    true};
  c.checks.push_back({"max closed-form off-diagonal gap", e.forms_gap, 1e-8});
  c.checks.push_back({"max gap to finite-difference lift (h=1e-4)", e.lift_fd_gap, 1e-4});
  c.checks.push_back({"max gap to analytic lift (subsample)", e.lift_exact_gap, 1e-10});
  return finish(std::move(c));
}

CriterionResult criterion_gauss_link(const IdentityEnsemble& e) {
  CriterionResult c{"gauss-link",
                    "image curvature formula vs pullback-metric evaluation on the ensemble and "
                    "on every catalog scenario grid; k_xi = k_t1m + det exactly",
                    {},
                    true};
  c.checks.push_back({"ensemble max |k_xi - pullback oracle|", e.kxi_oracle, 1e-4});
  double grid_oracle = 0.0, grid_identity = 0.0;
  int failed = 0;
  for (const ScenarioInfo& info : list_scenarios()) {
    std::string name = info.pattern.substr(0, info.pattern.find(':'));
    GridEval g = eval_scenario(name, /*with_oracle=*/true);
    grid_oracle = std::max(grid_oracle, std::abs(g.summary.resid_oracle.max));
    grid_oracle = std::max(grid_oracle, std::abs(g.summary.resid_oracle.min));
    grid_identity = std::max(grid_identity, std::abs(g.summary.resid_identity.max));
    grid_identity = std::max(grid_identity, std::abs(g.summary.resid_identity.min));
    failed += g.summary.n_failed;
  }
  c.checks.push_back({"scenario grids max |k_xi - pullback oracle|", grid_oracle, 1e-4});
  c.checks.push_back({"max |k_xi - (k_t1m + det)|",
                      std::max(e.kxi_identity, grid_identity), 1e-12});
  c.checks.push_back({"failed grid points", static_cast<double>(failed), 0.5});
  return finish(std::move(c));
}

CriterionResult criterion_sectional_routes() {
  SectionalEnsemble e = run_sectional_ensemble(400, 200, 0x5eed0010);
  CriterionResult c{"sectional-routes",
                    "closed-form ambient sectional curvature vs the full curvature-tensor "
                    "route, including the curvature-gradient term",
                    {},
                    true};
  c.checks.push_back({"constant-curvature charts, max gap", e.const_gap, 1e-6});
  c.checks.push_back({"curvature-gradient term where K is constant", e.toggle_gap, 1e-6});
  c.checks.push_back({"varying-curvature chart, max gap", e.variable_gap, 1e-4});
  // dropping the term must visibly change the answer where K varies, i.e.
  // the route under test actually exercises it
  c.checks.push_back(
      {"curvature-gradient term where K varies", e.variable_toggle, 1e-3, /*lower_bound=*/true});
  return finish(std::move(c));
}

CriterionResult criterion_sphere_tangent() {
  GridEval g = eval_scenario("sphere_tg", /*with_oracle=*/false);
  CriterionResult c{"sphere-tangent-frame",
                    "unit-speed rotation field over the round sphere: totally geodesic image "
                    "of constant curvature 1/4 with induced metric diag(1, 2(1+cos u))",
                    {},
                    true};
  c.checks.push_back({"max |second fundamental form| (20x20)", g.summary.max_abs_omega, 1e-8});
  double kxi_gap = std::max(std::abs(g.summary.k_xi.max - 0.25),
                            std::abs(g.summary.k_xi.min - 0.25));
  c.checks.push_back({"max |k_xi - 1/4|", kxi_gap, 1e-6});
  double metric_gap = 0.0;
  for (const CurvatureReport& r : g.rows) {
    Mat2 G = induced_metric(g.scenario.field, r.p);
    metric_gap = max3(metric_gap, std::abs(G.m00 - 1.0), std::abs(G.m01));
    metric_gap = std::max(metric_gap, std::abs(G.m11 - 2.0 * (1.0 + std::cos(r.p.u))));
  }
  c.checks.push_back({"max induced-metric gap to diag(1, 2(1+cos u))", metric_gap, 1e-9});
  return finish(std::move(c));
}

CriterionResult criterion_flat_helical() {
  CriterionResult c{"flat-helical",
                    "helical unit fields over the flat plane: flat, totally geodesic images "
                    "with induced metric diag(1, 1+a^2), a in {0, 1, 2}",
                    {},
                    true};
  for (double a : {0.0, 1.0, 2.0}) {
    char spec[64], label[64];
    std::snprintf(spec, sizeof spec, "flat_helical:%g,0.5", a);
    GridEval g = eval_scenario(spec, /*with_oracle=*/false);
    double kxi = std::max(std::abs(g.summary.k_xi.max), std::abs(g.summary.k_xi.min));
    double metric_gap = 0.0;
    for (const CurvatureReport& r : g.rows) {
      Mat2 G = induced_metric(g.scenario.field, r.p);
      metric_gap = max3(metric_gap, std::abs(G.m00 - 1.0), std::abs(G.m01));
      metric_gap = std::max(metric_gap, std::abs(G.m11 - (1.0 + a * a)));
    }
    std::snprintf(label, sizeof label, "a=%g max |omega|", a);
    c.checks.push_back({label, g.summary.max_abs_omega, 1e-10});
    std::snprintf(label, sizeof label, "a=%g max |k_xi|", a);
    c.checks.push_back({label, kxi, 1e-10});
    std::snprintf(label, sizeof label, "a=%g induced-metric gap", a);
    c.checks.push_back({label, metric_gap, 1e-12});
  }
  return finish(std::move(c));
}

CriterionResult criterion_constant_class() {
  CriterionResult c{"constant-class",
                    "constant-angle fields: horocycle-type charts give k_xi = -c^2, parallel "
                    "flat fields give 0, sphere meridian-angle fields give 0",
                    {},
                    true};
  for (double cc : {0.5, 1.0, 2.0}) {
    char spec[64], label[64];
    std::snprintf(spec, sizeof spec, "horocycle:%g", cc);
    GridEval g = eval_scenario(spec, /*with_oracle=*/false);
    double gap = std::max(std::abs(g.summary.k_xi.max + cc * cc),
                          std::abs(g.summary.k_xi.min + cc * cc));
    std::snprintf(label, sizeof label, "c=%g max |k_xi + c^2|", cc);
    c.checks.push_back({label, gap, 1e-8});
  }
  GridEval flat = eval_scenario("flat_parallel", /*with_oracle=*/false);
  double flat_gap = std::max(std::abs(flat.summary.k_xi.max), std::abs(flat.summary.k_xi.min));
  c.checks.push_back({"flat parallel max |k_xi|", flat_gap, 1e-12});
  for (double om0 : {0.0, 0.6, 1.2}) {
    char spec[64], label[64];
    std::snprintf(spec, sizeof spec, "sphere_geodesic:%g", om0);
    GridEval g = eval_scenario(spec, /*with_oracle=*/false);
    double gap = std::max(std::abs(g.summary.k_xi.max), std::abs(g.summary.k_xi.min));
    std::snprintf(label, sizeof label, "sphere angle %g max |k_xi|", om0);
    c.checks.push_back({label, gap, 1e-6});
  }
  return finish(std::move(c));
}

CriterionResult criterion_foliation() {
  CriterionResult c{"foliation",
                    "constant-angle fields over curvature -c^2 profile charts: k_xi = -c^2, "
                    "om01 = -c^2/2, det = -c^4/4, induced metric diag(1, (1+c^2) e^{2cu}); "
                    "curvature columns independent of the angle",
                    {},
                    true};
  for (double cc : {1.0, 2.0}) {
    std::vector<GridEval> runs;
    for (double om0 : {0.0, 0.7, kPi / 2}) {
      char spec[64];
      std::snprintf(spec, sizeof spec, "foliation:%g,%.17g", cc, om0);
      runs.push_back(eval_scenario(spec, /*with_oracle=*/false));
    }
    double kxi_gap = 0.0, om01_gap = 0.0, det_gap = 0.0, metric_gap = 0.0, indep = 0.0;
    for (const GridEval& g : runs) {
      for (const CurvatureReport& r : g.rows) {
        kxi_gap = std::max(kxi_gap, std::abs(r.k_xi + cc * cc));
        om01_gap = std::max(om01_gap, std::abs(r.omega.m01 + cc * cc / 2.0));
        det_gap = std::max(det_gap, std::abs(r.det_omega + cc * cc * cc * cc / 4.0));
        Mat2 G = induced_metric(g.scenario.field, r.p);
        metric_gap = max3(metric_gap, std::abs(G.m00 - 1.0), std::abs(G.m01));
        metric_gap = std::max(
            metric_gap, std::abs(G.m11 - (1.0 + cc * cc) * std::exp(2.0 * cc * r.p.u)));
      }
    }
    // the image geometry must not feel the angle choice (k and kappa do, by
    // construction: they resolve the same gradient along a rotated frame)
    for (std::size_t i = 0; i < runs[0].rows.size(); ++i) {
      for (std::size_t a = 1; a < runs.size(); ++a) {
        const CurvatureReport& x = runs[0].rows[i];
        const CurvatureReport& y = runs[a].rows[i];
        indep = std::max(indep, std::abs(x.lambda - y.lambda));
        indep = std::max(indep, std::abs(x.mu - y.mu));
        indep = std::max(indep, std::abs(x.sigma - y.sigma));
        indep = std::max(indep, entry_gap(x.omega, y.omega));
        indep = std::max(indep, std::abs(x.k_t1m - y.k_t1m));
        indep = std::max(indep, std::abs(x.det_omega - y.det_omega));
        indep = std::max(indep, std::abs(x.k_xi - y.k_xi));
      }
    }
    char label[64];
    std::snprintf(label, sizeof label, "c=%g max |k_xi + c^2|", cc);
    c.checks.push_back({label, kxi_gap, 1e-8});
    std::snprintf(label, sizeof label, "c=%g max |om01 + c^2/2|", cc);
    c.checks.push_back({label, om01_gap, 1e-8});
    std::snprintf(label, sizeof label, "c=%g max |det + c^4/4|", cc);
    c.checks.push_back({label, det_gap, 1e-8});
    std::snprintf(label, sizeof label, "c=%g induced-metric gap", cc);
    c.checks.push_back({label, metric_gap, 1e-8});
    std::snprintf(label, sizeof label, "c=%g angle-independence of curvature columns", cc);
    c.checks.push_back({label, indep, 1e-10});
  }
  return finish(std::move(c));
}

CriterionResult criterion_geodesic_nonpositive() {
  double max_det = run_geodesic_ensemble(1000, 0x5eed0008);
  CriterionResult c{"geodesic-nonpositive",
                    "1000 random fields with geodesic integral curves: extrinsic curvature "
                    "of the image never becomes positive",
                    {},
                    true};
  c.checks.push_back({"max det over ensemble", max_det, 1e-10});
  return finish(std::move(c));
}

CriterionResult criterion_obstruction_families() {
  CriterionResult c{"obstruction-families",
                    "rotationally symmetric fields over the three curvature -1/r^2 profile "
                    "charts: off-diagonal entry matches the closed form and stays away from "
                    "zero, so no such field is totally geodesic",
                    {},
                    true};
  struct Family {
    ObstructionModel model;
    const char* scenario;
  };
  double closed_gap = 0.0, min_abs = 1e300;
  for (const Family& fam : {Family{ObstructionModel::hyp_exp, "hyp_exp_obstruction"},
                            Family{ObstructionModel::hyp_polar, "hyp_polar_obstruction"},
                            Family{ObstructionModel::hyp_cartesian, "hyp_cartesian_obstruction"}}) {
    for (int a = -2; a <= 2; ++a) {
      char spec[64];
      std::snprintf(spec, sizeof spec, "%s:1,%d", fam.scenario, a);
      GridEval g = eval_scenario(spec, /*with_oracle=*/false);
      for (const CurvatureReport& r : g.rows) {
        double closed = obstruction_omega01(fam.model, 1.0, a, r.p.u);
        closed_gap = std::max(closed_gap, std::abs(r.omega.m01 - closed));
        min_abs = std::min(min_abs, std::abs(r.omega.m01));
      }
    }
  }
  c.checks.push_back({"max |om01 - closed form|", closed_gap, 1e-8});
  c.checks.push_back({"min |om01| over all grids", min_abs, 0.1, /*lower_bound=*/true});
  // reference value recomputed by hand from the closed form:
  // -(2 cosh^2(1) + 1) / (2 (sinh^2(1) + cosh^2(1)))
  double spot = obstruction_omega01(ObstructionModel::hyp_polar, 1.0, 0.0, 1.0);
  c.checks.push_back({"polar family spot value at (r,a,u)=(1,0,1)",
                      std::abs(spot - (-0.7658022288340797)), 1e-5});
  return finish(std::move(c));
}

CriterionResult criterion_determinism() {
  auto once = []() {
    RunSpec rs;
    rs.scenario = "foliation:1,0.7";
    rs.nu = 12;
    rs.nv = 12;
    RunResult rr = run_grid(rs);
    std::string blob = render(rr, OutputFormat::json);
    blob += render(rr, OutputFormat::csv);
    IdentityEnsemble e = run_identity_ensemble(120, 0x5eed0011);
    char tail[256];
    std::snprintf(tail, sizeof tail, "%.17g %.17g %.17g %.17g %.17g %.17g", e.gradient_norm,
                  e.curvature_link, e.forms_gap, e.lift_fd_gap, e.kxi_oracle, e.kxi_identity);
    return blob + tail;
  };
  std::string first = once();
  std::string second = once();
  CriterionResult c{"determinism",
                    "repeating a grid run (parallel evaluation included) and a randomized "
                    "ensemble emits byte-identical machine-readable output",
                    {},
                    true};
  c.checks.push_back({"differing runs", first == second ? 0.0 : 1.0, 0.5});
  return finish(std::move(c));
}

SuiteResult collect(const std::string& name, std::vector<CriterionResult> criteria) {
  SuiteResult s{name, std::move(criteria), true};
  for (const CriterionResult& c : s.criteria) s.pass = s.pass && c.pass;
  return s;
}

SuiteResult suite_identities() {
  IdentityEnsemble e = run_identity_ensemble(1000, 0x5eed0001);
  return collect("identities",
                 {criterion_frame_identities(e), criterion_form_equivalence(e),
                  criterion_gauss_link(e), criterion_sectional_routes()});
}

SuiteResult suite_theorems() {
  return collect("theorems",
                 {criterion_sphere_tangent(), criterion_flat_helical(),
                  criterion_constant_class(), criterion_foliation(),
                  criterion_geodesic_nonpositive(), criterion_obstruction_families()});
}

SuiteResult suite_determinism() { return collect("determinism", {criterion_determinism()}); }

}  // namespace

SuiteResult run_suite(const std::string& name) {
  if (name == "identities") return suite_identities();
  if (name == "theorems") return suite_theorems();
  if (name == "determinism") return suite_determinism();
  if (name == "all") {
    SuiteResult all{"all", {}, true};
    SuiteResult a = suite_identities();
    SuiteResult b = suite_theorems();
    SuiteResult d = suite_determinism();
    for (SuiteResult* part : {&a, &b, &d})
      for (CriterionResult& c : part->criteria) all.criteria.push_back(std::move(c));
    for (const CriterionResult& c : all.criteria) all.pass = all.pass && c.pass;
    return all;
  }
  throw UsageError("unknown suite '" + name + "' (expected identities|theorems|determinism|all)");
}

std::string render_suite_table(const SuiteResult& suite) {
  std::ostringstream out;
  char line[256];
  for (const CriterionResult& c : suite.criteria) {
    out << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ": " << c.statement << "\n";
    for (const Check& ch : c.checks) {
      std::snprintf(line, sizeof line, "       %-52s %12.5g %s %.3g%s\n", ch.name.c_str(),
                    ch.observed, ch.lower_bound ? ">" : "<", ch.bound,
                    ch.pass() ? "" : "  ** FAILED **");
      out << line;
    }
  }
  out << "suite " << suite.suite << ": " << (suite.pass ? "PASS" : "FAIL") << " ("
      << suite.criteria.size() << " criteria)\n";
  return out.str();
}

nlohmann::ordered_json suite_json(const SuiteResult& suite) {
  nlohmann::ordered_json doc;
  doc["suite"] = suite.suite;
  doc["pass"] = suite.pass;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CriterionResult& c : suite.criteria) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["statement"] = c.statement;
    jc["pass"] = c.pass;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& ch : c.checks)
      checks.push_back({{"name", ch.name},
                        {"observed", ch.observed},
                        {"bound", ch.bound},
                        {"sense", ch.lower_bound ? "above" : "below"},
                        {"pass", ch.pass()}});
    jc["checks"] = std::move(checks);
    rows.push_back(std::move(jc));
  }
  doc["criteria"] = std::move(rows);
  return doc;
}

}  // namespace unitfield
