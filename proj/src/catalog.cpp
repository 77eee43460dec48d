#include "unitfield/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "unitfield/errors.hpp"

namespace unitfield {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw BadParams(std::string(what) + " must be positive");
}

ChartPtr share(MetricChart&& chart) {
  return std::make_shared<MetricChart>(std::move(chart));
}

std::string trim_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

ChartPtr make_chart(ChartModel model, double param) {
  const double r = param, c = param;
  switch (model) {
    case ChartModel::flat:
      return share(MetricChart::semi_geodesic({-3.0, 3.0, -3.0, 3.0}, ScalarField::parse("1")));
    case ChartModel::flat_polar:
      return share(
          MetricChart::semi_geodesic({0.02, 4.0, -0.5, 6.8}, ScalarField::parse("u")));
    case ChartModel::sphere:
      require_positive(r, "radius");
      return share(MetricChart::semi_geodesic({0.02 * r, (kPi - 0.02) * r, -8.0, 8.0},
                                              ScalarField::parse("r*sin(u/r)", {{"r", r}})));
    case ChartModel::hyperbolic_exp:
      require_positive(r, "radius");
      return share(MetricChart::semi_geodesic({-r, 4.0 * r, -3.0, 3.0},
                                              ScalarField::parse("r*exp(u/r)", {{"r", r}})));
    case ChartModel::hyperbolic_polar:
      require_positive(r, "radius");
      return share(MetricChart::semi_geodesic({0.02, 2.0 * r + 1.5, -3.0, 3.0},
                                              ScalarField::parse("r*sinh(u/r)", {{"r", r}})));
    case ChartModel::hyperbolic_cartesian:
      require_positive(r, "radius");
      return share(MetricChart::semi_geodesic({-2.0 * r - 1.0, 2.0 * r + 1.0, -3.0, 3.0},
                                              ScalarField::parse("r*cosh(u/r)", {{"r", r}})));
    case ChartModel::horocycle:
      require_positive(c, "expansion rate");
      return share(MetricChart::semi_geodesic({-2.0, 2.0, -2.5, 2.5},
                                              ScalarField::parse("exp(c*u)", {{"c", c}})));
    case ChartModel::variable_bump:
      return share(MetricChart::semi_geodesic({-1.5, 1.5, -1.5, 1.5},
                                              ScalarField::parse("exp(u^2/4)")));
  }
  throw BadParams("unknown chart model");
}

double obstruction_omega01(ObstructionModel model, double r, double a, double u) {
  switch (model) {
    case ObstructionModel::hyp_exp: {
      require_positive(r, "radius");
      double q = a * std::exp(-u / r) + 1.0;
      return -0.5 * ((1.0 / (r * r) + 1.0) * q * q - a * a * std::exp(-2.0 * u / r)) /
             (r * r + q * q);
    }
    case ObstructionModel::hyp_polar: {
      require_positive(r, "radius");
      if (!(u > 0.0)) throw BadParams("polar charts need u > 0");
      double A = a + std::cosh(u / r), sh = std::sinh(u / r);
      return -0.5 * ((1.0 / (r * r) + 1.0) * A * A - a * a + 1.0) / (r * r * sh * sh + A * A);
    }
    case ObstructionModel::hyp_cartesian: {
      require_positive(r, "radius");
      double B = a + std::sinh(u / r), ch = std::cosh(u / r);
      return -0.5 * ((1.0 / (r * r) + 1.0) * B * B - a * a - 1.0) / (r * r * ch * ch + B * B);
    }
    case ObstructionModel::sphere: {
      require_positive(r, "radius");
      double C = a + std::cos(u / r), sn = std::sin(u / r);
      if (sn == 0.0) throw BadParams("spherical chart degenerates where sin(u/r) = 0");
      return 0.5 * ((1.0 / (r * r) - 1.0) * C * C + a * a - 1.0) / (r * r * sn * sn + C * C);
    }
    case ObstructionModel::flat_polar: {
      if (!(u > 0.0)) throw BadParams("polar charts need u > 0");
      return -(a + 1.0) / (u * u + (a + 1.0) * (a + 1.0));
    }
  }
  throw BadParams("unknown obstruction model");
}

std::array<std::array<double, 3>, 3> t1m_coordinate_metric(BundleChartModel model, double param,
                                                           const Point2& p, double /*theta*/) {
  // Both models are theta-independent: the fiber direction is a unit Killing
  // direction of the bundle metric over these charts.
  switch (model) {
    case BundleChartModel::sphere_unit: {
      double cu = std::cos(p.u);
      return {{{1.0, 0.0, 0.0}, {0.0, 1.0, cu}, {0.0, cu, 1.0}}};
    }
    case BundleChartModel::hyperbolic_c: {
      require_positive(param, "expansion rate");
      double f = std::exp(param * p.u);
      return {{{1.0, 0.0, 0.0},
               {0.0, (1.0 + param * param) * f * f, param * f},
               {0.0, param * f, 1.0}}};
    }
  }
  throw BadParams("unknown bundle chart model");
}

Mat2 section_pullback(const std::array<std::array<double, 3>, 3>& G, double om_u, double om_v) {
  double g00 = G[0][0] + 2.0 * G[0][2] * om_u + G[2][2] * om_u * om_u;
  double g01 = G[0][1] + G[0][2] * om_v + G[1][2] * om_u + G[2][2] * om_u * om_v;
  double g11 = G[1][1] + 2.0 * G[1][2] * om_v + G[2][2] * om_v * om_v;
  return {g00, g01, g01, g11};
}

namespace {

using Expected = std::map<std::string, ScalarField>;

ScalarField from_closure(std::function<double(double, double)> f) {
  return ScalarField::numeric(std::move(f));
}

Scenario build(std::string name, std::string summary, ChartPtr chart, ScalarField omega,
               Expected expected, Rect window) {
  Scenario s{std::move(name),
             std::move(summary),
             chart,
             UnitVectorField(chart, std::move(omega)),
             std::move(expected),
             {},
             window};
  return s;
}

Scenario flat_parallel_scenario() {
  auto chart = make_chart(ChartModel::flat);
  Expected e;
  for (const char* key : {"K", "lambda", "k", "kappa", "mu", "sigma", "om00", "om01", "om11",
                          "k_t1m", "det_om", "k_xi", "G12"})
    e.emplace(key, ScalarField::constant(0.0));
  e.emplace("G11", ScalarField::constant(1.0));
  e.emplace("G22", ScalarField::constant(1.0));
  return build("flat_parallel", "parallel field on the flat chart; image totally geodesic",
               chart, ScalarField::constant(0.0), std::move(e), {-2.0, 2.0, -2.0, 2.0});
}

Scenario flat_helical_scenario(double a, double b) {
  auto chart = make_chart(ChartModel::flat);
  expr::Params prm{{"a", a}, {"b", b}};
  Expected e;
  e.emplace("K", ScalarField::constant(0.0));
  e.emplace("lambda", ScalarField::constant(std::abs(a)));
  e.emplace("k", ScalarField::parse("a*sin(a*v+b)", prm));
  e.emplace("kappa", ScalarField::parse("-a*cos(a*v+b)", prm));
  e.emplace("mu", ScalarField::constant(0.0));
  e.emplace("sigma", ScalarField::constant(0.0));
  for (const char* key : {"om00", "om01", "om11", "k_t1m", "det_om", "k_xi", "G12"})
    e.emplace(key, ScalarField::constant(0.0));
  e.emplace("G11", ScalarField::constant(1.0));
  e.emplace("G22", ScalarField::constant(1.0 + a * a));
  Scenario s = build("flat_helical:" + trim_number(a) + "," + trim_number(b),
                     "angle a*v+b on the flat chart; flat totally geodesic image",
                     chart, ScalarField::parse("a*v+b", prm), std::move(e),
                     {-2.0, 2.0, -2.0, 2.0});
  s.facts["helix_angle"] = std::acos(1.0 / std::sqrt(1.0 + a * a));
  return s;
}

Scenario flat_polar_obstruction_scenario(double a) {
  auto chart = make_chart(ChartModel::flat_polar);
  expr::Params prm{{"a", a}};
  double sgn = (a + 1.0 >= 0.0) ? 1.0 : -1.0;
  Expected e;
  e.emplace("K", ScalarField::constant(0.0));
  e.emplace("om01", ScalarField::parse("-(a+1)/(u^2+(a+1)^2)", prm));
  e.emplace("lambda", ScalarField::parse("q/u", {{"q", std::abs(a + 1.0)}}));
  e.emplace("sigma", ScalarField::parse("-s0/u", {{"s0", sgn}}));
  e.emplace("mu", ScalarField::constant(0.0));
  e.emplace("om00", ScalarField::constant(0.0));
  return build("flat_polar_obstruction:" + trim_number(a),
               "candidate family a*v on the flat polar chart; shape operator vanishes "
               "only at a = -1",
               chart, ScalarField::parse("a*v", prm), std::move(e), {0.2, 3.0, 0.0, 6.2832});
}

Scenario sphere_tg_scenario() {
  auto chart = make_chart(ChartModel::sphere, 1.0);
  Expected e;
  e.emplace("K", ScalarField::constant(1.0));
  e.emplace("lambda", ScalarField::parse("(1+cos(u))/sin(u)"));
  e.emplace("k", ScalarField::parse("sin(v)*(1+cos(u))/sin(u)"));
  e.emplace("kappa", ScalarField::parse("-cos(v)*(1+cos(u))/sin(u)"));
  e.emplace("mu", ScalarField::constant(0.0));
  e.emplace("sigma", ScalarField::parse("-cos(u)/sin(u)"));
  for (const char* key : {"om00", "om01", "om11", "det_om", "G12"})
    e.emplace(key, ScalarField::constant(0.0));
  e.emplace("k_t1m", ScalarField::constant(0.25));
  e.emplace("k_xi", ScalarField::constant(0.25));
  e.emplace("G11", ScalarField::constant(1.0));
  e.emplace("G22", ScalarField::parse("2*(1+cos(u))"));
  return build("sphere_tg",
               "angle v on the unit spherical chart; totally geodesic image of constant "
               "curvature 1/4",
               chart, ScalarField::parse("v"), std::move(e), {0.2, kPi - 0.2, 0.0, 6.2832});
}

Scenario sphere_geodesic_scenario(double om0) {
  auto chart = make_chart(ChartModel::sphere, 1.0);
  Expected e;
  e.emplace("K", ScalarField::constant(1.0));
  e.emplace("lambda", from_closure([](double u, double) { return std::abs(1.0 / std::tan(u)); }));
  e.emplace("sigma", from_closure([](double u, double) { return -std::abs(1.0 / std::tan(u)); }));
  e.emplace("k", ScalarField::parse("k0*cos(u)/sin(u)", {{"k0", std::sin(om0)}}));
  e.emplace("kappa", ScalarField::parse("k1*cos(u)/sin(u)", {{"k1", -std::cos(om0)}}));
  e.emplace("mu", ScalarField::constant(0.0));
  e.emplace("om00", ScalarField::constant(0.0));
  e.emplace("om01", ScalarField::constant(-0.5));
  e.emplace("om11", ScalarField::constant(0.0));
  e.emplace("det_om", ScalarField::constant(-0.25));
  e.emplace("k_t1m", ScalarField::constant(0.25));
  e.emplace("k_xi", ScalarField::constant(0.0));
  e.emplace("G11", ScalarField::constant(1.0));
  e.emplace("G12", ScalarField::constant(0.0));
  e.emplace("G22", ScalarField::constant(1.0));
  return build("sphere_geodesic:" + trim_number(om0),
               "constant angle on the unit spherical chart; flat image",
               chart, ScalarField::constant(om0), std::move(e), {0.2, kPi - 0.2, 0.0, 6.2832});
}

Scenario sphere_obstruction_scenario(double r, double a) {
  auto chart = make_chart(ChartModel::sphere, r);
  expr::Params prm{{"r", r}, {"a", a}};
  Expected e;
  e.emplace("K", ScalarField::constant(1.0 / (r * r)));
  e.emplace("om01", ScalarField::parse(
                        "0.5*((1/r^2-1)*(a+cos(u/r))^2+a^2-1)/(r^2*sin(u/r)^2+(a+cos(u/r))^2)",
                        prm));
  e.emplace("lambda", from_closure([r, a](double u, double) {
              return std::abs(a + std::cos(u / r)) / (r * std::sin(u / r));
            }));
  e.emplace("mu", ScalarField::constant(0.0));
  e.emplace("om00", ScalarField::constant(0.0));
  return build("sphere_obstruction:" + trim_number(r) + "," + trim_number(a),
               "candidate family a*v on the spherical chart; shape operator vanishes only "
               "at r = 1, |a| = 1",
               chart, ScalarField::parse("a*v", {{"a", a}}), std::move(e),
               {0.2 * r, (kPi - 0.2) * r, 0.0, 6.2832});
}

Expected horocycle_expected(double c, double om0) {
  Expected e;
  e.emplace("K", ScalarField::constant(-c * c));
  e.emplace("lambda", ScalarField::constant(c));
  e.emplace("k", ScalarField::constant(c * std::sin(om0)));
  e.emplace("kappa", ScalarField::constant(-c * std::cos(om0)));
  e.emplace("mu", ScalarField::constant(0.0));
  e.emplace("sigma", ScalarField::constant(-c));
  e.emplace("om00", ScalarField::constant(0.0));
  e.emplace("om01", ScalarField::constant(-0.5 * c * c));
  e.emplace("om11", ScalarField::constant(0.0));
  e.emplace("det_om", ScalarField::constant(-0.25 * c * c * c * c));
  e.emplace("k_t1m", ScalarField::constant(0.25 * c * c * c * c - c * c));
  e.emplace("k_xi", ScalarField::constant(-c * c));
  e.emplace("G11", ScalarField::constant(1.0));
  e.emplace("G12", ScalarField::constant(0.0));
  e.emplace("G22", ScalarField::parse("g*exp(2*c*u)", {{"g", 1.0 + c * c}, {"c", c}}));
  return e;
}

Scenario horocycle_scenario(double c) {
  auto chart = make_chart(ChartModel::horocycle, c);
  return build("horocycle:" + trim_number(c),
               "geodesic field crossing the expansion lines of the horocycle chart; image "
               "curvature -c^2",
               chart, ScalarField::constant(0.0), horocycle_expected(c, 0.0),
               {-1.0, 1.0, -1.5, 1.5});
}

Scenario foliation_scenario(double c, double om0) {
  auto chart = make_chart(ChartModel::horocycle, c);
  return build("foliation:" + trim_number(c) + "," + trim_number(om0),
               "constant angle against the horocycle chart frame; curvature data "
               "independent of the angle",
               chart, ScalarField::constant(om0), horocycle_expected(c, om0),
               {-1.0, 1.0, -1.5, 1.5});
}

Scenario hyperbolic_obstruction_scenario(ObstructionModel model, double r, double a) {
  ChartModel cm;
  const char* stem;
  Rect window{0.0, 0.0, -1.0, 1.0};
  switch (model) {
    case ObstructionModel::hyp_exp:
      cm = ChartModel::hyperbolic_exp;
      stem = "hyp_exp_obstruction";
      window.u0 = 1.9 * r;
      window.u1 = 3.0 * r;
      break;
    case ObstructionModel::hyp_polar:
      cm = ChartModel::hyperbolic_polar;
      stem = "hyp_polar_obstruction";
      window.u0 = 0.75 * r;
      window.u1 = 1.5 * r;
      break;
    default:
      cm = ChartModel::hyperbolic_cartesian;
      stem = "hyp_cartesian_obstruction";
      window.u0 = 0.85 * r;
      window.u1 = 1.3 * r;
      break;
  }
  auto chart = make_chart(cm, r);
  Expected e;
  e.emplace("K", ScalarField::constant(-1.0 / (r * r)));
  e.emplace("om01", from_closure([model, r, a](double u, double) {
              return obstruction_omega01(model, r, a, u);
            }));
  e.emplace("mu", ScalarField::constant(0.0));
  e.emplace("om00", ScalarField::constant(0.0));
  return build(std::string(stem) + ":" + trim_number(r) + "," + trim_number(a),
               "candidate family a*v on a negatively curved chart; shape operator bounded "
               "away from zero",
               chart, ScalarField::parse("a*v", {{"a", a}}), std::move(e), window);
}

Scenario variable_curvature_scenario() {
  auto chart = make_chart(ChartModel::variable_bump);
  Expected e;
  e.emplace("K", ScalarField::parse("-(0.5+u^2/4)"));
  return build("variable_curvature",
               "generic angle on a chart of non-constant curvature; exercised by the "
               "cross-check suites",
               chart, ScalarField::parse("u+0.5*v"), std::move(e), {-1.0, 1.0, -1.0, 1.0});
}

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string token = text.substr(pos, next - pos);
    size_t used = 0;
    double value;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw BadParams("bad scenario parameter '" + token + "'");
    }
    if (used != token.size()) throw BadParams("bad scenario parameter '" + token + "'");
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

double arg_or(const std::vector<double>& args, size_t i, double fallback) {
  return i < args.size() ? args[i] : fallback;
}

}  // namespace

Scenario make_scenario(const std::string& spec) {
  std::string name = spec;
  std::vector<double> args;
  if (size_t colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    args = parse_params(spec.substr(colon + 1));
  }
  auto want = [&](size_t max_args) {
    if (args.size() > max_args)
      throw BadParams("scenario '" + name + "' takes at most " +
                      std::to_string(max_args) + " parameter(s)");
  };
  if (name == "flat_parallel") {
    want(0);
    return flat_parallel_scenario();
  }
  if (name == "flat_helical") {
    want(2);
    return flat_helical_scenario(arg_or(args, 0, 1.0), arg_or(args, 1, 0.0));
  }
  if (name == "flat_polar_obstruction") {
    want(1);
    return flat_polar_obstruction_scenario(arg_or(args, 0, 0.0));
  }
  if (name == "sphere_tg") {
    want(0);
    return sphere_tg_scenario();
  }
  if (name == "sphere_geodesic") {
    want(1);
    return sphere_geodesic_scenario(arg_or(args, 0, 0.0));
  }
  if (name == "sphere_obstruction") {
    want(2);
    return sphere_obstruction_scenario(arg_or(args, 0, 1.0), arg_or(args, 1, 0.0));
  }
  if (name == "horocycle") {
    want(1);
    return horocycle_scenario(arg_or(args, 0, 1.0));
  }
  if (name == "foliation") {
    want(2);
    return foliation_scenario(arg_or(args, 0, 1.0), arg_or(args, 1, 0.0));
  }
  if (name == "hyp_exp_obstruction") {
    want(2);
    return hyperbolic_obstruction_scenario(ObstructionModel::hyp_exp, arg_or(args, 0, 1.0),
                                           arg_or(args, 1, 0.0));
  }
  if (name == "hyp_polar_obstruction") {
    want(2);
    return hyperbolic_obstruction_scenario(ObstructionModel::hyp_polar, arg_or(args, 0, 1.0),
                                           arg_or(args, 1, 0.0));
  }
  if (name == "hyp_cartesian_obstruction") {
    want(2);
    return hyperbolic_obstruction_scenario(ObstructionModel::hyp_cartesian,
                                           arg_or(args, 0, 1.0), arg_or(args, 1, 0.0));
  }
  if (name == "variable_curvature") {
    want(0);
    return variable_curvature_scenario();
  }
  throw BadParams("unknown scenario '" + name + "'");
}

const std::vector<ScenarioInfo>& list_scenarios() {
  static const std::vector<ScenarioInfo> infos = {
      {"flat_parallel", "parallel field on the flat chart (everything vanishes)"},
      {"flat_helical:a,b", "angle a*v+b on the flat chart; flat image, lambda = |a|"},
      {"flat_polar_obstruction:a", "family a*v on the flat polar chart; om01 = 0 iff a = -1"},
      {"sphere_tg", "angle v on the unit spherical chart; totally geodesic, K_xi = 1/4"},
      {"sphere_geodesic:omega0", "constant angle on the unit spherical chart; flat image"},
      {"sphere_obstruction:r,a", "family a*v on the spherical chart; om01 = 0 iff r=1, |a|=1"},
      {"horocycle:c", "geodesic field on the horocycle chart; K_xi = -c^2"},
      {"foliation:c,omega0", "constant angle on the horocycle chart; K_xi = -c^2 for every "
                             "angle"},
      {"hyp_exp_obstruction:r,a", "family a*v, exponential hyperbolic chart; |om01| > 0.1"},
      {"hyp_polar_obstruction:r,a", "family a*v, polar hyperbolic chart; |om01| > 0.1"},
      {"hyp_cartesian_obstruction:r,a", "family a*v, Cartesian hyperbolic chart; |om01| > 0.1"},
      {"variable_curvature", "generic field on a chart with non-constant curvature"},
  };
  return infos;
}

double pipeline_value(const UnitVectorField& field, const Point2& p, const std::string& key,
                      const DiffConfig& cfg) {
  if (key == "G11" || key == "G12" || key == "G22") {
    Mat2 G = induced_metric(field, p, cfg);
    return key == "G11" ? G.m00 : key == "G12" ? G.m01 : G.m11;
  }
  ReportOptions opts;
  opts.with_oracle = false;
  opts.cfg = cfg;
  CurvatureReport r = compute_report(field, p, opts);
  if (key == "K") return r.K;
  if (key == "lambda") return r.lambda;
  if (key == "k") return r.k;
  if (key == "kappa") return r.kappa;
  if (key == "mu") return r.mu;
  if (key == "sigma") return r.sigma;
  if (key == "om00") return r.omega.m00;
  if (key == "om01") return r.omega.m01;
  if (key == "om11") return r.omega.m11;
  if (key == "k_t1m") return r.k_t1m;
  if (key == "det_om") return r.det_omega;
  if (key == "k_xi") return r.k_xi;
  throw BadParams("unknown report quantity '" + key + "'");
}

double angle_slope_identity_residual(const UnitVectorField& field, const Point2& p,
                                     const DiffConfig& cfg) {
  SingularFrame fr = singular_frame(field, p, cfg);
  FrameCurvatures fc = frame_curvatures(field, p, cfg);
  double e1_om = scalar_derivative(field.chart(), fr.e1, field.omega(), p, cfg);
  return fr.lambda - (e1_om - fc.sigma);
}

}  // namespace unitfield
