#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "unitfield/catalog.hpp"
#include "unitfield/errors.hpp"

using namespace unitfield;

namespace {

// Interior sampling of a scenario window.
std::vector<Point2> window_samples(const Scenario& s, int nu, int nv) {
  std::vector<Point2> out;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j)
      out.push_back({s.window.u0 + (i + 0.5) * (s.window.u1 - s.window.u0) / nu,
                     s.window.v0 + (j + 0.5) * (s.window.v1 - s.window.v0) / nv});
  return out;
}

}  // namespace

TEST_CASE("model charts carry their declared curvature") {
  struct Case {
    ChartModel model;
    double param, want;
  };
  for (const Case& c : {Case{ChartModel::flat, 1.0, 0.0},
                        Case{ChartModel::flat_polar, 1.0, 0.0},
                        Case{ChartModel::sphere, 1.0, 1.0},
                        Case{ChartModel::sphere, 2.0, 0.25},
                        Case{ChartModel::hyperbolic_exp, 1.0, -1.0},
                        Case{ChartModel::hyperbolic_polar, 2.0, -0.25},
                        Case{ChartModel::hyperbolic_cartesian, 1.0, -1.0},
                        Case{ChartModel::horocycle, 1.5, -2.25}}) {
    ChartPtr chart = make_chart(c.model, c.param);
    Point2 p{0.5 * (chart->domain().u0 + chart->domain().u1), 0.1};
    CHECK(gauss_curvature(*chart, p) == doctest::Approx(c.want).epsilon(1e-11));
  }
  // non-constant model
  ChartPtr bump = make_chart(ChartModel::variable_bump);
  CHECK(gauss_curvature(*bump, {0.8, 0.0}) == doctest::Approx(-(0.5 + 0.16)).epsilon(1e-12));

  CHECK_THROWS_AS(make_chart(ChartModel::sphere, 0.0), BadParams);
  CHECK_THROWS_AS(make_chart(ChartModel::horocycle, -1.0), BadParams);
}

TEST_CASE("closed-form shape entries match the pipeline") {
  struct Case {
    ObstructionModel model;
    const char* scenario;
    double r, a;
  };
  std::vector<Case> cases = {
      {ObstructionModel::hyp_exp, "hyp_exp_obstruction", 1.0, 0.0},
      {ObstructionModel::hyp_exp, "hyp_exp_obstruction", 1.5, 2.0},
      {ObstructionModel::hyp_exp, "hyp_exp_obstruction", 1.0, -3.0},
      {ObstructionModel::hyp_polar, "hyp_polar_obstruction", 1.0, 0.0},
      {ObstructionModel::hyp_polar, "hyp_polar_obstruction", 1.0, -1.0},
      {ObstructionModel::hyp_polar, "hyp_polar_obstruction", 2.0, 1.0},
      {ObstructionModel::hyp_cartesian, "hyp_cartesian_obstruction", 1.0, 0.0},
      {ObstructionModel::hyp_cartesian, "hyp_cartesian_obstruction", 1.0, -2.0},
      {ObstructionModel::sphere, "sphere_obstruction", 1.0, 0.5},
      {ObstructionModel::sphere, "sphere_obstruction", 2.0, -1.0},
      {ObstructionModel::flat_polar, "flat_polar_obstruction", 1.0, 2.0},
  };
  for (const Case& c : cases) {
    std::string spec = c.model == ObstructionModel::flat_polar
                           ? std::string(c.scenario) + ":" + std::to_string(c.a)
                           : std::string(c.scenario) + ":" + std::to_string(c.r) + "," +
                                 std::to_string(c.a);
    Scenario s = make_scenario(spec);
    CAPTURE(spec);
    for (const Point2& p : window_samples(s, 4, 2)) {
      double closed = obstruction_omega01(c.model, c.r, c.a, p.u);
      double computed = pipeline_value(s.field, p, "om01");
      CHECK(closed == doctest::Approx(computed).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("shape entry spot values") {
  // Independently recomputed reference: -1/2 (2 cosh^2 1 + 1)/(sinh^2 1 + cosh^2 1).
  CHECK(obstruction_omega01(ObstructionModel::hyp_polar, 1.0, 0.0, 1.0) ==
        doctest::Approx(-0.76580222883408).epsilon(1e-13));
  // vanishing families
  for (double u : {0.4, 1.0, 2.6}) {
    CHECK(obstruction_omega01(ObstructionModel::sphere, 1.0, 1.0, u) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(obstruction_omega01(ObstructionModel::sphere, 1.0, -1.0, u) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(obstruction_omega01(ObstructionModel::flat_polar, 1.0, -1.0, u) ==
          doctest::Approx(0.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(obstruction_omega01(ObstructionModel::hyp_polar, -1.0, 0.0, 1.0), BadParams);
  CHECK_THROWS_AS(obstruction_omega01(ObstructionModel::flat_polar, 1.0, 0.0, -2.0), BadParams);
}

TEST_CASE("negatively curved families never reach zero") {
  // min over the scenario window stays above 0.1 for every integer a in
  // [-3, 3]; continuous minima over the windows are 0.1559 / 0.1138 / 0.1172.
  struct Case {
    const char* scenario;
    double floor;
  };
  for (const Case& c : {Case{"hyp_exp_obstruction", 0.1558},
                        Case{"hyp_polar_obstruction", 0.1138},
                        Case{"hyp_cartesian_obstruction", 0.1171}}) {
    double global_min = 1e300;
    for (int a = -3; a <= 3; ++a) {
      Scenario s = make_scenario(std::string(c.scenario) + ":1," + std::to_string(a));
      for (const Point2& p : window_samples(s, 24, 1)) {
        double om01 = pipeline_value(s.field, p, "om01");
        global_min = std::min(global_min, std::abs(om01));
      }
    }
    CAPTURE(c.scenario);
    CHECK(global_min > 0.1);
    CHECK(global_min >= c.floor);
  }
}

TEST_CASE("bundle chart fixtures") {
  SUBCASE("match the lift machinery") {
    ChartPtr sphere = make_chart(ChartModel::sphere, 1.0);
    ChartPtr horo = make_chart(ChartModel::horocycle, 0.7);
    for (double u : {0.5, 1.2}) {
      Point2 p{u, 0.3};
      auto fix_s = t1m_coordinate_metric(BundleChartModel::sphere_unit, 1.0, p, 0.4);
      auto lift_s = bundle_coordinate_gram(*sphere, p, 0.4);
      auto fix_h = t1m_coordinate_metric(BundleChartModel::hyperbolic_c, 0.7, p, 1.1);
      auto lift_h = bundle_coordinate_gram(*horo, p, 1.1);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          CHECK(fix_s[i][j] == doctest::Approx(lift_s[i][j]).epsilon(1e-10).scale(1.0));
          CHECK(fix_h[i][j] == doctest::Approx(lift_h[i][j]).epsilon(1e-10).scale(1.0));
        }
    }
  }
  SUBCASE("cross term dies on the equator") {
    auto G = t1m_coordinate_metric(BundleChartModel::sphere_unit, 1.0, {kPi / 2, 0.0}, 0.0);
    CHECK(std::abs(G[1][2]) < 1e-15);
  }
  SUBCASE("section pullbacks reproduce the induced metric") {
    // angle v over the unit sphere: diag(1, 2(1+cos u))
    Scenario tg = make_scenario("sphere_tg");
    Point2 p{1.1, 0.4};
    auto G = t1m_coordinate_metric(BundleChartModel::sphere_unit, 1.0, p, p.v);
    Mat2 pulled = section_pullback(G, 0.0, 1.0);  // om = v
    CHECK(pulled.m00 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(pulled.m01) < 1e-13);
    CHECK(pulled.m11 == doctest::Approx(2 * (1 + std::cos(p.u))).epsilon(1e-13));
    Mat2 direct = induced_metric(tg.field, p);
    CHECK(pulled.m11 == doctest::Approx(direct.m11).epsilon(1e-10));

    // constant angle over the horocycle chart: diag(1, (1+c^2) e^{2cu})
    const double c = 2.0;
    Scenario fol = make_scenario("foliation:2,0.3");
    auto H = t1m_coordinate_metric(BundleChartModel::hyperbolic_c, c, p, 0.3);
    Mat2 pulled_h = section_pullback(H, 0.0, 0.0);  // om = const
    CHECK(pulled_h.m00 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(pulled_h.m01) < 1e-13);
    CHECK(pulled_h.m11 == doctest::Approx((1 + c * c) * std::exp(2 * c * p.u)).epsilon(1e-13));
    Mat2 direct_h = induced_metric(fol.field, p);
    CHECK(pulled_h.m11 == doctest::Approx(direct_h.m11).epsilon(1e-10));
  }
  CHECK_THROWS_AS(t1m_coordinate_metric(BundleChartModel::hyperbolic_c, 0.0, {0.0, 0.0}, 0.0),
                  BadParams);
}

TEST_CASE("angle-slope identity on u-parallel fields") {
  // lambda = e1(omega) - sigma whenever the angle has no u-dependence.
  for (const char* spec : {"sphere_tg", "sphere_geodesic:0.8", "horocycle:1.3",
                           "foliation:0.9,0.5", "flat_helical:2,0.4",
                           "hyp_polar_obstruction:1,2", "hyp_exp_obstruction:1,-1",
                           "hyp_cartesian_obstruction:1,1", "flat_polar_obstruction:1.5",
                           "sphere_obstruction:1,0.5"}) {
    Scenario s = make_scenario(spec);
    CAPTURE(spec);
    for (const Point2& p : window_samples(s, 3, 3))
      CHECK(std::abs(angle_slope_identity_residual(s.field, p)) < 1e-8);
  }
}

TEST_CASE("expected maps are reproduced by the pipeline") {
  // The maps describe the field away from its singular set (lambda = 0), where
  // the adapted frame -- and with it the off-diagonal shape entry -- is only
  // defined as a limit.  Skip samples that land on it exactly.
  auto check_scenario = [](const Scenario& s, int nu, int nv) {
    double worst = 0.0;
    for (const Point2& p : window_samples(s, nu, nv)) {
      if (pipeline_value(s.field, p, "lambda") < 1e-9) continue;
      for (const auto& [key, field] : s.expected)
        worst = std::max(worst, std::abs(field(p) - pipeline_value(s.field, p, key)));
    }
    CHECK(worst < 1e-6);
  };
  for (const ScenarioInfo& info : list_scenarios()) {
    std::string name = info.pattern.substr(0, info.pattern.find(':'));
    CAPTURE(name);
    check_scenario(make_scenario(name), 5, 4);  // defaults
  }
  // a couple of non-default parameter sets
  for (const char* spec : {"foliation:2,1.1", "flat_helical:2,0", "horocycle:0.5",
                           "sphere_obstruction:2,-1"}) {
    CAPTURE(spec);
    check_scenario(make_scenario(spec), 4, 3);
  }
}

TEST_CASE("scenario parsing") {
  CHECK(make_scenario("foliation:1,0.7").name == "foliation:1,0.7");
  CHECK(make_scenario("foliation").name == "foliation:1,0");  // defaults
  CHECK(make_scenario("horocycle:2").name == "horocycle:2");
  CHECK(make_scenario("flat_helical:2").name == "flat_helical:2,0");
  CHECK_THROWS_AS(make_scenario("unknown_name"), BadParams);
  CHECK_THROWS_AS(make_scenario("horocycle:abc"), BadParams);
  CHECK_THROWS_AS(make_scenario("horocycle:1,2"), BadParams);  // too many
  CHECK_THROWS_AS(make_scenario("horocycle:-1"), BadParams);   // bad rate
  CHECK_THROWS_AS(make_scenario("foliation:1,0.7,9"), BadParams);

  Scenario helical = make_scenario("flat_helical:1,0");
  CHECK(helical.facts.at("helix_angle") == doctest::Approx(kPi / 4).epsilon(1e-13));
  CHECK(make_scenario("flat_helical:2,0").expected.at("G22")(Point2{0, 0}) ==
        doctest::Approx(5.0).epsilon(1e-13));

  CHECK(list_scenarios().size() == 12);
  CHECK_THROWS_AS(pipeline_value(make_scenario("flat_parallel").field, {0.0, 0.0}, "nope"),
                  BadParams);
}
