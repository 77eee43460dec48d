#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "unitfield/catalog.hpp"
#include "unitfield/chart_file.hpp"
#include "unitfield/errors.hpp"
#include "unitfield/grid.hpp"
#include "unitfield/report.hpp"
#include "unitfield/run.hpp"
#include "unitfield/verify.hpp"

using namespace unitfield;

TEST_CASE("chart files parse") {
  ChartPtr horo = parse_chart_text(
      "# curvature -1 profile\n"
      "kind=semi_geodesic\n"
      "\n"
      "f = exp(u)   # profile factor\n"
      "domain = -1.5, 1.5, -2, 2\n");
  CHECK(horo->kind() == ChartKind::semi_geodesic);
  CHECK(horo->domain().u1 == 1.5);
  CHECK(gauss_curvature(*horo, {0.2, 0.3}) == doctest::Approx(-1.0).epsilon(1e-12));

  ChartPtr gen = parse_chart_text(
      "kind=general\n"
      "g11=1\n"
      "g12=0\n"
      "g22=exp(2*u)\n"
      "domain=-1.5,1.5,-2,2\n");
  CHECK(gen->kind() == ChartKind::general);
  for (const Point2& p : {Point2{0.2, 0.3}, Point2{-0.7, 1.1}})
    CHECK(gauss_curvature(*gen, p) == doctest::Approx(gauss_curvature(*horo, p)).epsilon(1e-9));
}

TEST_CASE("chart file errors carry the offending line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_chart_text(text);
    } catch (const ParseError& e) {
      return e.position;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK_THROWS_AS(parse_chart_text("f=1\ndomain=0,1,0,1\n"), ParseError);  // no kind
  CHECK(line_of("kind=polar\nf=1\ndomain=0,1,0,1\n") == 0);
  CHECK(line_of("kind=semi_geodesic\nradius=2\n") == 1);              // unknown key
  CHECK(line_of("kind=semi_geodesic\nf=1\nf=2\n") == 2);              // duplicate
  CHECK(line_of("kind=semi_geodesic\nf=1\ndomain=0,1,0\n") == 2);     // short domain
  CHECK(line_of("kind=semi_geodesic\nf=1\ndomain=0,1,0,1,2\n") == 2); // long domain
  CHECK(line_of("kind=semi_geodesic\nf=1\ndomain=1,0,0,1\n") == 2);   // inverted
  CHECK(line_of("kind=semi_geodesic\nf=1\ng22=4\ndomain=0,1,0,1\n") == 2);
  CHECK(line_of("kind=general\ng11=1\ng12=0\ng22=u^\ndomain=0,1,0,1\n") == 3);
  CHECK_THROWS_AS(parse_chart_text("kind=general\ng11=1\ng12=0\ndomain=0,1,0,1\n"), ParseError);
  CHECK_THROWS_AS(load_chart_file("/nonexistent/path.chart"), Error);

  const char* path = "io_roundtrip.chart";
  {
    std::ofstream out(path);
    out << "kind=semi_geodesic\nf=sin(u)\ndomain=0.05," << 3.09 << ",-8,8\n";
  }
  ChartPtr sphere = load_chart_file(path);
  CHECK(gauss_curvature(*sphere, {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
  std::remove(path);
}

TEST_CASE("grid lattice layout") {
  std::vector<Point2> pts = grid_points({0.0, 1.0, 10.0, 12.0}, 3, 2);
  REQUIRE(pts.size() == 6);
  CHECK(pts[0].u == 0.0);
  CHECK(pts[0].v == 10.0);
  CHECK(pts[1].u == 0.0);  // v varies fastest: u-major rows
  CHECK(pts[1].v == 12.0);
  CHECK(pts[4].u == 1.0);
  CHECK(pts[5].v == 12.0);
  CHECK_THROWS_AS(grid_points({0, 1, 0, 1}, 1, 5), BadParams);
  CHECK_THROWS_AS(grid_points({0, 1, 1, 0}, 3, 3), BadParams);
}

TEST_CASE("parallel grid equals the serial reference") {
  Scenario s = make_scenario("foliation:1,0.7");
  std::vector<CurvatureReport> a = evaluate_grid(s.field, s.window, 5, 4);
  std::vector<CurvatureReport> b = evaluate_grid_serial(s.field, s.window, 5, 4);
  CHECK(render_csv(a) == render_csv(b));

  GridSummary sum = summarize(a, 5, 4);
  CHECK(sum.n_points == 20);
  CHECK(sum.n_failed == 0);
  CHECK(sum.n_degenerate == 0);
  CHECK(sum.totally_geodesic == false);
  CHECK(sum.k_xi.max == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sum.k_xi.min == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sum.resid_identity.max < 1e-12);
}

TEST_CASE("summary counts degenerate frames") {
  // the parallel flat field has a vanishing derivative everywhere
  Scenario s = make_scenario("flat_parallel");
  std::vector<CurvatureReport> rows = evaluate_grid(s.field, s.window, 3, 3);
  GridSummary sum = summarize(rows, 3, 3);
  CHECK(sum.n_degenerate == 9);
  CHECK(sum.totally_geodesic == true);
  CHECK(sum.max_abs_omega == 0.0);
}

TEST_CASE("csv contract") {
  Scenario s = make_scenario("sphere_tg");
  std::vector<CurvatureReport> rows = evaluate_grid(s.field, s.window, 2, 2);
  std::string csv = render_csv(rows);
  std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "u,v,K,lambda,k,kappa,mu,sigma,s,om00,om01,om11,k_t1m,det_om,k_xi,"
        "k_xi_oracle,resid_forms,resid_oracle");
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 5);  // header + 4 rows
  // values survive a text round trip exactly
  std::string first_row = csv.substr(csv.find('\n') + 1);
  first_row = first_row.substr(0, first_row.find(','));
  CHECK(std::stod(first_row) == rows[0].p.u);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-0.25) == "-0.25");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(std::stod(format_number(kPi)) == kPi);
}

TEST_CASE("plotdata blocks") {
  Scenario s = make_scenario("horocycle:1");
  std::vector<CurvatureReport> rows = evaluate_grid(s.field, s.window, 4, 3);
  std::string text = render_plotdata(rows);
  CHECK(text.rfind("# u v k_xi det_om lambda\n", 0) == 0);
  int blanks = 0;
  for (std::size_t i = 1; i < text.size(); ++i)
    if (text[i] == '\n' && text[i - 1] == '\n') ++blanks;
  CHECK(blanks == 3);  // one separator between each pair of u-blocks
}

TEST_CASE("json shape") {
  RunSpec spec;
  spec.scenario = "flat_helical:1";
  spec.nu = 2;
  spec.nv = 2;
  RunResult rr = run_grid(spec);
  nlohmann::ordered_json doc = result_json(rr);
  REQUIRE(doc.contains("spec"));
  REQUIRE(doc.contains("points"));
  REQUIRE(doc.contains("summary"));
  CHECK(doc["spec"]["label"] == "flat_helical:1,0");
  CHECK(doc["spec"]["kind"] == "grid");
  CHECK(doc["points"].size() == 4);
  for (const char* key : {"u", "v", "K", "lambda", "k", "kappa", "mu", "sigma", "s",
                          "degenerate", "om00", "om01", "om11", "k_t1m", "det_om", "k_xi",
                          "k_xi_oracle", "resid_forms", "resid_oracle", "resid_identity",
                          "resid_gradient_norm", "resid_curvature_link"})
    CHECK(doc["points"][0].contains(key));
  CHECK(doc["summary"]["n_points"] == 4);
  CHECK(doc["summary"]["k_xi"].contains("mean"));

  // oracle columns are null when skipped
  RunSpec no_oracle = spec;
  no_oracle.with_oracle = false;
  nlohmann::ordered_json doc2 = result_json(run_grid(no_oracle));
  CHECK(doc2["points"][0]["k_xi_oracle"].is_null());
  CHECK(doc2["points"][0]["resid_oracle"].is_null());
}

TEST_CASE("run spec validation") {
  RunSpec both;
  both.scenario = "sphere_tg";
  both.chart_file = "x.chart";
  CHECK_THROWS_AS(resolve(both), UsageError);
  CHECK_THROWS_AS(resolve(RunSpec{}), UsageError);
  RunSpec chart_only;
  chart_only.chart_file = "x.chart";
  CHECK_THROWS_AS(resolve(chart_only), UsageError);  // no omega
  RunSpec angle_clash;
  angle_clash.scenario = "sphere_tg";
  angle_clash.omega = "v";
  CHECK_THROWS_AS(resolve(angle_clash), UsageError);
  RunSpec missing_point;
  missing_point.scenario = "sphere_tg";
  CHECK_THROWS_AS(run_point(missing_point), UsageError);
}

TEST_CASE("point run pins the horocycle example") {
  RunSpec spec;
  spec.scenario = "horocycle:1";
  spec.point = Point2{0.0, 0.0};
  RunResult rr = run_point(spec);
  REQUIRE(rr.points.size() == 1);
  const CurvatureReport& r = rr.points[0];
  CHECK(r.K == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.omega.m01 == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(r.k_xi == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(r.resid_oracle) < 1e-4);
}

TEST_CASE("repeated runs emit identical bytes") {
  RunSpec spec;
  spec.scenario = "variable_curvature";
  spec.nu = 4;
  spec.nv = 4;
  RunResult a = run_grid(spec);
  RunResult b = run_grid(spec);
  CHECK(render(a, OutputFormat::json) == render(b, OutputFormat::json));
  CHECK(render(a, OutputFormat::csv) == render(b, OutputFormat::csv));
  CHECK(render(a, OutputFormat::plotdata) == render(b, OutputFormat::plotdata));
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("table") == OutputFormat::table);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("plotdata") == OutputFormat::plotdata);
  CHECK_THROWS_AS(parse_format("yaml"), UsageError);
  CHECK_THROWS_AS(run_suite("everything"), UsageError);
}
