#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "unitfield/catalog.hpp"
#include "unitfield/errors.hpp"
#include "unitfield/report.hpp"
#include "unitfield/run.hpp"
#include "unitfield/verify.hpp"

namespace {

using namespace unitfield;

Point2 parse_point(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--point expects u,v");
  try {
    std::size_t used = 0;
    double u = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw UsageError("--point expects u,v");
    std::string rest = text.substr(comma + 1);
    double v = std::stod(rest, &used);
    if (used != rest.size()) throw UsageError("--point expects u,v");
    return {u, v};
  } catch (const std::logic_error&) {
    throw UsageError("--point expects u,v");
  }
}

void parse_grid_size(const std::string& text, int& nu, int& nv) {
  std::size_t x = text.find('x');
  if (x == std::string::npos) throw UsageError("--grid expects NUxNV, e.g. 20x20");
  try {
    std::size_t used = 0;
    nu = std::stoi(text.substr(0, x), &used);
    if (used != x) throw UsageError("--grid expects NUxNV");
    std::string rest = text.substr(x + 1);
    nv = std::stoi(rest, &used);
    if (used != rest.size()) throw UsageError("--grid expects NUxNV");
  } catch (const std::logic_error&) {
    throw UsageError("--grid expects NUxNV");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + out_path + "'");
  out << text;
}

struct CommonFlags {
  std::string scenario, chart, omega, point, grid = "20x20", format, out;
  double h = 0.0, tol = 0.0, margin = 0.05;
};

void add_source_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->set_help_flag("--help", "print help");  // frees -h for the step flag
  cmd->add_option("--scenario", f.scenario, "catalog scenario, NAME or NAME:params");
  cmd->add_option("--chart", f.chart, "chart definition file");
  cmd->add_option("--omega", f.omega, "angle expression over u,v (with --chart)");
  cmd->add_option("--h", f.h, "finite-difference step override");
  cmd->add_option("--tol", f.tol, "tolerance override (verdicts and residual gates)");
  cmd->add_option("--out", f.out, "write output to a file instead of stdout");
}

RunSpec build_spec(const CommonFlags& f) {
  RunSpec spec;
  spec.scenario = f.scenario;
  spec.chart_file = f.chart;
  spec.omega = f.omega;
  spec.margin = f.margin;
  if (f.h > 0.0) {
    spec.cfg.h = f.h;
    spec.cfg.h2 = 10.0 * f.h;  // keep the default first/second-order ratio
  }
  if (f.tol > 0.0) {
    spec.verdict_tol = f.tol;
    spec.cfg.tol_closed_form = f.tol;
    spec.cfg.tol_oracle = f.tol;
  }
  return spec;
}

int dispatch(CLI::App& app, const CommonFlags& f, const std::string& suite) {
  if (app.got_subcommand("analyze")) {
    RunSpec spec = build_spec(f);
    spec.point = parse_point(f.point);
    RunResult r = run_point(spec);
    emit(render(r, parse_format(f.format.empty() ? "table" : f.format)), f.out);
    return 0;
  }
  if (app.got_subcommand("grid")) {
    RunSpec spec = build_spec(f);
    parse_grid_size(f.grid, spec.nu, spec.nv);
    RunResult r = run_grid(spec);
    emit(render(r, parse_format(f.format.empty() ? "table" : f.format)), f.out);
    return 0;
  }
  if (app.got_subcommand("verify")) {
    SuiteResult s = run_suite(suite);
    std::string format = f.format.empty() ? "table" : f.format;
    if (format == "table")
      emit(render_suite_table(s), f.out);
    else if (format == "json")
      emit(suite_json(s).dump(2) + "\n", f.out);
    else
      throw UsageError("verify supports --format table|json");
    return s.pass ? 0 : 1;
  }
  // list-scenarios
  std::string format = f.format.empty() ? "table" : f.format;
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const ScenarioInfo& info : list_scenarios())
      doc.push_back({{"pattern", info.pattern}, {"summary", info.summary}});
    emit(doc.dump(2) + "\n", f.out);
  } else {
    std::string text;
    for (const ScenarioInfo& info : list_scenarios()) {
      char line[160];
      std::snprintf(line, sizeof line, "%-32s %s\n", info.pattern.c_str(),
                    info.summary.c_str());
      text += line;
    }
    emit(text, f.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature analysis of unit vector fields as surfaces in the unit tangent bundle"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string suite = "all";

  CLI::App* analyze = app.add_subcommand("analyze", "full curvature report at one point");
  add_source_flags(analyze, f);
  analyze->add_option("--point", f.point, "evaluation point u,v")->required();
  analyze->add_option("--format", f.format, "table|json|csv|plotdata");

  CLI::App* grid = app.add_subcommand("grid", "curvature reports over a lattice");
  add_source_flags(grid, f);
  grid->add_option("--grid", f.grid, "lattice size NUxNV (default 20x20)");
  grid->add_option("--margin", f.margin, "window inset as a fraction of each extent");
  grid->add_option("--format", f.format, "table|json|csv|plotdata");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "identities|theorems|determinism|all");
  verify->add_option("--format", f.format, "table|json");
  verify->add_option("--out", f.out, "write output to a file instead of stdout");

  CLI::App* list = app.add_subcommand("list-scenarios", "catalog scenarios and parameters");
  list->add_option("--format", f.format, "table|json");
  list->add_option("--out", f.out, "write output to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    return dispatch(app, f, suite);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
