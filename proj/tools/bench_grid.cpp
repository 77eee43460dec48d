// Times the grid evaluator: OpenMP-parallel path vs the serial reference,
// and checks that both emit identical bytes.
#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "unitfield/catalog.hpp"
#include "unitfield/grid.hpp"
#include "unitfield/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace unitfield;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(std::vector<CurvatureReport> (*eval)(const UnitVectorField&, const Rect&, int, int,
                                                   const ReportOptions&),
              const Scenario& s, int n, const ReportOptions& opts,
              std::vector<CurvatureReport>& out) {
  auto t0 = Clock::now();
  out = eval(s.field, s.window, n, n, opts);
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel grid evaluation benchmark"};
  std::string scenario = "foliation:1,0.7";
  int n = 48;
  int reps = 3;
  app.add_option("--scenario", scenario, "catalog scenario");
  app.add_option("--n", n, "lattice is n x n");
  app.add_option("--reps", reps, "repetitions (best time wins)");
  CLI11_PARSE(app, argc, argv);

  Scenario s = make_scenario(scenario);
  ReportOptions opts;

#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: compiled out (parallel path falls back to the plain loop)\n");
#endif
  std::printf("scenario %s, %dx%d lattice, %d rep(s)\n", s.name.c_str(), n, n, reps);

  std::vector<CurvatureReport> serial_rows, parallel_rows;
  double serial_best = 1e300, parallel_best = 1e300;
  for (int r = 0; r < reps; ++r) {
    serial_best = std::min(serial_best, run_ms(evaluate_grid_serial, s, n, opts, serial_rows));
    parallel_best = std::min(parallel_best, run_ms(evaluate_grid, s, n, opts, parallel_rows));
  }

  std::string a = render_csv(serial_rows);
  std::string b = render_csv(parallel_rows);
  std::printf("serial   %8.1f ms\n", serial_best);
  std::printf("parallel %8.1f ms   speedup %.2fx\n", parallel_best, serial_best / parallel_best);
  std::printf("outputs: %s\n", a == b ? "byte-identical" : "DIFFER");
  return a == b ? 0 : 1;
}
