#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "unitfield/run.hpp"

namespace unitfield {

enum class OutputFormat { table, json, csv, plotdata };

// Accepts "table", "json", "csv", "plotdata"; throws UsageError otherwise.
OutputFormat parse_format(const std::string& name);

// Shortest round-trip decimal form (17 significant digits), used for every
// floating-point value we emit so identical runs emit identical bytes.
std::string format_number(double x);

// Fixed column set; one row per report, in input order.  The header line is
// part of the output contract and never changes:
//   u,v,K,lambda,k,kappa,mu,sigma,s,om00,om01,om11,k_t1m,det_om,k_xi,
//   k_xi_oracle,resid_forms,resid_oracle
std::string render_csv(const std::vector<CurvatureReport>& rows);

// Five whitespace-separated columns (u, v, k_xi, det_om, lambda) with a blank
// line between consecutive u-blocks, the layout surface plotters expect.
std::string render_plotdata(const std::vector<CurvatureReport>& rows);

// Human-readable fixed-width table plus a summary block.
std::string render_table(const RunResult& result);

// {spec, points, summary} with snake_case keys throughout.
nlohmann::ordered_json result_json(const RunResult& result);

std::string render(const RunResult& result, OutputFormat format);

}  // namespace unitfield
