#include "unitfield/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "unitfield/errors.hpp"

namespace unitfield {

namespace {

const char* kCsvHeader =
    "u,v,K,lambda,k,kappa,mu,sigma,s,om00,om01,om11,k_t1m,det_om,k_xi,"
    "k_xi_oracle,resid_forms,resid_oracle";

// Column accessors shared by the CSV and table renderers (minus s, which is
// an integer and handled separately).
double column_value(const CurvatureReport& r, int col) {
  switch (col) {
    case 0: return r.p.u;
    case 1: return r.p.v;
    case 2: return r.K;
    case 3: return r.lambda;
    case 4: return r.k;
    case 5: return r.kappa;
    case 6: return r.mu;
    case 7: return r.sigma;
    case 8: return r.omega.m00;
    case 9: return r.omega.m01;
    case 10: return r.omega.m11;
    case 11: return r.k_t1m;
    case 12: return r.det_omega;
    case 13: return r.k_xi;
    case 14: return r.k_xi_oracle;
    case 15: return r.resid_forms;
    default: return r.resid_oracle;
  }
}

// NaN marks a skipped or failed evaluation; emit a JSON null rather than the
// bare NaN nlohmann would silently serialize as null while still reporting a
// number type to readers of the DOM.
nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

void stat_json(nlohmann::ordered_json& parent, const char* key, const Stat& s) {
  parent[key] = {{"min", json_number(s.min)},
                 {"max", json_number(s.max)},
                 {"mean", json_number(s.mean)},
                 {"count", s.count}};
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "plotdata") return OutputFormat::plotdata;
  throw UsageError("unknown format '" + name + "' (expected table|json|csv|plotdata)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";  // glibc may emit -nan; pin one spelling
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_csv(const std::vector<CurvatureReport>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const CurvatureReport& r : rows) {
    for (int col = 0; col < 17; ++col) {
      if (col) out += ',';
      if (col == 8) {  // the s column sits between sigma and om00
        out += std::to_string(r.s);
        out += ',';
      }
      out += format_number(column_value(r, col));
    }
    out += '\n';
  }
  return out;
}

std::string render_plotdata(const std::vector<CurvatureReport>& rows) {
  std::string out = "# u v k_xi det_om lambda\n";
  bool first = true;
  double block_u = 0.0;
  for (const CurvatureReport& r : rows) {
    if (!first && r.p.u != block_u) out += '\n';  // u-block separator
    first = false;
    block_u = r.p.u;
    out += format_number(r.p.u);
    out += ' ';
    out += format_number(r.p.v);
    out += ' ';
    out += format_number(r.k_xi);
    out += ' ';
    out += format_number(r.det_omega);
    out += ' ';
    out += format_number(r.lambda);
    out += '\n';
  }
  return out;
}

std::string render_table(const RunResult& result) {
  std::ostringstream out;
  char line[512];
  out << "# " << result.label << "\n";
  if (result.points.size() == 1) {
    const CurvatureReport& r = result.points.front();
    auto row = [&](const char* name, double value) {
      std::snprintf(line, sizeof line, "  %-16s % .12g\n", name, value);
      out << line;
    };
    std::snprintf(line, sizeof line, "  %-16s (%.12g, %.12g)\n", "point", r.p.u, r.p.v);
    out << line;
    row("K", r.K);
    row("lambda", r.lambda);
    row("k", r.k);
    row("kappa", r.kappa);
    row("mu", r.mu);
    row("sigma", r.sigma);
    std::snprintf(line, sizeof line, "  %-16s %d%s\n", "s", r.s,
                  r.degenerate ? "   (degenerate frame: chart axes substituted)" : "");
    out << line;
    row("om00", r.omega.m00);
    row("om01", r.omega.m01);
    row("om11", r.omega.m11);
    row("k_t1m", r.k_t1m);
    row("det_om", r.det_omega);
    row("k_xi", r.k_xi);
    row("k_xi_oracle", r.k_xi_oracle);
    row("resid_forms", r.resid_forms);
    row("resid_oracle", r.resid_oracle);
    row("resid_identity", r.resid_identity);
    return out.str();
  }

  out << "     u           v           K        lambda       sigma        om01"
         "       det_om        k_xi\n";
  for (const CurvatureReport& r : result.points) {
    std::snprintf(line, sizeof line, "% 11.5g % 11.5g % 11.5g % 11.5g % 11.5g % 11.5g % 11.5g % 11.5g\n",
                  r.p.u, r.p.v, r.K, r.lambda, r.sigma, r.omega.m01, r.det_omega, r.k_xi);
    out << line;
  }
  const GridSummary& s = result.summary;
  out << "#\n";
  std::snprintf(line, sizeof line,
                "# points %d (failed %d, degenerate frame %d)  max|omega| %.6g  min|om01| %.6g\n",
                s.n_points, s.n_failed, s.n_degenerate, s.max_abs_omega, s.min_abs_om01);
  out << line;
  std::snprintf(line, sizeof line, "# k_xi min %.12g  max %.12g  mean %.12g\n", s.k_xi.min,
                s.k_xi.max, s.k_xi.mean);
  out << line;
  std::snprintf(line, sizeof line,
                "# residuals: forms %.3g  oracle %.3g  identity %.3g  gradient %.3g  link %.3g\n",
                s.resid_forms.max, s.resid_oracle.max, s.resid_identity.max,
                s.resid_gradient_norm.max, s.resid_curvature_link.max);
  out << line;
  std::snprintf(line, sizeof line, "# verdict: %stotally geodesic (tol %.3g)\n",
                s.totally_geodesic ? "" : "not ", s.verdict_tol);
  out << line;
  return out.str();
}

nlohmann::ordered_json result_json(const RunResult& result) {
  nlohmann::ordered_json doc;
  doc["spec"] = {{"label", result.label},
                 {"kind", result.is_grid ? "grid" : "point"},
                 {"nu", result.nu},
                 {"nv", result.nv}};
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const CurvatureReport& r : result.points) {
    nlohmann::ordered_json p;
    p["u"] = r.p.u;
    p["v"] = r.p.v;
    p["K"] = json_number(r.K);
    p["lambda"] = json_number(r.lambda);
    p["k"] = json_number(r.k);
    p["kappa"] = json_number(r.kappa);
    p["mu"] = json_number(r.mu);
    p["sigma"] = json_number(r.sigma);
    p["s"] = r.s;
    p["degenerate"] = r.degenerate;
    p["om00"] = json_number(r.omega.m00);
    p["om01"] = json_number(r.omega.m01);
    p["om11"] = json_number(r.omega.m11);
    p["k_t1m"] = json_number(r.k_t1m);
    p["det_om"] = json_number(r.det_omega);
    p["k_xi"] = json_number(r.k_xi);
    p["k_xi_oracle"] = json_number(r.k_xi_oracle);
    p["resid_forms"] = json_number(r.resid_forms);
    p["resid_oracle"] = json_number(r.resid_oracle);
    p["resid_identity"] = json_number(r.resid_identity);
    p["resid_gradient_norm"] = json_number(r.resid_gradient_norm);
    p["resid_curvature_link"] = json_number(r.resid_curvature_link);
    pts.push_back(std::move(p));
  }
  doc["points"] = std::move(pts);
  const GridSummary& s = result.summary;
  nlohmann::ordered_json sum;
  sum["n_points"] = s.n_points;
  sum["n_degenerate"] = s.n_degenerate;
  sum["n_failed"] = s.n_failed;
  sum["max_abs_omega"] = s.max_abs_omega;
  sum["min_abs_om01"] = json_number(s.min_abs_om01);
  stat_json(sum, "k_xi", s.k_xi);
  stat_json(sum, "resid_forms", s.resid_forms);
  stat_json(sum, "resid_oracle", s.resid_oracle);
  stat_json(sum, "resid_identity", s.resid_identity);
  stat_json(sum, "resid_gradient_norm", s.resid_gradient_norm);
  stat_json(sum, "resid_curvature_link", s.resid_curvature_link);
  sum["totally_geodesic"] = s.totally_geodesic;
  sum["verdict_tol"] = s.verdict_tol;
  doc["summary"] = std::move(sum);
  return doc;
}

std::string render(const RunResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: return render_table(result);
    case OutputFormat::csv: return render_csv(result.points);
    case OutputFormat::plotdata: return render_plotdata(result.points);
    case OutputFormat::json: return result_json(result).dump(2) + "\n";
  }
  throw UsageError("unhandled format");
}

}  // namespace unitfield
