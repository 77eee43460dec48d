#include "unitfield/chart_file.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "unitfield/errors.hpp"
#include "unitfield/scalar_field.hpp"

namespace unitfield {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("chart file line " + std::to_string(line + 1) + ": " + what, line);
}

double number_at(std::size_t line, const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double x = std::strtod(begin, &end);
  if (end == begin || *end != '\0') fail(line, "expected a number, got '" + token + "'");
  return x;
}

ScalarField field_at(std::size_t line, const std::string& text) {
  try {
    return ScalarField::parse(text);  // expression errors already carry a column
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

}  // namespace

ChartPtr parse_chart_text(const std::string& text) {
  std::map<std::string, std::string> entries;   // key -> raw value
  std::map<std::string, std::size_t> at_line;   // key -> defining line
  std::istringstream in(text);
  std::string raw;
  for (std::size_t line = 0; std::getline(in, raw); ++line) {
    std::string content = strip(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;
    std::size_t eq = content.find('=');
    if (eq == std::string::npos) fail(line, "expected key=value");
    std::string key = strip(content.substr(0, eq));
    std::string value = strip(content.substr(eq + 1));
    if (key != "kind" && key != "f" && key != "g11" && key != "g12" && key != "g22" &&
        key != "domain")
      fail(line, "unknown key '" + key + "'");
    if (value.empty()) fail(line, "empty value for '" + key + "'");
    if (!entries.emplace(key, value).second) fail(line, "duplicate key '" + key + "'");
    at_line.emplace(key, line);
  }

  auto require = [&](const char* key) -> const std::string& {
    auto it = entries.find(key);
    if (it == entries.end())
      throw ParseError(std::string("chart file: missing required key '") + key + "'", 0);
    return it->second;
  };
  auto forbid = [&](const char* key, const std::string& why) {
    auto it = entries.find(key);
    if (it != entries.end()) fail(at_line.at(key), "'" + std::string(key) + "' " + why);
  };

  const std::string& kind = require("kind");
  std::size_t kind_line = at_line.at("kind");
  if (kind != "semi_geodesic" && kind != "general")
    fail(kind_line, "kind must be semi_geodesic or general, got '" + kind + "'");

  std::size_t domain_line = at_line.count("domain") ? at_line.at("domain") : 0;
  std::istringstream ds(require("domain"));
  double bounds[4];
  std::string token;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(ds, token, ',')) fail(domain_line, "domain needs u0,u1,v0,v1");
    bounds[i] = number_at(domain_line, strip(token));
  }
  if (std::getline(ds, token, ',')) fail(domain_line, "domain has extra fields");
  Rect domain{bounds[0], bounds[1], bounds[2], bounds[3]};
  if (!(domain.u0 < domain.u1) || !(domain.v0 < domain.v1))
    fail(domain_line, "domain rectangle is empty or inverted");

  if (kind == "semi_geodesic") {
    forbid("g11", "is only valid for kind=general");
    forbid("g12", "is only valid for kind=general");
    forbid("g22", "is only valid for kind=general");
    ScalarField f = field_at(at_line.count("f") ? at_line.at("f") : 0, require("f"));
    return std::make_shared<MetricChart>(MetricChart::semi_geodesic(domain, std::move(f)));
  }
  forbid("f", "is only valid for kind=semi_geodesic");
  ScalarField g11 = field_at(at_line.count("g11") ? at_line.at("g11") : 0, require("g11"));
  ScalarField g12 = field_at(at_line.count("g12") ? at_line.at("g12") : 0, require("g12"));
  ScalarField g22 = field_at(at_line.count("g22") ? at_line.at("g22") : 0, require("g22"));
  return std::make_shared<MetricChart>(
      MetricChart::general(domain, std::move(g11), std::move(g12), std::move(g22)));
}

ChartPtr load_chart_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open chart file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chart_text(buf.str());
}

}  // namespace unitfield
