#pragma once

#include <string>

#include "unitfield/metric.hpp"

namespace unitfield {

// Plain-text chart definitions, one `key=value` entry per line.
//
//   kind=semi_geodesic | general
//   f=<expression>                      (semi_geodesic)
//   g11=... g12=... g22=...             (general, one per line)
//   domain=u0,u1,v0,v1
//
// `#` starts a comment; blank lines are ignored.  Expressions use the shared
// grammar over u, v (see expr.hpp).  Errors throw ParseError whose position
// is the 0-based line index of the offending entry.
ChartPtr parse_chart_text(const std::string& text);

// Reads the file and delegates to parse_chart_text.  Throws Error if the
// file cannot be opened.
ChartPtr load_chart_file(const std::string& path);

}  // namespace unitfield
