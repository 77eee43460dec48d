#pragma once

#include <memory>
#include <random>

#include "unitfield/bundle.hpp"
#include "unitfield/frame.hpp"
#include "unitfield/metric.hpp"
#include "unitfield/submanifold.hpp"

namespace th {

using namespace unitfield;

inline ChartPtr sphere_chart() {
  return std::make_shared<MetricChart>(
      MetricChart::semi_geodesic({0.05, kPi - 0.05, -8.0, 8.0}, ScalarField::parse("sin(u)")));
}

inline ChartPtr horocycle_chart(double c) {
  return std::make_shared<MetricChart>(MetricChart::semi_geodesic(
      {-2.0, 2.0, -2.5, 2.5}, ScalarField::parse("exp(c*u)", {{"c", c}})));
}

inline ChartPtr flat_chart() {
  return std::make_shared<MetricChart>(
      MetricChart::semi_geodesic({-3.0, 3.0, -3.0, 3.0}, ScalarField::parse("1")));
}

inline ChartPtr bump_chart() {  // f = exp(u^2/4), variable curvature
  return std::make_shared<MetricChart>(
      MetricChart::semi_geodesic({-1.5, 1.5, -1.5, 1.5}, ScalarField::parse("exp(u^2/4)")));
}

// Non-diagonal analytic metric on a small rectangle; positive definite by
// construction (off-diagonal damped by 0.4 tanh).
inline ChartPtr skew_chart() {
  ScalarField g11 = ScalarField::parse("exp(0.3*sin(u)+0.1*v)");
  ScalarField g22 = ScalarField::parse("exp(0.2*cos(v)-0.1*u)");
  ScalarField g12 = ScalarField::parse("0.4*tanh(0.5*sin(u)*cos(v))") * sqrt(g11 * g22);
  return std::make_shared<MetricChart>(
      MetricChart::general({-1.2, 1.2, -1.2, 1.2}, g11, g12, g22));
}

inline UnitVectorField make_field(ChartPtr chart, const std::string& omega,
                                  const expr::Params& params = {}, DiffConfig cfg = {}) {
  return UnitVectorField(std::move(chart), ScalarField::parse(omega, params), cfg);
}

}  // namespace th
