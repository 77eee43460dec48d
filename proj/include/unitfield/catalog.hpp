#pragma once

#include <map>
#include <string>
#include <vector>

#include "unitfield/submanifold.hpp"

namespace unitfield {

// Profile charts used by the named scenarios. `param` is the radius r of the
// constant-curvature models or the expansion rate c of the horocycle model;
// it is ignored by the parameter-free charts.
enum class ChartModel {
  flat,                  // du^2 + dv^2                   K = 0
  flat_polar,            // du^2 + u^2 dv^2               K = 0, u > 0
  sphere,                // du^2 + r^2 sin^2(u/r) dv^2    K = +1/r^2
  hyperbolic_exp,        // du^2 + r^2 e^{2u/r} dv^2      K = -1/r^2
  hyperbolic_polar,      // du^2 + r^2 sinh^2(u/r) dv^2   K = -1/r^2, u > 0
  hyperbolic_cartesian,  // du^2 + r^2 cosh^2(u/r) dv^2   K = -1/r^2
  horocycle,             // du^2 + e^{2cu} dv^2           K = -c^2
  variable_bump,         // du^2 + e^{u^2/2} dv^2         K = -(1/2 + u^2/4)
};

ChartPtr make_chart(ChartModel model, double param = 1.0);

// Closed-form off-diagonal entry of the shape operator for the candidate
// family omega = a v + b on a model chart, as a function of u. On the
// negatively curved models these stay bounded away from zero for every a --
// the executable content of the non-existence results; on the sphere (r = 1,
// |a| = 1) and the flat polar chart (a = -1) they vanish identically.
enum class ObstructionModel { hyp_exp, hyp_polar, hyp_cartesian, flat_polar, sphere };

double obstruction_omega01(ObstructionModel model, double r, double a, double u);

// Coordinate Gram matrices of the bundle metric in the chart (u, v, theta),
// stored in closed form. They bypass the lift machinery entirely, so their
// section pullbacks provide a third route to the induced metric.
enum class BundleChartModel { sphere_unit, hyperbolic_c };

std::array<std::array<double, 3>, 3> t1m_coordinate_metric(BundleChartModel model, double param,
                                                           const Point2& p, double theta);

// Pullback of a coordinate Gram matrix along the section theta = om(u, v),
// given the partial derivatives of om at the point.
Mat2 section_pullback(const std::array<std::array<double, 3>, 3>& G, double om_u, double om_v);

// A named chart/field pair with its closed-form expected values and a
// default sampling window (kept clear of chart singularities and wide
// enough for every finite-difference stencil in use).
struct Scenario {
  std::string name;     // canonical form, e.g. "foliation:1,0.7"
  std::string summary;  // one-line description for listings
  ChartPtr chart;
  UnitVectorField field;
  // Keyed by the report vocabulary: K, lambda, k, kappa, mu, sigma,
  // om00, om01, om11, k_t1m, det_om, k_xi, G11, G12, G22.
  std::map<std::string, ScalarField> expected;
  std::map<std::string, double> facts;  // extra named constants
  Rect window;
  int nu = 20, nv = 20;
};

// Parse "name" or "name:p1,p2" and build the fixture. Throws BadParams for
// unknown names, malformed parameter lists, or out-of-range parameters.
Scenario make_scenario(const std::string& spec);

struct ScenarioInfo {
  std::string pattern;  // e.g. "foliation:c,omega0"
  std::string summary;
};

const std::vector<ScenarioInfo>& list_scenarios();

// One named report quantity of the generic pipeline (same vocabulary as
// Scenario::expected) evaluated at a point.
double pipeline_value(const UnitVectorField& field, const Point2& p, const std::string& key,
                      const DiffConfig& cfg = {});

// Residual of lambda = e1(omega) - sigma, an identity for fields whose angle
// is constant along the u-lines of a profile chart.
double angle_slope_identity_residual(const UnitVectorField& field, const Point2& p,
                                     const DiffConfig& cfg = {});

}  // namespace unitfield
