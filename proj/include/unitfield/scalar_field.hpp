#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>

#include "unitfield/expr.hpp"
#include "unitfield/types.hpp"

namespace unitfield {

// A scalar function of chart coordinates that may carry exact partial
// derivatives. Derivative fields are built lazily on first request and
// memoized; construction of composites therefore stays O(1) while chains of
// any depth remain available. All evaluation paths are thread-safe.
//
// Fields built from parsed expressions differentiate symbolically; fields
// built from plain closures report differentiable() == false and force
// finite-difference fallbacks downstream.
class ScalarField {
 public:
  using Eval = std::function<double(double, double)>;
  using Maker = std::function<ScalarField()>;

  ScalarField();  // identically zero, differentiable

  static ScalarField constant(double c);
  static ScalarField var_u();
  static ScalarField var_v();
  static ScalarField numeric(Eval f);                       // no analytic partials
  static ScalarField analytic(Eval f, Maker du, Maker dv);  // lazy partial builders
  static ScalarField from_expression(const expr::NodePtr& ast);
  static ScalarField parse(std::string_view text, const expr::Params& params = {});

  double operator()(double u, double v) const;
  double operator()(const Point2& p) const { return (*this)(p.u, p.v); }

  bool differentiable() const;
  ScalarField du() const;  // throws Error if !differentiable()
  ScalarField dv() const;
  ScalarField partial(int var) const { return var == 0 ? du() : dv(); }

  // Same values, no analytic partials; for forcing finite-difference paths.
  ScalarField without_partials() const;

 private:
  struct Node {
    Eval eval;
    Maker make_du, make_dv;
    mutable std::once_flag once_du, once_dv;
    mutable std::shared_ptr<const Node> du, dv;
  };
  std::shared_ptr<const Node> node_;

  struct Unwrapped {};  // tag: skip the zero-field default initialization
  explicit ScalarField(Unwrapped) {}
  static ScalarField wrap(std::shared_ptr<const Node> n);
  friend ScalarField operator+(const ScalarField&, const ScalarField&);
  friend ScalarField operator-(const ScalarField&, const ScalarField&);
  friend ScalarField operator*(const ScalarField&, const ScalarField&);
  friend ScalarField operator/(const ScalarField&, const ScalarField&);
};

ScalarField operator+(const ScalarField& f, const ScalarField& g);
ScalarField operator-(const ScalarField& f, const ScalarField& g);
ScalarField operator*(const ScalarField& f, const ScalarField& g);
ScalarField operator/(const ScalarField& f, const ScalarField& g);
ScalarField operator-(const ScalarField& f);
ScalarField operator+(const ScalarField& f, double c);
ScalarField operator+(double c, const ScalarField& f);
ScalarField operator-(const ScalarField& f, double c);
ScalarField operator-(double c, const ScalarField& f);
ScalarField operator*(double c, const ScalarField& f);
ScalarField operator*(const ScalarField& f, double c);
ScalarField operator/(const ScalarField& f, double c);
ScalarField operator/(double c, const ScalarField& f);

ScalarField sqrt(const ScalarField& f);
ScalarField sin(const ScalarField& f);
ScalarField cos(const ScalarField& f);
ScalarField exp(const ScalarField& f);

}  // namespace unitfield
