#include "unitfield/scalar_field.hpp"

#include <cmath>

#include "unitfield/errors.hpp"

namespace unitfield {

ScalarField ScalarField::wrap(std::shared_ptr<const Node> n) {
  ScalarField f((Unwrapped()));
  f.node_ = std::move(n);
  return f;
}

ScalarField::ScalarField() { *this = constant(0.0); }

ScalarField ScalarField::constant(double c) {
  auto n = std::make_shared<Node>();
  n->eval = [c](double, double) { return c; };
  n->make_du = [] { return ScalarField::constant(0.0); };
  n->make_dv = [] { return ScalarField::constant(0.0); };
  return wrap(n);
}

ScalarField ScalarField::var_u() {
  auto n = std::make_shared<Node>();
  n->eval = [](double u, double) { return u; };
  n->make_du = [] { return ScalarField::constant(1.0); };
  n->make_dv = [] { return ScalarField::constant(0.0); };
  return wrap(n);
}

ScalarField ScalarField::var_v() {
  auto n = std::make_shared<Node>();
  n->eval = [](double, double v) { return v; };
  n->make_du = [] { return ScalarField::constant(0.0); };
  n->make_dv = [] { return ScalarField::constant(1.0); };
  return wrap(n);
}

ScalarField ScalarField::numeric(Eval f) {
  auto n = std::make_shared<Node>();
  n->eval = std::move(f);
  return wrap(n);
}

ScalarField ScalarField::analytic(Eval f, Maker du, Maker dv) {
  auto n = std::make_shared<Node>();
  n->eval = std::move(f);
  n->make_du = std::move(du);
  n->make_dv = std::move(dv);
  return wrap(n);
}

ScalarField ScalarField::from_expression(const expr::NodePtr& ast) {
  return analytic([ast](double u, double v) { return expr::eval(ast, u, v); },
                  [ast] { return from_expression(expr::derivative(ast, 0)); },
                  [ast] { return from_expression(expr::derivative(ast, 1)); });
}

ScalarField ScalarField::parse(std::string_view text, const expr::Params& params) {
  return from_expression(expr::parse(text, params));
}

double ScalarField::operator()(double u, double v) const { return node_->eval(u, v); }

bool ScalarField::differentiable() const { return node_ && node_->make_du && node_->make_dv; }

ScalarField ScalarField::du() const {
  if (!differentiable()) throw Error("scalar field carries no analytic partial derivatives");
  std::call_once(node_->once_du, [this] { node_->du = node_->make_du().node_; });
  return wrap(node_->du);
}

ScalarField ScalarField::dv() const {
  if (!differentiable()) throw Error("scalar field carries no analytic partial derivatives");
  std::call_once(node_->once_dv, [this] { node_->dv = node_->make_dv().node_; });
  return wrap(node_->dv);
}

ScalarField ScalarField::without_partials() const {
  ScalarField self = *this;
  return numeric([self](double u, double v) { return self(u, v); });
}

namespace {

bool both_diff(const ScalarField& f, const ScalarField& g) {
  return f.differentiable() && g.differentiable();
}

}  // namespace

ScalarField operator+(const ScalarField& f, const ScalarField& g) {
  ScalarField::Eval e = [f, g](double u, double v) { return f(u, v) + g(u, v); };
  if (!both_diff(f, g)) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f, g] { return f.du() + g.du(); },
                               [f, g] { return f.dv() + g.dv(); });
}

ScalarField operator-(const ScalarField& f, const ScalarField& g) {
  ScalarField::Eval e = [f, g](double u, double v) { return f(u, v) - g(u, v); };
  if (!both_diff(f, g)) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f, g] { return f.du() - g.du(); },
                               [f, g] { return f.dv() - g.dv(); });
}

ScalarField operator*(const ScalarField& f, const ScalarField& g) {
  ScalarField::Eval e = [f, g](double u, double v) { return f(u, v) * g(u, v); };
  if (!both_diff(f, g)) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f, g] { return f.du() * g + f * g.du(); },
                               [f, g] { return f.dv() * g + f * g.dv(); });
}

ScalarField operator/(const ScalarField& f, const ScalarField& g) {
  ScalarField::Eval e = [f, g](double u, double v) { return f(u, v) / g(u, v); };
  if (!both_diff(f, g)) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f, g] { return (f.du() * g - f * g.du()) / (g * g); },
                               [f, g] { return (f.dv() * g - f * g.dv()) / (g * g); });
}

ScalarField operator-(const ScalarField& f) { return ScalarField::constant(0.0) - f; }
ScalarField operator+(const ScalarField& f, double c) { return f + ScalarField::constant(c); }
ScalarField operator+(double c, const ScalarField& f) { return ScalarField::constant(c) + f; }
ScalarField operator-(const ScalarField& f, double c) { return f - ScalarField::constant(c); }
ScalarField operator-(double c, const ScalarField& f) { return ScalarField::constant(c) - f; }
ScalarField operator*(double c, const ScalarField& f) { return ScalarField::constant(c) * f; }
ScalarField operator*(const ScalarField& f, double c) { return ScalarField::constant(c) * f; }
ScalarField operator/(const ScalarField& f, double c) { return f / ScalarField::constant(c); }
ScalarField operator/(double c, const ScalarField& f) { return ScalarField::constant(c) / f; }

ScalarField sqrt(const ScalarField& f) {
  ScalarField::Eval e = [f](double u, double v) { return std::sqrt(f(u, v)); };
  if (!f.differentiable()) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f] { return f.du() / (2.0 * sqrt(f)); },
                               [f] { return f.dv() / (2.0 * sqrt(f)); });
}

ScalarField sin(const ScalarField& f) {
  ScalarField::Eval e = [f](double u, double v) { return std::sin(f(u, v)); };
  if (!f.differentiable()) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f] { return cos(f) * f.du(); }, [f] { return cos(f) * f.dv(); });
}

ScalarField cos(const ScalarField& f) {
  ScalarField::Eval e = [f](double u, double v) { return std::cos(f(u, v)); };
  if (!f.differentiable()) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f] { return -(sin(f) * f.du()); },
                               [f] { return -(sin(f) * f.dv()); });
}

ScalarField exp(const ScalarField& f) {
  ScalarField::Eval e = [f](double u, double v) { return std::exp(f(u, v)); };
  if (!f.differentiable()) return ScalarField::numeric(e);
  return ScalarField::analytic(e, [f] { return exp(f) * f.du(); }, [f] { return exp(f) * f.dv(); });
}

}  // namespace unitfield
