#include <cmath>

#include "doctest.h"
#include "unitfield/errors.hpp"
#include "unitfield/expr.hpp"
#include "unitfield/scalar_field.hpp"

using namespace unitfield;

TEST_CASE("expression parsing and evaluation") {
  auto at = [](const char* text, double u, double v, const expr::Params& ps = {}) {
    return expr::eval(expr::parse(text, ps), u, v);
  };
  CHECK(at("1+2*3", 0, 0) == doctest::Approx(7.0));
  CHECK(at("(1+2)*3", 0, 0) == doctest::Approx(9.0));
  CHECK(at("2^3^2", 0, 0) == doctest::Approx(512.0));  // right associative
  CHECK(at("-u^2", 2, 0) == doctest::Approx(-4.0));    // unary minus binds looser
  CHECK(at("sin(pi/2)", 0, 0) == doctest::Approx(1.0));
  CHECK(at("cosh(u)^2-sinh(u)^2", 0.7, 0) == doctest::Approx(1.0));
  CHECK(at("coth(u)", 0.5, 0) == doctest::Approx(1.0 / std::tanh(0.5)));
  CHECK(at("a*u+b", 3, 0, {{"a", 2.0}, {"b", 10.0}}) == doctest::Approx(16.0));
  CHECK(at("exp(log(v))", 0, 2.5) == doctest::Approx(2.5));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(expr::parse("1+"), ParseError);
  CHECK_THROWS_AS(expr::parse("bogus(u)"), ParseError);
  CHECK_THROWS_AS(expr::parse("sin(u"), ParseError);
  CHECK_THROWS_AS(expr::parse("u + w"), ParseError);
  try {
    expr::parse("u + w");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("symbolic derivatives match finite differences") {
  const char* cases[] = {
      "sin(u)*cos(v)", "exp(u^2/4)",     "u^3 - 2*u*v + v^2", "sqrt(1+u^2)",
      "tanh(u*v)",     "coth(1+u^2+v^2)", "log(2+sin(u))",     "(1+v^2)^(u/2)",
  };
  const double h = 1e-5;
  for (const char* text : cases) {
    auto ast = expr::parse(text);
    auto du = expr::derivative(ast, 0);
    auto dv = expr::derivative(ast, 1);
    for (double u : {-0.7, 0.3, 1.1}) {
      for (double v : {-0.5, 0.9}) {
        double fdu = (expr::eval(ast, u + h, v) - expr::eval(ast, u - h, v)) / (2 * h);
        double fdv = (expr::eval(ast, u, v + h) - expr::eval(ast, u, v - h)) / (2 * h);
        CHECK(expr::eval(du, u, v) == doctest::Approx(fdu).epsilon(1e-6));
        CHECK(expr::eval(dv, u, v) == doctest::Approx(fdv).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("scalar fields carry lazy exact partials") {
  ScalarField f = ScalarField::parse("sin(u)*exp(v)");
  CHECK(f.differentiable());
  CHECK(f.du()(0.3, 0.2) == doctest::Approx(std::cos(0.3) * std::exp(0.2)));
  CHECK(f.dv()(0.3, 0.2) == doctest::Approx(std::sin(0.3) * std::exp(0.2)));
  // second derivatives stay exact
  CHECK(f.du().du()(0.3, 0.2) == doctest::Approx(-std::sin(0.3) * std::exp(0.2)));

  ScalarField g = f.without_partials();
  CHECK_FALSE(g.differentiable());
  CHECK(g(0.3, 0.2) == f(0.3, 0.2));
  CHECK_THROWS_AS(g.du(), Error);

  // algebra propagates differentiability
  ScalarField prod = f * g;
  CHECK_FALSE(prod.differentiable());
  ScalarField comb = 2.0 * f - f / (1.0 + f * f);
  CHECK(comb.differentiable());
  double u = 0.4, v = -0.3, h = 1e-6;
  double fd = (comb(u + h, v) - comb(u - h, v)) / (2 * h);
  CHECK(comb.du()(u, v) == doctest::Approx(fd).epsilon(1e-7));
}
