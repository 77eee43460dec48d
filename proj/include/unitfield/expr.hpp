#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace unitfield::expr {

// Immutable expression tree over the variables u, v.
//
// Grammar (lowest to highest precedence):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?              (right associative)
//   atom   := number | identifier | identifier '(' expr ')' | '(' expr ')'
//
// Identifiers: u, v, pi, a caller-supplied parameter, or one of the functions
// sin cos sinh cosh tanh coth exp log sqrt.

enum class Kind { number, var_u, var_v, add, sub, mul, div, pow, neg, call };
enum class Fn { sin, cos, sinh, cosh, tanh, coth, exp, log, sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  double value = 0.0;  // number
  Fn fn = Fn::sin;     // call
  NodePtr lhs, rhs;    // rhs empty for neg/call
};

using Params = std::map<std::string, double>;

// Throws ParseError (position = character offset) on malformed input or
// unknown identifiers.
NodePtr parse(std::string_view text, const Params& params = {});

double eval(const NodePtr& node, double u, double v);

// Exact partial derivative (var 0 = u, 1 = v) with constant folding.
NodePtr derivative(const NodePtr& node, int var);

std::string to_string(const NodePtr& node);

}  // namespace unitfield::expr
