#include "unitfield/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "unitfield/errors.hpp"
#include "unitfield/types.hpp"

namespace unitfield::expr {

namespace {

NodePtr make(Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

NodePtr number(double x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::number;
  n->value = x;
  return n;
}

NodePtr call(Fn fn, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::call;
  n->fn = fn;
  n->lhs = std::move(arg);
  return n;
}

bool is_number(const NodePtr& n, double x) { return n->kind == Kind::number && n->value == x; }

// Folding constructors keep derivative trees small.
NodePtr add(NodePtr l, NodePtr r) {
  if (l->kind == Kind::number && r->kind == Kind::number) return number(l->value + r->value);
  if (is_number(l, 0.0)) return r;
  if (is_number(r, 0.0)) return l;
  return make(Kind::add, std::move(l), std::move(r));
}

NodePtr sub(NodePtr l, NodePtr r) {
  if (l->kind == Kind::number && r->kind == Kind::number) return number(l->value - r->value);
  if (is_number(r, 0.0)) return l;
  if (is_number(l, 0.0)) return make(Kind::neg, std::move(r));
  return make(Kind::sub, std::move(l), std::move(r));
}

NodePtr mul(NodePtr l, NodePtr r) {
  if (l->kind == Kind::number && r->kind == Kind::number) return number(l->value * r->value);
  if (is_number(l, 0.0) || is_number(r, 0.0)) return number(0.0);
  if (is_number(l, 1.0)) return r;
  if (is_number(r, 1.0)) return l;
  return make(Kind::mul, std::move(l), std::move(r));
}

NodePtr div(NodePtr l, NodePtr r) {
  if (is_number(l, 0.0)) return number(0.0);
  if (is_number(r, 1.0)) return l;
  if (l->kind == Kind::number && r->kind == Kind::number && r->value != 0.0)
    return number(l->value / r->value);
  return make(Kind::div, std::move(l), std::move(r));
}

NodePtr neg(NodePtr x) {
  if (x->kind == Kind::number) return number(-x->value);
  if (x->kind == Kind::neg) return x->lhs;
  return make(Kind::neg, std::move(x));
}

NodePtr pow_node(NodePtr l, NodePtr r) {
  if (is_number(r, 1.0)) return l;
  if (is_number(r, 0.0)) return number(1.0);
  if (l->kind == Kind::number && r->kind == Kind::number)
    return number(std::pow(l->value, r->value));
  return make(Kind::pow, std::move(l), std::move(r));
}

struct Parser {
  std::string_view text;
  const Params& params;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    std::ostringstream os;
    os << msg << " at column " << (at + 1);
    throw ParseError(os.str(), at);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr node = parse_term();
    while (true) {
      if (eat('+'))
        node = add(node, parse_term());
      else if (eat('-'))
        node = sub(node, parse_term());
      else
        return node;
    }
  }

  NodePtr parse_term() {
    NodePtr node = parse_factor();
    while (true) {
      if (eat('*'))
        node = mul(node, parse_factor());
      else if (eat('/'))
        node = div(node, parse_factor());
      else
        return node;
    }
  }

  NodePtr parse_factor() {
    if (eat('-')) return neg(parse_factor());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (eat('^')) return pow_node(base, parse_factor());
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression", pos);
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (c == '(') {
      std::size_t open = pos;
      ++pos;
      NodePtr inner = parse_expr();
      if (!eat(')')) fail("missing ')' for '(' ", open);
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  NodePtr parse_number() {
    std::size_t start = pos;
    const char* begin = text.data() + pos;
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end == begin) fail("malformed number", start);
    pos += static_cast<std::size_t>(end - begin);
    return number(value);
  }

  NodePtr parse_ident() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name(text.substr(start, pos - start));
    if (name == "u") return make(Kind::var_u);
    if (name == "v") return make(Kind::var_v);
    if (name == "pi") return number(kPi);
    static const std::map<std::string, Fn> fns = {
        {"sin", Fn::sin},   {"cos", Fn::cos},   {"sinh", Fn::sinh},
        {"cosh", Fn::cosh}, {"tanh", Fn::tanh}, {"coth", Fn::coth},
        {"exp", Fn::exp},   {"log", Fn::log},   {"sqrt", Fn::sqrt}};
    auto fn = fns.find(name);
    if (fn != fns.end()) {
      if (!eat('(')) fail("function '" + name + "' requires '('", pos);
      NodePtr arg = parse_expr();
      if (!eat(')')) fail("missing ')' after argument of '" + name + "'", pos);
      return call(fn->second, arg);
    }
    auto param = params.find(name);
    if (param != params.end()) return number(param->second);
    fail("unknown identifier '" + name + "'", start);
  }
};

}  // namespace

NodePtr parse(std::string_view text, const Params& params) {
  Parser p{text, params};
  NodePtr node = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input", p.pos);
  return node;
}

double eval(const NodePtr& n, double u, double v) {
  switch (n->kind) {
    case Kind::number: return n->value;
    case Kind::var_u: return u;
    case Kind::var_v: return v;
    case Kind::add: return eval(n->lhs, u, v) + eval(n->rhs, u, v);
    case Kind::sub: return eval(n->lhs, u, v) - eval(n->rhs, u, v);
    case Kind::mul: return eval(n->lhs, u, v) * eval(n->rhs, u, v);
    case Kind::div: return eval(n->lhs, u, v) / eval(n->rhs, u, v);
    case Kind::pow: return std::pow(eval(n->lhs, u, v), eval(n->rhs, u, v));
    case Kind::neg: return -eval(n->lhs, u, v);
    case Kind::call: {
      double x = eval(n->lhs, u, v);
      switch (n->fn) {
        case Fn::sin: return std::sin(x);
        case Fn::cos: return std::cos(x);
        case Fn::sinh: return std::sinh(x);
        case Fn::cosh: return std::cosh(x);
        case Fn::tanh: return std::tanh(x);
        case Fn::coth: return 1.0 / std::tanh(x);
        case Fn::exp: return std::exp(x);
        case Fn::log: return std::log(x);
        case Fn::sqrt: return std::sqrt(x);
      }
    }
  }
  return 0.0;
}

NodePtr derivative(const NodePtr& n, int var) {
  switch (n->kind) {
    case Kind::number: return number(0.0);
    case Kind::var_u: return number(var == 0 ? 1.0 : 0.0);
    case Kind::var_v: return number(var == 1 ? 1.0 : 0.0);
    case Kind::add: return add(derivative(n->lhs, var), derivative(n->rhs, var));
    case Kind::sub: return sub(derivative(n->lhs, var), derivative(n->rhs, var));
    case Kind::mul:
      return add(mul(derivative(n->lhs, var), n->rhs), mul(n->lhs, derivative(n->rhs, var)));
    case Kind::div:
      return div(sub(mul(derivative(n->lhs, var), n->rhs), mul(n->lhs, derivative(n->rhs, var))),
                 mul(n->rhs, n->rhs));
    case Kind::pow: {
      if (n->rhs->kind == Kind::number) {
        // d(f^c) = c f^(c-1) f'
        double c = n->rhs->value;
        return mul(mul(number(c), pow_node(n->lhs, number(c - 1.0))), derivative(n->lhs, var));
      }
      // d(f^g) = f^g (g' log f + g f'/f)
      NodePtr fg = pow_node(n->lhs, n->rhs);
      NodePtr t1 = mul(derivative(n->rhs, var), call(Fn::log, n->lhs));
      NodePtr t2 = div(mul(n->rhs, derivative(n->lhs, var)), n->lhs);
      return mul(fg, add(t1, t2));
    }
    case Kind::neg: return neg(derivative(n->lhs, var));
    case Kind::call: {
      NodePtr inner = derivative(n->lhs, var);
      NodePtr outer;
      switch (n->fn) {
        case Fn::sin: outer = call(Fn::cos, n->lhs); break;
        case Fn::cos: outer = neg(call(Fn::sin, n->lhs)); break;
        case Fn::sinh: outer = call(Fn::cosh, n->lhs); break;
        case Fn::cosh: outer = call(Fn::sinh, n->lhs); break;
        case Fn::tanh:
          outer = sub(number(1.0), mul(call(Fn::tanh, n->lhs), call(Fn::tanh, n->lhs)));
          break;
        case Fn::coth:
          outer = sub(number(1.0), mul(call(Fn::coth, n->lhs), call(Fn::coth, n->lhs)));
          break;
        case Fn::exp: outer = call(Fn::exp, n->lhs); break;
        case Fn::log: outer = div(number(1.0), n->lhs); break;
        case Fn::sqrt: outer = div(number(0.5), call(Fn::sqrt, n->lhs)); break;
      }
      return mul(outer, inner);
    }
  }
  return number(0.0);
}

std::string to_string(const NodePtr& n) {
  std::ostringstream os;
  switch (n->kind) {
    case Kind::number: os << n->value; break;
    case Kind::var_u: os << "u"; break;
    case Kind::var_v: os << "v"; break;
    case Kind::add: os << "(" << to_string(n->lhs) << " + " << to_string(n->rhs) << ")"; break;
    case Kind::sub: os << "(" << to_string(n->lhs) << " - " << to_string(n->rhs) << ")"; break;
    case Kind::mul: os << "(" << to_string(n->lhs) << " * " << to_string(n->rhs) << ")"; break;
    case Kind::div: os << "(" << to_string(n->lhs) << " / " << to_string(n->rhs) << ")"; break;
    case Kind::pow: os << "(" << to_string(n->lhs) << "^" << to_string(n->rhs) << ")"; break;
    case Kind::neg: os << "(-" << to_string(n->lhs) << ")"; break;
    case Kind::call: {
      static const char* names[] = {"sin", "cos", "sinh", "cosh", "tanh", "coth", "exp", "log", "sqrt"};
      os << names[static_cast<int>(n->fn)] << "(" << to_string(n->lhs) << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace unitfield::expr
