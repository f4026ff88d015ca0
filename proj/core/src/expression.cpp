#include "mbg/expression.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mbg {

struct Expression::Node {
  enum class Kind { Const, Var, Unary, Binary, Call2 } kind;
  double value = 0.0;
  int var = -1;
  char op = 0;
  std::string fn;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

NodePtr make_const(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Const;
  n->value = v;
  return n;
}

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in expression");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (eat('+')) lhs = binary('+', lhs, term());
      else if (eat('-')) lhs = binary('-', lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = power();
    while (true) {
      if (eat('*')) lhs = binary('*', lhs, power());
      else if (eat('/')) lhs = binary('/', lhs, power());
      else return lhs;
    }
  }

  NodePtr power() {
    NodePtr base = unary();
    if (eat('^')) return binary('^', base, power());  // right associative
    return base;
  }

  NodePtr unary() {
    if (eat('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Unary;
      n->op = '-';
      n->a = unary();
      return n;
    }
    return atom();
  }

  NodePtr atom() {
    skip();
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')' in expression");
      return e;
    }
    if (pos_ < s_.size() &&
        (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      std::size_t used = 0;
      double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      return make_const(v);
    }
    if (pos_ < s_.size() &&
        (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "pi") return make_const(3.14159265358979323846);
      if (name == "e") return make_const(2.71828182845904523536);
      if (peek() == '(') return call(name);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          auto n = std::make_shared<Node>();
          n->kind = Node::Kind::Var;
          n->var = static_cast<int>(i);
          return n;
        }
      }
      throw std::invalid_argument("unknown variable: " + name);
    }
    throw std::invalid_argument("cannot parse expression near position " + std::to_string(pos_));
  }

  NodePtr call(const std::string& name) {
    if (!eat('(')) throw std::invalid_argument("expected '('");
    NodePtr first = expr();
    if (name == "min" || name == "max") {
      if (!eat(',')) throw std::invalid_argument(name + " takes two arguments");
      NodePtr second = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')'");
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Call2;
      n->fn = name;
      n->a = first;
      n->b = second;
      return n;
    }
    if (!eat(')')) throw std::invalid_argument("missing ')'");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Unary;
    n->fn = name;
    n->a = first;
    return n;
  }

  NodePtr binary(char op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

double eval_node(const Node& n, const std::vector<double>& vals) {
  switch (n.kind) {
    case Node::Kind::Const: return n.value;
    case Node::Kind::Var: return vals.at(n.var);
    case Node::Kind::Unary: {
      double a = eval_node(*n.a, vals);
      if (n.fn.empty()) return -a;
      if (n.fn == "sin") return std::sin(a);
      if (n.fn == "cos") return std::cos(a);
      if (n.fn == "tan") return std::tan(a);
      if (n.fn == "exp") return std::exp(a);
      if (n.fn == "log") return std::log(a);
      if (n.fn == "sqrt") return std::sqrt(a);
      if (n.fn == "abs") return std::abs(a);
      throw std::invalid_argument("unknown function: " + n.fn);
    }
    case Node::Kind::Call2: {
      double a = eval_node(*n.a, vals), b = eval_node(*n.b, vals);
      return n.fn == "min" ? std::min(a, b) : std::max(a, b);
    }
    case Node::Kind::Binary: {
      double a = eval_node(*n.a, vals), b = eval_node(*n.b, vals);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return std::pow(a, b);
      }
    }
  }
  throw std::logic_error("bad expression node");
}

}  // namespace

Expression Expression::parse(const std::string& text, const std::vector<std::string>& variables) {
  Expression e;
  e.vars_ = variables;
  e.root_ = Parser(text, e.vars_).parse();
  return e;
}

double Expression::eval(const std::vector<double>& values) const {
  if (values.size() != vars_.size())
    throw std::invalid_argument("expression variable count mismatch");
  return eval_node(*root_, values);
}

}  // namespace mbg
