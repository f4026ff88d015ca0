#ifndef MBG_EXPRESSION_HPP
#define MBG_EXPRESSION_HPP

#include <memory>
#include <string>
#include <vector>

namespace mbg {

/// Arithmetic expressions over named variables: + - * / ^, parentheses,
/// unary minus, and the functions sin cos tan exp log sqrt abs min max.
/// Used by the "expression" Hamiltonian block kind.
class Expression {
 public:
  static Expression parse(const std::string& text, const std::vector<std::string>& variables);
  double eval(const std::vector<double>& values) const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::vector<std::string> vars_;
};

}  // namespace mbg

#endif
