#pragma once

// Tiny whitelisted expression evaluator for analytic initial conditions:
// numbers, x, y, pi, + - * / ^, parentheses, and the functions
// sin cos tan sinh cosh tanh exp log sqrt abs.

#include <memory>
#include <string>

namespace nss {

class Expression {
  public:
    // Throws ExpressionError on any syntax problem or unknown identifier.
    static Expression parse(const std::string& text);

    double eval(double x, double y) const;

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
};

}  // namespace nss
