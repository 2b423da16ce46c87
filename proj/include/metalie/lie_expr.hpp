#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metalie/error.hpp"
#include "metalie/lie.hpp"

namespace metalie {

/// Lie polynomial as an expression tree over constants a_i and variables x_j.
class LieExpr {
 public:
  enum class Kind { Const, Var, Bracket, Sum, Scale };

  static LieExpr constant(std::size_t i);
  static LieExpr variable(std::size_t j);
  static LieExpr bracket(LieExpr lhs, LieExpr rhs);
  static LieExpr sum(std::vector<LieExpr> terms);
  static LieExpr scale(std::int64_t c, LieExpr e);
  static LieExpr zero() { return sum({}); }

  Kind kind() const noexcept { return kind_; }
  /// 0-based index of a constant or variable.
  std::size_t index() const noexcept { return index_; }
  std::int64_t coeff() const noexcept { return coeff_; }
  const std::vector<LieExpr>& children() const noexcept { return children_; }

  /// One more than the largest variable index, 0 without variables.
  std::size_t arity() const;
  /// One more than the largest constant index.
  std::size_t constants_used() const;

  bool operator==(const LieExpr&) const = default;

  /// Structural text; parse_lie_expr inverts it exactly.
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Sum;
  std::size_t index_ = 0;
  std::int64_t coeff_ = 1;
  std::vector<LieExpr> children_;
};

/// Grammar: constants a1..ar, variables x1.., brackets [u,v], sums with
/// '+' and '-', integer prefixes "c*", parentheses, "0". An equation
/// "lhs = rhs" becomes lhs - rhs.
LieExpr parse_lie_expr(std::string_view text, std::size_t r);

/// Evaluates an expression in any algebra exposing zero, constant, add,
/// scale and bracket over its Element type.
template <class Algebra>
typename Algebra::Element evaluate(const LieExpr& f, const Algebra& alg,
                                   std::span<const typename Algebra::Element> point) {
  switch (f.kind()) {
    case LieExpr::Kind::Const:
      return alg.constant(f.index());
    case LieExpr::Kind::Var:
      if (f.index() >= point.size()) throw ConfigurationError("evaluation point is shorter than the arity");
      return point[f.index()];
    case LieExpr::Kind::Bracket:
      return alg.bracket(evaluate(f.children()[0], alg, point), evaluate(f.children()[1], alg, point));
    case LieExpr::Kind::Scale:
      return alg.scale(f.coeff(), evaluate(f.children()[0], alg, point));
    case LieExpr::Kind::Sum: {
      auto acc = alg.zero();
      for (const auto& c : f.children()) acc = alg.add(acc, evaluate(c, alg, point));
      return acc;
    }
  }
  return alg.zero();
}

/// F_r as an evaluation target.
struct FreeAlgebra {
  using Element = LieElement;
  AlgebraContext ctx;

  Element zero() const { return ctx.zero(); }
  Element constant(std::size_t i) const {
    if (i >= ctx.r()) throw ConfigurationError("constant a" + std::to_string(i + 1) + " is not in the algebra");
    return ctx.generator(i);
  }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(std::int64_t c, const Element& a) const { return a.scaled(ctx.field().reduce(c)); }
  Element bracket(const Element& a, const Element& b) const { return metalie::bracket(a, b); }
};

LieElement evaluate(const LieExpr& f, const AlgebraContext& ctx, std::span<const LieElement> point);
/// Normal form of a constant expression.
LieElement normal_form(const LieExpr& f, const AlgebraContext& ctx);
LieElement normal_form(std::string_view text, const AlgebraContext& ctx);

/// Left-normed expression for an element; names[i] is the tree standing
/// for the i-th free generator.
LieExpr element_expr(const LieElement& u, const std::vector<LieExpr>& names);
LieExpr element_expr(const LieElement& u);

}  // namespace metalie
