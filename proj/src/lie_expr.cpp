#include "metalie/lie_expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace metalie {

LieExpr LieExpr::constant(std::size_t i) {
  LieExpr e;
  e.kind_ = Kind::Const;
  e.index_ = i;
  return e;
}

LieExpr LieExpr::variable(std::size_t j) {
  LieExpr e;
  e.kind_ = Kind::Var;
  e.index_ = j;
  return e;
}

LieExpr LieExpr::bracket(LieExpr lhs, LieExpr rhs) {
  LieExpr e;
  e.kind_ = Kind::Bracket;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

LieExpr LieExpr::sum(std::vector<LieExpr> terms) {
  if (terms.size() == 1) return std::move(terms.front());
  LieExpr e;
  e.kind_ = Kind::Sum;
  e.children_ = std::move(terms);
  return e;
}

LieExpr LieExpr::scale(std::int64_t c, LieExpr inner) {
  if (c < -1) return scale(-1, scale(-c, std::move(inner)));
  LieExpr e;
  e.kind_ = Kind::Scale;
  e.coeff_ = c;
  e.children_.push_back(std::move(inner));
  return e;
}

std::size_t LieExpr::arity() const {
  if (kind_ == Kind::Var) return index_ + 1;
  std::size_t a = 0;
  for (const auto& c : children_) a = std::max(a, c.arity());
  return a;
}

std::size_t LieExpr::constants_used() const {
  if (kind_ == Kind::Const) return index_ + 1;
  std::size_t a = 0;
  for (const auto& c : children_) a = std::max(a, c.constants_used());
  return a;
}

namespace {

bool is_nonempty_sum(const LieExpr& e) { return e.kind() == LieExpr::Kind::Sum && !e.children().empty(); }

std::string wrapped(const LieExpr& e) { return is_nonempty_sum(e) ? "(" + e.to_string() + ")" : e.to_string(); }

}  // namespace

std::string LieExpr::to_string() const {
  switch (kind_) {
    case Kind::Const:
      return "a" + std::to_string(index_ + 1);
    case Kind::Var:
      return "x" + std::to_string(index_ + 1);
    case Kind::Bracket:
      return "[" + children_[0].to_string() + "," + children_[1].to_string() + "]";
    case Kind::Scale:
      if (coeff_ == -1) return "-" + wrapped(children_[0]);
      return std::to_string(coeff_) + "*" + wrapped(children_[0]);
    case Kind::Sum: {
      if (children_.empty()) return "0";
      std::string s;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        const LieExpr& c = children_[k];
        if (c.kind_ == Kind::Scale && c.coeff_ == -1) {
          s += (k == 0 ? "-" : " - ") + wrapped(c.children_[0]);
        } else {
          s += (k == 0 ? "" : " + ") + wrapped(c);
        }
      }
      return s;
    }
  }
  return "0";
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t r) : text_(text), r_(r) {}

  LieExpr parse_top() {
    LieExpr lhs = expr();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      LieExpr rhs = expr();
      lhs = LieExpr::sum({std::move(lhs), LieExpr::scale(-1, std::move(rhs))});
    }
    skip();
    if (pos_ != text_.size()) fail_at_current();
    return lhs;
  }

 private:
  [[noreturn]] void fail_at_current() {
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw SyntaxError("unknown symbol '" + std::string(1, c) + "'", pos_);
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t number() {
    skip();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) throw SyntaxError("number too large", start);
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start) throw SyntaxError("expected a number", start);
    return v;
  }

  LieExpr expr() {
    std::vector<LieExpr> terms;
    terms.push_back(unary());
    for (;;) {
      if (peek('+')) {
        ++pos_;
        terms.push_back(unary());
      } else if (peek('-')) {
        ++pos_;
        terms.push_back(LieExpr::scale(-1, unary()));
      } else {
        break;
      }
    }
    return LieExpr::sum(std::move(terms));
  }

  LieExpr unary() {
    if (peek('-')) {
      ++pos_;
      return LieExpr::scale(-1, unary());
    }
    if (peek_digit()) {
      std::size_t at = pos_;
      std::int64_t c = number();
      if (peek('*')) {
        ++pos_;
        return LieExpr::scale(c, unary());
      }
      if (c != 0) throw SyntaxError("scalar " + std::to_string(c) + " without a factor", at);
      return LieExpr::zero();
    }
    return atom();
  }

  LieExpr atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LieExpr e = expr();
      if (!peek(')')) throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (c == '[') {
      ++pos_;
      LieExpr lhs = expr();
      if (!peek(',')) throw SyntaxError("expected ',' inside bracket", pos_);
      ++pos_;
      LieExpr rhs = expr();
      if (!peek(']')) throw SyntaxError("expected ']'", pos_);
      ++pos_;
      return LieExpr::bracket(std::move(lhs), std::move(rhs));
    }
    if ((c == 'a' || c == 'x') && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t at = pos_++;
      std::int64_t i = number();
      if (c == 'a') {
        if (i < 1 || static_cast<std::size_t>(i) > r_)
          throw SyntaxError("constant a" + std::to_string(i) + " outside a1..a" + std::to_string(r_), at);
        return LieExpr::constant(static_cast<std::size_t>(i - 1));
      }
      if (i < 1 || i > 4096) throw SyntaxError("variable x" + std::to_string(i) + " out of range", at);
      return LieExpr::variable(static_cast<std::size_t>(i - 1));
    }
    fail_at_current();
  }

  std::string_view text_;
  std::size_t r_;
  std::size_t pos_ = 0;
};

}  // namespace

LieExpr parse_lie_expr(std::string_view text, std::size_t r) { return ExprParser(text, r).parse_top(); }

LieElement evaluate(const LieExpr& f, const AlgebraContext& ctx, std::span<const LieElement> point) {
  if (point.size() < f.arity()) throw ConfigurationError("evaluation point is shorter than the arity");
  return evaluate(f, FreeAlgebra{ctx}, point);
}

LieElement normal_form(const LieExpr& f, const AlgebraContext& ctx) {
  if (f.arity() != 0) throw InputError("expression contains variables");
  return evaluate(f, ctx, std::span<const LieElement>{});
}

LieElement normal_form(std::string_view text, const AlgebraContext& ctx) {
  return normal_form(parse_lie_expr(text, ctx.r()), ctx);
}

LieExpr element_expr(const LieElement& u, const std::vector<LieExpr>& names) {
  const AlgebraContext& ctx = u.context();
  if (names.size() < ctx.r()) throw ConfigurationError("one name per generator is required");
  std::vector<LieExpr> terms;
  auto with_coeff = [](Coeff c, LieExpr e) {
    return c == 1 ? e : LieExpr::scale(static_cast<std::int64_t>(c), std::move(e));
  };
  for (std::size_t i = 0; i < ctx.r(); ++i)
    if (u.linear()[i]) terms.push_back(with_coeff(u.linear()[i], names[i]));
  for (const auto& [idx, f] : u.fitting().entries()) {
    auto [i, j] = ctx.pair_of(idx);
    for (const auto& term : f.terms()) {
      LieExpr b = LieExpr::bracket(names[i], names[j]);
      for (std::size_t var = 0; var < ctx.r(); ++var)
        for (std::uint16_t e = 0; e < term.mono[var]; ++e) b = LieExpr::bracket(std::move(b), names[var]);
      terms.push_back(with_coeff(term.coeff, std::move(b)));
    }
  }
  return LieExpr::sum(std::move(terms));
}

LieExpr element_expr(const LieElement& u) {
  std::vector<LieExpr> names;
  for (std::size_t i = 0; i < u.context().r(); ++i) names.push_back(LieExpr::constant(i));
  return element_expr(u, names);
}

}  // namespace metalie
