#include <doctest.h>

#include "oracles.hpp"

using namespace metalie;

namespace {

EquationSystem sys(const std::string& text, std::uint32_t p = 2, std::size_t r = 2) {
  return parse_system(text, AlgebraContext(p, r));
}

LieElement fit(const AlgebraContext& ctx, const ModuleVector& v) {
  return LieElement(ctx, std::vector<Coeff>(ctx.r(), 0), v);
}

/// Every point of the kept subsystem that the solver reports also solves
/// the full system, so the two solution sets coincide.
bool same_solutions(const ModuleSystem& full, const ModuleSystem& kept, const ModulePresentation& j) {
  auto a = solve_linear_over_module(full.coeffs, full.unknowns, full.rhs, j);
  auto b = solve_linear_over_module(kept.coeffs, kept.unknowns, kept.rhs, j);
  if (a.has_value() != b.has_value()) return false;
  if (!b) return true;
  auto residual = [&](const std::vector<ModuleVector>& y, bool homogeneous) {
    auto lhs = apply_coefficients(full.coeffs, y, j);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      ModuleVector want = homogeneous ? ModuleVector(j.ring(), j.generators()) : full.rhs[i];
      if (!j.is_zero_element(lhs[i] - want)) return false;
    }
    return true;
  };
  if (!residual(b->particular, false)) return false;
  for (const auto& h : b->homogeneous)
    if (!residual(h, true)) return false;
  return true;
}

}  // namespace

TEST_CASE("system parsing") {
  EquationSystem s = sys("[a1,a2]\n# comment\n\n[[x1,a1],x1]\n");
  CHECK(s.equations.size() == 2);
  CHECK(s.arity == 1);
  CHECK(s.equations[1] == LieExpr::bracket(LieExpr::bracket(LieExpr::variable(0), LieExpr::constant(0)),
                                           LieExpr::variable(0)));
  CHECK(parse_system("x1", AlgebraContext(2, 2), 3).arity == 3);
  CHECK_THROWS_AS(sys("x1 + y"), SyntaxError);
  CHECK(sys("x1 = a1").equations[0].to_string() == sys("x1 - a1").equations[0].to_string());
  EquationSystem again = parse_system(s.to_string(), s.ctx);
  CHECK(again.equations == s.equations);
}

TEST_CASE("decomposition examples") {
  AlgebraContext ctx(3, 2);
  Decomposition d = decompose(parse_lie_expr("x1 - a1", 2), ctx, 1);
  CHECK(d.c == normal_form("-a1", ctx));
  REQUIRE(d.h.size() == 1);
  CHECK(d.h[0] == Polynomial::constant(ctx.ring(), 1));
  CHECK(normal_form(d.g, ctx).is_zero());

  Decomposition e = decompose(parse_lie_expr("[[a1,a2],x1]", 2), ctx, 1);
  CHECK(e.c.is_zero());
  CHECK(e.h[0].constant_term() == 0);
  CHECK(normal_form(e.g, ctx).is_zero());
  CHECK(evaluate(e.linear_terms, ctx, std::vector<LieElement>{ctx.generator(0)}) ==
        normal_form("[[a1,a2],a1]", ctx));

  Decomposition g = decompose(parse_lie_expr("[[x1,a1],[x2,a2]]", 2), ctx, 2);
  CHECK(g.c.is_zero());
  for (const auto& h : g.h) CHECK(h.is_zero());
}

TEST_CASE("decomposition recombines to the same function") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {2u, 3u}) {
    AlgebraContext ctx(p, 2);
    for (int k = 0; k < 60; ++k) {
      std::size_t n = 1 + static_cast<std::size_t>(k) % 2;
      LieExpr f = LieExpr::sum({oracle::random_lhs(ctx, n, rng, 2), oracle::random_expr(2, n, rng, 3)});
      Decomposition d = decompose(f, ctx, n);
      CHECK(d.h.size() == n);
      for (int t = 0; t < 5; ++t) {
        std::vector<LieElement> pt;
        for (std::size_t i = 0; i < n; ++i) pt.push_back(oracle::random_element(ctx, rng));
        CHECK(evaluate(f, ctx, pt) == evaluate(d.recombined(), ctx, pt));
        std::vector<LieElement> fits;
        for (const auto& x : pt) fits.push_back(fit(ctx, x.fitting()));
        CHECK(evaluate(d.g, ctx, fits).is_zero());
      }
    }
  }
}

TEST_CASE("abelianized branches") {
  auto b = abelianized_branches(sys("x1 - a1"), 100);
  REQUIRE(b.size() == 1);
  CHECK(b[0].alpha == std::vector<std::vector<Coeff>>{{1, 0}});
  CHECK(abelianized_branches(sys("[[a1,a2],x1]"), 100).size() == 4);
  CHECK(abelianized_branches(sys("[[a1,a2],x1]", 3), 100).size() == 9);
  CHECK(abelianized_branches(sys("[x1,a1] + a2"), 100).empty());
  CHECK_THROWS_AS(abelianized_branches(sys("[[a1,a2],x1] + [[a1,a2],x2]"), 15), ResourceError);
}

TEST_CASE("specialization examples") {
  EquationSystem s = sys("[x1,a1] + [a2,a1]");
  const Ring& ring = s.ctx.ring();
  Polynomial x1 = Polynomial::variable(ring, 0);
  ModuleSystem shifted = specialize(s, LinearBranch{{{1, 1}}});
  CHECK(shifted.coeffs[0][0] == x1);
  CHECK(shifted.rhs[0].is_zero());
  ModuleSystem plain = specialize(s, LinearBranch{{{1, 0}}});
  CHECK(plain.coeffs[0][0] == x1);
  CHECK(plain.rhs[0] == s.ctx.commutator(1, 0).fitting());

  ModuleSystem fitting = specialize(sys("[[a1,a2],x1]"), LinearBranch{{{0, 0}}});
  CHECK(fitting.coeffs[0][0].is_zero());
  CHECK(fitting.rhs[0].is_zero());
}

TEST_CASE("solver examples") {
  SolutionSet one = solve_system(sys("x1 - a1"));
  CHECK(one.consistent);
  CHECK(oracle::point_set(one.bounded_slice(2, 1u << 20)) == std::vector<std::string>{format_point({one.ctx.generator(0)})});

  EquationSystem fs = sys("[[a1,a2],x1]");
  SolutionSet fit_set = solve_system(fs);
  CHECK(fit_set.consistent);
  REQUIRE(fit_set.branches.size() == 1);
  CHECK(fit_set.branches[0].branch.alpha == std::vector<std::vector<Coeff>>{{0, 0}});
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    LieElement u = oracle::random_element(fs.ctx, rng, 3);
    CHECK(fit_set.contains({u}) == u.has_zero_linear_part());
  }

  SolutionSet none = solve_system(sys("[x1,a1] + a2"));
  CHECK_FALSE(none.consistent);
  CHECK(none.branches_examined == 0);

  EquationSystem ws = sys("[x1,a1] + [a2,a1]");
  SolutionSet w = solve_system(ws);
  CHECK(w.consistent);
  CHECK(w.branches_examined == 4);
  const AlgebraContext& ctx = ws.ctx;
  std::vector<std::string> want = oracle::point_set({{ctx.generator(1)}, {ctx.generator(0) + ctx.generator(1)}});
  CHECK(oracle::point_set(w.bounded_slice(2, 1u << 20)) == want);
  CHECK(oracle::point_set(brute_force_solve(ws, 2, 1u << 20)) == want);
  CHECK(w.contains({ctx.generator(1)}));
  CHECK_FALSE(w.contains({ctx.generator(0)}));
}

TEST_CASE("brute force examples") {
  EquationSystem fs = sys("[[a1,a2],x1]");
  auto pts = oracle::point_set(brute_force_solve(fs, 0, 1u << 20));
  const AlgebraContext& ctx = fs.ctx;
  CHECK(pts == oracle::point_set({{ctx.zero()}, {ctx.commutator(1, 0)}}));
  CHECK(brute_force_solve(sys("x1 - a1\nx1 - a2"), 1, 1u << 20).empty());
  CHECK(oracle::point_set(brute_force_solve(sys("x1 - a1"), 1, 1u << 20)).size() == 1);
  CHECK(candidate_elements(ctx, 0, 1u << 20).size() == 8);
}

TEST_CASE("solver agrees with brute force on random systems") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    AlgebraContext ctx(p, 2);
    for (int k = 0; k < 24; ++k) {
      std::size_t n = 1 + static_cast<std::size_t>(k) % 2;
      unsigned bound = (p == 3 && n == 2) ? 0 : 1;
      EquationSystem s = oracle::random_system(ctx, n, rng, 2, k % 2 == 0);
      CAPTURE(s.to_string());
      SolutionSet sol = solve_system(s);
      auto brute = brute_force_solve(s, bound, 1u << 22);
      auto slice = sol.bounded_slice(bound, 1u << 22);
      CHECK(oracle::point_set(slice) == oracle::point_set(brute));
      if (!sol.consistent) CHECK(brute.empty());
      if (k % 2 == 0) CHECK(sol.consistent);
      for (const auto& x : slice)
        for (const auto& f : s.equations) CHECK(evaluate(f, ctx, x).is_zero());
    }
  }
}

TEST_CASE("finite equivalent subsystems") {
  AlgebraContext ctx(2, 2);
  const Ring& ring = ctx.ring();
  auto poly = [&](const char* t) { return parse_polynomial(t, ring); };
  ModuleVector zero(ring, ctx.t());
  ModuleSystem a{1, {{poly("x1")}, {poly("x1^2")}}, {zero, zero}};
  Subsystem sa = finite_equivalent_subsystem(a, ctx.fitting());
  CHECK(sa.kept == std::vector<std::size_t>{0});
  ModuleSystem b{1, {{poly("x1")}}, {zero}};
  CHECK(finite_equivalent_subsystem(b, ctx.fitting()).kept == std::vector<std::size_t>{0});
  ModuleSystem c{1, {{poly("x1")}, {poly("x2")}, {poly("x1 + x2")}}, {zero, zero, zero}};
  Subsystem sc = finite_equivalent_subsystem(c, ctx.fitting());
  CHECK(sc.kept == std::vector<std::size_t>{0, 1});
  CHECK(same_solutions(c, sc.system, ctx.fitting()));

  std::mt19937_64 rng(6);
  for (std::size_t r : {2u, 3u}) {
    AlgebraContext cr(2, r);
    for (int k = 0; k < 30; ++k) {
      ModuleSystem ms;
      ms.unknowns = 1 + static_cast<std::size_t>(k) % 2;
      std::size_t m = 2 + static_cast<std::size_t>(k) % 3;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < ms.unknowns; ++j) row.push_back(oracle::random_poly(cr.ring(), rng, 2, 0.3));
        ms.coeffs.push_back(row);
        ms.rhs.push_back(k % 3 == 0 ? oracle::random_element(cr, rng, 1).fitting() : ModuleVector(cr.ring(), cr.t()));
      }
      // A combination of the first two rows is always redundant.
      std::vector<Polynomial> combo;
      for (std::size_t j = 0; j < ms.unknowns; ++j)
        combo.push_back(ms.coeffs[0][j] * Polynomial::variable(cr.ring(), 0) + ms.coeffs[1][j]);
      ms.coeffs.push_back(combo);
      ms.rhs.push_back(ms.rhs[0] * Polynomial::variable(cr.ring(), 0) + ms.rhs[1]);
      Subsystem sub = finite_equivalent_subsystem(ms, cr.fitting());
      CHECK(sub.kept.size() < ms.coeffs.size());
      CHECK(same_solutions(ms, sub.system, cr.fitting()));
    }
  }
}
