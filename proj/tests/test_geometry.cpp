#include <doctest.h>

#include "oracles.hpp"

using namespace metalie;

namespace {

ModulePresentation mod(const std::string& body, std::size_t gens, std::uint32_t p = 2, std::size_t r = 2) {
  return parse_relations(body, Ring(p, r), gens);
}

std::vector<std::string> hom_points(const ModulePresentation& m, unsigned bound) {
  AlgebraContext ctx(m.ring().p(), m.ring().nvars());
  std::vector<Point> pts;
  for (const auto& h : homs_to_fitting(m, bound)) pts.push_back(h.point(ctx));
  return oracle::point_set(pts);
}

}  // namespace

TEST_CASE("canonical systems") {
  EquationSystem t1 = canonical_system(mod("", 1));
  REQUIRE(t1.equations.size() == 1);
  CHECK(t1.arity == 1);
  CHECK(t1.equations[0] == parse_lie_expr("[[a1,a2],x1]", 2));

  EquationSystem tor = canonical_system(mod("x1\n", 1));
  REQUIRE(tor.equations.size() == 2);
  CHECK(tor.equations[1] == parse_lie_expr("[[a1,a2],x1]", 2));
  const AlgebraContext& ctx = tor.ctx;
  std::vector<LieElement> y{ctx.commutator(1, 0)};
  CHECK(evaluate(tor.equations[0], ctx, y) == evaluate(parse_lie_expr("[x1,a1]", 2), ctx, y));

  EquationSystem ideal = canonical_system(mod("x2; -x1\n", 2));
  CHECK(ideal.equations.size() == 3);
  CHECK(ideal.arity == 2);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    std::vector<LieElement> pt{oracle::random_element(ctx, rng), oracle::random_element(ctx, rng)};
    CHECK(evaluate(ideal.equations[0], ctx, pt) == evaluate(parse_lie_expr("[x1,a2] - [x2,a1]", 2), ctx, pt));
  }
  CHECK_THROWS(canonical_system(mod("", 1, 2, 1)));
}

TEST_CASE("radical membership") {
  ModulePresentation t1 = mod("", 1);
  CHECK(radical_member(parse_lie_expr("[[a1,a2],x1]", 2), t1));
  CHECK_FALSE(radical_member(parse_lie_expr("[x1,a1]", 2), t1));
  CHECK(radical_member(parse_lie_expr("[[x1,a1],[x1,a2]]", 2), t1));
  CHECK_FALSE(radical_member(parse_lie_expr("x1", 2), t1));
  ModulePresentation ideal = mod("x2; -x1\n", 2);
  CHECK(radical_member(parse_lie_expr("[x1,a2] - [x2,a1]", 2), ideal));
  CHECK_FALSE(radical_member(parse_lie_expr("[x1,a2]", 2), ideal));
  CHECK_THROWS_AS(radical_member(parse_lie_expr("x1", 2), mod("x1\n", 1)), TorsionInput);
}

TEST_CASE("radical members vanish on every bounded point") {
  const char* words[] = {"[[a1,a2],x1]", "[x1,a1]", "[[x1,a1],[x1,a2]]", "[x1,a2] - [x2,a1]", "[[x1,a1],a2] - [[x1,a2],a1]",
                         "[x1,x2]", "[[x2,a1],a1] - [[x1,a2],a1]", "x1"};
  for (const auto& c : oracle::corpus()) {
    if (!c.torsion_free) continue;
    ModulePresentation m = parse_presentation(c.text);
    AlgebraContext ctx(2, 2);
    auto homs = homs_to_fitting(m, 2);
    for (const char* w : words) {
      LieExpr f = parse_lie_expr(w, 2);
      if (f.arity() > m.generators()) continue;
      CAPTURE(c.name);
      CAPTURE(w);
      bool vanishes = true;
      for (const auto& h : homs) vanishes &= evaluate(f, ctx, h.point(ctx)).is_zero();
      CHECK(radical_member(f, m) == vanishes);
    }
  }
}

TEST_CASE("coordinate algebras of module systems") {
  AlgebraContext ctx(2, 2);
  const Ring& ring = ctx.ring();
  ModuleVector zero(ring, ctx.t());

  CoordinateAlgebra free1 = coordinate_algebra_of_module_system(ModuleSystem{1, {}, {}}, ctx);
  CHECK(free1.to_string() == "F_2 + T_1");
  CHECK(dimension(free1) == 1);

  CoordinateAlgebra pt = coordinate_algebra_of_module_system(ModuleSystem{1, {{parse_polynomial("x1", ring)}}, {zero}}, ctx);
  CHECK(pt.is_point());
  CHECK(pt.to_string() == "F_2");
  CHECK(dimension(pt) == 0);

  ModuleSystem ideal{2, {{parse_polynomial("x2", ring), parse_polynomial("x1", ring)}}, {zero}};
  CoordinateAlgebra id = coordinate_algebra_of_module_system(ideal, ctx);
  CHECK(dimension(id) == 1);
  CHECK(is_torsion_free(id.module()));
  CHECK(id.to_string() == "F_2 + M");

  ModuleSystem inhom{1, {{parse_polynomial("x1", ring)}}, {ctx.commutator(1, 0).fitting()}};
  CHECK_THROWS_AS(coordinate_algebra_of_module_system(inhom, ctx), InputError);
}

TEST_CASE("coordinate modules parametrize the module solutions") {
  AlgebraContext ctx(2, 2);
  std::mt19937_64 rng(10);
  for (int k = 0; k < 20; ++k) {
    ModuleSystem ms;
    ms.unknowns = 1 + static_cast<std::size_t>(k) % 2;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(k) % 2; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < ms.unknowns; ++j) row.push_back(oracle::random_poly(ctx.ring(), rng, 1, 0.6));
      ms.coeffs.push_back(row);
      ms.rhs.emplace_back(ctx.ring(), ctx.t());
    }
    CoordinateAlgebra g = coordinate_algebra_of_module_system(ms, ctx);
    CHECK(is_torsion_free(g.module()));
    // Solutions of the system in Fit(F_2) are the homs from the coordinate module.
    auto fits = enumerate_module_elements(ctx.fitting(), 1, 1u << 20);
    std::vector<std::string> direct;
    std::vector<std::size_t> idx(ms.unknowns, 0);
    for (;;) {
      std::vector<ModuleVector> y;
      for (auto i : idx) y.push_back(fits[i]);
      bool ok = true;
      for (const auto& v : apply_coefficients(ms.coeffs, y, ctx.fitting())) ok &= v.is_zero();
      if (ok) direct.push_back(format_point(HomPoint{y}.point(ctx)));
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == fits.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
    std::sort(direct.begin(), direct.end());
    CHECK(hom_points(g.module(), 1) == direct);
    Subsystem sub = finite_equivalent_subsystem(ms, ctx.fitting());
    CHECK(dimension(coordinate_algebra_of_module_system(sub.system, ctx)) == dimension(g));
  }
}

TEST_CASE("dimension examples") {
  AlgebraContext ctx(2, 2);
  for (std::size_t s = 0; s <= 3; ++s) {
    CoordinateAlgebra g{ExtensionAlgebra(ctx, ModulePresentation::free(ctx.ring(), s))};
    CHECK(dimension(g) == s);
  }
  CoordinateAlgebra ms = coordinate_algebra_of_module_system(module_system_of(mod("x2; -x1\n", 2), ctx), ctx);
  CHECK(dimension(ms) == 1);
}

TEST_CASE("homomorphism examples") {
  CHECK(homs_to_fitting(mod("", 1), 0).size() == 2);
  CHECK(homs_to_fitting(mod("", 1), 1).size() == 8);
  auto unit = homs_to_fitting(mod("1\n", 1), 2);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].images[0].is_zero());
  auto tor = homs_to_fitting(mod("x1\n", 1), 2);
  REQUIRE(tor.size() == 1);
  CHECK(tor[0].images[0].is_zero());
  CHECK_THROWS_AS(homs_to_fitting(mod("", 3), 2, 1000), ResourceError);
}

TEST_CASE("homs match the canonical system at bound 1") {
  for (const auto& c : oracle::corpus()) {
    CAPTURE(c.name);
    ModulePresentation m = parse_presentation(c.text);
    CHECK(hom_points(m, 1) == oracle::point_set(brute_force_solve(canonical_system(m), 1, 1u << 22)));
  }
}

TEST_CASE("dimension chains") {
  AlgebraContext ctx(2, 2);
  for (std::size_t s = 1; s <= 3; ++s) {
    CoordinateAlgebra g{ExtensionAlgebra(ctx, ModulePresentation::free(ctx.ring(), s))};
    auto chain = chain_dimension_check(g);
    REQUIRE(chain.size() == s + 1);
    for (std::size_t i = 0; i <= s; ++i) {
      CHECK(rank(chain[i].module()) == s - i);
      CHECK(is_torsion_free(chain[i].module()));
    }
  }
  CHECK(chain_dimension_check(CoordinateAlgebra{ExtensionAlgebra(ctx, mod("1\n", 1))}).empty());
  auto ideal = chain_dimension_check(CoordinateAlgebra{ExtensionAlgebra(ctx, mod("0; x2; -x1\n", 3))});
  REQUIRE(ideal.size() == 3);
  CHECK(rank(ideal[1].module()) == 1);
  CHECK_THROWS_AS(chain_dimension_check(CoordinateAlgebra{ExtensionAlgebra(ctx, mod("0; x1\n", 2))}), TorsionInput);
}
