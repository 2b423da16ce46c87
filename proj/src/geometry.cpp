#include "metalie/geometry.hpp"

#include "metalie/error.hpp"

namespace metalie {

std::string CoordinateAlgebra::to_string() const {
  const std::size_t s = algebra.module().generators();
  std::string out = "F_" + std::to_string(algebra.n());
  if (algebra.module().is_zero_module()) return out;
  if (algebra.module().basis().is_zero_module()) return out + " + T_" + std::to_string(s);
  return out + " + M";
}

Point HomPoint::point(const AlgebraContext& ctx) const {
  Point pt;
  for (const auto& y : images) pt.emplace_back(ctx, std::vector<Coeff>(ctx.r(), 0), y);
  return pt;
}

namespace {

AlgebraContext context_of(const ModulePresentation& m) {
  return AlgebraContext(m.ring().p(), m.ring().nvars());
}

LieExpr transcribe(const ModuleVector& rel) {
  std::vector<LieExpr> terms;
  for (const auto& [j, f] : rel.entries())
    for (const auto& t : f.terms()) {
      LieExpr e = LieExpr::variable(j);
      for (std::size_t k = 0; k < kMaxVars; ++k)
        for (std::uint16_t d = 0; d < t.mono[k]; ++d) e = LieExpr::bracket(std::move(e), LieExpr::constant(k));
      terms.push_back(t.coeff == 1 ? std::move(e) : LieExpr::scale(static_cast<std::int64_t>(t.coeff), std::move(e)));
    }
  return LieExpr::sum(std::move(terms));
}

}  // namespace

EquationSystem canonical_system(const ModulePresentation& m) {
  if (m.ring().nvars() < 2) throw ConfigurationError("canonical systems need at least two constants");
  EquationSystem s{context_of(m), m.generators(), {}};
  for (const auto& rel : m.relations()) s.equations.push_back(transcribe(rel));
  LieExpr a12 = LieExpr::bracket(LieExpr::constant(0), LieExpr::constant(1));
  for (std::size_t i = 0; i < m.generators(); ++i) s.equations.push_back(LieExpr::bracket(a12, LieExpr::variable(i)));
  return s;
}

bool radical_member(const LieExpr& f, const ModulePresentation& m) {
  if (f.arity() > m.generators())
    throw InputError("polynomial uses x" + std::to_string(f.arity()) + " but the module has " +
                     std::to_string(m.generators()) + " generators");
  if (f.constants_used() > m.ring().nvars())
    throw InputError("polynomial uses a" + std::to_string(f.constants_used()) + " outside a1..a" +
                     std::to_string(m.ring().nvars()));
  if (!is_torsion_free(m)) throw TorsionInput("radical membership needs a torsion-free module");
  ExtensionAlgebra b(context_of(m), m);
  std::vector<ExtElement> point;
  for (std::size_t i = 0; i < m.generators(); ++i) point.push_back(b.module_element(m.generator(i)));
  return evaluate(f, b, point).is_zero();
}

ModuleSystem module_system_of(const ModulePresentation& m, const AlgebraContext& ctx) {
  if (!(m.ring() == ctx.ring())) throw ConfigurationError("module is over a different ring");
  ModuleSystem ms;
  ms.unknowns = m.generators();
  for (const auto& rel : m.relations()) {
    ms.coeffs.push_back(rel.dense());
    ms.rhs.emplace_back(ctx.ring(), ctx.t());
  }
  return ms;
}

CoordinateAlgebra coordinate_algebra_of_module_system(const ModuleSystem& ms, const AlgebraContext& ctx) {
  std::vector<ModuleVector> rows;
  for (std::size_t i = 0; i < ms.coeffs.size(); ++i) {
    if (!ctx.fitting().is_zero_element(ms.rhs[i]))
      throw InputError("equation " + std::to_string(i + 1) + " is not homogeneous");
    if (ms.coeffs[i].size() != ms.unknowns) throw ConfigurationError("coefficient row has wrong length");
    rows.push_back(ModuleVector::from_dense(ctx.ring(), ms.coeffs[i]).shifted(0, ms.unknowns));
  }
  ModulePresentation m(ctx.ring(), ms.unknowns, rows);
  return {ExtensionAlgebra(ctx, torsion_submodule(m))};
}

std::size_t dimension(const CoordinateAlgebra& g) { return rank(g.module()); }

std::vector<HomPoint> homs_to_fitting(const ModulePresentation& m, unsigned degree_bound, std::size_t cap) {
  AlgebraContext ctx = context_of(m);
  const std::size_t n = m.generators();
  std::vector<HomPoint> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  auto fits = enumerate_module_elements(ctx.fitting(), degree_bound, cap);
  // A relation is checked once all generators it involves have images.
  std::vector<std::vector<const ModuleVector*>> by_level(n + 1);
  for (const auto& rel : m.relations())
    if (!rel.is_zero()) by_level[rel.entries().back().first + 1].push_back(&rel);
  std::vector<ModuleVector> images;
  std::size_t work = 0;
  auto search = [&](auto& self, std::size_t level) -> void {
    for (const auto& y : fits) {
      if (++work > cap) throw ResourceError("hom enumeration exceeds cap " + std::to_string(cap));
      images.push_back(y);
      bool ok = true;
      for (const auto* rel : by_level[level + 1]) {
        ModuleVector v(ctx.ring(), ctx.t());
        for (const auto& [j, f] : rel->entries()) v += images[j] * f;
        if (!ctx.fitting().is_zero_element(v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (level + 1 == n) {
          out.push_back({images});
        } else {
          self(self, level + 1);
        }
      }
      images.pop_back();
    }
  };
  search(search, 0);
  return out;
}

std::vector<CoordinateAlgebra> chain_dimension_check(const CoordinateAlgebra& g) {
  std::vector<CoordinateAlgebra> chain;
  if (g.is_point()) return chain;
  if (!is_torsion_free(g.module())) throw TorsionInput("coordinate algebra module has torsion");
  chain.push_back(g);
  std::size_t d = rank(g.module());
  while (d > 0) {
    const ModulePresentation& m = chain.back().module();
    std::size_t j = 0;
    while (m.is_zero_element(m.generator(j))) ++j;
    ModulePresentation next = torsion_submodule(m.with_relations({m.generator(j)}));
    std::size_t e = rank(next);
    if (e + 1 != d) throw Error("cyclic quotient did not lower the rank by one");
    chain.push_back({ExtensionAlgebra(g.algebra.base(), next)});
    d = e;
  }
  return chain;
}

}  // namespace metalie
