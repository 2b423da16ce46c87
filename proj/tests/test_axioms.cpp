#include <doctest.h>

#include "oracles.hpp"

using namespace metalie;

namespace {

ExtensionAlgebra ext(std::uint32_t p, std::size_t n, const std::string& rel, std::size_t gens) {
  AlgebraContext ctx(p, n);
  return ExtensionAlgebra(ctx, parse_relations(rel, ctx.ring(), gens));
}

AxiomInstance phi5p(const Ring& ring, const char* f) {
  AxiomInstance inst;
  inst.scheme = AxiomScheme::Phi5p;
  inst.arity = ring.nvars();
  inst.f = parse_polynomial(f, ring);
  return inst;
}

ModuleSystem one_equation(const AlgebraContext& ctx, const char* coeff, const ModuleVector& rhs) {
  return ModuleSystem{1, {{parse_polynomial(coeff, ctx.ring())}}, {rhs}};
}

bool solvable(const ModuleSystem& s, const ModulePresentation& j) {
  return solve_linear_over_module(s.coeffs, s.unknowns, s.rhs, j).has_value();
}

}  // namespace

TEST_CASE("scheme and language names") {
  for (auto s : {AxiomScheme::Phi1, AxiomScheme::Phi4, AxiomScheme::Phi5p, AxiomScheme::Phi7p})
    CHECK(parse_scheme(scheme_name(s)) == s);
  CHECK(parse_scheme("phi5p") == AxiomScheme::Phi5p);
  CHECK(scheme_name(AxiomScheme::Phi7p) == "Phi7'");
  CHECK_THROWS_AS(parse_scheme("Phi8"), InputError);
  CHECK(parse_language("LFr") == Language::LFr);
  CHECK(parse_language("L") == Language::L);
  CHECK_THROWS_AS(parse_language("M"), InputError);
}

TEST_CASE("instance checks from the examples") {
  ExtensionAlgebra tor = ext(2, 2, "x1\n", 1);
  CheckResult r = check_instance(phi5p(tor.base().ring(), "x1"), tor);
  CHECK_FALSE(r.holds);
  CHECK(r.method == CheckMethod::Decided);
  CHECK_FALSE(r.witness.empty());
  CHECK(check_instance(phi5p(tor.base().ring(), "x2"), tor).holds);

  ExtensionAlgebra t2 = ext(2, 2, "", 2);
  for (const char* f : {"1", "x1", "x2 + 1", "x1*x2 + x1^2 + 1"}) CHECK(check_instance(phi5p(t2.base().ring(), f), t2).holds);

  AxiomInstance phi4;
  phi4.scheme = AxiomScheme::Phi4;
  phi4.arity = 3;
  CHECK_FALSE(check_instance(phi4, ext(2, 3, "", 0)).holds);
  CHECK(check_instance(phi4, ext(2, 2, "", 0)).holds);
  CHECK(check_instance(phi4, ext(2, 1, "", 0)).holds);
}

TEST_CASE("structural axioms on extensions") {
  for (const auto& c : oracle::corpus()) {
    CAPTURE(c.name);
    ExtensionAlgebra b(AlgebraContext(2, 2), parse_presentation(c.text));
    for (auto s : {AxiomScheme::Phi1, AxiomScheme::Phi2, AxiomScheme::Phi3}) {
      AxiomInstance inst = enumerate_axioms(s, 1, b.base()).front();
      CheckResult res = check_instance(inst, b);
      if (s == AxiomScheme::Phi1 || c.torsion_free) CHECK(res.holds);
    }
  }
  AxiomInstance bad;
  bad.scheme = AxiomScheme::Phi5p;
  CHECK_THROWS_AS(check_instance(bad, ext(2, 2, "", 1)), ConfigurationError);
}

TEST_CASE("commutative transitivity fails with torsion") {
  ExtensionAlgebra tor = ext(2, 2, "x1\n", 1);
  AxiomInstance ct = enumerate_axioms(AxiomScheme::Phi3, 1, tor.base()).front();
  CheckResult res = check_instance(ct, tor);
  CHECK_FALSE(res.holds);
  CHECK(res.method == CheckMethod::Bounded);
}

TEST_CASE("S_f_alpha transform") {
  AlgebraContext ctx(2, 2);
  const Ring& ring = ctx.ring();
  ModuleVector c = ctx.commutator(1, 0).fitting();
  Polynomial one = Polynomial::constant(ring, 1), u = parse_polynomial("x1 + 1", ring);

  ModuleSystem s = one_equation(ctx, "x1", c);
  ModuleSystem same = s_f_alpha(s, one, {one});
  CHECK(same.coeffs == s.coeffs);
  CHECK(same.rhs == s.rhs);

  ModuleSystem t = one_equation(ctx, "x1*x2 + x2", c);
  ModuleSystem tr = s_f_alpha(t, u, {u});
  CHECK(tr.coeffs[0][0] == parse_polynomial("x1*x2 + x2", ring));
  CHECK(tr.rhs[0] == c * u);

  ModuleSystem two{2, {{parse_polynomial("x1*x2 + x2", ring), parse_polynomial("x1", ring)}}, {c}};
  ModuleSystem tw = s_f_alpha(two, u, {u, one});
  CHECK(tw.coeffs[0][0] == parse_polynomial("x2", ring) * u);
  CHECK(tw.coeffs[0][1] == parse_polynomial("x1", ring) * u);
  CHECK(tw.rhs[0] == c * u);

  CHECK_THROWS_AS(s_f_alpha(s, parse_polynomial("x1", ring), {one}), InputError);
  CHECK_THROWS_AS(s_f_alpha(s, u, {parse_polynomial("x1", ring)}), InputError);
  CHECK_THROWS_AS(s_f_alpha(s, u, {parse_polynomial("x2 + 1", ring)}), NonDivisor);

  AlgebraContext c3(3, 2);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    ModuleSystem ms = one_equation(c3, "x1", ModuleVector(c3.ring(), 1));
    ms.coeffs[0][0] = oracle::random_poly(c3.ring(), rng, 2);
    ms.rhs[0] = oracle::random_element(c3, rng, 2).fitting();
    Polynomial two_c = Polynomial::constant(c3.ring(), 2);
    ModuleSystem sc = s_f_alpha(ms, two_c, {Polynomial::constant(c3.ring(), 1)});
    CHECK(solvable(sc, c3.fitting()) == solvable(ms, c3.fitting()));
  }
}

TEST_CASE("unitary divisors") {
  Ring ring(2, 2);
  Polynomial f = parse_polynomial("x1*x2 + x1 + x2 + 1", ring);
  auto d = unitary_divisors(f, 2, 1u << 20);
  std::vector<std::string> names;
  for (const auto& g : d) names.push_back(g.to_string());
  CHECK(names == std::vector<std::string>{"1", "x1 + 1", "x2 + 1", "x1*x2 + x1 + x2 + 1"});
  for (const auto& g : d) CHECK(g.constant_term() == 1);
  CHECK_THROWS_AS(unitary_divisors(parse_polynomial("x1", ring), 1, 100), InputError);
}

TEST_CASE("localized consistency search") {
  AlgebraContext ctx(2, 2);
  ExtensionAlgebra f2(ctx, ModulePresentation::free(ctx.ring(), 0));
  ModuleVector c = ctx.commutator(1, 0).fitting();

  ModuleSystem direct = one_equation(ctx, "x1", c * Polynomial::variable(ctx.ring(), 0));
  DeltaResult dr = delta_consistency_semidecide(direct, f2, 2);
  REQUIRE(dr.witness);
  CHECK(dr.witness->f == Polynomial::constant(ctx.ring(), 1));

  ModuleSystem unit = one_equation(ctx, "x1 + 1", c);
  CHECK_FALSE(solvable(unit, ctx.fitting()));
  CHECK_FALSE(delta_inconsistency_certified(unit, ctx));
  for (unsigned bound = 1; bound <= 3; ++bound) {
    DeltaResult w = delta_consistency_semidecide(unit, f2, bound);
    REQUIRE(w.witness);
    CHECK(w.witness->f.total_degree() == 1);
    CHECK(w.witness->f.constant_term() != 0);
    CHECK(solvable(w.witness->system, ctx.fitting()));
    CHECK(solvable(s_f_alpha(unit, w.witness->f, w.witness->alpha), ctx.fitting()));
  }

  ModuleSystem stuck = one_equation(ctx, "x1", c);
  for (unsigned bound = 0; bound <= 3; ++bound) CHECK_FALSE(delta_consistency_semidecide(stuck, f2, bound).witness);
  CHECK(delta_inconsistency_certified(stuck, ctx));
}

TEST_CASE("witnesses persist at larger bounds") {
  AlgebraContext ctx(2, 2);
  ExtensionAlgebra f2(ctx, ModulePresentation::free(ctx.ring(), 0));
  std::mt19937_64 rng(14);
  int found = 0;
  for (int k = 0; k < 30; ++k) {
    ModuleSystem ms = one_equation(ctx, "1", oracle::random_element(ctx, rng, 1).fitting());
    ms.coeffs[0][0] = oracle::random_poly(ctx.ring(), rng, 2) + Polynomial::constant(ctx.ring(), 1);
    std::optional<unsigned> first;
    for (unsigned b = 0; b <= 2; ++b) {
      bool w = delta_consistency_semidecide(ms, f2, b).witness.has_value();
      if (w && !first) first = b;
      if (first) CHECK(w);
    }
    found += first.has_value();
  }
  CHECK(found > 0);
}

TEST_CASE("classification of the corpus") {
  for (const auto& c : oracle::corpus()) {
    CAPTURE(c.name);
    ModulePresentation m = parse_presentation(c.text);
    ExtensionAlgebra b(AlgebraContext(2, 2), m);
    for (Language lang : {Language::L, Language::LFr}) {
      Classification cl = classify_ucl(b, lang, 2);
      CHECK(cl.member == c.torsion_free);
      if (cl.member) {
        REQUIRE(cl.certificate);
        CHECK(cl.certificate->s == c.rank);
        continue;
      }
      REQUIRE(cl.violated);
      CHECK(cl.violated->scheme == (lang == Language::LFr ? AxiomScheme::Phi5p : AxiomScheme::Phi5));
      REQUIRE(cl.torsion);
      CHECK_FALSE(cl.torsion->annihilator.is_zero());
      CHECK_FALSE(m.is_zero_element(cl.torsion->element));
      CHECK(m.is_zero_element(cl.torsion->element * cl.torsion->annihilator));
      CHECK_FALSE(check_instance(*cl.violated, b).holds);
    }
  }
}

TEST_CASE("classification by the number of generators") {
  ExtensionAlgebra f1 = ext(2, 1, "", 0);
  Classification l = classify_ucl(f1, Language::L, 2);
  CHECK(l.member);
  CHECK(l.certificate->s == 0);
  Classification lfr = classify_ucl(f1, Language::LFr, 2);
  CHECK_FALSE(lfr.member);
  CHECK_FALSE(lfr.violated);
  CHECK_FALSE(lfr.reason.empty());

  ExtensionAlgebra f3 = ext(2, 3, "", 0);
  for (Language lang : {Language::L, Language::LFr}) {
    Classification cl = classify_ucl(f3, lang, 2);
    CHECK_FALSE(cl.member);
    REQUIRE(cl.violated);
    CHECK(cl.violated->scheme == AxiomScheme::Phi4);
    CHECK(cl.violated->arity == 3);
    CHECK_FALSE(cl.witness.empty());
  }
  Classification t1 = classify_ucl(ext(2, 2, "", 1), Language::LFr, 2);
  CHECK(t1.member);
  CHECK(t1.certificate->s == 1);
}

TEST_CASE("enumeration examples") {
  AlgebraContext ctx(2, 2);
  auto p5 = enumerate_axioms(AxiomScheme::Phi5p, 1, ctx);
  std::vector<std::string> fs;
  for (const auto& i : p5) fs.push_back(i.f->to_string());
  std::sort(fs.begin(), fs.end());
  CHECK(fs == std::vector<std::string>{"1", "x1", "x1 + 1", "x1 + x2", "x1 + x2 + 1", "x2", "x2 + 1"});
  CHECK(enumerate_axioms(AxiomScheme::Phi1, 3, ctx).size() == 1);
  auto p6 = enumerate_axioms(AxiomScheme::Phi6, 2, ctx);
  bool has_commutator = false;
  for (const auto& i : p6) {
    REQUIRE(i.word);
    if (i.arity == 2) {
      std::vector<LieElement> g{ctx.generator(0), ctx.generator(1)};
      has_commutator |= evaluate(*i.word, ctx, g) == ctx.commutator(1, 0) ||
                        evaluate(*i.word, ctx, g) == ctx.commutator(1, 0).scaled(ctx.p() - 1);
    }
  }
  CHECK(has_commutator);
    CHECK(enumerate_axioms(AxiomScheme::Phi5p, 2, ctx).front().to_string() ==
        enumerate_axioms(AxiomScheme::Phi5p, 2, ctx).front().to_string());
  CHECK_THROWS_AS(enumerate_axioms(AxiomScheme::Phi5, 3, ctx, 5), ResourceError);
}

TEST_CASE("enumerated instances hold in free metabelian algebras") {
  for (std::size_t r : {2u, 3u}) {
    AlgebraContext ctx(2, r);
    ExtensionAlgebra fr(ctx, ModulePresentation::free(ctx.ring(), 0));
    for (auto s : {AxiomScheme::Phi1, AxiomScheme::Phi2, AxiomScheme::Phi3, AxiomScheme::Phi4, AxiomScheme::Phi5,
                   AxiomScheme::Phi5p, AxiomScheme::Phi6, AxiomScheme::Phi7p}) {
      for (const auto& inst : enumerate_axioms(s, 1, ctx)) {
        CAPTURE(inst.to_string());
        CHECK(check_instance(inst, fr).holds);
      }
    }
    for (const auto& inst : enumerate_axioms(AxiomScheme::Phi7, 1, ctx)) {
      if (inst.status != HypothesisStatus::Certified) continue;
      CAPTURE(inst.to_string());
      CHECK(check_instance(inst, fr).holds);
    }
  }
}

TEST_CASE("localized inconsistency certificates are sound") {
  AlgebraContext ctx(2, 2);
  ExtensionAlgebra f2(ctx, ModulePresentation::free(ctx.ring(), 0));
  for (const auto& inst : enumerate_axioms(AxiomScheme::Phi7, 1, ctx)) {
    const ModuleSystem& s = *inst.system;
    if (inst.status == HypothesisStatus::Certified) {
      CHECK_FALSE(delta_consistency_semidecide(s, f2, 2).witness);
      CHECK_FALSE(solvable(s, ctx.fitting()));
    }
    if (inst.status == HypothesisStatus::Consistent) CHECK_FALSE(delta_inconsistency_certified(s, ctx));
  }
}
