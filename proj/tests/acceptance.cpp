// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

using namespace metalie;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

const std::pair<std::uint32_t, std::size_t> kShapes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};

Outcome lie_identities() {
  Outcome o;
  std::mt19937_64 rng(101);
  std::size_t quads = 0;
  for (auto [p, r] : kShapes) {
    AlgebraContext ctx(p, r);
    for (int k = 0; k < 1000; ++k, ++quads) {
      LieElement u = oracle::random_element(ctx, rng), v = oracle::random_element(ctx, rng),
                 w = oracle::random_element(ctx, rng), z = oracle::random_element(ctx, rng);
      o.require((bracket(u, v) + bracket(v, u)).is_zero(), "anticommutativity in F_r");
      o.require((bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v)).is_zero(),
                "Jacobi in F_r");
      o.require(bracket(bracket(u, v), bracket(w, z)).is_zero(), "metabelian identity in F_r");
    }
    const std::pair<const char*, std::size_t> modules[] = {{"", 1}, {"x2; -x1\n", 2}, {"x1; 0\n0; x1 + 1\n", 2}};
    for (const auto& [rel, gens] : modules) {
      ExtensionAlgebra b(ctx, parse_relations(rel, ctx.ring(), gens));
      for (int k = 0; k < 1000; ++k, ++quads) {
        ExtElement u = oracle::random_ext(b, rng), v = oracle::random_ext(b, rng), w = oracle::random_ext(b, rng),
                   z = oracle::random_ext(b, rng);
        o.require(b.add(b.bracket(u, v), b.bracket(v, u)).is_zero(), "anticommutativity in F_r + M");
        o.require(b.add(b.add(b.bracket(b.bracket(u, v), w), b.bracket(b.bracket(v, w), u)),
                        b.bracket(b.bracket(w, u), v))
                      .is_zero(),
                  "Jacobi in F_r + M");
        o.require(b.bracket(b.bracket(u, v), b.bracket(w, z)).is_zero(), "metabelian identity in F_r + M");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(quads) + " quadruples";
  return o;
}

Outcome fitting_semantics() {
  Outcome o;
  std::mt19937_64 rng(102);
  std::size_t elems = 0, tuples = 0;
  for (auto [p, r] : kShapes) {
    AlgebraContext ctx(p, r);
    for (int k = 0; k < 300; ++k, ++elems) {
      LieElement u = oracle::random_element(ctx, rng);
      if (k % 2) u = LieElement(ctx, std::vector<Coeff>(r, 0), u.fitting());
      bool s = in_fitting(u, FittingMode::Structural);
      o.require(s == u.has_zero_linear_part(), "structural mode");
      o.require(in_fitting(u, FittingMode::FormulaL) == s, "formula_L mode");
      o.require(in_fitting(u, FittingMode::FormulaLFr) == s, "formula_LFr mode");
    }
    for (int k = 0; k < 150; ++k, ++tuples) {
      std::size_t n = 1 + static_cast<std::size_t>(k) % r;
      std::vector<LieElement> tuple;
      GfpMatrix a;
      for (std::size_t i = 0; i < n; ++i) {
        tuple.push_back(oracle::random_element(ctx, rng, 1));
        if (k % 3 == 0 && i > 0) tuple.back() = tuple[0] + LieElement(ctx, std::vector<Coeff>(r, 0), tuple.back().fitting());
        a.push_back(tuple.back().linear());
      }
      o.require(phi_eval(tuple) == (gfp_rank(ctx.field(), a) == n), "phi vs rank");
    }
  }
  if (o.pass) o.detail = std::to_string(elems) + " elements, " + std::to_string(tuples) + " tuples";
  return o;
}

Outcome flagship() {
  Outcome o;
  AlgebraContext ctx(2, 2);
  EquationSystem s = parse_system("[[a1,a2],x1]", ctx);
  SolutionSet sol = solve_system(s);
  o.require(sol.consistent, "verdict");
  o.require(sol.branches.size() == 1, "one surviving branch");
  if (!o.pass) return o;
  const BranchSolution& b = sol.branches[0];
  o.require(b.branch.alpha == std::vector<std::vector<Coeff>>{{0, 0}}, "linear part zero");
  o.require(b.system.coeffs[0][0].is_zero() && b.system.rhs[0].is_zero(), "y unconstrained");
  o.require(b.space->contains({ctx.commutator(1, 0).fitting()}), "generator of Fit is a solution");
  o.require(b.solution.particular[0].is_zero(), "particular solution zero");
  for (const auto& e : candidate_elements(ctx, 2, 1u << 20))
    o.require(sol.contains({e}) == e.has_zero_linear_part(), "solution set equals Fit on the slice");
  CoordinateAlgebra g = coordinate_algebra_of_module_system(b.system, ctx);
  o.require(g.to_string() == "F_2 + T_1", "coordinate algebra " + g.to_string());
  o.require(dimension(g) == 1, "dimension");
  if (o.pass) o.detail = "Fit, F_2 + T_1, dimension 1";
  return o;
}

Outcome solver_oracle() {
  Outcome o;
  std::mt19937_64 rng(104);
  std::size_t systems = 0, consistent = 0;
  struct Batch {
    std::uint32_t p;
    std::size_t arity;
    unsigned bound;
  };
  const Batch batches[] = {{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& batch : batches) {
    AlgebraContext ctx(batch.p, 2);
    for (int k = 0; k < 55; ++k, ++systems) {
      EquationSystem s = oracle::random_system(ctx, batch.arity, rng, 2, k % 2 == 0);
      SolutionSet sol = solve_system(s);
      auto brute = oracle::point_set(brute_force_solve(s, batch.bound, 1u << 24));
      auto slice_pts = sol.bounded_slice(batch.bound, 1u << 24);
      auto slice = oracle::point_set(slice_pts);
      o.require(brute == slice, "slice mismatch on\n" + s.to_string());
      o.require(sol.consistent || brute.empty(), "Inconsistent verdict with brute-force points");
      if (k % 2 == 0) o.require(sol.consistent, "planted solution missed");
      for (const auto& x : slice_pts)
        for (const auto& f : s.equations) o.require(evaluate(f, ctx, x).is_zero(), "unsound point");
      consistent += sol.consistent;
    }
  }
  if (o.pass) o.detail = std::to_string(systems) + " systems, " + std::to_string(consistent) + " consistent";
  return o;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  metalie::cli::run(args, out, err);
  return out.str();
}

Outcome worked_inconsistency() {
  Outcome o;
  AlgebraContext ctx(2, 2);
  EquationSystem bad = parse_system("[x1,a1] + a2", ctx);
  o.require(abelianized_branches(bad, 4096).empty(), "abelianized system solvable");
  SolutionSet sb = solve_system(bad);
  o.require(!sb.consistent && sb.branches_examined == 0, "first system not rejected by abelianization");

  EquationSystem two = parse_system("[x1,a1] + [a2,a1]", ctx);
  SolutionSet st = solve_system(two);
  auto want = oracle::point_set({{ctx.generator(1)}, {ctx.generator(0) + ctx.generator(1)}});
  for (unsigned bound : {0u, 1u, 2u, 3u})
    o.require(oracle::point_set(st.bounded_slice(bound, 1u << 20)) == want, "second system points");
  o.require(oracle::point_set(brute_force_solve(two, 2, 1u << 20)) == want, "brute force points");

  std::string dir = std::filesystem::temp_directory_path() / "metalie_acceptance";
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/bad.txt") << "[x1,a1] + a2\n";
  std::ofstream(dir + "/two.txt") << "[x1,a1] + [a2,a1]\n";
  for (const char* name : {"/bad.txt", "/two.txt"}) {
    std::vector<std::string> args{"solve", "--p", "2", "--r", "2", dir + name};
    std::string a = cli_output(args), b = cli_output(args);
    o.require(!a.empty() && a == b, "report not byte-reproducible");
  }
  o.require(cli_output({"solve", dir + "/bad.txt"}).find("verdict: Inconsistent\n") != std::string::npos,
            "report verdict");
  std::string rep = cli_output({"solve", dir + "/two.txt"});
  o.require(rep.find("point-1: (a2)\npoint-2: (a1 + a2)\n") != std::string::npos, "report points");
  if (o.pass) o.detail = "Inconsistent; {a2, a1 + a2}";
  return o;
}

Outcome classification() {
  Outcome o;
  std::size_t members = 0, rejected = 0;
  for (const auto& c : oracle::corpus()) {
    ModulePresentation m = parse_presentation(c.text);
    ExtensionAlgebra b(AlgebraContext(2, 2), m);
    Classification cl = classify_ucl(b, Language::LFr, 2);
    o.require(cl.member == c.torsion_free, c.name + ": membership");
    if (cl.member) {
      o.require(cl.certificate && cl.certificate->s == c.rank, c.name + ": s");
      ++members;
      continue;
    }
    o.require(cl.violated && cl.violated->scheme == AxiomScheme::Phi5p, c.name + ": violated scheme");
    o.require(cl.torsion.has_value(), c.name + ": witness");
    if (!cl.torsion) continue;
    const TorsionWitness& w = *cl.torsion;
    ModuleVector product = w.element * w.annihilator;
    o.require(!w.annihilator.is_zero() && !m.is_zero_element(w.element) && m.is_zero_element(product),
              c.name + ": witness recheck");
    ++rejected;
  }
  o.require(oracle::corpus().size() >= 20, "corpus size");
  if (o.pass)
    o.detail = std::to_string(oracle::corpus().size()) + " modules, " + std::to_string(members) + " members, " +
               std::to_string(rejected) + " rejected";
  return o;
}

Outcome torsion_engine() {
  Outcome o;
  std::size_t recomputed = 0;
  for (const auto& c : oracle::corpus()) {
    ModulePresentation m = parse_presentation(c.text);
    auto brute = oracle::bounded_torsion(m, 2, 2);
    o.require(brute.found == !c.torsion_free, c.name + ": bounded search");
    o.require(is_torsion_free(m) == !brute.found, c.name + ": is_torsion_free");
    o.require(rank(m) == c.rank, c.name + ": rank label");
    std::size_t minor_rank = oracle::minor_rank(m.ring(), m.relation_matrix(), m.generators());
    o.require(rank(m) == m.generators() - minor_rank, c.name + ": rank vs minors");
    ModulePresentation q = torsion_submodule(m);
    o.require(is_torsion_free(q) && rank(q) == rank(m), c.name + ": quotient");
    o.require(oracle::bounded_torsion(q, 2, 2).found == false, c.name + ": quotient bounded search");
    if (brute.found) o.require(q.is_zero_element(brute.element), c.name + ": torsion element survives");
    MinorSelection sel = torsion_minor(m);
    auto minors = oracle::nonzero_minors(m.ring(), m.relation_matrix(), m.generators(), sel.rank);
    std::vector<Polynomial> others;
    for (const auto& d : minors)
      if (d != sel.minor) others.push_back(d);
    others.push_back(sel.minor * sel.minor);
    for (const auto& d : others) {
      o.require(torsion_submodule(m, d).basis() == q.basis(), c.name + ": second minor");
      ++recomputed;
    }
  }
  if (o.pass) o.detail = std::to_string(oracle::corpus().size()) + " modules, " + std::to_string(recomputed) +
                         " recomputations";
  return o;
}

Outcome axiom_soundness() {
  Outcome o;
  std::size_t checked = 0, certified = 0;
  for (std::size_t r : {2u, 3u}) {
    AlgebraContext ctx(2, r);
    ExtensionAlgebra fr(ctx, ModulePresentation::free(ctx.ring(), 0));
    for (auto s : {AxiomScheme::Phi1, AxiomScheme::Phi2, AxiomScheme::Phi3, AxiomScheme::Phi4, AxiomScheme::Phi5,
                   AxiomScheme::Phi5p, AxiomScheme::Phi6}) {
      for (const auto& inst : enumerate_axioms(s, 2, ctx)) {
        o.require(check_instance(inst, fr).holds, "F_" + std::to_string(r) + ": " + inst.to_string());
        ++checked;
      }
    }
    for (const auto& inst : enumerate_axioms(AxiomScheme::Phi7p, 1, ctx)) {
      o.require(inst.status == HypothesisStatus::Certified, "uncertified Phi7' instance");
      o.require(check_instance(inst, fr).holds, "F_" + std::to_string(r) + ": " + inst.to_string());
      ++certified;
    }
    for (const auto& inst : enumerate_axioms(AxiomScheme::Phi7, 1, ctx)) {
      if (inst.status != HypothesisStatus::Certified) continue;
      o.require(check_instance(inst, fr).holds, "F_" + std::to_string(r) + ": " + inst.to_string());
      ++certified;
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " instances of Phi1-Phi6, " + std::to_string(certified) + " certified Phi7/Phi7'";
  return o;
}

Outcome dimension_chains() {
  Outcome o;
  AlgebraContext ctx(2, 2);
  for (std::size_t s = 0; s <= 3; ++s) {
    CoordinateAlgebra g{ExtensionAlgebra(ctx, ModulePresentation::free(ctx.ring(), s))};
    auto chain = chain_dimension_check(g);
    std::size_t steps = chain.empty() ? 0 : chain.size() - 1;
    o.require(steps == s, "T_" + std::to_string(s) + ": steps");
    for (std::size_t i = 0; i < chain.size(); ++i)
      o.require(rank(chain[i].module()) == s - i && is_torsion_free(chain[i].module()),
                "T_" + std::to_string(s) + ": ranks");
  }
  if (o.pass) o.detail = "s = 0..3";
  return o;
}

Outcome hom_correspondence() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& c : oracle::corpus()) {
    ModulePresentation m = parse_presentation(c.text);
    AlgebraContext ctx(2, 2);
    std::vector<Point> pts;
    for (const auto& h : homs_to_fitting(m, 2, 1u << 24)) pts.push_back(h.point(ctx));
    auto homs = oracle::point_set(pts);
    auto brute = oracle::point_set(brute_force_solve(canonical_system(m), 2, 1u << 24));
    o.require(homs == brute, c.name);
    total += homs.size();
  }
  if (o.pass) o.detail = std::to_string(oracle::corpus().size()) + " modules, " + std::to_string(total) + " points";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Lie identity suite", lie_identities},
      {"Fitting semantics", fitting_semantics},
      {"flagship algebraic set", flagship},
      {"solver/oracle equivalence", solver_oracle},
      {"worked inconsistency", worked_inconsistency},
      {"classification corpus", classification},
      {"torsion/rank engine", torsion_engine},
      {"axiom soundness", axiom_soundness},
      {"dimension chains", dimension_chains},
      {"hom correspondence", hom_correspondence},
  };
  int failures = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s: %s (%lld ms)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(),
                static_cast<long long>(ms));
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
