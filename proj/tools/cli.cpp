#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "metalie/axioms.hpp"
#include "metalie/error.hpp"
#include "metalie/geometry.hpp"
#include "report.hpp"

namespace metalie::cli {

namespace {

struct Options {
  std::uint32_t p = 2;
  std::size_t r = 2;
  std::size_t branch_cap = 4096;
  unsigned oracle_bound = 2;
  unsigned degree_bound = 2;
  bool timing = false;
  CLI::App* active = nullptr;

  bool given(const char* name) const { return active && active->count(name) > 0; }

  std::string expr, expr2, file, language = "LFr", scheme;
  unsigned bound = 1;
  bool check = false;
};

constexpr std::size_t kCap = 1u << 22;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_field_options(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "Characteristic of the ground field")->capture_default_str();
  sub->add_option("--r", o.r, "Rank of the free metabelian Lie algebra")->capture_default_str();
  sub->add_flag("--timing", o.timing, "Append the elapsed time to the report");
}

void add_param(Report& rep, const Options& o) {
  rep.add("p", std::to_string(o.p));
  rep.add("r", o.r);
}

/// Checks --p / --r against a file header when they were given.
void match_header(Options& o, std::uint32_t p, std::size_t r) {
  if (o.given("--p") && o.p != p)
    throw InputError("--p " + std::to_string(o.p) + " does not match the file characteristic " + std::to_string(p));
  if (o.given("--r") && o.r != r)
    throw InputError("--r " + std::to_string(o.r) + " does not match the file rank " + std::to_string(r));
  o.p = p;
  o.r = r;
}

bool finite_branch(const BranchSolution& b, const AlgebraContext& ctx) {
  for (const auto& g : b.solution.homogeneous)
    for (const auto& part : g)
      if (!ctx.fitting().is_zero_element(part)) return false;
  return true;
}

Report cmd_nf(Options& o) {
  AlgebraContext ctx(o.p, o.r);
  Report rep("nf");
  rep.digest({o.expr});
  add_param(rep, o);
  rep.add("expression", o.expr);
  rep.add("normal-form", normal_form(o.expr, ctx).to_string());
  return rep;
}

Report cmd_bracket(Options& o) {
  AlgebraContext ctx(o.p, o.r);
  Report rep("bracket");
  rep.digest({o.expr, o.expr2});
  add_param(rep, o);
  LieElement u = normal_form(o.expr, ctx), v = normal_form(o.expr2, ctx);
  rep.add("u", u.to_string());
  rep.add("v", v.to_string());
  rep.add("bracket", bracket(u, v).to_string());
  return rep;
}

Report cmd_solve(Options& o) {
  AlgebraContext ctx(o.p, o.r);
  std::string text = read_file(o.file);
  EquationSystem sys = parse_system(text, ctx);
  Report rep("solve");
  rep.digest({text});
  add_param(rep, o);
  rep.add("branch-cap", o.branch_cap);
  rep.add("arity", sys.arity);
  rep.add("equations", sys.equations.size());
  SolutionSet sol = solve_system(sys, SolveOptions{o.branch_cap});
  rep.add("verdict", sol.consistent ? "Consistent" : "Inconsistent");
  rep.add("branches-examined", sol.branches_examined);
  rep.add("branches", sol.branches.size());
  bool finite = true;
  for (std::size_t i = 0; i < sol.branches.size(); ++i) {
    rep.add("branch-" + std::to_string(i + 1), sol.describe(sol.branches[i]));
    if (!finite_branch(sol.branches[i], ctx)) finite = false;
  }
  if (!finite) {
    rep.add("points", "infinite");
    return rep;
  }
  rep.add("points", sol.branches.size());
  for (std::size_t i = 0; i < sol.branches.size(); ++i) {
    Point pt = sol.branches[i].branch.values(ctx);
    for (std::size_t j = 0; j < pt.size(); ++j)
      pt[j] = pt[j] + LieElement(ctx, std::vector<Coeff>(ctx.r(), 0), sol.branches[i].solution.particular[j]);
    rep.add("point-" + std::to_string(i + 1), format_point(pt));
  }
  return rep;
}

Report cmd_oracle(Options& o) {
  AlgebraContext ctx(o.p, o.r);
  std::string text = read_file(o.file);
  EquationSystem sys = parse_system(text, ctx);
  Report rep("oracle");
  rep.digest({text});
  add_param(rep, o);
  rep.add("oracle-bound", std::to_string(o.oracle_bound));
  SolutionSet sol = solve_system(sys, SolveOptions{o.branch_cap});
  std::set<std::string> brute, slice;
  for (const auto& pt : brute_force_solve(sys, o.oracle_bound, kCap)) brute.insert(format_point(pt));
  for (const auto& pt : sol.bounded_slice(o.oracle_bound, kCap)) slice.insert(format_point(pt));
  rep.add("solver-verdict", sol.consistent ? "Consistent" : "Inconsistent");
  rep.add("oracle-points", brute.size());
  rep.add("slice-points", slice.size());
  rep.add("verdict", brute == slice ? "Agree" : "Disagree");
  std::size_t k = 0;
  for (const auto& s : brute) rep.add("point-" + std::to_string(++k), s);
  return rep;
}

Report cmd_classify(Options& o) {
  std::string text = read_file(o.file);
  ExtensionAlgebra b = parse_extension(text);
  if (o.given("--p") && o.p != b.base().p())
    throw InputError("--p " + std::to_string(o.p) + " does not match the file characteristic");
  o.p = b.base().p();
  if (!o.given("--r")) o.r = b.n();
  Language lang = parse_language(o.language);
  Report rep("classify");
  rep.digest({text});
  add_param(rep, o);
  rep.add("n", b.n());
  rep.add("language", language_name(lang));
  Classification c = classify_ucl(b, lang, o.r);
  rep.add("verdict", c.member ? "Member" : "NonMember");
  rep.add("reason", c.reason);
  if (c.member) {
    rep.add("s", c.certificate->s);
    rep.add("certificate", "F_" + std::to_string(b.n()) + " + M embeds into F_" + std::to_string(b.n()) +
                               " + T_" + std::to_string(c.certificate->s));
    for (std::size_t j = 0; j < c.certificate->images.size(); ++j)
      rep.add("image-m" + std::to_string(j + 1), c.certificate->images[j].to_string());
  } else {
    if (c.violated) {
      rep.add("violated-scheme", scheme_name(c.violated->scheme));
      rep.add("violated", c.violated->to_string());
    }
    if (!c.witness.empty()) rep.add("witness", c.witness);
    if (c.torsion) {
      const ModulePresentation& m = b.module();
      bool ok = !m.is_zero_element(c.torsion->element) &&
                m.is_zero_element(c.torsion->element * c.torsion->annihilator);
      rep.add("witness-check", ok ? "m != 0 and m*f = 0" : "failed");
    }
  }
  return rep;
}

Report cmd_axioms(Options& o) {
  AlgebraContext ctx(o.p, o.r);
  AxiomScheme s = parse_scheme(o.scheme);
  Report rep("axioms enumerate");
  rep.digest({o.scheme, std::to_string(o.bound)});
  add_param(rep, o);
  rep.add("scheme", scheme_name(s));
  rep.add("bound", std::to_string(o.bound));
  auto list = enumerate_axioms(s, o.bound, ctx, kCap);
  rep.add("instances", list.size());
  ExtensionAlgebra fr(ctx, ModulePresentation::free(ctx.ring(), 0));
  std::size_t failures = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string line = list[i].to_string();
    if (o.check) {
      CheckResult c = check_instance(list[i], fr);
      line += " => " + std::string(c.holds ? "true" : "false") + " (" + method_name(c.method) + ")";
      if (!c.holds) ++failures;
    }
    rep.add("instance-" + std::to_string(i + 1), line);
  }
  if (o.check) rep.add("false-on-F_r", failures);
  return rep;
}

ModulePresentation read_module(Options& o, std::string& text) {
  text = read_file(o.file);
  ModulePresentation m = parse_presentation(text);
  match_header(o, m.ring().p(), m.ring().nvars());
  return m;
}

Report coord_report(const char* name, Options& o) {
  std::string text;
  ModulePresentation m = read_module(o, text);
  AlgebraContext ctx(o.p, o.r);
  Report rep(name);
  rep.digest({text});
  add_param(rep, o);
  rep.add("generators", m.generators());
  CoordinateAlgebra g = coordinate_algebra_of_module_system(module_system_of(m, ctx), ctx);
  rep.add("dimension", dimension(g));
  if (std::string(name) == "dim") return rep;
  rep.add("input-torsion-free", is_torsion_free(m));
  rep.add("coordinate-algebra", g.to_string());
  rep.add("point", g.is_point());
  const auto& rels = g.module().basis().elements();
  rep.add("relations", rels.size());
  for (std::size_t i = 0; i < rels.size(); ++i) rep.add("relation-" + std::to_string(i + 1), rels[i].to_string());
  return rep;
}

Report cmd_radical(Options& o) {
  std::string text;
  ModulePresentation m = read_module(o, text);
  LieExpr f = parse_lie_expr(o.expr, o.r);
  Report rep("radical-member");
  rep.digest({o.expr, text});
  add_param(rep, o);
  rep.add("polynomial", f.to_string());
  rep.add("member", radical_member(f, m));
  return rep;
}

Report cmd_homs(Options& o) {
  std::string text;
  ModulePresentation m = read_module(o, text);
  AlgebraContext ctx(o.p, o.r);
  Report rep("homs");
  rep.digest({text});
  add_param(rep, o);
  rep.add("bound", std::to_string(o.degree_bound));
  auto homs = homs_to_fitting(m, o.degree_bound, kCap);
  rep.add("homs", homs.size());
  for (std::size_t i = 0; i < homs.size(); ++i) rep.add("hom-" + std::to_string(i + 1), format_point(homs[i].point(ctx)));
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in free metabelian Lie algebras over GF(p)", "metalie"};
  app.require_subcommand(1);
  Options o;
  std::function<Report()> action;

  auto* nf = app.add_subcommand("nf", "Normal form of a Lie expression in the constants");
  add_field_options(nf, o);
  nf->add_option("expression", o.expr, "e.g. [[a2,a1],a1]")->required();
  nf->callback([&, sub = nf] {
    o.active = sub;
    action = [&] { return cmd_nf(o); }; });

  auto* br = app.add_subcommand("bracket", "Bracket of two elements");
  add_field_options(br, o);
  br->add_option("u", o.expr)->required();
  br->add_option("v", o.expr2)->required();
  br->callback([&, sub = br] {
    o.active = sub;
    action = [&] { return cmd_bracket(o); }; });

  auto* solve = app.add_subcommand("solve", "Decide and describe the solutions of an equation system");
  add_field_options(solve, o);
  solve->add_option("--branch-cap", o.branch_cap, "Maximum number of abelianized branches")->capture_default_str();
  solve->add_option("file", o.file, "System file, one equation per line")->required();
  solve->callback([&, sub = solve] {
    o.active = sub;
    action = [&] { return cmd_solve(o); }; });

  auto* oracle = app.add_subcommand("oracle", "Compare the solver with exhaustive search");
  add_field_options(oracle, o);
  oracle->add_option("--branch-cap", o.branch_cap)->capture_default_str();
  oracle->add_option("--oracle-bound", o.oracle_bound, "Degree bound of the search")->capture_default_str();
  oracle->add_option("file", o.file)->required();
  oracle->callback([&, sub = oracle] {
    o.active = sub;
    action = [&] { return cmd_oracle(o); }; });

  auto* classify = app.add_subcommand("classify", "Membership in the universal closure of F_r");
  add_field_options(classify, o);
  classify->add_option("--language", o.language, "L or LFr")->capture_default_str();
  classify->add_option("file", o.file, "Extension algebra file")->required();
  classify->callback([&, sub = classify] {
    o.active = sub;
    action = [&] { return cmd_classify(o); }; });

  auto* axioms = app.add_subcommand("axioms", "Axiom schemes");
  axioms->require_subcommand(1);
  auto* enumerate = axioms->add_subcommand("enumerate", "List the instances of a scheme");
  add_field_options(enumerate, o);
  enumerate->add_option("--scheme", o.scheme, "Phi1 .. Phi7, Phi5', Phi7'")->required();
  enumerate->add_option("--bound", o.bound, "Size bound")->capture_default_str();
  enumerate->add_flag("--check", o.check, "Evaluate every instance on F_r");
  enumerate->callback([&, sub = enumerate] {
    o.active = sub;
    action = [&] { return cmd_axioms(o); }; });

  auto* coord = app.add_subcommand("coord", "Coordinate algebra of a module system");
  add_field_options(coord, o);
  coord->add_option("file", o.file, "Module presentation file")->required();
  coord->callback([&, sub = coord] {
    o.active = sub;
    action = [&] { return coord_report("coord", o); }; });

  auto* radical = app.add_subcommand("radical-member", "Radical membership for a canonical system");
  add_field_options(radical, o);
  radical->add_option("polynomial", o.expr, "Lie polynomial in x1..xn and the constants")->required();
  radical->add_option("file", o.file, "Module presentation file")->required();
  radical->callback([&, sub = radical] {
    o.active = sub;
    action = [&] { return cmd_radical(o); }; });

  auto* homs = app.add_subcommand("homs", "Homomorphisms into the Fitting radical");
  add_field_options(homs, o);
  homs->add_option("--bound,--degree-bound", o.degree_bound, "Degree bound of the images")->capture_default_str();
  homs->add_option("file", o.file)->required();
  homs->callback([&, sub = homs] {
    o.active = sub;
    action = [&] { return cmd_homs(o); }; });

  auto* dim = app.add_subcommand("dim", "Dimension of the algebraic set of a module system");
  add_field_options(dim, o);
  dim->add_option("file", o.file)->required();
  dim->callback([&, sub = dim] {
    o.active = sub;
    action = [&] { return coord_report("dim", o); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    Report rep = action();
    if (o.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      rep.add("elapsed-ms", std::to_string(ms.count()));
    }
    out << rep.str();
    return 0;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace metalie::cli
