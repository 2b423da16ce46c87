#include "metalie/equations.hpp"

#include <algorithm>
#include <functional>

#include "metalie/error.hpp"

namespace metalie {

std::string EquationSystem::to_string() const {
  std::string s;
  for (const auto& e : equations) s += e.to_string() + "\n";
  return s;
}

EquationSystem parse_system(std::string_view text, const AlgebraContext& ctx, std::size_t min_arity) {
  EquationSystem sys{ctx, min_arity, {}};
  std::size_t start = 0, line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      try {
        sys.equations.push_back(parse_lie_expr(line, ctx.r()));
      } catch (const SyntaxError& e) {
        throw SyntaxError("line " + std::to_string(line_no) + ": " + e.detail(), e.position());
      }
      sys.arity = std::max(sys.arity, sys.equations.back().arity());
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return sys;
}

namespace {

std::vector<LieExpr> mixed_names(std::size_t r, std::size_t n) {
  std::vector<LieExpr> names;
  for (std::size_t i = 0; i < r; ++i) names.push_back(LieExpr::constant(i));
  for (std::size_t i = 0; i < n; ++i) names.push_back(LieExpr::variable(i));
  return names;
}

}  // namespace

LieExpr Decomposition::recombined() const {
  return LieExpr::sum({element_expr(c), linear_terms, g});
}

Decomposition decompose(const LieExpr& f, const AlgebraContext& ctx, std::size_t arity) {
  arity = std::max(arity, f.arity());
  const std::size_t r = ctx.r();
  AlgebraContext big(ctx.p(), r + arity);
  std::vector<LieElement> xs;
  for (std::size_t i = 0; i < arity; ++i) xs.push_back(big.generator(r + i));
  LieElement val = evaluate(f, big, xs);

  const Ring& small = ctx.ring();
  std::vector<Coeff> c_lin(val.linear().begin(), val.linear().begin() + static_cast<std::ptrdiff_t>(r));
  std::vector<Coeff> one_lin(r + arity, 0);
  for (std::size_t i = 0; i < arity; ++i) one_lin[r + i] = val.linear()[r + i];

  std::vector<std::vector<Term>> c_fit(ctx.t()), h_terms(arity);
  std::vector<std::vector<Term>> one_fit(big.t()), two_fit(big.t());
  for (std::size_t i = 0; i < arity; ++i)
    if (val.linear()[r + i]) h_terms[i].push_back({Monomial{}, val.linear()[r + i]});

  for (const auto& [idx, poly] : val.fitting().entries()) {
    auto [i, j] = big.pair_of(idx);
    for (const auto& term : poly.terms()) {
      std::size_t xdeg = (i >= r) + (j >= r);
      for (std::size_t v = r; v < r + arity; ++v) xdeg += term.mono[v];
      if (xdeg == 0) {
        c_fit[idx].push_back(term);
      } else if (xdeg == 1) {
        one_fit[idx].push_back(term);
        if (i >= r && j < r) h_terms[i - r].push_back({term.mono * Monomial::variable(j), term.coeff});
      } else {
        two_fit[idx].push_back(term);
      }
    }
  }

  auto to_vector = [](const Ring& ring, std::size_t width, std::vector<std::vector<Term>>& parts) {
    ModuleVector v(ring, width);
    for (std::size_t i = 0; i < width; ++i)
      if (!parts[i].empty()) v.set(i, Polynomial::from_terms(ring, std::move(parts[i])));
    return v;
  };

  Decomposition d{LieElement(ctx, c_lin, to_vector(small, ctx.t(), c_fit)), {}, LieExpr::zero(), LieExpr::zero()};
  for (auto& terms : h_terms) d.h.push_back(Polynomial::from_terms(small, std::move(terms)));
  auto names = mixed_names(r, arity);
  d.linear_terms = element_expr(LieElement(big, one_lin, to_vector(big.ring(), big.t(), one_fit)), names);
  d.g = element_expr(LieElement(big, std::vector<Coeff>(r + arity, 0), to_vector(big.ring(), big.t(), two_fit)),
                     names);
  return d;
}

std::vector<LieElement> LinearBranch::values(const AlgebraContext& ctx) const {
  std::vector<LieElement> out;
  for (const auto& row : alpha) out.emplace_back(ctx, row, ModuleVector(ctx.ring(), ctx.t()));
  return out;
}

std::string LinearBranch::to_string(const AlgebraContext& ctx) const {
  std::string s = "(";
  auto vals = values(ctx);
  for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? ", " : "") + vals[i].to_string();
  return s + ")";
}

namespace {

// The quotient F / Fit(F) is abelian, so linear parts evaluate there.
struct AbelianAlgebra {
  using Element = std::vector<Coeff>;
  const Field* k;
  std::size_t dim;

  Element zero() const { return Element(dim, 0); }
  Element constant(std::size_t i) const {
    Element e(dim, 0);
    e.at(i) = 1;
    return e;
  }
  Element add(const Element& a, const Element& b) const {
    Element e(dim);
    for (std::size_t i = 0; i < dim; ++i) e[i] = k->add(a[i], b[i]);
    return e;
  }
  Element scale(std::int64_t c, const Element& a) const {
    Element e(dim);
    Coeff cc = k->reduce(c);
    for (std::size_t i = 0; i < dim; ++i) e[i] = k->mul(a[i], cc);
    return e;
  }
  Element bracket(const Element&, const Element&) const { return zero(); }
};

}  // namespace

std::vector<LinearBranch> abelianized_branches(const EquationSystem& s, std::size_t cap) {
  const std::size_t r = s.ctx.r(), n = s.arity;
  const Field& k = s.ctx.field();
  AbelianAlgebra ab{&k, r + n};
  std::vector<std::vector<Coeff>> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(ab.constant(r + i));

  GfpMatrix a;
  std::vector<Coeff> b;
  for (const auto& f : s.equations) {
    if (f.arity() > n) throw ConfigurationError("equation uses more variables than the system arity");
    auto lin = evaluate<AbelianAlgebra>(f, ab, xs);
    for (std::size_t coord = 0; coord < r; ++coord) {
      std::vector<Coeff> row(n * r, 0);
      for (std::size_t i = 0; i < n; ++i) row[i * r + coord] = lin[r + i];
      a.push_back(std::move(row));
      b.push_back(k.neg(lin[coord]));
    }
  }
  auto sol = gfp_solve(k, a, b, n * r);
  if (!sol) return {};

  const std::size_t dim = sol->kernel.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > cap / k.characteristic())
      throw ResourceError("branch count p^" + std::to_string(dim) + " exceeds branch cap " + std::to_string(cap));
    total *= k.characteristic();
  }
  if (total > cap)
    throw ResourceError("branch count " + std::to_string(total) + " exceeds branch cap " + std::to_string(cap));

  std::vector<LinearBranch> out;
  out.reserve(total);
  std::vector<Coeff> digits(dim, 0);
  for (;;) {
    std::vector<Coeff> z = sol->particular;
    for (std::size_t d = 0; d < dim; ++d)
      if (digits[d])
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = k.add(z[i], k.mul(digits[d], sol->kernel[d][i]));
    LinearBranch br;
    for (std::size_t i = 0; i < n; ++i)
      br.alpha.emplace_back(z.begin() + static_cast<std::ptrdiff_t>(i * r),
                            z.begin() + static_cast<std::ptrdiff_t>((i + 1) * r));
    out.push_back(std::move(br));
    std::size_t d = 0;
    while (d < dim && ++digits[d] == k.characteristic()) digits[d++] = 0;
    if (d == dim) break;
  }
  return out;
}

std::string ModuleSystem::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string lhs;
    for (std::size_t j = 0; j < unknowns; ++j) {
      if (coeffs[i][j].is_zero()) continue;
      if (!lhs.empty()) lhs += " + ";
      lhs += "y" + std::to_string(j + 1) + "*(" + coeffs[i][j].to_string() + ")";
    }
    s += (lhs.empty() ? "0" : lhs) + " = " + rhs[i].to_string() + "\n";
  }
  return s;
}

ModuleSystem specialize(const EquationSystem& s, const LinearBranch& b) {
  const AlgebraContext& ctx = s.ctx;
  const std::size_t n = s.arity;
  if (b.alpha.size() != n) throw ConfigurationError("branch does not match the system arity");
  ExtensionAlgebra ext(ctx, ModulePresentation::free(ctx.ring(), n));
  auto z = b.values(ctx);
  std::vector<ExtElement> point;
  for (std::size_t i = 0; i < n; ++i) point.push_back(ext.make(z[i], ModuleVector::unit(ctx.ring(), n, i)));

  ModuleSystem ms;
  ms.unknowns = n;
  for (const auto& f : s.equations) {
    ExtElement v = evaluate(f, ext, point);
    if (!v.lie.has_zero_linear_part()) throw ConfigurationError("branch does not solve the abelianized system");
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(v.mod.component(j));
    ms.coeffs.push_back(std::move(row));
    ms.rhs.push_back(-v.lie.fitting());
  }
  return ms;
}

SolutionSet solve_system(const EquationSystem& s, const SolveOptions& opts) {
  SolutionSet out{s.ctx, s.arity, false, 0, {}};
  auto branches = abelianized_branches(s, opts.branch_cap);
  out.branches_examined = branches.size();
  for (auto& br : branches) {
    ModuleSystem ms = specialize(s, br);
    auto sol = solve_linear_over_module(ms.coeffs, ms.unknowns, ms.rhs, s.ctx.fitting());
    if (!sol) continue;
    auto space = std::make_shared<const SolutionSpace>(*sol, s.ctx.fitting());
    out.branches.push_back({std::move(br), std::move(ms), std::move(*sol), std::move(space)});
  }
  out.consistent = !out.branches.empty();
  return out;
}

bool SolutionSet::contains(const Point& x) const {
  if (x.size() != arity) throw ConfigurationError("point has wrong arity");
  std::vector<std::vector<Coeff>> lin;
  std::vector<ModuleVector> fit;
  for (const auto& u : x) {
    lin.push_back(u.linear());
    fit.push_back(u.fitting());
  }
  for (const auto& b : branches)
    if (b.branch.alpha == lin) return b.space->contains(fit);
  return false;
}

std::vector<Point> SolutionSet::bounded_slice(unsigned bound, std::size_t cap) const {
  std::vector<Point> out;
  if (!consistent) return out;
  auto fits = enumerate_module_elements(ctx.fitting(), bound, cap);
  for (const auto& b : branches) {
    auto z = b.branch.values(ctx);
    std::vector<std::size_t> idx(arity, 0);
    std::vector<ModuleVector> y(arity, ModuleVector(ctx.ring(), ctx.t()));
    for (;;) {
      for (std::size_t i = 0; i < arity; ++i) y[i] = fits[idx[i]];
      if (b.space->contains(y)) {
        Point pt;
        for (std::size_t i = 0; i < arity; ++i) pt.push_back(z[i] + LieElement(ctx, std::vector<Coeff>(ctx.r(), 0), y[i]));
        out.push_back(std::move(pt));
        if (out.size() > cap) throw ResourceError("solution slice exceeds cap " + std::to_string(cap));
      }
      std::size_t i = 0;
      while (i < arity && ++idx[i] == fits.size()) idx[i++] = 0;
      if (i == arity) break;
    }
  }
  return out;
}

std::string SolutionSet::describe(const BranchSolution& b) const {
  std::string s = "z = " + b.branch.to_string(ctx) + "; y = (";
  for (std::size_t i = 0; i < b.solution.particular.size(); ++i) {
    LieElement y(ctx, std::vector<Coeff>(ctx.r(), 0), b.solution.particular[i]);
    s += (i ? ", " : "") + y.to_string();
  }
  s += ")";
  if (!b.solution.homogeneous.empty()) {
    s += " + span{";
    for (std::size_t g = 0; g < b.solution.homogeneous.size(); ++g) {
      s += g ? ", (" : "(";
      const auto& h = b.solution.homogeneous[g];
      for (std::size_t i = 0; i < h.size(); ++i)
        s += (i ? ", " : "") + LieElement(ctx, std::vector<Coeff>(ctx.r(), 0), h[i]).to_string();
      s += ")";
    }
    s += "}";
  }
  return s;
}

std::vector<LieElement> candidate_elements(const AlgebraContext& ctx, unsigned degree_bound, std::size_t cap) {
  auto fits = enumerate_module_elements(ctx.fitting(), degree_bound, cap);
  std::vector<std::vector<Coeff>> lins(1);
  for (std::size_t i = 0; i < ctx.r(); ++i) {
    std::vector<std::vector<Coeff>> next;
    for (const auto& l : lins)
      for (Coeff c = 0; c < ctx.p(); ++c) {
        auto e = l;
        e.push_back(c);
        next.push_back(std::move(e));
      }
    lins = std::move(next);
  }
  if (lins.size() * fits.size() > cap)
    throw ResourceError("candidate set of " + std::to_string(lins.size() * fits.size()) + " elements exceeds cap " +
                        std::to_string(cap));
  std::vector<LieElement> out;
  out.reserve(lins.size() * fits.size());
  for (const auto& l : lins)
    for (const auto& f : fits) out.emplace_back(ctx, l, f);
  return out;
}

std::vector<Point> brute_force_solve(const EquationSystem& s, unsigned degree_bound, std::size_t cap) {
  const std::size_t n = s.arity;
  std::vector<std::vector<const LieExpr*>> by_level(n + 1);
  for (const auto& f : s.equations) {
    if (f.arity() > n) throw ConfigurationError("equation uses more variables than the system arity");
    by_level[f.arity()].push_back(&f);
  }
  std::vector<Point> out;
  FreeAlgebra alg{s.ctx};
  for (const auto* f : by_level[0])
    if (!evaluate<FreeAlgebra>(*f, alg, {}).is_zero()) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  auto cands = candidate_elements(s.ctx, degree_bound, cap);
  Point pt;
  std::function<void(std::size_t)> search = [&](std::size_t level) {
    for (const auto& c : cands) {
      pt.push_back(c);
      bool ok = true;
      for (const auto* f : by_level[level + 1]) {
        if (!evaluate<FreeAlgebra>(*f, alg, pt).is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (level + 1 == n) {
          out.push_back(pt);
          if (out.size() > cap) throw ResourceError("brute-force solution count exceeds cap " + std::to_string(cap));
        } else {
          search(level + 1);
        }
      }
      pt.pop_back();
    }
  };
  search(0);
  return out;
}

Subsystem finite_equivalent_subsystem(const ModuleSystem& ms, const ModulePresentation& j) {
  const Ring& ring = j.ring();
  const std::size_t l = ms.unknowns, t = j.generators(), w = l + t;
  std::vector<ModuleVector> rows;
  for (std::size_t i = 0; i < ms.coeffs.size(); ++i) {
    ModuleVector row = ModuleVector::from_dense(ring, ms.coeffs[i]).shifted(0, w);
    rows.push_back(row + ms.rhs[i].shifted(l, w));
  }
  std::vector<ModuleVector> rel;
  for (const auto& g : j.basis().elements()) rel.push_back(g.shifted(l, w));

  auto implied = [&](std::size_t i, const std::vector<std::size_t>& others) {
    std::vector<ModuleVector> gens = rel;
    for (std::size_t o : others)
      if (o != i) gens.push_back(rows[o]);
    return GroebnerBasis::compute(ring, w, gens).contains(rows[i]);
  };

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!implied(i, kept)) kept.push_back(i);
  for (std::size_t pos = kept.size(); pos > 0; --pos) {
    std::size_t i = kept[pos - 1];
    if (implied(i, kept)) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos - 1));
  }

  Subsystem out{ModuleSystem{l, {}, {}}, kept};
  for (std::size_t i : kept) {
    out.system.coeffs.push_back(ms.coeffs[i]);
    out.system.rhs.push_back(ms.rhs[i]);
  }
  return out;
}

std::string format_point(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_string();
  return s + ")";
}

}  // namespace metalie
