#include "metalie/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "metalie/error.hpp"

namespace metalie {

std::string scheme_name(AxiomScheme s) {
  switch (s) {
    case AxiomScheme::Phi1: return "Phi1";
    case AxiomScheme::Phi2: return "Phi2";
    case AxiomScheme::Phi3: return "Phi3";
    case AxiomScheme::Phi4: return "Phi4";
    case AxiomScheme::Phi5: return "Phi5";
    case AxiomScheme::Phi5p: return "Phi5'";
    case AxiomScheme::Phi6: return "Phi6";
    case AxiomScheme::Phi7: return "Phi7";
    case AxiomScheme::Phi7p: return "Phi7'";
  }
  return "?";
}

AxiomScheme parse_scheme(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t.size() >= 2 && t.back() == '\'') t.back() = 'p';
  static const std::pair<const char*, AxiomScheme> table[] = {
      {"phi1", AxiomScheme::Phi1},   {"phi2", AxiomScheme::Phi2},  {"phi3", AxiomScheme::Phi3},
      {"phi4", AxiomScheme::Phi4},   {"phi5", AxiomScheme::Phi5},  {"phi5p", AxiomScheme::Phi5p},
      {"phi6", AxiomScheme::Phi6},   {"phi7", AxiomScheme::Phi7},  {"phi7p", AxiomScheme::Phi7p},
  };
  for (const auto& [name, s] : table)
    if (t == name) return s;
  throw InputError("unknown axiom scheme '" + std::string(text) + "'");
}

std::string status_name(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::None: return "none";
    case HypothesisStatus::Certified: return "certified";
    case HypothesisStatus::Consistent: return "consistent";
    case HypothesisStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string method_name(CheckMethod m) {
  switch (m) {
    case CheckMethod::Structural: return "structural";
    case CheckMethod::Decided: return "decided";
    case CheckMethod::Bounded: return "bounded";
  }
  return "?";
}

namespace {

std::string var_list(const char* name, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::string(name) + std::to_string(i + 1);
  return s;
}

std::string one_line(const ModuleSystem& s) {
  std::string text = s.to_string(), out;
  for (char c : text) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  if (out.size() >= 2) out.resize(out.size() - 2);
  return out;
}

}  // namespace

std::string AxiomInstance::to_string() const {
  switch (scheme) {
    case AxiomScheme::Phi1:
      return "forall x1,x2,x3,x4: [[x1,x2],[x3,x4]] = 0";
    case AxiomScheme::Phi2:
      return "forall x,y: [[x,y],x] = 0 & [[x,y],y] = 0 -> [x,y] = 0";
    case AxiomScheme::Phi3:
      return "forall x,y,z: x != 0 & [x,y] = 0 & [x,z] = 0 -> [y,z] = 0";
    case AxiomScheme::Phi4:
      return "forall " + var_list("x", arity) + ": !phi(" + var_list("x", arity) + ")";
    case AxiomScheme::Phi5:
      return "forall z1,z2," + var_list("x", arity) + ": [z1,z2]*(" + (f ? f->to_string() : "?") +
             ") = 0 & [z1,z2] != 0 -> !phi(" + var_list("x", arity) + ")";
    case AxiomScheme::Phi5p:
      return "forall z1,z2: [z1,z2]*(" + (f ? f->to_string() : "?") + ")(a) = 0 -> [z1,z2] = 0";
    case AxiomScheme::Phi6:
      return "forall " + var_list("x", arity) + ": phi(" + var_list("x", arity) + ") -> " +
             (word ? word->to_string() : "?") + " != 0";
    case AxiomScheme::Phi7:
      return "forall " + var_list("x", arity) + "," + var_list("y", system ? system->unknowns : 0) + ": phi(" +
             var_list("x", arity) + ") & Fit(y) -> not {" + (system ? one_line(*system) : "?") + "} [" +
             status_name(status) + "]";
    case AxiomScheme::Phi7p:
      return "forall " + var_list("y", system ? system->unknowns : 0) + ": Fit'(y) -> not {" +
             (system ? one_line(*system) : "?") + "} [" + status_name(status) + "]";
  }
  return "?";
}

namespace {

Polynomial lift_poly(const Polynomial& f, const Ring& target) {
  if (f.ring() == target) return f;
  if (f.ring().nvars() > target.nvars() || f.ring().p() != target.p())
    throw ConfigurationError("polynomial ring does not embed into k[x1..x" + std::to_string(target.nvars()) + "]");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < f.ring().nvars(); ++i) images.push_back(Polynomial::variable(target, i));
  return f.substitute(images, target);
}

ModuleVector lift_vector(const ModuleVector& v, const Ring& target, std::size_t width) {
  if (v.width() > width) throw ConfigurationError("vector does not embed into the Fitting radical");
  ModuleVector out(target, width);
  for (const auto& [j, f] : v.entries()) out.set(j, lift_poly(f, target));
  return out;
}

std::vector<ExtElement> constants(const ExtensionAlgebra& b, std::size_t n) {
  std::vector<ExtElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(b.constant(i));
  return out;
}

std::string format_tuple(const ExtensionAlgebra& b, const std::vector<ExtElement>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + b.format(xs[i]);
  return s + ")";
}

/// Small elements for bounded counterexample searches.
std::vector<ExtElement> probe_elements(const ExtensionAlgebra& b) {
  const AlgebraContext& ctx = b.base();
  const std::size_t n = b.n();
  std::vector<ExtElement> fit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) fit.push_back(b.lift(ctx.commutator(i, j)));
  for (const auto& m : enumerate_module_elements(b.module(), 1, 4096))
    if (!m.is_zero()) fit.push_back(b.module_element(m));
  std::vector<ExtElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(b.constant(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(b.add(b.constant(i), b.constant(j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < std::min<std::size_t>(fit.size(), 16); ++k) out.push_back(b.add(b.constant(i), fit[k]));
  out.insert(out.end(), fit.begin(), fit.end());
  return out;
}

ExtElement random_element(const ExtensionAlgebra& b, std::mt19937_64& rng) {
  const AlgebraContext& ctx = b.base();
  std::uniform_int_distribution<Coeff> coeff(0, ctx.p() - 1);
  std::vector<Coeff> lin(ctx.r());
  for (auto& c : lin) c = coeff(rng);
  auto monos = monomials_up_to(ctx.r(), 2);
  const std::size_t width = ctx.t() + b.module().generators();
  ModuleVector v(ctx.ring(), width);
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<Term> terms;
    for (const auto& m : monos)
      if (Coeff c = coeff(rng)) terms.push_back({m, c});
    v.set(j, Polynomial::from_terms(ctx.ring(), std::move(terms)));
  }
  ExtElement fitpart = b.from_fitting_vector(v);
  return b.make(LieElement(ctx, lin, ModuleVector(ctx.ring(), ctx.t())) + fitpart.lie, fitpart.mod);
}

CheckResult check_phi1(const ExtensionAlgebra& b) {
  std::mt19937_64 rng(0x5eed);
  for (int k = 0; k < 64; ++k) {
    std::vector<ExtElement> u;
    for (int i = 0; i < 4; ++i) u.push_back(random_element(b, rng));
    ExtElement w = b.bracket(b.bracket(u[0], u[1]), b.bracket(u[2], u[3]));
    if (!w.is_zero())
      return {false, CheckMethod::Structural,
              "x = " + format_tuple(b, u) + " gives " + b.format(w)};
  }
  return {true, CheckMethod::Structural, ""};
}

CheckResult check_phi2(const ExtensionAlgebra& b, bool torsion_free) {
  if (torsion_free) return {true, CheckMethod::Structural, "Fit(B) is torsion-free"};
  auto probes = probe_elements(b);
  for (const auto& x : probes)
    for (const auto& y : probes) {
      ExtElement w = b.bracket(x, y);
      if (w.is_zero()) continue;
      if (b.bracket(w, x).is_zero() && b.bracket(w, y).is_zero())
        return {false, CheckMethod::Bounded, "x = " + b.format(x) + ", y = " + b.format(y)};
    }
  return {true, CheckMethod::Bounded, ""};
}

CheckResult check_phi3(const ExtensionAlgebra& b, bool torsion_free) {
  if (torsion_free) return {true, CheckMethod::Structural, "Fit(B) is torsion-free"};
  auto probes = probe_elements(b);
  for (const auto& x : probes) {
    if (x.is_zero()) continue;
    std::vector<const ExtElement*> centralizer;
    for (const auto& y : probes)
      if (b.bracket(x, y).is_zero()) centralizer.push_back(&y);
    for (const auto* y : centralizer)
      for (const auto* z : centralizer)
        if (!b.bracket(*y, *z).is_zero())
          return {false, CheckMethod::Bounded,
                  "x = " + b.format(x) + ", y = " + b.format(*y) + ", z = " + b.format(*z)};
  }
  return {true, CheckMethod::Bounded, ""};
}

CheckResult check_f_torsion(const ExtensionAlgebra& b, const Polynomial& f, bool torsion_free) {
  if (f.is_zero()) throw ConfigurationError("the polynomial of the instance must be nonzero");
  if (torsion_free) return {true, CheckMethod::Structural, "Fit(B) is torsion-free"};
  const ModulePresentation& m = b.module();
  Polynomial g = lift_poly(f, m.ring());
  GroebnerBasis q = module_quotient(m.basis(), g);
  for (const auto& v : q.elements())
    if (!m.is_zero_element(v)) return {false, CheckMethod::Decided, "m = " + b.format(b.module_element(v))};
  return {true, CheckMethod::Decided, ""};
}

CheckResult check_phi6(const AxiomInstance& inst, const ExtensionAlgebra& b, bool torsion_free) {
  if (!inst.word) throw ConfigurationError("Phi6 instance without a Lie word");
  const LieExpr& l = *inst.word;
  const std::size_t n = inst.arity;
  if (l.arity() > n) throw ConfigurationError("Lie word uses more variables than the instance arity");
  if (l.constants_used() > 0) throw ConfigurationError("Lie word must not contain constants");
  if (n > b.n()) return {true, CheckMethod::Structural, "no independent " + std::to_string(n) + "-tuple"};
  auto xs = constants(b, n);
  if (evaluate(l, b, xs).is_zero()) return {false, CheckMethod::Decided, "x = " + format_tuple(b, xs)};
  if (torsion_free) return {true, CheckMethod::Structural, "Fit(B) is torsion-free"};
  std::vector<ExtElement> probes;
  for (const auto& u : probe_elements(b))
    if (!u.lie.has_zero_linear_part()) probes.push_back(u);
  std::vector<std::size_t> idx(n, 0);
  std::vector<ExtElement> tuple(n, b.zero());
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) tuple[i] = probes[idx[i]];
    if (phi_eval(b, tuple) && evaluate(l, b, tuple).is_zero())
      return {false, CheckMethod::Bounded, "x = " + format_tuple(b, tuple)};
    std::size_t i = 0;
    while (i < n && ++idx[i] == probes.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return {true, CheckMethod::Bounded, ""};
}

CheckResult check_phi7(const AxiomInstance& inst, const ExtensionAlgebra& b) {
  if (!inst.system) throw ConfigurationError(scheme_name(inst.scheme) + " instance without a module system");
  ModuleSystem ms = lift_system(*inst.system, b);
  ModulePresentation fit = fitting_of(b);
  auto sol = solve_linear_over_module(ms.coeffs, ms.unknowns, ms.rhs, fit);
  if (!sol) return {true, CheckMethod::Decided, ""};
  std::vector<ExtElement> ys;
  for (const auto& y : sol->particular) ys.push_back(b.from_fitting_vector(y));
  return {false, CheckMethod::Decided, "y = " + format_tuple(b, ys)};
}

}  // namespace

ModuleSystem lift_system(const ModuleSystem& s, const ExtensionAlgebra& b) {
  const Ring& ring = b.base().ring();
  const std::size_t width = b.base().t() + b.module().generators();
  ModuleSystem out;
  out.unknowns = s.unknowns;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    if (s.coeffs[i].size() != s.unknowns) throw ConfigurationError("coefficient row has wrong length");
    std::vector<Polynomial> row;
    for (const auto& f : s.coeffs[i]) row.push_back(lift_poly(f, ring));
    out.coeffs.push_back(std::move(row));
    if (s.rhs[i].width() > b.base().t()) throw ConfigurationError("right-hand side is not in Fit(F_n)");
    out.rhs.push_back(lift_vector(s.rhs[i], ring, width));
  }
  return out;
}

CheckResult check_instance(const AxiomInstance& inst, const ExtensionAlgebra& b) {
  auto torsion_free = [&] { return is_torsion_free(b.module()); };
  switch (inst.scheme) {
    case AxiomScheme::Phi1:
      return check_phi1(b);
    case AxiomScheme::Phi2:
      return check_phi2(b, torsion_free());
    case AxiomScheme::Phi3:
      return check_phi3(b, torsion_free());
    case AxiomScheme::Phi4: {
      if (inst.arity == 0) throw ConfigurationError("Phi4 instance needs arity r + 1 >= 1");
      if (b.n() < inst.arity) return {true, CheckMethod::Structural, "rank " + std::to_string(b.n())};
      auto xs = constants(b, inst.arity);
      return {!phi_eval(b, xs), CheckMethod::Structural, "x = " + format_tuple(b, xs)};
    }
    case AxiomScheme::Phi5:
      if (!inst.f) throw ConfigurationError("Phi5 instance without a polynomial");
      if (inst.f->ring().nvars() != inst.arity) throw ConfigurationError("Phi5 polynomial must be in x1..xn");
      if (inst.arity > b.n())
        return {true, CheckMethod::Structural, "no independent " + std::to_string(inst.arity) + "-tuple"};
      return check_f_torsion(b, *inst.f, torsion_free());
    case AxiomScheme::Phi5p:
      if (!inst.f) throw ConfigurationError("Phi5' instance without a polynomial");
      if (inst.f->ring().nvars() != b.n())
        throw ConfigurationError("Phi5' instance is over a different set of constants");
      return check_f_torsion(b, *inst.f, torsion_free());
    case AxiomScheme::Phi6:
      return check_phi6(inst, b, torsion_free());
    case AxiomScheme::Phi7:
      if (inst.arity > b.n())
        return {true, CheckMethod::Structural, "no independent " + std::to_string(inst.arity) + "-tuple"};
      return check_phi7(inst, b);
    case AxiomScheme::Phi7p:
      if (inst.system && !inst.system->rhs.empty() && inst.system->rhs.front().ring().nvars() != b.n())
        throw ConfigurationError("Phi7' instance is over a different set of constants");
      return check_phi7(inst, b);
  }
  throw ConfigurationError("unknown scheme");
}

ModuleSystem s_f_alpha(const ModuleSystem& s, const Polynomial& f, const std::vector<Polynomial>& alpha) {
  if (f.constant_term() == 0) throw InputError("f = " + f.to_string() + " has zero constant term");
  if (alpha.size() != s.unknowns)
    throw ConfigurationError("divisor tuple has " + std::to_string(alpha.size()) + " entries for " +
                             std::to_string(s.unknowns) + " unknowns");
  Polynomial d = Polynomial::constant(f.ring(), 1);
  for (const auto& a : alpha) {
    if (a.constant_term() == 0) throw InputError("divisor " + a.to_string() + " has zero constant term");
    if (!divide_exact(f, a)) throw NonDivisor(a.to_string() + " does not divide " + f.to_string());
    d *= a;
  }
  ModuleSystem out;
  out.unknowns = s.unknowns;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < s.unknowns; ++j) {
      auto q = divide_exact(s.coeffs[i][j] * d, alpha[j]);
      if (!q) throw NonDivisor("coefficient of y" + std::to_string(j + 1) + " is not divisible by " + alpha[j].to_string());
      row.push_back(std::move(*q));
    }
    out.coeffs.push_back(std::move(row));
    out.rhs.push_back(s.rhs[i] * d);
  }
  return out;
}

std::vector<Polynomial> unitary_divisors(const Polynomial& f, unsigned degree_bound, std::size_t cap) {
  if (f.constant_term() == 0) throw InputError("f = " + f.to_string() + " has zero constant term");
  const Ring& ring = f.ring();
  unsigned bound = std::min<unsigned>(degree_bound, static_cast<unsigned>(f.total_degree()));
  std::vector<Monomial> support;
  for (const auto& m : monomials_up_to(ring.nvars(), bound))
    if (!m.is_one()) support.push_back(m);
  std::vector<Polynomial> out;
  const Polynomial one = Polynomial::constant(ring, 1);
  for (const auto& h : enumerate_polynomials(ring, support, cap)) {
    Polynomial g = one + h;
    if (divide_exact(f, g)) out.push_back(std::move(g));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.total_degree() < b.total_degree(); });
  return out;
}

DeltaResult delta_consistency_semidecide(const ModuleSystem& s, const ExtensionAlgebra& b, unsigned degree_bound,
                                         std::size_t cap) {
  ModuleSystem ms = lift_system(s, b);
  ModulePresentation fit = fitting_of(b);
  const Ring& ring = b.base().ring();
  const std::size_t l = ms.unknowns;
  const Polynomial one = Polynomial::constant(ring, 1);
  std::set<std::string> tried;
  std::size_t work = 0;
  for (unsigned deg = 0; deg <= degree_bound; ++deg) {
    std::vector<Monomial> support;
    for (const auto& m : monomials_up_to(ring.nvars(), deg))
      if (!m.is_one()) support.push_back(m);
    for (const auto& h : enumerate_polynomials(ring, support, cap)) {
      if (static_cast<unsigned>(h.is_zero() ? 0 : h.total_degree()) != deg) continue;
      Polynomial f = one + h;
      auto divisors = unitary_divisors(f, deg, cap);
      std::vector<std::size_t> idx(l, 0);
      for (;;) {
        std::vector<Polynomial> alpha;
        std::string key;
        for (std::size_t i = 0; i < l; ++i) {
          alpha.push_back(divisors[idx[i]]);
          key += divisors[idx[i]].to_string() + "|";
        }
        if (tried.insert(key).second) {
          if (++work > cap) throw ResourceError("localized consistency search exceeds cap " + std::to_string(cap));
          ModuleSystem t = s_f_alpha(ms, f, alpha);
          if (solve_linear_over_module(t.coeffs, t.unknowns, t.rhs, fit))
            return {DeltaSystem{std::move(t), f, std::move(alpha)}, degree_bound};
        }
        std::size_t i = 0;
        while (i < l && ++idx[i] == divisors.size()) idx[i++] = 0;
        if (i == l) break;
      }
    }
  }
  return {std::nullopt, degree_bound};
}

bool delta_inconsistency_certified(const ModuleSystem& s, const AlgebraContext& ctx) {
  const std::size_t l = s.unknowns, t = ctx.t();
  GfpMatrix a;
  std::vector<Coeff> rhs;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    if (s.rhs[i].width() != t || !(s.rhs[i].ring() == ctx.ring()))
      throw ConfigurationError("system is not over Fit(F_" + std::to_string(ctx.r()) + ")");
    for (std::size_t q = 0; q < t; ++q) {
      std::vector<Coeff> row(l * t, 0);
      for (std::size_t j = 0; j < l; ++j) row[j * t + q] = s.coeffs[i][j].constant_term();
      a.push_back(std::move(row));
      rhs.push_back(s.rhs[i].component(q).constant_term());
    }
  }
  return !gfp_solve(ctx.field(), a, rhs, l * t);
}

Language parse_language(std::string_view text) {
  if (text == "L") return Language::L;
  if (text == "LFr" || text == "L_Fr" || text == "LFR") return Language::LFr;
  throw InputError("unknown language '" + std::string(text) + "'; expected L or LFr");
}

std::string language_name(Language l) { return l == Language::L ? "L" : "LFr"; }

Classification classify_ucl(const ExtensionAlgebra& b, Language language, std::size_t r) {
  Classification out;
  const std::size_t n = b.n();
  if (n > r) {
    AxiomInstance inst;
    inst.scheme = AxiomScheme::Phi4;
    inst.arity = r + 1;
    out.violated = inst;
    out.witness = "x = " + format_tuple(b, constants(b, r + 1));
    out.reason = "rank " + std::to_string(n) + " exceeds " + std::to_string(r);
    return out;
  }
  if (language == Language::LFr && n < r) {
    out.reason = "no copy of F_" + std::to_string(r) + " among the constants";
    return out;
  }
  if (auto tw = torsion_witness(b.module())) {
    AxiomInstance inst;
    inst.scheme = language == Language::LFr ? AxiomScheme::Phi5p : AxiomScheme::Phi5;
    inst.arity = n;
    inst.f = tw->annihilator;
    out.violated = inst;
    out.witness = "m = " + b.format(b.module_element(tw->element)) + ", f = " + tw->annihilator.to_string();
    out.torsion = std::move(tw);
    out.reason = "module has torsion";
    return out;
  }
  out.member = true;
  out.certificate = embed_extension(b);
  out.reason = "module is torsion-free";
  return out;
}

namespace {

std::vector<Polynomial> nonzero_polynomials(const Ring& ring, unsigned bound, std::size_t cap) {
  std::vector<Polynomial> out;
  for (auto& f : enumerate_polynomials(ring, monomials_up_to(ring.nvars(), bound), cap))
    if (!f.is_zero()) out.push_back(std::move(f));
  std::stable_sort(out.begin(), out.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.total_degree() < b.total_degree(); });
  return out;
}

/// Left-normed words [..[x_i1, x_i2], ..., x_ik] of length <= bound.
std::vector<LieExpr> left_normed_words(std::size_t n, unsigned bound) {
  std::vector<LieExpr> out, layer;
  for (std::size_t i = 0; i < n; ++i) layer.push_back(LieExpr::variable(i));
  for (unsigned len = 1; len <= bound; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == bound) break;
    std::vector<LieExpr> next;
    for (const auto& w : layer)
      for (std::size_t i = 0; i < n; ++i) next.push_back(LieExpr::bracket(w, LieExpr::variable(i)));
    layer = std::move(next);
  }
  return out;
}

std::vector<ModuleSystem> small_systems(const AlgebraContext& ctx, unsigned bound, std::size_t cap) {
  std::vector<ModuleSystem> out;
  auto coeffs = nonzero_polynomials(ctx.ring(), bound, cap);
  auto monos = monomials_up_to(ctx.r(), bound);
  std::reverse(monos.begin(), monos.end());
  for (const auto& c : coeffs)
    for (std::size_t q = 0; q < ctx.t(); ++q)
      for (const auto& m : monos) {
        ModuleVector rhs = ctx.fitting().normal_form(ModuleVector::unit(ctx.ring(), ctx.t(), q) *
                                                     Polynomial::monomial(ctx.ring(), m));
        if (rhs.is_zero()) continue;
        out.push_back(ModuleSystem{1, {{c}}, {rhs}});
        if (out.size() > cap) throw ResourceError("system enumeration exceeds cap " + std::to_string(cap));
      }
  return out;
}

}  // namespace

std::vector<AxiomInstance> enumerate_axioms(AxiomScheme scheme, unsigned bound, const AlgebraContext& ctx,
                                            std::size_t cap) {
  std::vector<AxiomInstance> out;
  const std::size_t r = ctx.r();
  auto push = [&](AxiomInstance inst) {
    out.push_back(std::move(inst));
    if (out.size() > cap) throw ResourceError("axiom enumeration exceeds cap " + std::to_string(cap));
  };
  AxiomInstance base;
  base.scheme = scheme;
  switch (scheme) {
    case AxiomScheme::Phi1:
      base.arity = 4;
      push(base);
      break;
    case AxiomScheme::Phi2:
      base.arity = 2;
      push(base);
      break;
    case AxiomScheme::Phi3:
      base.arity = 3;
      push(base);
      break;
    case AxiomScheme::Phi4:
      base.arity = r + 1;
      push(base);
      break;
    case AxiomScheme::Phi5:
      for (std::size_t n = 1; n <= r; ++n)
        for (auto& f : nonzero_polynomials(Ring(ctx.p(), n), bound, cap)) {
          AxiomInstance inst = base;
          inst.arity = n;
          inst.f = std::move(f);
          push(std::move(inst));
        }
      break;
    case AxiomScheme::Phi5p:
      for (auto& f : nonzero_polynomials(ctx.ring(), bound, cap)) {
        AxiomInstance inst = base;
        inst.arity = r;
        inst.f = std::move(f);
        push(std::move(inst));
      }
      break;
    case AxiomScheme::Phi6:
      for (std::size_t n = 1; n <= r; ++n) {
        AlgebraContext sub(ctx.p(), n);
        std::vector<LieElement> gens;
        for (std::size_t i = 0; i < n; ++i) gens.push_back(sub.generator(i));
        for (auto& w : left_normed_words(n, bound)) {
          if (evaluate(w, sub, gens).is_zero()) continue;
          AxiomInstance inst = base;
          inst.arity = n;
          inst.word = std::move(w);
          push(std::move(inst));
        }
      }
      break;
    case AxiomScheme::Phi7:
      for (std::size_t n = 2; n <= r; ++n) {
        AlgebraContext sub(ctx.p(), n);
        ExtensionAlgebra fn(sub, ModulePresentation::free(sub.ring(), 0));
        for (auto& s : small_systems(sub, bound, cap)) {
          AxiomInstance inst = base;
          inst.arity = n;
          if (delta_inconsistency_certified(s, sub)) {
            inst.status = HypothesisStatus::Certified;
          } else {
            inst.status = delta_consistency_semidecide(s, fn, bound, cap).witness ? HypothesisStatus::Consistent
                                                                                   : HypothesisStatus::Unknown;
          }
          inst.system = std::move(s);
          push(std::move(inst));
        }
      }
      break;
    case AxiomScheme::Phi7p:
      if (ctx.t() == 0) break;
      for (auto& s : small_systems(ctx, bound, cap)) {
        if (solve_linear_over_module(s.coeffs, s.unknowns, s.rhs, ctx.fitting())) continue;
        AxiomInstance inst = base;
        inst.arity = r;
        inst.system = std::move(s);
        inst.status = HypothesisStatus::Certified;
        push(std::move(inst));
      }
      break;
  }
  return out;
}

}  // namespace metalie
