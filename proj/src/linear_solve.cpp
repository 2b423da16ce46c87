#include "metalie/linear_solve.hpp"

#include "metalie/error.hpp"

namespace metalie {

ModuleVector stack(const std::vector<ModuleVector>& parts, std::size_t t) {
  if (parts.empty()) throw ConfigurationError("cannot stack an empty list without a ring");
  const std::size_t w = parts.size() * t;
  ModuleVector out(parts.front().ring(), w);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].width() != t) throw ConfigurationError("stacked part of wrong width");
    out += parts[j].shifted(j * t, w);
  }
  return out;
}

std::vector<ModuleVector> unstack(const ModuleVector& v, std::size_t l, std::size_t t) {
  if (v.width() != l * t) throw ConfigurationError("stacked vector of wrong width");
  std::vector<ModuleVector> out;
  out.reserve(l);
  for (std::size_t j = 0; j < l; ++j) out.push_back(v.slice(j * t, (j + 1) * t));
  return out;
}

std::optional<ModuleSolution> solve_linear_over_module(const PolyMatrix& coeffs, std::size_t l,
                                                       const std::vector<ModuleVector>& rhs,
                                                       const ModulePresentation& j) {
  const Ring& ring = j.ring();
  const std::size_t t = j.generators();
  const std::size_t m = coeffs.size();
  if (rhs.size() != m) throw ConfigurationError("one right-hand side per equation is required");
  for (const auto& row : coeffs)
    if (row.size() != l) throw ConfigurationError("coefficient row of wrong length");
  for (const auto& c : rhs)
    if (c.width() != t || !(c.ring() == ring)) throw ConfigurationError("right-hand side of wrong shape");

  const std::size_t w = m * t;
  std::vector<ModuleVector> gens;
  gens.reserve(l * t);
  for (std::size_t u = 0; u < l; ++u)
    for (std::size_t s = 0; s < t; ++s) {
      ModuleVector g(ring, w);
      for (std::size_t i = 0; i < m; ++i)
        if (!coeffs[i][u].is_zero()) g.set(i * t + s, coeffs[i][u]);
      gens.push_back(std::move(g));
    }
  std::vector<ModuleVector> rels;
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& r : j.basis().elements()) rels.push_back(r.shifted(i * t, w));

  Lifter lifter(ring, w, std::move(gens), std::move(rels));
  ModuleVector target(ring, w);
  for (std::size_t i = 0; i < m; ++i) target += rhs[i].shifted(i * t, w);
  auto lifted = lifter.lift(target);
  if (!lifted) return std::nullopt;

  auto to_unknowns = [&](const std::vector<Polynomial>& c) {
    std::vector<ModuleVector> y;
    y.reserve(l);
    for (std::size_t u = 0; u < l; ++u) {
      ModuleVector v(ring, t);
      for (std::size_t s = 0; s < t; ++s) v.set(s, c[u * t + s]);
      y.push_back(j.normal_form(v));
    }
    return y;
  };

  ModuleSolution sol;
  sol.particular = to_unknowns(*lifted);
  for (const auto& syz : lifter.syzygies()) {
    auto y = to_unknowns(syz.dense());
    bool zero = true;
    for (const auto& v : y) zero = zero && v.is_zero();
    if (!zero) sol.homogeneous.push_back(std::move(y));
  }
  return sol;
}

SolutionSpace::SolutionSpace(const ModuleSolution& sol, const ModulePresentation& j)
    : l_(sol.particular.size()),
      t_(j.generators()),
      particular_(j.ring(), l_ * t_),
      homogeneous_(j.ring(), l_ * t_) {
  const std::size_t w = l_ * t_;
  if (l_ > 0) particular_ = stack(sol.particular, t_);
  std::vector<ModuleVector> gens;
  for (const auto& h : sol.homogeneous) gens.push_back(stack(h, t_));
  for (std::size_t u = 0; u < l_; ++u)
    for (const auto& r : j.basis().elements()) gens.push_back(r.shifted(u * t_, w));
  homogeneous_ = GroebnerBasis::compute(j.ring(), w, gens);
}

bool SolutionSpace::contains(const std::vector<ModuleVector>& y) const {
  if (y.size() != l_) throw ConfigurationError("wrong number of unknowns");
  if (l_ == 0) return true;
  return homogeneous_.contains(stack(y, t_) - particular_);
}

std::vector<ModuleVector> apply_coefficients(const PolyMatrix& coeffs, const std::vector<ModuleVector>& y,
                                             const ModulePresentation& j) {
  std::vector<ModuleVector> out;
  out.reserve(coeffs.size());
  for (const auto& row : coeffs) {
    if (row.size() != y.size()) throw ConfigurationError("coefficient row of wrong length");
    ModuleVector acc(j.ring(), j.generators());
    for (std::size_t u = 0; u < row.size(); ++u) acc += y[u] * row[u];
    out.push_back(j.normal_form(acc));
  }
  return out;
}

}  // namespace metalie
