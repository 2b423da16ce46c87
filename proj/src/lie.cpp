#include "metalie/lie.hpp"

#include "metalie/error.hpp"

namespace metalie {

namespace {

ModulePresentation jacobi_presentation(const Ring& ring, std::size_t r) {
  const std::size_t t = r * (r - 1) / 2;
  std::vector<ModuleVector> rels;
  const Field& k = ring.field();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t l = 0; l < j; ++l) {
        ModuleVector v(ring, t);
        v.set(AlgebraContext::pair_index(i, j), Polynomial::variable(ring, l));
        v.set(AlgebraContext::pair_index(i, l), Polynomial::variable(ring, j).scaled(k.neg(1)));
        v.set(AlgebraContext::pair_index(j, l), Polynomial::variable(ring, i));
        rels.push_back(std::move(v));
      }
  return ModulePresentation(ring, t, std::move(rels));
}

}  // namespace

AlgebraContext::AlgebraContext(std::uint32_t p, std::size_t r) {
  if (r < 1) throw ConfigurationError("the free metabelian Lie algebra needs at least one generator");
  Ring ring(p, r);
  impl_ = std::make_shared<const Impl>(Impl{ring, r, r * (r - 1) / 2, jacobi_presentation(ring, r)});
}

std::pair<std::size_t, std::size_t> AlgebraContext::pair_of(std::size_t index) const {
  if (index >= t()) throw ConfigurationError("Fitting component out of range");
  std::size_t i = 1;
  while (pair_index(i + 1, 0) <= index) ++i;
  return {i, index - pair_index(i, 0)};
}

LieElement AlgebraContext::zero() const {
  return LieElement(*this, std::vector<Coeff>(r(), 0), ModuleVector(ring(), t()));
}

LieElement AlgebraContext::generator(std::size_t i) const {
  if (i >= r()) throw ConfigurationError("generator index out of range");
  std::vector<Coeff> lin(r(), 0);
  lin[i] = 1;
  return LieElement(*this, std::move(lin), ModuleVector(ring(), t()));
}

LieElement AlgebraContext::commutator(std::size_t i, std::size_t j) const {
  if (i >= r() || j >= i) throw ConfigurationError("commutator indices must satisfy i > j");
  return LieElement(*this, std::vector<Coeff>(r(), 0), ModuleVector::unit(ring(), t(), pair_index(i, j)));
}

LieElement::LieElement(const AlgebraContext& ctx, std::vector<Coeff> linear, const ModuleVector& fitting)
    : ctx_(ctx), linear_(std::move(linear)), fitting_(ctx.ring(), ctx.t()) {
  if (linear_.size() != ctx.r()) throw ConfigurationError("linear part has wrong length");
  if (!(fitting.ring() == ctx.ring()) || fitting.width() != ctx.t())
    throw ConfigurationError("Fitting part of wrong shape");
  for (auto& c : linear_) c %= ctx.p();
  fitting_ = ctx.fitting().normal_form(fitting);
}

bool LieElement::is_zero() const noexcept { return has_zero_linear_part() && fitting_.is_zero(); }

bool LieElement::has_zero_linear_part() const noexcept {
  for (Coeff c : linear_)
    if (c) return false;
  return true;
}

Polynomial LieElement::linear_form() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < linear_.size(); ++i)
    if (linear_[i]) terms.push_back({Monomial::variable(i), linear_[i]});
  return Polynomial::from_terms(ctx_.ring(), std::move(terms));
}

void LieElement::check(const LieElement& o) const {
  if (!(ctx_ == o.ctx_)) throw ConfigurationError("elements of different algebras");
}

LieElement LieElement::operator+(const LieElement& o) const {
  check(o);
  std::vector<Coeff> lin(linear_.size());
  for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = ctx_.field().add(linear_[i], o.linear_[i]);
  return LieElement(ctx_, std::move(lin), fitting_ + o.fitting_);
}

LieElement LieElement::operator-() const { return scaled(ctx_.field().neg(1)); }

LieElement LieElement::operator-(const LieElement& o) const { return *this + (-o); }

LieElement LieElement::scaled(Coeff c) const {
  std::vector<Coeff> lin(linear_.size());
  for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = ctx_.field().mul(linear_[i], c);
  return LieElement(ctx_, std::move(lin), fitting_.scaled(c));
}

LieElement LieElement::act(const Polynomial& f) const {
  if (!has_zero_linear_part()) throw ConfigurationError("module action is defined on the Fitting radical only");
  return LieElement(ctx_, linear_, fitting_ * f);
}

LieElement bracket(const LieElement& u, const LieElement& v) {
  const AlgebraContext& ctx = u.context();
  if (!(ctx == v.context())) throw ConfigurationError("elements of different algebras");
  const Field& k = ctx.field();
  ModuleVector fit(ctx.ring(), ctx.t());
  const auto& a = u.linear();
  const auto& b = v.linear();
  for (std::size_t i = 0; i < ctx.r(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Coeff c = k.sub(k.mul(a[i], b[j]), k.mul(a[j], b[i]));
      if (c) fit.set(AlgebraContext::pair_index(i, j), Polynomial::constant(ctx.ring(), c));
    }
  fit += u.fitting() * v.linear_form();
  fit -= v.fitting() * u.linear_form();
  return LieElement(ctx, std::vector<Coeff>(ctx.r(), 0), fit);
}

std::vector<LieElement> fitting_probe_set(const AlgebraContext& ctx) {
  std::vector<LieElement> probes;
  for (std::size_t i = 0; i < ctx.r(); ++i) probes.push_back(ctx.generator(i));
  for (std::size_t i = 0; i < ctx.r(); ++i)
    for (std::size_t j = 0; j < i; ++j) probes.push_back(ctx.commutator(i, j));
  for (std::size_t i = 0; i < ctx.r(); ++i)
    for (std::size_t j = 0; j < i; ++j) probes.push_back(ctx.generator(i) + ctx.generator(j));
  return probes;
}

bool in_fitting(const LieElement& u, FittingMode mode) {
  const AlgebraContext& ctx = u.context();
  switch (mode) {
    case FittingMode::Structural:
      return u.has_zero_linear_part();
    case FittingMode::FormulaLFr:
      for (std::size_t i = 0; i < ctx.r(); ++i)
        if (!bracket(bracket(u, ctx.generator(i)), u).is_zero()) return false;
      return true;
    case FittingMode::FormulaL:
      for (const auto& y : fitting_probe_set(ctx))
        if (!bracket(bracket(u, y), u).is_zero()) return false;
      return true;
  }
  return false;
}

bool phi_eval(const std::vector<LieElement>& tuple) {
  if (tuple.empty()) return true;
  const AlgebraContext& ctx = tuple.front().context();
  if (tuple.size() > ctx.r())
    throw DimensionExceeded("linear independence of " + std::to_string(tuple.size()) + " elements in rank " +
                            std::to_string(ctx.r()) + " is impossible");
  GfpMatrix m;
  for (const auto& u : tuple) {
    if (!(u.context() == ctx)) throw ConfigurationError("elements of different algebras");
    m.push_back(u.linear());
  }
  return gfp_rank(ctx.field(), std::move(m)) == tuple.size();
}

std::string format_fitting_terms(const ModuleVector& v, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& [idx, f] : v.entries()) {
    std::size_t i = 1;
    while ((i + 1) * i / 2 <= idx) ++i;
    std::size_t j = idx - i * (i - 1) / 2;
    for (const auto& term : f.terms()) {
      std::string b = "[" + names.at(i) + "," + names.at(j) + "]";
      for (std::size_t var = 0; var < kMaxVars; ++var)
        for (std::uint16_t e = 0; e < term.mono[var]; ++e) b = "[" + b + "," + names.at(var) + "]";
      if (!s.empty()) s += " + ";
      if (term.coeff != 1) s += std::to_string(term.coeff) + "*";
      s += b;
    }
  }
  return s;
}

std::string LieElement::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ctx_.r(); ++i) names.push_back("a" + std::to_string(i + 1));
  std::string s;
  for (std::size_t i = 0; i < linear_.size(); ++i) {
    if (!linear_[i]) continue;
    if (!s.empty()) s += " + ";
    if (linear_[i] != 1) s += std::to_string(linear_[i]) + "*";
    s += names[i];
  }
  std::string fit = format_fitting_terms(fitting_, names);
  if (!fit.empty()) {
    if (!s.empty()) s += " + ";
    s += fit;
  }
  return s.empty() ? "0" : s;
}

}  // namespace metalie
