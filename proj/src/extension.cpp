#include "metalie/extension.hpp"

#include <sstream>

#include "metalie/error.hpp"

namespace metalie {

ExtensionAlgebra::ExtensionAlgebra(const AlgebraContext& base, const ModulePresentation& module)
    : base_(base), module_(module) {
  if (!(module.ring() == base.ring()))
    throw ConfigurationError("module must be over k[x1..x" + std::to_string(base.r()) + "] in characteristic " +
                             std::to_string(base.p()));
}

ExtElement ExtensionAlgebra::make(const LieElement& lie, const ModuleVector& mod) const {
  if (!(lie.context() == base_)) throw ConfigurationError("element of a different base algebra");
  if (!(mod.ring() == module_.ring()) || mod.width() != module_.generators())
    throw ConfigurationError("module element of wrong shape");
  return {lie, module_.normal_form(mod)};
}

ExtElement ExtensionAlgebra::lift(const LieElement& lie) const {
  return make(lie, ModuleVector(module_.ring(), module_.generators()));
}

ExtElement ExtensionAlgebra::module_element(const ModuleVector& mod) const { return make(base_.zero(), mod); }

ExtElement ExtensionAlgebra::zero() const { return lift(base_.zero()); }

ExtElement ExtensionAlgebra::constant(std::size_t i) const {
  if (i >= base_.r()) throw ConfigurationError("constant a" + std::to_string(i + 1) + " is not in the algebra");
  return lift(base_.generator(i));
}

ExtElement ExtensionAlgebra::add(const ExtElement& a, const ExtElement& b) const {
  return make(a.lie + b.lie, a.mod + b.mod);
}

ExtElement ExtensionAlgebra::sub(const ExtElement& a, const ExtElement& b) const {
  return make(a.lie - b.lie, a.mod - b.mod);
}

ExtElement ExtensionAlgebra::scale(std::int64_t c, const ExtElement& a) const {
  Coeff k = base_.field().reduce(c);
  return make(a.lie.scaled(k), a.mod.scaled(k));
}

ExtElement ExtensionAlgebra::ext_bracket(const ExtElement& u, const ExtElement& v) const {
  return make(metalie::bracket(u.lie, v.lie), u.mod * v.lie.linear_form() - v.mod * u.lie.linear_form());
}

ModuleVector ExtensionAlgebra::fitting_vector(const ExtElement& u) const {
  if (!u.lie.has_zero_linear_part()) throw ConfigurationError("element is not in the Fitting radical");
  return concat(u.lie.fitting(), u.mod);
}

ExtElement ExtensionAlgebra::from_fitting_vector(const ModuleVector& v) const {
  const std::size_t t = base_.t();
  if (v.width() != t + module_.generators()) throw ConfigurationError("Fitting vector of wrong width");
  return make(LieElement(base_, std::vector<Coeff>(base_.r(), 0), v.slice(0, t)), v.slice(t, v.width()));
}

ExtElement ExtensionAlgebra::act(const ExtElement& u, const Polynomial& f) const {
  return from_fitting_vector(fitting_vector(u) * f);
}

std::string ExtensionAlgebra::format(const ExtElement& u) const {
  std::string s = u.lie.is_zero() ? "" : u.lie.to_string();
  for (const auto& [j, f] : u.mod.entries()) {
    if (!s.empty()) s += " + ";
    s += (f.size() == 1 && f.lead().mono.is_one() && f.lead().coeff == 1) ? "" : "(" + f.to_string() + ")*";
    s += "m" + std::to_string(j + 1);
  }
  return s.empty() ? "0" : s;
}

ModulePresentation fitting_of(const ExtensionAlgebra& b) { return b.base().fitting().direct_sum(b.module()); }

ExtElement evaluate(const LieExpr& f, const ExtensionAlgebra& b, std::span<const ExtElement> point) {
  if (point.size() < f.arity()) throw ConfigurationError("evaluation point is shorter than the arity");
  return evaluate<ExtensionAlgebra>(f, b, point);
}

bool phi_eval(const ExtensionAlgebra& b, const std::vector<ExtElement>& tuple) {
  std::vector<LieElement> lin;
  for (const auto& u : tuple) lin.push_back(u.lie);
  if (lin.size() > b.n())
    throw DimensionExceeded("linear independence of " + std::to_string(lin.size()) + " elements in rank " +
                            std::to_string(b.n()) + " is impossible");
  return phi_eval(lin);
}

ExtElement ExtensionEmbedding::map(const ExtElement& u) const {
  ModuleVector image(target.module().ring(), s);
  for (const auto& [j, f] : u.mod.entries()) image += images[j] * f;
  return target.make(u.lie, image);
}

ExtensionEmbedding embed_extension(const ExtensionAlgebra& b) {
  FreeEmbedding emb = embed_into_free(b.module());
  ExtensionEmbedding out{emb.s, ExtensionAlgebra(b.base(), ModulePresentation::free(b.base().ring(), emb.s)),
                         emb.images};
  std::vector<ExtElement> gens;
  for (std::size_t i = 0; i < b.n(); ++i) gens.push_back(b.constant(i));
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < i; ++j) gens.push_back(b.lift(b.base().commutator(i, j)));
  for (std::size_t j = 0; j < b.module().generators(); ++j)
    gens.push_back(b.module_element(b.module().generator(j)));
  for (const auto& u : gens)
    for (const auto& v : gens)
      if (!(out.map(b.ext_bracket(u, v)) == out.target.ext_bracket(out.map(u), out.map(v))))
        throw Error("embedding does not preserve brackets");
  return out;
}

ExtensionAlgebra parse_extension(std::string_view text) {
  std::size_t start = 0;
  std::string header;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      header = line;
      break;
    }
  }
  if (header.empty()) throw InputError("extension file is empty; expected header 'p n'");
  std::istringstream in(header);
  long long p = 0, n = 0;
  std::string extra;
  if (!(in >> p >> n) || (in >> extra)) throw InputError("malformed extension header '" + header + "'; expected 'p n'");
  if (start > text.size()) start = text.size();
  ModulePresentation m = parse_presentation(text.substr(start));
  if (static_cast<long long>(m.ring().p()) != p || static_cast<long long>(m.ring().nvars()) != n)
    throw InputError("module block must be over k[x1..x" + std::to_string(n) + "] in characteristic " +
                     std::to_string(p));
  if (n < 1) throw InputError("the base algebra needs at least one generator");
  return ExtensionAlgebra(AlgebraContext(static_cast<std::uint32_t>(p), static_cast<std::size_t>(n)), m);
}

}  // namespace metalie
