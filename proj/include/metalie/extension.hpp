#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "metalie/lie_expr.hpp"

namespace metalie {

class ExtensionAlgebra;

/// Element of F_n + M: a base element and a module element.
struct ExtElement {
  LieElement lie;
  ModuleVector mod;

  bool is_zero() const noexcept { return lie.is_zero() && mod.is_zero(); }
  bool operator==(const ExtElement& o) const noexcept { return lie == o.lie && mod == o.mod; }
};

/// Direct module extension F_n + M of the Fitting radical of F_n by a
/// module M over k[x1..xn]: M lies in the Fitting radical, [M, M] = 0,
/// [M, Fit(F_n)] = 0 and [m, a_i] = m.x_i.
class ExtensionAlgebra {
 public:
  using Element = ExtElement;

  ExtensionAlgebra(const AlgebraContext& base, const ModulePresentation& module);

  const AlgebraContext& base() const noexcept { return base_; }
  const ModulePresentation& module() const noexcept { return module_; }
  std::size_t n() const noexcept { return base_.r(); }

  ExtElement make(const LieElement& lie, const ModuleVector& mod) const;
  ExtElement lift(const LieElement& lie) const;
  ExtElement module_element(const ModuleVector& mod) const;

  // Evaluation interface.
  ExtElement zero() const;
  ExtElement constant(std::size_t i) const;
  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement scale(std::int64_t c, const ExtElement& a) const;
  ExtElement bracket(const ExtElement& a, const ExtElement& b) const { return ext_bracket(a, b); }
  ExtElement ext_bracket(const ExtElement& u, const ExtElement& v) const;

  /// Fitting radical part of an element; throws if the linear part is nonzero.
  ModuleVector fitting_vector(const ExtElement& u) const;
  ExtElement from_fitting_vector(const ModuleVector& v) const;
  /// u.f on the Fitting radical.
  ExtElement act(const ExtElement& u, const Polynomial& f) const;

  std::string format(const ExtElement& u) const;

 private:
  AlgebraContext base_;
  ModulePresentation module_;
};

/// Block direct sum Fit(F_n) + M.
ModulePresentation fitting_of(const ExtensionAlgebra& b);

ExtElement evaluate(const LieExpr& f, const ExtensionAlgebra& b, std::span<const ExtElement> point);

/// Linear independence of the linear parts modulo Fit(B).
bool phi_eval(const ExtensionAlgebra& b, const std::vector<ExtElement>& tuple);

/// Embedding of F_n + M into F_n + T_s.
struct ExtensionEmbedding {
  std::size_t s = 0;
  ExtensionAlgebra target;
  /// Images of the module generators in T_s.
  std::vector<ModuleVector> images;

  ExtElement map(const ExtElement& u) const;
};

/// Throws TorsionInput when M has torsion. Brackets of all generator
/// pairs are checked against the images.
ExtensionEmbedding embed_extension(const ExtensionAlgebra& b);

/// File: a header line "p n" followed by a module block over k[x1..xn].
ExtensionAlgebra parse_extension(std::string_view text);

}  // namespace metalie
