#pragma once

#include <cstddef>
#include <vector>

#include "metalie/equations.hpp"

namespace metalie {

/// F_r + M with M torsion-free.
struct CoordinateAlgebra {
  ExtensionAlgebra algebra;

  const ModulePresentation& module() const noexcept { return algebra.module(); }
  /// The algebraic set is a single point.
  bool is_point() const { return algebra.module().is_zero_module(); }
  std::string to_string() const;
};

/// Values of the module generators in Fit(F_r).
struct HomPoint {
  std::vector<ModuleVector> images;

  bool operator==(const HomPoint&) const = default;
  /// The corresponding point of F_r^n.
  Point point(const AlgebraContext& ctx) const;
};

/// Each relation sum f_j e_j becomes sum_j f_j(a) acting on x_j as nested
/// brackets, followed by [[a1,a2],x_i] = 0 for every generator. Needs r >= 2.
EquationSystem canonical_system(const ModulePresentation& m);

/// Whether f(x1..xn) vanishes under x_i -> m_i in F_r + M. Throws
/// TorsionInput when M has torsion.
bool radical_member(const LieExpr& f, const ModulePresentation& m);

/// Coefficient rows of a relation matrix, with zero right-hand sides.
ModuleSystem module_system_of(const ModulePresentation& m, const AlgebraContext& ctx);

/// F_r + (R^l / rows) / torsion for a homogeneous system. Throws
/// InputError when some right-hand side is nonzero.
CoordinateAlgebra coordinate_algebra_of_module_system(const ModuleSystem& ms, const AlgebraContext& ctx);

std::size_t dimension(const CoordinateAlgebra& g);

/// Homomorphisms M -> Fit(F_r) whose generator images are normal forms of
/// degree <= bound. Throws ResourceError past cap.
std::vector<HomPoint> homs_to_fitting(const ModulePresentation& m, unsigned degree_bound,
                                      std::size_t cap = 1u << 22);

/// Gamma, then quotients by saturated cyclic spans down to rank 0; empty
/// for a point.
std::vector<CoordinateAlgebra> chain_dimension_check(const CoordinateAlgebra& g);

}  // namespace metalie
