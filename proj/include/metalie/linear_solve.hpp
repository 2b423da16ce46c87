#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metalie/presentation.hpp"

namespace metalie {

/// Solutions of sum_j f_ij y_j = c_i with unknowns y_j in R^t / J.
struct ModuleSolution {
  /// One vector of width t per unknown, in normal form modulo J.
  std::vector<ModuleVector> particular;
  /// Generators of the homogeneous solutions modulo J.
  std::vector<std::vector<ModuleVector>> homogeneous;
};

/// Stacks the unknowns y_1..y_l into one vector of width l*t.
ModuleVector stack(const std::vector<ModuleVector>& parts, std::size_t t);
std::vector<ModuleVector> unstack(const ModuleVector& v, std::size_t l, std::size_t t);

/// coeffs is m x l; rhs has m entries of width t = j.generators().
std::optional<ModuleSolution> solve_linear_over_module(const PolyMatrix& coeffs, std::size_t l,
                                                       const std::vector<ModuleVector>& rhs,
                                                       const ModulePresentation& j);

/// Exact membership test for the full solution set of a solved system.
class SolutionSpace {
 public:
  SolutionSpace(const ModuleSolution& sol, const ModulePresentation& j);

  bool contains(const std::vector<ModuleVector>& y) const;
  std::size_t unknowns() const noexcept { return l_; }

 private:
  std::size_t l_;
  std::size_t t_;
  ModuleVector particular_;
  GroebnerBasis homogeneous_;
};

/// Left-hand side sum_j f_ij y_j for every equation.
std::vector<ModuleVector> apply_coefficients(const PolyMatrix& coeffs, const std::vector<ModuleVector>& y,
                                             const ModulePresentation& j);

}  // namespace metalie
