#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "metalie/extension.hpp"
#include "metalie/linear_solve.hpp"

namespace metalie {

struct EquationSystem {
  AlgebraContext ctx;
  std::size_t arity = 0;
  std::vector<LieExpr> equations;

  /// One equation per line.
  std::string to_string() const;
};

/// One equation per line; blank lines and '#' comments are skipped. The
/// arity is the largest variable index unless a larger one is requested.
EquationSystem parse_system(std::string_view text, const AlgebraContext& ctx, std::size_t min_arity = 0);

/// f = c + (x_1 h_1 + ... + x_n h_n) + g with g of degree >= 2 in the
/// variables. The middle part is kept as an explicit left-normed tree
/// because x_i h_i is only determined by h_i up to terms that vanish on
/// the Fitting radical.
struct Decomposition {
  LieElement c;
  std::vector<Polynomial> h;
  LieExpr linear_terms;
  LieExpr g;

  LieExpr recombined() const;
};

Decomposition decompose(const LieExpr& f, const AlgebraContext& ctx, std::size_t arity);

/// z_i = sum_j alpha_ij a_j for each unknown.
struct LinearBranch {
  std::vector<std::vector<Coeff>> alpha;

  std::vector<LieElement> values(const AlgebraContext& ctx) const;
  std::string to_string(const AlgebraContext& ctx) const;
  bool operator==(const LinearBranch&) const = default;
};

/// Every solution of the projection to F_r / Fit(F_r) = k^r, in a fixed
/// order. Throws ResourceError past cap.
std::vector<LinearBranch> abelianized_branches(const EquationSystem& s, std::size_t cap);

/// sum_j y_j f_ij = c_i over the Fitting radical.
struct ModuleSystem {
  std::size_t unknowns = 0;
  PolyMatrix coeffs;
  std::vector<ModuleVector> rhs;

  std::string to_string() const;
};

ModuleSystem specialize(const EquationSystem& s, const LinearBranch& b);

struct BranchSolution {
  LinearBranch branch;
  ModuleSystem system;
  ModuleSolution solution;
  std::shared_ptr<const SolutionSpace> space;
};

using Point = std::vector<LieElement>;

struct SolutionSet {
  AlgebraContext ctx;
  std::size_t arity = 0;
  bool consistent = false;
  std::size_t branches_examined = 0;
  std::vector<BranchSolution> branches;

  bool contains(const Point& x) const;
  /// Points whose Fitting parts are normal forms of degree <= bound.
  std::vector<Point> bounded_slice(unsigned bound, std::size_t cap) const;
  /// Human-readable description of one branch.
  std::string describe(const BranchSolution& b) const;
};

struct SolveOptions {
  std::size_t branch_cap = 4096;
};

SolutionSet solve_system(const EquationSystem& s, const SolveOptions& opts = {});

/// Exhaustive search over linear parts and Fitting parts of degree <= bound.
std::vector<Point> brute_force_solve(const EquationSystem& s, unsigned degree_bound, std::size_t cap);

/// Candidate values for one unknown: all linear parts plus Fitting normal
/// forms of degree <= bound.
std::vector<LieElement> candidate_elements(const AlgebraContext& ctx, unsigned degree_bound, std::size_t cap);

struct Subsystem {
  ModuleSystem system;
  std::vector<std::size_t> kept;
};

/// Drops equations implied by the others modulo the relations of j.
Subsystem finite_equivalent_subsystem(const ModuleSystem& ms, const ModulePresentation& j);

std::string format_point(const Point& x);

}  // namespace metalie
