#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metalie/polynomial.hpp"

namespace metalie {

/// Dense matrix of polynomials, row major.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// A nonzero maximal minor of a polynomial matrix.
struct MinorSelection {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  /// Determinant of the selected square submatrix (1 when rank is 0).
  Polynomial minor;
};

/// Rank over the fraction field by fraction-free elimination, together with
/// the rows and columns of the pivot minor it found.
MinorSelection fraction_free_rank(const Ring& ring, const PolyMatrix& a, std::size_t ncols);

Polynomial determinant(const Ring& ring, const PolyMatrix& square);

PolyMatrix submatrix(const PolyMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

using GfpMatrix = std::vector<std::vector<Coeff>>;

std::size_t gfp_rank(const Field& k, GfpMatrix a);

struct AffineSolution {
  std::vector<Coeff> particular;
  /// Basis of the null space.
  std::vector<std::vector<Coeff>> kernel;
};

/// Solves a x = b over GF(p) with ncols unknowns.
std::optional<AffineSolution> gfp_solve(const Field& k, const GfpMatrix& a, const std::vector<Coeff>& b,
                                        std::size_t ncols);

}  // namespace metalie
