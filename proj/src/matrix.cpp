#include "metalie/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "metalie/error.hpp"

namespace metalie {

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("fraction-free elimination produced an inexact division");
  return *q;
}

}  // namespace

MinorSelection fraction_free_rank(const Ring& ring, const PolyMatrix& a, std::size_t ncols) {
  const std::size_t m = a.size();
  PolyMatrix w = a;
  for (const auto& row : w)
    if (row.size() != ncols) throw ConfigurationError("ragged polynomial matrix");
  std::vector<std::size_t> row_perm(m), col_perm(ncols);
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);

  Polynomial prev = Polynomial::constant(ring, 1);
  std::size_t k = 0;
  for (; k < std::min(m, ncols); ++k) {
    std::size_t pr = m, pc = ncols;
    for (std::size_t c = k; c < ncols && pr == m; ++c)
      for (std::size_t r = k; r < m; ++r)
        if (!w[r][c].is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == m) break;
    std::swap(w[k], w[pr]);
    std::swap(row_perm[k], row_perm[pr]);
    if (pc != k) {
      for (auto& row : w) std::swap(row[k], row[pc]);
      std::swap(col_perm[k], col_perm[pc]);
    }
    for (std::size_t r = k + 1; r < m; ++r) {
      for (std::size_t c = k + 1; c < ncols; ++c)
        w[r][c] = exact_quotient(w[k][k] * w[r][c] - w[r][k] * w[k][c], prev);
      w[r][k] = Polynomial(ring);
    }
    prev = w[k][k];
  }

  MinorSelection sel{k, {}, {}, Polynomial::constant(ring, 1)};
  sel.rows.assign(row_perm.begin(), row_perm.begin() + static_cast<std::ptrdiff_t>(k));
  sel.cols.assign(col_perm.begin(), col_perm.begin() + static_cast<std::ptrdiff_t>(k));
  if (k > 0) sel.minor = determinant(ring, submatrix(a, sel.rows, sel.cols));
  return sel;
}

Polynomial determinant(const Ring& ring, const PolyMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  PolyMatrix w = square;
  for (const auto& row : w)
    if (row.size() != n) throw ConfigurationError("determinant of a non-square matrix");
  bool negate = false;
  Polynomial prev = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    while (pr < n && w[pr][k].is_zero()) ++pr;
    if (pr == n) return Polynomial(ring);
    if (pr != k) {
      std::swap(w[k], w[pr]);
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) w[r][c] = exact_quotient(w[k][k] * w[r][c] - w[r][k] * w[k][c], prev);
      w[r][k] = Polynomial(ring);
    }
    prev = w[k][k];
  }
  return negate ? -prev : prev;
}

PolyMatrix submatrix(const PolyMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  PolyMatrix out;
  out.reserve(rows.size());
  for (std::size_t r : rows) {
    std::vector<Polynomial> row;
    row.reserve(cols.size());
    for (std::size_t c : cols) row.push_back(a.at(r).at(c));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(const Field& k, GfpMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < a.size(); ++c) {
    std::size_t pr = row;
    while (pr < a.size() && a[pr][c] == 0) ++pr;
    if (pr == a.size()) continue;
    std::swap(a[row], a[pr]);
    Coeff inv = k.inv(a[row][c]);
    for (auto& x : a[row]) x = k.mul(x, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Coeff f = a[r][c];
      for (std::size_t j = 0; j < a[r].size(); ++j) a[r][j] = k.sub(a[r][j], k.mul(f, a[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t gfp_rank(const Field& k, GfpMatrix a) {
  if (a.empty()) return 0;
  return echelon(k, a, a.front().size()).size();
}

std::optional<AffineSolution> gfp_solve(const Field& k, const GfpMatrix& a, const std::vector<Coeff>& b,
                                        std::size_t ncols) {
  if (a.size() != b.size()) throw ConfigurationError("linear system with mismatched right-hand side");
  GfpMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != ncols) throw ConfigurationError("ragged linear system");
    auto row = a[i];
    row.push_back(b[i] % k.characteristic());
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = echelon(k, aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(ncols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug[i][ncols];
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coeff> v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(aug[i][f]);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace metalie
