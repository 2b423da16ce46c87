#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "metalie/presentation.hpp"

namespace metalie {

class LieElement;

/// The free metabelian Lie algebra F_r over GF(p) with free base a1..ar.
///
/// Its Fitting radical is presented over R = k[x1..xr] on generators
/// e_ij = [a_i, a_j] (i > j), with the action u.x_k = [u, a_k] and the
/// Jacobi relations x_k e_ij - x_j e_ik + x_i e_jk for i > j > k.
class AlgebraContext {
 public:
  AlgebraContext(std::uint32_t p, std::size_t r);

  const Ring& ring() const noexcept { return impl_->ring; }
  std::uint32_t p() const noexcept { return impl_->ring.p(); }
  const Field& field() const noexcept { return impl_->ring.field(); }
  std::size_t r() const noexcept { return impl_->r; }
  /// Number of Fitting generators, r(r-1)/2.
  std::size_t t() const noexcept { return impl_->t; }
  const ModulePresentation& fitting() const noexcept { return impl_->fitting; }

  /// Component of e_ij for 0-based i > j.
  static std::size_t pair_index(std::size_t i, std::size_t j) noexcept { return i * (i - 1) / 2 + j; }
  std::pair<std::size_t, std::size_t> pair_of(std::size_t index) const;

  LieElement zero() const;
  /// a_{i+1}.
  LieElement generator(std::size_t i) const;
  /// e_ij = [a_i, a_j] with 0-based i > j.
  LieElement commutator(std::size_t i, std::size_t j) const;

  bool operator==(const AlgebraContext& o) const noexcept {
    return impl_ == o.impl_ || (p() == o.p() && r() == o.r());
  }

 private:
  struct Impl {
    Ring ring;
    std::size_t r;
    std::size_t t;
    ModulePresentation fitting;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Element of F_r: a linear part in k^r plus a Fitting part in normal form.
class LieElement {
 public:
  LieElement(const AlgebraContext& ctx, std::vector<Coeff> linear, const ModuleVector& fitting);

  const AlgebraContext& context() const noexcept { return ctx_; }
  const std::vector<Coeff>& linear() const noexcept { return linear_; }
  const ModuleVector& fitting() const noexcept { return fitting_; }
  bool is_zero() const noexcept;
  bool has_zero_linear_part() const noexcept;

  /// The linear form sum alpha_i x_i.
  Polynomial linear_form() const;

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator-() const;
  LieElement scaled(Coeff c) const;
  /// u.f for u in the Fitting radical; throws if the linear part is nonzero.
  LieElement act(const Polynomial& f) const;

  bool operator==(const LieElement& o) const noexcept {
    return ctx_ == o.ctx_ && linear_ == o.linear_ && fitting_ == o.fitting_;
  }

  /// Canonical text: linear terms, then left-normed brackets.
  std::string to_string() const;

 private:
  void check(const LieElement& o) const;

  AlgebraContext ctx_;
  std::vector<Coeff> linear_;
  ModuleVector fitting_;
};

LieElement bracket(const LieElement& u, const LieElement& v);

enum class FittingMode { Structural, FormulaL, FormulaLFr };

bool in_fitting(const LieElement& u, FittingMode mode);

/// Probe elements substituted for the universally quantified y in the
/// formula mode over the language without constants.
std::vector<LieElement> fitting_probe_set(const AlgebraContext& ctx);

/// True iff the linear parts are independent over GF(p). Throws
/// DimensionExceeded when more than r elements are given.
bool phi_eval(const std::vector<LieElement>& tuple);

/// Text of coeff * [[a_i, a_j], a_k1, ..., a_km] style terms for a
/// Fitting vector, using the given names for the free generators.
std::string format_fitting_terms(const ModuleVector& v, const std::vector<std::string>& names);

}  // namespace metalie
