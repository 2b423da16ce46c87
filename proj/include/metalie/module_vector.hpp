#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "metalie/polynomial.hpp"

namespace metalie {

/// Element of the free module R^width, stored sparsely by component.
///
/// Module monomials are ordered position-over-term: a smaller component
/// index always dominates, and inside one component the polynomial order
/// decides. The leading term is therefore the leading term of the first
/// nonzero component.
class ModuleVector {
 public:
  using Entry = std::pair<std::size_t, Polynomial>;

  ModuleVector(const Ring& ring, std::size_t width) : ring_(ring), width_(width) {}

  static ModuleVector unit(const Ring& ring, std::size_t width, std::size_t index);
  static ModuleVector from_dense(const Ring& ring, const std::vector<Polynomial>& components);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t width() const noexcept { return width_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  Polynomial component(std::size_t i) const;
  void set(std::size_t i, Polynomial value);
  std::vector<Polynomial> dense() const;

  std::size_t lead_index() const { return entries_.front().first; }
  const Term& lead_term() const { return entries_.front().second.lead(); }
  /// Highest total degree over all components; -1 for zero.
  int degree() const noexcept;

  ModuleVector operator-() const;
  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector& operator+=(const ModuleVector& o) { return *this = *this + o; }
  ModuleVector& operator-=(const ModuleVector& o) { return *this = *this - o; }
  ModuleVector operator*(const Polynomial& f) const;
  ModuleVector scaled(Coeff c) const;
  /// this - c*m*o.
  ModuleVector sub_mul_term(const ModuleVector& o, const Monomial& m, Coeff c) const;
  ModuleVector monic() const;
  void drop_lead_term();

  /// Components [begin, end) as a vector of width end - begin.
  ModuleVector slice(std::size_t begin, std::size_t end) const;
  /// The same vector placed at offset inside R^new_width.
  ModuleVector shifted(std::size_t offset, std::size_t new_width) const;

  bool operator==(const ModuleVector& o) const {
    return ring_ == o.ring_ && width_ == o.width_ && entries_ == o.entries_;
  }

  /// "(c0; c1; ...)" with every component written out.
  std::string to_string() const;

 private:
  void check(const ModuleVector& o) const;

  Ring ring_;
  std::size_t width_;
  std::vector<Entry> entries_;
};

/// Compares leading terms of two nonzero vectors in the module order.
int compare_leads(const ModuleVector& a, const ModuleVector& b);

/// Vectors of width lhs.width() + rhs.width() holding both blocks.
ModuleVector concat(const ModuleVector& lhs, const ModuleVector& rhs);

}  // namespace metalie
