#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metalie/module_vector.hpp"

namespace metalie {

/// Reduced Gröbner basis of a submodule of R^width under the
/// position-over-term degrevlex order.
class GroebnerBasis {
 public:
  /// Basis of the zero submodule.
  GroebnerBasis(const Ring& ring, std::size_t width) : ring_(ring), width_(width) {}

  static GroebnerBasis compute(const Ring& ring, std::size_t width, const std::vector<ModuleVector>& generators);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t width() const noexcept { return width_; }
  /// Monic, interreduced, sorted by descending leading term.
  const std::vector<ModuleVector>& elements() const noexcept { return elements_; }
  bool is_zero_module() const noexcept { return elements_.empty(); }

  /// Unique fully reduced remainder.
  ModuleVector reduce(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return reduce(v).is_zero(); }
  /// Module monomial (index, m) is standard if no leading term divides it.
  bool is_standard(std::size_t index, const Monomial& m) const;
  /// True when every element is homogeneous in the polynomial grading.
  bool homogeneous() const;

  bool operator==(const GroebnerBasis& o) const {
    return ring_ == o.ring_ && width_ == o.width_ && elements_ == o.elements_;
  }

 private:
  static std::vector<ModuleVector> buchberger(std::size_t width, std::vector<ModuleVector> gens);
  static std::vector<ModuleVector> make_reduced(std::vector<ModuleVector> basis);

  Ring ring_;
  std::size_t width_;
  std::vector<ModuleVector> elements_;
};

/// Convenience wrapper returning the reduced basis as a list.
std::vector<ModuleVector> groebner(const std::vector<ModuleVector>& rows);

struct ReduceResult {
  ModuleVector normal_form;
  bool member;
};
ReduceResult reduce(const ModuleVector& v, const GroebnerBasis& gb);

/// Writes targets as R-combinations of fixed generators modulo a fixed
/// relation submodule, and produces the syzygies of that situation.
class Lifter {
 public:
  Lifter(const Ring& ring, std::size_t width, std::vector<ModuleVector> generators,
         std::vector<ModuleVector> relations = {});

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<ModuleVector>& generators() const noexcept { return generators_; }

  /// Coefficients c with sum c_i g_i - target in the relations, if any exist.
  std::optional<std::vector<Polynomial>> lift(const ModuleVector& target) const;
  bool in_span(const ModuleVector& target) const;
  /// Generators of {c : sum c_i g_i lies in the relations}, as vectors of
  /// width generator_count().
  std::vector<ModuleVector> syzygies() const;
  /// Basis of the span of the generators plus the relations.
  GroebnerBasis span_basis() const;

 private:
  Ring ring_;
  std::size_t width_;
  std::vector<ModuleVector> generators_;
  std::vector<ModuleVector> relations_;
  GroebnerBasis augmented_;
};

}  // namespace metalie
