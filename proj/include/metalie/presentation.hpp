#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metalie/groebner.hpp"
#include "metalie/matrix.hpp"

namespace metalie {

/// Finitely presented module R^n / <relation rows>.
class ModulePresentation {
 public:
  ModulePresentation(const Ring& ring, std::size_t generators, std::vector<ModuleVector> relations = {});

  static ModulePresentation free(const Ring& ring, std::size_t s) { return ModulePresentation(ring, s); }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t generators() const noexcept { return n_; }
  const std::vector<ModuleVector>& relations() const noexcept { return relations_; }

  /// Gröbner basis of the relation submodule, computed on first use.
  const GroebnerBasis& basis() const;
  /// Rank over the fraction field, computed on first use.
  std::size_t rank() const;

  PolyMatrix relation_matrix() const;
  ModuleVector normal_form(const ModuleVector& v) const { return basis().reduce(v); }
  bool is_zero_element(const ModuleVector& v) const { return basis().contains(v); }
  bool is_zero_module() const;
  ModuleVector generator(std::size_t i) const { return ModuleVector::unit(ring_, n_, i); }

  ModulePresentation direct_sum(const ModulePresentation& o) const;
  ModulePresentation with_relations(const std::vector<ModuleVector>& extra) const;

  /// Text in the module file format.
  std::string to_string() const;

 private:
  struct Cache;

  Ring ring_;
  std::size_t n_;
  std::vector<ModuleVector> relations_;
  std::shared_ptr<Cache> cache_;
};

std::size_t rank(const ModulePresentation& m);

/// {v : h v in N} for a submodule N given by its basis.
GroebnerBasis module_quotient(const GroebnerBasis& n, const Polynomial& h);
/// N : h^infinity.
GroebnerBasis saturation(const GroebnerBasis& n, const Polynomial& h);

/// The pivot minor used for torsion computations.
MinorSelection torsion_minor(const ModulePresentation& m);

/// Presentation of M / T(M): same generators, relations generating the
/// preimage of the torsion submodule in R^n.
ModulePresentation torsion_submodule(const ModulePresentation& m);
/// Same computation with a caller-chosen nonzero maximal minor.
ModulePresentation torsion_submodule(const ModulePresentation& m, const Polynomial& minor);

bool is_torsion_free(const ModulePresentation& m);

/// A nonzero element killed by a nonzero polynomial.
struct TorsionWitness {
  ModuleVector element;
  Polynomial annihilator;
};
std::optional<TorsionWitness> torsion_witness(const ModulePresentation& m);

struct FreeEmbedding {
  std::size_t s = 0;
  /// Image of each generator in R^s.
  std::vector<ModuleVector> images;
};
/// Injective map M -> R^rank(M). Throws TorsionInput on torsion.
FreeEmbedding embed_into_free(const ModulePresentation& m);

/// Kernel of R^n -> R^s, e_j -> images[j], as a generating set.
std::vector<ModuleVector> map_kernel(const Ring& ring, std::size_t n, const std::vector<ModuleVector>& images,
                                     std::size_t s);

/// Normal forms of all elements with component degrees <= bound, each once.
std::vector<ModuleVector> enumerate_module_elements(const ModulePresentation& m, unsigned degree_bound,
                                                    std::size_t cap);

/// Module file format: a header "p r n" then one relation per line with
/// ';'-separated components. Blank lines and '#' comments are ignored.
ModulePresentation parse_presentation(std::string_view text);
/// Parses the body (relation lines) for an already known ring and width.
ModulePresentation parse_relations(std::string_view text, const Ring& ring, std::size_t n);

}  // namespace metalie
