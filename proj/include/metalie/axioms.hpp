#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metalie/equations.hpp"

namespace metalie {

enum class AxiomScheme { Phi1, Phi2, Phi3, Phi4, Phi5, Phi5p, Phi6, Phi7, Phi7p };

/// "Phi1" .. "Phi7", "Phi5'" and "Phi7'".
std::string scheme_name(AxiomScheme s);
/// Accepts the names above, case-insensitively, with "p" for the prime.
AxiomScheme parse_scheme(std::string_view text);

/// Status of the inconsistency hypothesis attached to Phi7 / Phi7' instances.
enum class HypothesisStatus {
  None,        // scheme has no hypothesis
  Certified,   // inconsistency proved
  Consistent,  // a solution or a localized witness exists; not an axiom
  Unknown,     // search bound reached without a verdict
};

std::string status_name(HypothesisStatus s);

struct AxiomInstance {
  AxiomScheme scheme = AxiomScheme::Phi1;
  /// Number of x variables: r + 1 for Phi4, n for Phi5 / Phi6 / Phi7.
  std::size_t arity = 0;
  /// Phi5 and Phi5'.
  std::optional<Polynomial> f;
  /// Phi6, a Lie word in x1..xn.
  std::optional<LieExpr> word;
  /// Phi7 and Phi7', a module system over Fit(F_n).
  std::optional<ModuleSystem> system;
  HypothesisStatus status = HypothesisStatus::None;

  /// The instantiated sentence.
  std::string to_string() const;
};

enum class CheckMethod { Structural, Decided, Bounded };

std::string method_name(CheckMethod m);

struct CheckResult {
  bool holds = false;
  CheckMethod method = CheckMethod::Structural;
  /// Counterexample or supporting data, empty when there is nothing to show.
  std::string witness;
};

/// Truth of the instance in B = F_n + M. Throws ConfigurationError on a
/// malformed instance.
CheckResult check_instance(const AxiomInstance& inst, const ExtensionAlgebra& b);

/// Multiplies every equation by d = alpha_1 ... alpha_l and divides the
/// coefficient of y_i by alpha_i. Each alpha_i must have a nonzero constant
/// term and divide f; f must have a nonzero constant term.
ModuleSystem s_f_alpha(const ModuleSystem& s, const Polynomial& f, const std::vector<Polynomial>& alpha);

struct DeltaSystem {
  ModuleSystem system;
  Polynomial f;
  std::vector<Polynomial> alpha;
};

/// Divisors of f with constant term 1 and degree <= bound, ascending by
/// degree. f must have a nonzero constant term.
std::vector<Polynomial> unitary_divisors(const Polynomial& f, unsigned degree_bound, std::size_t cap);

struct DeltaResult {
  /// Set when a transform S_{f,alpha} solvable over Fit(B) was found.
  std::optional<DeltaSystem> witness;
  unsigned bound = 0;
};

/// Searches f of degree <= bound with constant term 1 in increasing degree.
/// Never reports inconsistency.
DeltaResult delta_consistency_semidecide(const ModuleSystem& s, const ExtensionAlgebra& b, unsigned degree_bound,
                                         std::size_t cap = 1u << 20);

/// Sound test for inconsistency over the localized Fitting radical of
/// F_n: the reduction of the system modulo <x1..xn> has no solution.
bool delta_inconsistency_certified(const ModuleSystem& s, const AlgebraContext& ctx);

/// Rewrites a system over Fit(F_k), k <= B.n(), as a system over Fit(B).
ModuleSystem lift_system(const ModuleSystem& s, const ExtensionAlgebra& b);

enum class Language { L, LFr };

Language parse_language(std::string_view text);
std::string language_name(Language l);

struct Classification {
  bool member = false;
  /// Members: the embedding into F_{n,s}.
  std::optional<ExtensionEmbedding> certificate;
  /// Non-members: the violated instance, when the failure is one.
  std::optional<AxiomInstance> violated;
  /// Non-members: the counterexample (tuple or torsion pair).
  std::string witness;
  /// Torsion pairs (m, f) with m != 0 and m.f = 0.
  std::optional<TorsionWitness> torsion;
  std::string reason;
};

/// Membership of B in the universal closure of F_r, in the language
/// without constants (L) or with constants for F_r (LFr).
Classification classify_ucl(const ExtensionAlgebra& b, Language language, std::size_t r);

/// All instances of the scheme over k[x1..xr] up to the size bound, in a
/// fixed order. Polynomials have degree <= bound, Lie words bracket length
/// <= bound, module systems one equation in one unknown with coefficient
/// of degree <= bound and right-hand side a monomial multiple of some
/// e_ij. Phi7' keeps only systems inconsistent over Fit(F_r). Throws
/// ResourceError past cap.
std::vector<AxiomInstance> enumerate_axioms(AxiomScheme scheme, unsigned bound, const AlgebraContext& ctx,
                                            std::size_t cap = 1u << 20);

}  // namespace metalie
