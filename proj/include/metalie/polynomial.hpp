#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metalie/field.hpp"

namespace metalie {

inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector. Unused trailing variables carry exponent zero, so
/// comparisons never need the variable count.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::size_t i, std::uint16_t e = 1);

  std::uint16_t operator[](std::size_t i) const noexcept { return exp_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  /// Precondition: divisor.divides(*this).
  Monomial divide(const Monomial& divisor) const noexcept;
  Monomial lcm(const Monomial& o) const noexcept;
  /// Highest variable index with a nonzero exponent plus one.
  std::size_t support_end() const noexcept;

  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

/// Degree reverse lexicographic comparison with x1 > x2 > ... .
/// Returns a negative value, zero or a positive value.
int compare(const Monomial& a, const Monomial& b) noexcept;

/// k[x1..xn] over GF(p).
class Ring {
 public:
  Ring(std::uint32_t p, std::size_t nvars);

  const Field& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return nvars_; }

  bool operator==(const Ring&) const = default;

 private:
  Field field_;
  std::size_t nvars_;
};

struct Term {
  Monomial mono;
  Coeff coeff;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial; terms are kept in strictly descending monomial order
/// with nonzero coefficients.
class Polynomial {
 public:
  explicit Polynomial(const Ring& ring) : ring_(ring) {}

  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, std::size_t i);
  static Polynomial monomial(const Ring& ring, const Monomial& m, Coeff c = 1);
  /// Accepts terms in any order, with duplicates and zeros.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  Coeff constant_term() const noexcept;
  bool is_constant() const noexcept;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// this - c*m*o, fused.
  Polynomial sub_mul_term(const Polynomial& o, const Monomial& m, Coeff c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  Coeff evaluate(std::span<const Coeff> point) const;
  /// Replaces x_i by images[i]; all images share the target ring.
  Polynomial substitute(std::span<const Polynomial> images, const Ring& target) const;

  bool operator==(const Polynomial& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Multivariate division by a single polynomial using leading terms.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Grammar: sums of products of integers, x<i>, powers and parenthesised
/// subexpressions. Variables outside 1..nvars are rejected.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

std::string format_monomial(const Monomial& m);

/// All monomials in nvars variables with degree <= bound, descending.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound);
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Every polynomial supported on the given monomials (including zero),
/// in a fixed counting order. Throws ResourceError past cap.
std::vector<Polynomial> enumerate_polynomials(const Ring& ring, const std::vector<Monomial>& support,
                                              std::size_t cap);

}  // namespace metalie
