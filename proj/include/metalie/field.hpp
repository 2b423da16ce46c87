#pragma once

#include <cstdint>

namespace metalie {

using Coeff = std::uint32_t;

/// Prime field GF(p). Scalars are kept as representatives in [0, p).
class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(m < 0 ? m + p_ : m);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  /// Throws ConfigurationError on zero.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace metalie
