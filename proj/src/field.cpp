#include "metalie/field.hpp"

#include <string>

#include "metalie/error.hpp"

namespace metalie {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw ConfigurationError("field characteristic " + std::to_string(p) + " is not prime");
}

Coeff Field::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff Field::inv(Coeff a) const {
  if (a % p_ == 0) throw ConfigurationError("inverse of zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

}  // namespace metalie
