#include "forestbetti/prime_field.hpp"

#include <string>

#include "forestbetti/error.hpp"

namespace forestbetti {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidField,
                "field characteristic must be a prime below 2^31, got " +
                    std::to_string(p));
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const noexcept {
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

}  // namespace forestbetti
