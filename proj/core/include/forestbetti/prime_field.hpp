#pragma once

#include <cstdint>

namespace forestbetti {

// Arithmetic in GF(p) on canonical residues 0..p-1.
class PrimeField {
 public:
  // Throws kInvalidField unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    const auto r = x % p;
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    return a == 0 ? 0 : p_ - a;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  // a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const noexcept;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace forestbetti
