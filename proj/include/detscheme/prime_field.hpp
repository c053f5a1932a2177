#pragma once

#include <cstdint>

namespace detscheme {

using Coeff = std::uint32_t;

/// Arithmetic in F_p for an odd prime 1000 < p < 2^31.
class PrimeField {
public:
  static constexpr std::uint32_t kDefaultPrime = 32003;
  static constexpr std::uint32_t kSecondPrime = 65537;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Coeff add(Coeff x, Coeff y) const {
    std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff x, Coeff y) const { return x >= y ? x - y : x + p_ - y; }
  Coeff neg(Coeff x) const { return x == 0 ? 0 : p_ - x; }
  Coeff mul(Coeff x, Coeff y) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(x) * y % p_);
  }
  Coeff pow(Coeff x, std::uint64_t e) const;
  Coeff inv(Coeff x) const;  // throws std::domain_error on zero
  Coeff reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  bool operator==(const PrimeField&) const = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

}  // namespace detscheme
