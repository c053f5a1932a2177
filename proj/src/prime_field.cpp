#include "detscheme/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace detscheme {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 1000 || p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be a prime with 1000 < p < 2^31, got " +
                                std::to_string(p));
  }
}

Coeff PrimeField::pow(Coeff x, std::uint64_t e) const {
  Coeff r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff x) const {
  if (x % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(x, p_ - 2);
}

}  // namespace detscheme
