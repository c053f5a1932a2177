#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace detscheme {

using Exponent = std::uint16_t;

/// All monomials of a fixed degree in nvars variables, in lex order with
/// x0 > x1 > ... (so x0^d has index 0). Instances are shared and immutable.
class MonomialBasis {
public:
  static std::shared_ptr<const MonomialBasis> get(int nvars, int degree);

  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return size_; }

  std::span<const Exponent> exponent(std::size_t i) const {
    return {exps_.data() + i * nvars_, static_cast<std::size_t>(nvars_)};
  }

  /// Position of an exponent vector of this degree; computed, not looked up.
  std::size_t index_of(std::span<const Exponent> e) const;

private:
  int nvars_;
  int degree_;
  std::size_t size_;
  std::vector<Exponent> exps_;
};

/// Number of monomials of degree `degree` in `nvars` variables (0 if degree < 0).
std::size_t monomial_count(int nvars, int degree);

/// table[i * size(d2) + j] = index in degree d1+d2 of (monomial i of degree d1)
/// times (monomial j of degree d2). Cached per (nvars, d1, d2).
std::shared_ptr<const std::vector<std::uint32_t>> product_table(int nvars, int d1, int d2);

}  // namespace detscheme
