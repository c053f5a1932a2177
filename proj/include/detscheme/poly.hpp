#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "detscheme/monomials.hpp"
#include "detscheme/prime_field.hpp"

namespace detscheme {

/// Homogeneous form of fixed degree over F_p, stored densely over the
/// degree-d MonomialBasis.
class HomogeneousPoly {
public:
  HomogeneousPoly(PrimeField field, int nvars, int degree);  // zero form

  static HomogeneousPoly constant(PrimeField field, int nvars, Coeff c);
  static HomogeneousPoly variable(PrimeField field, int nvars, int var);
  static HomogeneousPoly monomial(PrimeField field, std::span<const Exponent> e, Coeff c = 1);

  const PrimeField& field() const { return field_; }
  int nvars() const { return basis_->nvars(); }
  int degree() const { return basis_->degree(); }
  const MonomialBasis& basis() const { return *basis_; }

  std::span<const Coeff> coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t i) const { return coeffs_[i]; }
  void set_coeff(std::size_t i, Coeff c) { coeffs_[i] = c % field_.modulus(); }
  std::size_t term_count() const;
  bool is_zero() const;

  Coeff eval(std::span<const Coeff> point) const;

  HomogeneousPoly& operator+=(const HomogeneousPoly& o);
  HomogeneousPoly& operator-=(const HomogeneousPoly& o);
  HomogeneousPoly& scale(Coeff c);
  /// this += c * x * y, without materialising the product.
  void add_product(Coeff c, const HomogeneousPoly& x, const HomogeneousPoly& y);

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend HomogeneousPoly operator*(Coeff c, HomogeneousPoly a) { return a.scale(c); }

  bool operator==(const HomogeneousPoly& o) const {
    return field_ == o.field_ && nvars() == o.nvars() && degree() == o.degree() &&
           coeffs_ == o.coeffs_;
  }

  /// "3*x0^2*x1 + x2^3"; "0" for the zero form. Coefficients in [0, p).
  std::string to_string() const;

private:
  PrimeField field_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Coeff> coeffs_;
};

}  // namespace detscheme
