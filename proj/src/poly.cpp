#include "detscheme/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace detscheme {

namespace {

void require_same_shape(const HomogeneousPoly& a, const HomogeneousPoly& b, const char* op) {
  if (!(a.field() == b.field())) throw std::invalid_argument(std::string(op) + ": field mismatch");
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument(std::string(op) + ": variable count mismatch");
  }
}

}  // namespace

HomogeneousPoly::HomogeneousPoly(PrimeField field, int nvars, int degree)
    : field_(field), basis_(MonomialBasis::get(nvars, degree)), coeffs_(basis_->size(), 0) {}

HomogeneousPoly HomogeneousPoly::constant(PrimeField field, int nvars, Coeff c) {
  HomogeneousPoly p(field, nvars, 0);
  p.set_coeff(0, c);
  return p;
}

HomogeneousPoly HomogeneousPoly::variable(PrimeField field, int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[var] = 1;
  return monomial(field, e);
}

HomogeneousPoly HomogeneousPoly::monomial(PrimeField field, std::span<const Exponent> e, Coeff c) {
  int deg = 0;
  for (auto x : e) deg += x;
  HomogeneousPoly p(field, static_cast<int>(e.size()), deg);
  p.set_coeff(p.basis_->index_of(e), c);
  return p;
}

std::size_t HomogeneousPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                [](Coeff c) { return c != 0; }));
}

bool HomogeneousPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

Coeff HomogeneousPoly::eval(std::span<const Coeff> point) const {
  if (static_cast<int>(point.size()) != nvars()) {
    throw std::invalid_argument("eval: point has wrong number of coordinates");
  }
  Coeff total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    Coeff term = coeffs_[i];
    auto e = basis_->exponent(i);
    for (int v = 0; v < nvars(); ++v) {
      if (e[v]) term = field_.mul(term, field_.pow(point[v] % field_.modulus(), e[v]));
    }
    total = field_.add(total, term);
  }
  return total;
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& o) {
  require_same_shape(*this, o, "poly_add");
  if (degree() != o.degree()) throw std::invalid_argument("poly_add: degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& o) {
  require_same_shape(*this, o, "poly_sub");
  if (degree() != o.degree()) throw std::invalid_argument("poly_sub: degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::scale(Coeff c) {
  c %= field_.modulus();
  for (auto& x : coeffs_) x = field_.mul(x, c);
  return *this;
}

void HomogeneousPoly::add_product(Coeff c, const HomogeneousPoly& x, const HomogeneousPoly& y) {
  require_same_shape(x, y, "poly_mul");
  require_same_shape(*this, x, "poly_mul");
  if (x.degree() + y.degree() != degree()) throw std::invalid_argument("poly_mul: degree mismatch");
  c %= field_.modulus();
  if (c == 0) return;
  auto table = product_table(nvars(), x.degree(), y.degree());
  const std::size_t ny = y.coeffs_.size();
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (!x.coeffs_[i]) continue;
    const Coeff ci = field_.mul(c, x.coeffs_[i]);
    const std::uint32_t* row = table->data() + i * ny;
    for (std::size_t j = 0; j < ny; ++j) {
      if (!y.coeffs_[j]) continue;
      auto& slot = coeffs_[row[j]];
      slot = field_.add(slot, field_.mul(ci, y.coeffs_[j]));
    }
  }
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  require_same_shape(a, b, "poly_mul");
  HomogeneousPoly r(a.field(), a.nvars(), a.degree() + b.degree());
  r.add_product(1, a, b);
  return r;
}

std::string HomogeneousPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    auto e = basis_->exponent(i);
    for (int v = 0; v < nvars(); ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += std::to_string(coeffs_[i]);
    } else if (coeffs_[i] == 1) {
      out += mono;
    } else {
      out += std::to_string(coeffs_[i]) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detscheme
