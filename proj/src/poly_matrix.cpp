#include "detscheme/poly_matrix.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "detscheme/combinatorics.hpp"
#include "detscheme/random.hpp"

namespace detscheme {

PolyMatrix::PolyMatrix(PrimeField field, int nvars, std::vector<int> row_degrees,
                       std::vector<int> col_degrees)
    : field_(field),
      nvars_(nvars),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(row_degrees_.size() * col_degrees_.size()) {
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      if (entry_degree(i, j) >= 0) entries_[i * cols() + j].emplace(field_, nvars_, entry_degree(i, j));
    }
  }
}

void PolyMatrix::set_entry(int i, int j, HomogeneousPoly p) {
  if (p.degree() != entry_degree(i, j) || p.nvars() != nvars_ || !(p.field() == field_)) {
    throw std::invalid_argument("set_entry: form does not match the degree pattern at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
  }
  entries_[i * cols() + j] = std::move(p);
}

std::vector<std::vector<Coeff>> PolyMatrix::eval(std::span<const Coeff> point) const {
  std::vector<std::vector<Coeff>> out(rows(), std::vector<Coeff>(cols(), 0));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (const auto& e = entry(i, j)) out[i][j] = e->eval(point);
  return out;
}

bool GradedIdeal::all_zero() const {
  for (const auto& g : generators)
    if (!g.is_zero()) return false;
  return true;
}

PolyMatrix random_phi(const DegreeData& d, const PrimeField& field, std::uint64_t seed) {
  if (auto why = standard_failure(d)) {
    throw HypothesisError("random_phi needs the standard condition: " + *why);
  }
  std::vector<int> rows(d.betas().begin(), d.betas().end());
  std::vector<int> cols(d.alphas().begin(), d.alphas().end());
  PolyMatrix m(field, d.nvars(), rows, cols);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.entry_degree(i, j) < 0) continue;
      HomogeneousPoly p(field, d.nvars(), m.entry_degree(i, j));
      for (std::size_t k = 0; k < p.basis().size(); ++k) {
        p.set_coeff(k, static_cast<Coeff>(uniform_below(rng, field.modulus())));
      }
      m.set_entry(i, j, std::move(p));
    }
  }
  return m;
}

namespace {

int minor_degree(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols) {
  int deg = 0;
  for (int j : cols) deg += m.col_degrees()[j];
  for (int i : rows) deg -= m.row_degrees()[i];
  return deg;
}

// acc += sign * x * y, creating acc on first use.
void accumulate(std::optional<HomogeneousPoly>& acc, const PolyMatrix& m, int degree, bool negative,
                const std::optional<HomogeneousPoly>& x, const std::optional<HomogeneousPoly>& y) {
  if (!x || !y) return;
  if (!acc) acc.emplace(m.field(), m.nvars(), degree);
  acc->add_product(negative ? m.field().modulus() - 1 : 1, *x, *y);
}

std::optional<HomogeneousPoly> zero_or_null(const PolyMatrix& m, int degree) {
  if (degree < 0) return std::nullopt;
  return HomogeneousPoly(m.field(), m.nvars(), degree);
}

std::vector<int> without(std::span<const int> xs, std::size_t skip) {
  std::vector<int> out;
  out.reserve(xs.size() - 1);
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (k != skip) out.push_back(xs[k]);
  return out;
}

}  // namespace

std::optional<HomogeneousPoly> det_first_row(const PolyMatrix& m, std::span<const int> rows,
                                             std::span<const int> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("determinant of a non-square block");
  const int deg = minor_degree(m, rows, cols);
  if (deg < 0) return std::nullopt;
  if (rows.empty()) return HomogeneousPoly::constant(m.field(), m.nvars(), 1);
  std::optional<HomogeneousPoly> acc;
  const auto sub_rows = without(rows, 0);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto sub_cols = without(cols, k);
    accumulate(acc, m, deg, k % 2 == 1, m.entry(rows[0], cols[k]),
               det_first_row(m, sub_rows, sub_cols));
  }
  return acc ? acc : zero_or_null(m, deg);
}

std::optional<HomogeneousPoly> det_last_column(const PolyMatrix& m, std::span<const int> rows,
                                               std::span<const int> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("determinant of a non-square block");
  const int deg = minor_degree(m, rows, cols);
  if (deg < 0) return std::nullopt;
  if (rows.empty()) return HomogeneousPoly::constant(m.field(), m.nvars(), 1);
  std::optional<HomogeneousPoly> acc;
  const std::size_t last = cols.size() - 1;
  const auto sub_cols = without(cols, last);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto sub_rows = without(rows, k);
    accumulate(acc, m, deg, (k + last) % 2 == 1, m.entry(rows[k], cols[last]),
               det_last_column(m, sub_rows, sub_cols));
  }
  return acc ? acc : zero_or_null(m, deg);
}

namespace {

class MinorMemo {
public:
  explicit MinorMemo(const PolyMatrix& m) : m_(m) {}

  // Determinant of rows [b - popcount(mask), b) against the columns in mask.
  const std::optional<HomogeneousPoly>& get(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int size = std::popcount(mask);
    const int first_row = m_.rows() - size;
    std::vector<int> rows, cols;
    for (int i = first_row; i < m_.rows(); ++i) rows.push_back(i);
    for (int j = 0; j < m_.cols(); ++j)
      if (mask >> j & 1u) cols.push_back(j);
    std::optional<HomogeneousPoly> result;
    const int deg = minor_degree(m_, rows, cols);
    if (size == 0) {
      result = HomogeneousPoly::constant(m_.field(), m_.nvars(), 1);
    } else if (deg >= 0) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const auto& sub = get(mask & ~(1u << cols[k]));
        accumulate(result, m_, deg, k % 2 == 1, m_.entry(first_row, cols[k]), sub);
      }
      if (!result) result = zero_or_null(m_, deg);
    }
    return memo_.emplace(mask, std::move(result)).first->second;
  }

private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint32_t, std::optional<HomogeneousPoly>> memo_;
};

}  // namespace

GradedIdeal maximal_minors(const PolyMatrix& m) {
  if (m.rows() > m.cols()) throw std::invalid_argument("maximal_minors needs b <= a");
  if (m.cols() > 31) throw std::invalid_argument("maximal_minors supports at most 31 columns");
  GradedIdeal ideal{m.field(), m.nvars(), {}, {}, {}};
  MinorMemo memo(m);
  std::vector<int> all_rows;
  for (int i = 0; i < m.rows(); ++i) all_rows.push_back(i);
  for_each_combination(m.cols(), m.rows(), [&](std::span<const int> cols) {
    std::uint32_t mask = 0;
    for (int j : cols) mask |= 1u << j;
    const int deg = minor_degree(m, all_rows, cols);
    const auto& minor = memo.get(mask);
    if (!minor) {
      throw HypothesisError("maximal minor on a column set has negative degree " +
                            std::to_string(deg));
    }
    ideal.generators.push_back(*minor);
    ideal.degrees.push_back(deg);
    ideal.column_sets.emplace_back(cols.begin(), cols.end());
  });
  return ideal;
}

}  // namespace detscheme
