#include "detscheme/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace detscheme {

RowEchelon::RowEchelon(PrimeField field, std::size_t ncols, std::optional<std::size_t> pivot_cols)
    : field_(field),
      ncols_(ncols),
      pivot_cols_(pivot_cols.value_or(ncols)),
      pivot_row_(ncols, -1) {
  const std::uint64_t sq = static_cast<std::uint64_t>(field.modulus() - 1) * (field.modulus() - 1);
  lazy_budget_ = static_cast<std::size_t>(UINT64_MAX / sq - 1);
}

std::optional<std::size_t> RowEchelon::row_with_pivot(std::size_t col) const {
  if (col >= ncols_ || pivot_row_[col] < 0) return std::nullopt;
  return static_cast<std::size_t>(pivot_row_[col]);
}

void RowEchelon::reduce(Row& row) const {
  if (row.size() != ncols_) throw std::invalid_argument("RowEchelon: row length mismatch");
  const std::uint32_t p = field_.modulus();
  // The basis is fully reduced, so the multiplier for each basis row is just
  // the incoming entry at its pivot; all updates can be accumulated lazily.
  std::vector<std::uint64_t> acc(row.begin(), row.end());
  std::size_t pending = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Coeff f = row[pivots_[k]];
    if (!f) continue;
    const std::uint64_t m = p - f;
    const Coeff* r = rows_[k].data();
    for (std::size_t c = pivots_[k]; c < ncols_; ++c) acc[c] += m * r[c];
    if (++pending == lazy_budget_) {
      for (auto& x : acc) x %= p;
      pending = 0;
    }
  }
  for (std::size_t c = 0; c < ncols_; ++c) row[c] = static_cast<Coeff>(acc[c] % p);
}

bool RowEchelon::insert(Row& row) {
  reduce(row);
  std::size_t lead = 0;
  while (lead < pivot_cols_ && row[lead] == 0) ++lead;
  if (lead == pivot_cols_) return false;

  const Coeff inv = field_.inv(row[lead]);
  for (std::size_t c = lead; c < ncols_; ++c) row[c] = field_.mul(row[c], inv);
  for (auto& r : rows_) {
    const Coeff f = r[lead];
    if (!f) continue;
    for (std::size_t c = lead; c < ncols_; ++c) {
      if (row[c]) r[c] = field_.sub(r[c], field_.mul(f, row[c]));
    }
  }
  pivot_row_[lead] = static_cast<long>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(row));
  row.assign(ncols_, 0);
  return true;
}

std::size_t rank(PrimeField field, std::vector<Row> rows, std::size_t ncols) {
  RowEchelon e(field, ncols);
  for (auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<Row> left_kernel(PrimeField field, const std::vector<Row>& rows, std::size_t ncols) {
  const std::size_t n = rows.size();
  RowEchelon e(field, ncols + n, ncols);
  std::vector<Row> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    Row aug(ncols + n, 0);
    std::copy(rows[i].begin(), rows[i].end(), aug.begin());
    aug[ncols + i] = 1;
    if (!e.insert(aug)) kernel.emplace_back(aug.begin() + static_cast<long>(ncols), aug.end());
  }
  return kernel;
}

Coeff determinant(PrimeField field, std::vector<Row> m) {
  const std::size_t n = m.size();
  Coeff det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = field.neg(det);
    }
    det = field.mul(det, m[col][col]);
    const Coeff inv = field.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Coeff f = field.mul(m[r][col], inv);
      if (!f) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] = field.sub(m[r][c], field.mul(f, m[col][c]));
    }
  }
  return det;
}

}  // namespace detscheme
