#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detscheme/prime_field.hpp"

namespace detscheme {

using Row = std::vector<Coeff>;

/// Incrementally built reduced row echelon form over F_p. Only the first
/// `pivot_cols` columns may carry pivots; trailing columns ride along, which
/// is how left kernels are tracked.
class RowEchelon {
public:
  RowEchelon(PrimeField field, std::size_t ncols, std::optional<std::size_t> pivot_cols = {});

  /// Reduces `row` in place. If something survives in the pivot columns the
  /// row joins the basis (normalised, moved from) and true is returned;
  /// otherwise `row` holds the remainder and false is returned.
  bool insert(Row& row);

  /// row <- row minus its projection onto the span, in place.
  void reduce(Row& row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const PrimeField& field() const { return field_; }
  const Row& row(std::size_t k) const { return rows_[k]; }
  std::size_t pivot(std::size_t k) const { return pivots_[k]; }
  /// Row index whose pivot is `col`, if any.
  std::optional<std::size_t> row_with_pivot(std::size_t col) const;

private:
  PrimeField field_;
  std::size_t ncols_;
  std::size_t pivot_cols_;
  std::size_t lazy_budget_;  // additions of (p-1)^2 that fit in uint64
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // column -> row or -1
};

std::size_t rank(PrimeField field, std::vector<Row> rows, std::size_t ncols);

/// A basis of {lambda : lambda^T M = 0} for M given by rows.
std::vector<Row> left_kernel(PrimeField field, const std::vector<Row>& rows, std::size_t ncols);

Coeff determinant(PrimeField field, std::vector<Row> square);

}  // namespace detscheme
