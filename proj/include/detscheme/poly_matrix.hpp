#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "detscheme/degree_data.hpp"
#include "detscheme/poly.hpp"

namespace detscheme {

/// b x a matrix of forms representing phi: A -> B. Entry (i, j) has degree
/// alpha_j - beta_i; entries with negative degree are structurally zero and
/// stored as nullopt.
class PolyMatrix {
public:
  PolyMatrix(PrimeField field, int nvars, std::vector<int> row_degrees,
             std::vector<int> col_degrees);

  int rows() const { return static_cast<int>(row_degrees_.size()); }
  int cols() const { return static_cast<int>(col_degrees_.size()); }
  int nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  std::span<const int> row_degrees() const { return row_degrees_; }  // betas
  std::span<const int> col_degrees() const { return col_degrees_; }  // alphas
  int entry_degree(int i, int j) const { return col_degrees_[j] - row_degrees_[i]; }

  const std::optional<HomogeneousPoly>& entry(int i, int j) const { return entries_[i * cols() + j]; }
  /// Throws if the form's degree does not match the pattern.
  void set_entry(int i, int j, HomogeneousPoly p);

  /// Value matrix at a point of F_p^{nvars}; structural zeros evaluate to 0.
  std::vector<std::vector<Coeff>> eval(std::span<const Coeff> point) const;

private:
  PrimeField field_;
  int nvars_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<std::optional<HomogeneousPoly>> entries_;
};

/// Ideal of maximal minors; generator k is the minor on column_sets[k], which
/// are listed in lexicographic order. Zero minors are kept.
struct GradedIdeal {
  PrimeField field;
  int nvars = 0;
  std::vector<HomogeneousPoly> generators;
  std::vector<int> degrees;
  std::vector<std::vector<int>> column_sets;

  std::size_t size() const { return generators.size(); }
  bool all_zero() const;
};

/// Uniform random coefficients for every entry of nonnegative degree.
/// Deterministic in (d, field, seed).
PolyMatrix random_phi(const DegreeData& d, const PrimeField& field, std::uint64_t seed);

/// All C(a, b) maximal minors by cofactor expansion along the first row,
/// memoised over column subsets of the lower rows.
GradedIdeal maximal_minors(const PolyMatrix& m);

/// Determinant of the square submatrix on (rows, cols) by expansion along the
/// first listed row / last listed column. nullopt means structurally zero
/// (its degree would be negative).
std::optional<HomogeneousPoly> det_first_row(const PolyMatrix& m, std::span<const int> rows,
                                             std::span<const int> cols);
std::optional<HomogeneousPoly> det_last_column(const PolyMatrix& m, std::span<const int> rows,
                                               std::span<const int> cols);

}  // namespace detscheme
