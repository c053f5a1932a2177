#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detscheme/degree_data.hpp"

namespace detscheme {

using BigInt = boost::multiprecision::cpp_int;

/// C(top, n) read as the dimension of degree (top - n) forms in n + 1
/// variables: zero whenever top < n, negative tops included. n < 0 throws.
BigInt binomial_dim(long long top, long long n);

/// Shorthand for the number of degree-t forms on P^n, i.e. binomial_dim(t + n, n).
inline BigInt forms_dim(long long t, int n) { return binomial_dim(t + n, n); }

BigInt lambda_c(const DegreeData& d);

struct EllH {
  long long ell = 0;  // ell_i
  long long h = 0;    // h_{i-3}
  bool operator==(const EllH&) const = default;
};

/// (ell_i, h_{i-3}) for i = 3..c; empty when c <= 2.
std::vector<EllH> ell_h_sequences(const DegreeData& d);

/// K_3 .. K_c, evaluated literally as alternating sums over alpha-subsets and
/// beta-multisets. Empty when c <= 2.
std::vector<BigInt> k_terms(const DegreeData& d);

struct DimensionReport {
  BigInt lambda_c;
  std::vector<BigInt> k_terms;
  BigInt dim_y;
  std::optional<BigInt> corollary_value;
  long long canonical_h = 0;  // coefficient of H: ell - n - 1
  long long canonical_p = 0;  // coefficient of P: a - b

  bool operator==(const DimensionReport&) const = default;
};

/// Requires validate_standard(d); throws HypothesisError otherwise.
DimensionReport dim_y(const DegreeData& d);

/// a*b*C(n+d, n) - a^2 - b^2 + 1. Throws HypothesisError unless a >= b + 1,
/// d >= 1 and n + b - a - 1 >= 2.
BigInt corollary_homogeneous(int n, int a, int b, int d);

}  // namespace detscheme
