#pragma once

#include <vector>

#include "detscheme/dimension_formula.hpp"

namespace detscheme {

// Summand bookkeeping for the s-th tail term E_s = wedge^{b+s+1} A (x) S^s B^* (beta)
// of the Buchsbaum-Rim resolution of the cokernel sheaf C = coker(A -> B).
// h^0(E_s(t)) = sum over offsets o of C(o + t, n).
struct ResolutionTerm {
  int s = 0;
  long long rank = 0;                   // number of line-bundle summands
  std::vector<long long> degree_offsets;  // n - ell + (a-b-s-1 alphas) + (s betas)
};

/// Requires validate_standard(d) and 0 <= s <= c - 2.
ResolutionTerm resolution_term(const DegreeData& d, int s);

BigInt h0_term(const DegreeData& d, int s, long long t);

/// f(t) = h^0(C(t)), from the resolution. Requires c >= 2.
BigInt cokernel_f(const DegreeData& d, long long t);

/// Every binomial in f(t) has a top below n for t < this value, so f vanishes there.
long long cokernel_vanishing_threshold(const DegreeData& d);

/// h^0(F) = sum_j f(alpha_j) - sum_i f(beta_i) + 1. Requires c >= 2 and dim_x >= 2.
BigInt h0_F(const DegreeData& d);

}  // namespace detscheme
