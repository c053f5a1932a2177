#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "detscheme/degree_data.hpp"
#include "detscheme/poly_matrix.hpp"

namespace detscheme {

/// dim_k (S/I)_t, by exact rank of the degree-t Macaulay matrix. 0 for t < 0.
long long hilbert_function(const GradedIdeal& ideal, int t);

struct HilbertFit {
  int window_start = 0;
  std::vector<long long> values;  // HF(window_start + k), k = 0..expected_dim+2
  std::vector<long long> newton;  // forward differences at window_start, k = 0..expected_dim
  int fitted_dim = -1;            // -1 for the zero polynomial
  long long fitted_degree = 0;

  /// p(t) = sum_k newton[k] * C(t - window_start, k).
  long long eval(long long t) const;
};

/// Interpolates HF on expected_dim + 1 consecutive degrees starting at
/// window_start and checks the next two degrees against the interpolant.
/// Throws StabilizationError when the check fails.
HilbertFit fit_hilbert_polynomial(const GradedIdeal& ideal, int expected_dim, int window_start);

/// dim Hom(I, S/I)_0 using the syzygy relations of internal degree <= bound.
/// Entry D of the returned vector is the count after imposing degrees <= D
/// (entries below the smallest generator degree repeat the unconstrained count).
std::vector<long long> tangent_space_profile(const GradedIdeal& ideal, int max_bound);

/// Profile value at `bound`; throws StabilizationError if bound + 1 differs.
long long tangent_space_dim(const GradedIdeal& ideal, int bound);

/// dim of {(u, v) in End(A) x End(B) : phi u = v phi}, over F_p.
long long stabilizer_lie_dim(const PolyMatrix& m);

/// dim W - dim End(A) - dim End(B) + stabilizer, all counted on graded pieces.
long long orbit_space_dim(const PolyMatrix& m);

struct GroupCounts {
  long long hom_ab = 0;  // dim W = Hom(A, B)
  long long hom_ba = 0;
  long long end_a = 0;
  long long end_b = 0;
};
GroupCounts group_counts(int nvars, std::span<const int> alphas, std::span<const int> betas);

/// Highest first-syzygy degree in the Eagon-Northcott resolution of the
/// maximal minors (the top generator degree when c = 1); never below
/// max generator degree + 1.
int default_syzygy_bound(const DegreeData& d);

/// max(0, reg(S/I) - dim X) with reg read off the Eagon-Northcott resolution.
int default_hf_window(const DegreeData& d);

struct VerifyConfig {
  std::uint32_t prime = 32003;
  std::uint64_t seed = 1;
  std::optional<int> bound;
  std::optional<int> window;
  int max_attempts = 10;
};

struct VerificationMatches {
  bool codim = false;            // fitted_dim == n - c
  bool orbit = false;            // orbit_space_dim == formula
  bool tangent = false;          // tangent_dim == formula
  bool tangent_at_least = false; // tangent_dim >= formula
  bool asserted_orbit = false;   // whether orbit equality is a theorem here
  bool asserted_tangent = false; // whether tangent equality is a theorem here
  bool asserted_tangent_at_least = false;

  bool all_asserted_hold() const {
    return codim && (!asserted_orbit || orbit) && (!asserted_tangent || tangent) &&
           (!asserted_tangent_at_least || tangent_at_least);
  }
  bool operator==(const VerificationMatches&) const = default;
};

struct VerificationRecord {
  DegreeData data;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;      // seed the accepted sample came from
  int attempts = 0;            // samples drawn, including the accepted one
  std::vector<std::pair<int, long long>> hf_table;
  std::vector<long long> hilbert_newton;
  int fitted_dim = 0;
  long long fitted_degree = 0;
  long long tangent_dim = 0;
  long long tangent_dim_next = 0;  // with bound + 1
  long long stab_dim = 0;
  long long orbit_space_dim = 0;
  long long formula_dim = 0;
  int syzygy_bound = 0;
  int hf_window_start = 0;
  int hf_window_end = 0;

  /// Recomputed from the stored numbers on every call.
  VerificationMatches matches() const;
  bool operator==(const VerificationRecord&) const = default;
};

/// random_phi -> maximal_minors -> every oracle. Degenerate samples (all
/// minors zero, fitted dimension != n - c) are redrawn with seed+1, ...
/// Throws ResamplingExhausted or StabilizationError.
VerificationRecord verify(const DegreeData& d, const VerifyConfig& cfg);

}  // namespace detscheme
