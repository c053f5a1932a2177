#include "detscheme/dimension_formula.hpp"

#include <numeric>

#include "detscheme/combinatorics.hpp"

namespace detscheme {

BigInt binomial_dim(long long top, long long n) {
  if (n < 0) throw std::invalid_argument("binomial_dim: n must be non-negative");
  if (top < n) return 0;
  const long long k = std::min(n, top - n);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= top - k + i;
    r /= i;  // exact: r is C(top - k + i, i) here
  }
  return r;
}

BigInt lambda_c(const DegreeData& d) {
  const int n = d.n();
  BigInt total = 1;
  for (int a : d.alphas()) {
    for (int b : d.betas()) {
      total += binomial_dim(a - b + n, n) + binomial_dim(b - a + n, n);
    }
  }
  for (int x : d.alphas())
    for (int y : d.alphas()) total -= binomial_dim(x - y + n, n);
  for (int x : d.betas())
    for (int y : d.betas()) total -= binomial_dim(x - y + n, n);
  return total;
}

std::vector<EllH> ell_h_sequences(const DegreeData& d) {
  std::vector<EllH> out;
  const long long beta = std::accumulate(d.betas().begin(), d.betas().end(), 0LL);
  // i runs over 3..c; alpha indices below are 1-based in the formula.
  for (int i = 3; i <= d.c(); ++i) {
    const int top = d.b() + i - 1;
    long long ell = -beta;
    for (int j = 0; j < top; ++j) ell += d.alpha(j);
    out.push_back({ell, 2LL * d.alpha(top - 1) - ell + d.n()});
  }
  return out;
}

std::vector<BigInt> k_terms(const DegreeData& d) {
  const auto eh = ell_h_sequences(d);
  std::vector<BigInt> out;
  out.reserve(eh.size());
  for (int i = 0; i < static_cast<int>(eh.size()); ++i) {
    const long long h = eh[i].h;
    BigInt k = 0;
    for (int r = 0; r <= i; ++r) {
      const int s = i - r;
      for_each_combination(d.b() + i + 1, r, [&](std::span<const int> subset) {
        long long base = h;
        for (int idx : subset) base += d.alpha(idx);
        for_each_multiset(d.b(), s, [&](std::span<const int> multi) {
          long long top = base;
          for (int idx : multi) top += d.beta(idx);
          if (s % 2 == 0) {
            k += binomial_dim(top, d.n());
          } else {
            k -= binomial_dim(top, d.n());
          }
        });
      });
    }
    out.push_back(std::move(k));
  }
  return out;
}

DimensionReport dim_y(const DegreeData& d) {
  if (auto why = standard_failure(d)) {
    throw HypothesisError("dimension formula needs the standard condition: " + *why);
  }
  DimensionReport r;
  r.lambda_c = lambda_c(d);
  r.k_terms = k_terms(d);
  r.dim_y = r.lambda_c;
  for (const auto& k : r.k_terms) r.dim_y += k;
  const auto inv = derive(d);
  r.canonical_h = inv.ell - d.n() - 1;
  r.canonical_p = d.a() - d.b();
  if (d.homogeneous() && d.a() >= d.b() + 1 && d.dim_x() >= 2) {
    r.corollary_value = corollary_homogeneous(d.n(), d.a(), d.b(), d.alpha(0));
  }
  return r;
}

BigInt corollary_homogeneous(int n, int a, int b, int d) {
  if (a < b + 1) throw HypothesisError("corollary needs b <= a - 1");
  if (d < 1) throw HypothesisError("corollary needs d >= 1");
  if (n + b - a - 1 < 2) {
    throw HypothesisError("corollary needs dim(X) = n + b - a - 1 >= 2, got " +
                          std::to_string(n + b - a - 1));
  }
  BigInt r = binomial_dim(n + d, n);
  r *= a;
  r *= b;
  return r - a * a - b * b + 1;
}

}  // namespace detscheme
