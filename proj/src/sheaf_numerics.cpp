#include "detscheme/sheaf_numerics.hpp"

#include <algorithm>

#include "detscheme/combinatorics.hpp"

namespace detscheme {

namespace {

void require_resolution(const DegreeData& d) {
  if (auto why = standard_failure(d)) {
    throw HypothesisError("cokernel resolution needs the standard condition: " + *why);
  }
  if (d.c() < 2) {
    throw HypothesisError("c = 1: the cokernel of a square matrix has no Buchsbaum-Rim tail");
  }
}

}  // namespace

ResolutionTerm resolution_term(const DegreeData& d, int s) {
  require_resolution(d);
  if (s < 0 || s > d.c() - 2) {
    throw std::out_of_range("resolution term index s=" + std::to_string(s) + " outside 0.." +
                            std::to_string(d.c() - 2));
  }
  const long long base = d.n() - derive(d).ell;
  ResolutionTerm term;
  term.s = s;
  for_each_combination(d.a(), d.a() - d.b() - s - 1, [&](std::span<const int> subset) {
    long long o = base;
    for (int j : subset) o += d.alpha(j);
    for_each_multiset(d.b(), s, [&](std::span<const int> multi) {
      long long oo = o;
      for (int i : multi) oo += d.beta(i);
      term.degree_offsets.push_back(oo);
    });
  });
  term.rank = static_cast<long long>(term.degree_offsets.size());
  return term;
}

BigInt h0_term(const DegreeData& d, int s, long long t) {
  BigInt total = 0;
  for (long long o : resolution_term(d, s).degree_offsets) total += binomial_dim(o + t, d.n());
  return total;
}

BigInt cokernel_f(const DegreeData& d, long long t) {
  require_resolution(d);
  const int n = d.n();
  BigInt f = 0;
  for (int b : d.betas()) f += binomial_dim(n - b + t, n);
  for (int a : d.alphas()) f -= binomial_dim(n - a + t, n);
  for (int s = 0; s <= d.c() - 2; ++s) {
    if (s % 2 == 0) {
      f += h0_term(d, s, t);
    } else {
      f -= h0_term(d, s, t);
    }
  }
  return f;
}

long long cokernel_vanishing_threshold(const DegreeData& d) {
  require_resolution(d);
  long long t = std::min(d.alphas().front(), d.betas().front());
  for (int s = 0; s <= d.c() - 2; ++s) {
    for (long long o : resolution_term(d, s).degree_offsets) t = std::min(t, d.n() - o);
  }
  return t;
}

BigInt h0_F(const DegreeData& d) {
  require_resolution(d);
  if (d.dim_x() < 2) {
    throw HypothesisError("h0(F) count needs dim(X) >= 2, got " + std::to_string(d.dim_x()));
  }
  BigInt total = 1;
  for (int a : d.alphas()) total += cokernel_f(d, a);
  for (int b : d.betas()) total -= cokernel_f(d, b);
  return total;
}

}  // namespace detscheme
