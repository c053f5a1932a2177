#include <doctest.h>

#include <random>

#include "detscheme/dimension_formula.hpp"
#include "detscheme/errors.hpp"
#include "detscheme/graded_oracle.hpp"
#include "support/gen.hpp"
#include "support/naive.hpp"

using namespace detscheme;

TEST_CASE("binomial convention") {
  CHECK(binomial_dim(5, 4) == 5);
  CHECK(binomial_dim(3, 4) == 0);
  CHECK(binomial_dim(-1, 4) == 0);
  CHECK(binomial_dim(4, 4) == 1);
  CHECK(binomial_dim(0, 0) == 1);
  CHECK(binomial_dim(-3, 0) == 0);
  CHECK(binomial_dim(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK_THROWS_AS(binomial_dim(3, -1), std::invalid_argument);
}

TEST_CASE("binomial laws, randomized") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> top(-20, 60), bot(0, 30);
  for (int k = 0; k < 500; ++k) {
    long long m = top(rng), n = bot(rng);
    REQUIRE(binomial_dim(m, n) == naive::binom(m, n));
    if (n >= 1 && m >= n) REQUIRE(binomial_dim(m, n) == binomial_dim(m - 1, n - 1) + binomial_dim(m - 1, n));
    if (m >= n) REQUIRE(binomial_dim(m, n) == binomial_dim(m, m - n));
    REQUIRE(binomial_dim(n, n) == 1);
    if (m < n) REQUIRE(binomial_dim(m, n) == 0);
    // forms_dim counts monomials
    if (m >= 0 && n <= 8) REQUIRE(forms_dim(m % 12, static_cast<int>(n)) == naive::forms(m % 12, static_cast<int>(n) + 1));
  }
}

TEST_CASE("lambda examples") {
  CHECK(lambda_c(DegreeData(4, {1, 1, 1}, {0, 0})) == 18);
  CHECK(lambda_c(DegreeData(5, {1, 1, 1, 1}, {0, 0})) == 29);
  CHECK(lambda_c(DegreeData(4, {1, 1, 1, 1}, {0, 0, 0})) == 36);
}

TEST_CASE("ell/h sequences") {
  CHECK(ell_h_sequences(DegreeData(5, {1, 1, 1, 1}, {0, 0})) == std::vector<EllH>{{4, 3}});
  CHECK(ell_h_sequences(DegreeData(4, {1, 1, 1}, {0, 0})).empty());
  // recomputed literally: ell_3 = 1+1+1+1, h_0 = 2*1 - 4 + 6; ell_4 = 4 + 2, h_1 = 2*2 - 6 + 6
  CHECK(ell_h_sequences(DegreeData(6, {1, 1, 1, 1, 2}, {0, 0})) == std::vector<EllH>{{4, 4}, {6, 4}});
}

TEST_CASE("K terms") {
  CHECK(k_terms(DegreeData(5, {1, 1, 1, 1}, {0, 0})) == std::vector<BigInt>{0});
  CHECK(k_terms(DegreeData(4, {1, 1, 1}, {0, 0})).empty());
  // c >= 3 with a nonzero K_3 = C(h_0, n)
  DegreeData d(3, {0, 0, 0, 2}, {-1, -1});
  auto eh = ell_h_sequences(d);
  REQUIRE(eh.size() == 1);
  CHECK(k_terms(d).front() == binomial_dim(eh[0].h, 3));
}

TEST_CASE("dim_y examples") {
  auto e1 = dim_y(DegreeData(4, {1, 1, 1}, {0, 0}));
  CHECK(e1.dim_y == 18);
  CHECK(e1.canonical_h == -2);
  CHECK(e1.canonical_p == 1);
  CHECK(e1.corollary_value == BigInt(18));
  auto e2 = dim_y(DegreeData(4, {1, 1, 1, 1}, {0, 0, 0}));
  CHECK(e2.dim_y == 36);
  CHECK(e2.corollary_value == BigInt(36));
  CHECK(dim_y(DegreeData(5, {1, 1, 1, 1}, {0, 0})).dim_y == 29);
  CHECK_FALSE(dim_y(DegreeData(5, {1, 1, 2}, {0, 0})).corollary_value.has_value());
  CHECK_THROWS_AS(dim_y(DegreeData(3, {0, 0}, {0, 0})), HypothesisError);
  // hypersurface still evaluates
  CHECK(dim_y(DegreeData(3, {1, 2}, {0, 0})).k_terms.empty());
}

TEST_CASE("corollary examples and hypotheses") {
  CHECK(corollary_homogeneous(4, 4, 3, 1) == 36);
  CHECK(corollary_homogeneous(4, 3, 2, 1) == 18);
  CHECK(corollary_homogeneous(6, 4, 3, 2) == 312);
  CHECK(dim_y(DegreeData(6, {2, 2, 2, 2}, {0, 0, 0})).dim_y == 312);
  CHECK_THROWS_AS(corollary_homogeneous(3, 3, 2, 1), HypothesisError);  // dim_x = 1
  CHECK_THROWS_AS(corollary_homogeneous(4, 2, 2, 1), HypothesisError);
  CHECK_THROWS_AS(corollary_homogeneous(4, 3, 2, 0), HypothesisError);
}

TEST_CASE("corollary grid: n <= 8, d <= 4") {
  int cases = 0;
  for (int n = 2; n <= 8; ++n)
    for (int dd = 1; dd <= 4; ++dd)
      for (int b = 1; b <= 8; ++b)
        for (int a = b + 1; n + b - a - 1 >= 2; ++a) {
          DegreeData d(n, std::vector<int>(a, dd), std::vector<int>(b, 0));
          auto r = dim_y(d);
          REQUIRE(r.corollary_value.has_value());
          REQUIRE(r.dim_y == *r.corollary_value);
          REQUIRE(r.dim_y == corollary_homogeneous(n, a, b, dd));
          for (const auto& k : r.k_terms) REQUIRE(k == 0);
          ++cases;
        }
  CHECK(cases > 100);
}

TEST_CASE("randomized: formula pieces against slow evaluations") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    auto d = gen::standard_data(rng, 1, 0);
    auto r = dim_y(d);
    REQUIRE(r.lambda_c == naive::lambda(d));
    REQUIRE(r.k_terms == naive::k_terms(d));
    REQUIRE(r.k_terms.size() == static_cast<std::size_t>(std::max(d.c() - 2, 0)));
    BigInt sum = r.lambda_c;
    for (const auto& x : r.k_terms) sum += x;
    REQUIRE(r.dim_y == sum);
    REQUIRE(r.canonical_h + d.n() + 1 == derive(d).ell);
    REQUIRE(r.canonical_p == d.c() - 1);
  }
}

TEST_CASE("randomized: lambda decomposes into graded Hom counts") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    auto d = gen::standard_data(rng, 1, 0);
    auto g = group_counts(d.nvars(), d.alphas(), d.betas());
    REQUIRE(lambda_c(d) == BigInt(g.hom_ab + g.hom_ba - g.end_a - g.end_b + 1));
  }
}

TEST_CASE("randomized: dim_y and K terms survive a common twist") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> shift(-6, 6);
  for (int k = 0; k < 200; ++k) {
    auto d = gen::standard_data(rng, 1, 0);
    int t = shift(rng);
    std::vector<int> al(d.alphas().begin(), d.alphas().end()), be(d.betas().begin(), d.betas().end());
    for (auto& x : al) x += t;
    for (auto& x : be) x += t;
    DegreeData e(d.n(), al, be);
    auto r = dim_y(d), s = dim_y(e);
    REQUIRE(r.lambda_c == s.lambda_c);
    REQUIRE(r.k_terms == s.k_terms);
    REQUIRE(r.dim_y == s.dim_y);
    // ell_i moves by t * (number of alphas minus b), h_i by the same on the other side
    auto eh = ell_h_sequences(d), fh = ell_h_sequences(e);
    for (std::size_t i = 0; i < eh.size(); ++i) {
      long long steps = static_cast<long long>(i) + 2;  // (b + i + 2) alphas minus b betas
      REQUIRE(fh[i].ell == eh[i].ell + steps * t);
      REQUIRE(fh[i].h == eh[i].h + (2 - steps) * t);
    }
  }
}
