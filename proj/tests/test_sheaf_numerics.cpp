#include <doctest.h>

#include <random>

#include "detscheme/dimension_formula.hpp"
#include "detscheme/errors.hpp"
#include "detscheme/sheaf_numerics.hpp"
#include "support/gen.hpp"
#include "support/naive.hpp"

using namespace detscheme;

namespace {
const DegreeData E1(4, {1, 1, 1}, {0, 0});
}

TEST_CASE("h0 of resolution terms") {
  CHECK(h0_term(E1, 0, 1) == 0);
  CHECK(h0_term(E1, 0, 3) == 1);
  CHECK(h0_term(E1, 0, -50) == 0);
  auto t = resolution_term(E1, 0);
  CHECK(t.rank == 1);
  CHECK(t.degree_offsets == std::vector<long long>{1});
  CHECK_THROWS_AS(resolution_term(E1, 1), std::out_of_range);
  CHECK_THROWS_AS(resolution_term(E1, -1), std::out_of_range);
}

TEST_CASE("f(t) on the cubic scroll") {
  CHECK(cokernel_f(E1, -1) == 0);
  CHECK(cokernel_f(E1, 0) == 2);
  CHECK(cokernel_f(E1, 1) == 7);
  CHECK(cokernel_f(E1, 2) == 15);
  CHECK(h0_F(E1) == 18);
}

TEST_CASE("h0(F) examples") {
  CHECK(h0_F(DegreeData(4, {1, 1, 1, 1}, {0, 0, 0})) == 36);
  CHECK(h0_F(DegreeData(5, {1, 1, 1, 1}, {0, 0})) == 29);
}

TEST_CASE("hypotheses") {
  CHECK_THROWS_AS(cokernel_f(DegreeData(3, {1, 2}, {0, 0}), 0), HypothesisError);       // c = 1
  CHECK_THROWS_AS(cokernel_f(DegreeData(4, {1, 1, 1}, {0, 2}), 0), HypothesisError);    // not standard
  CHECK_THROWS_AS(h0_F(DegreeData(3, {1, 1, 1}, {0, 0})), HypothesisError);             // dim_x = 1
  CHECK_NOTHROW(cokernel_f(DegreeData(3, {1, 1, 1}, {0, 0}), 0));
}

TEST_CASE("randomized grand identity: h0(F) == dim Y") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 300; ++k) {
    auto d = gen::standard_data(rng, 2, 2);
    auto h = h0_F(d);
    REQUIRE(h == dim_y(d).dim_y);
    REQUIRE(h == naive::h0F(d));
  }
}

TEST_CASE("randomized: f counts sections, vanishes below the threshold") {
  std::mt19937_64 rng(102);
  for (int k = 0; k < 200; ++k) {
    auto d = gen::standard_data(rng, 2, 0);
    const long long thr = cokernel_vanishing_threshold(d);
    for (long long t = thr - 6; t < thr; ++t) REQUIRE(cokernel_f(d, t) == 0);
    for (long long t = d.beta(0); t <= d.beta(0) + 6; ++t) {
      auto v = cokernel_f(d, t);
      REQUIRE(v >= 0);
      REQUIRE(v == naive::f(d, t));
    }
  }
}

TEST_CASE("randomized: term counts and the built-in vanishing of the resolution terms") {
  std::mt19937_64 rng(103);
  for (int k = 0; k < 200; ++k) {
    auto d = gen::standard_data(rng, 2, 0);
    for (int s = 0; s <= d.c() - 2; ++s) {
      auto term = resolution_term(d, s);
      BigInt expect = binomial_dim(d.a(), d.a() - d.b() - s - 1) * binomial_dim(d.b() + s - 1, s);
      REQUIRE(BigInt(term.rank) == expect);
      REQUIRE(term.degree_offsets.size() == static_cast<std::size_t>(term.rank));
      for (int i = 0; i < d.b(); ++i) {
        REQUIRE(h0_term(d, s, d.beta(i)) == 0);
        REQUIRE(h0_term(d, s, d.alpha(i)) == 0);
      }
    }
  }
}
