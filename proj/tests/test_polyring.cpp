#include <doctest.h>

#include <algorithm>
#include <random>

#include "detscheme/errors.hpp"
#include "detscheme/linalg.hpp"
#include "detscheme/monomials.hpp"
#include "detscheme/poly_matrix.hpp"
#include "detscheme/random.hpp"
#include "support/gen.hpp"
#include "support/naive.hpp"

using namespace detscheme;

namespace {

const PrimeField F;

HomogeneousPoly random_form(std::mt19937_64& rng, const PrimeField& f, int nvars, int deg) {
  HomogeneousPoly p(f, nvars, deg);
  for (std::size_t i = 0; i < p.basis().size(); ++i) p.set_coeff(i, static_cast<Coeff>(rng() % f.modulus()));
  return p;
}

std::vector<Coeff> random_point(std::mt19937_64& rng, const PrimeField& f, int nvars) {
  std::vector<Coeff> pt(nvars);
  for (auto& x : pt) x = static_cast<Coeff>(rng() % f.modulus());
  return pt;
}

}  // namespace

TEST_CASE("prime field") {
  CHECK(F.modulus() == 32003);
  CHECK(F.mul(F.inv(12345), 12345) == 1);
  CHECK(F.reduce(-1) == 32002);
  CHECK(F.pow(3, 32002) == 1);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(32001), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(65537));
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("monomial bases") {
  for (int nv = 1; nv <= 7; ++nv)
    for (int d = 0; d <= 5; ++d) {
      auto basis = MonomialBasis::get(nv, d);
      REQUIRE(naive::Int(basis->size()) == naive::forms(d, nv));
      for (std::size_t i = 0; i < basis->size(); ++i) REQUIRE(basis->index_of(basis->exponent(i)) == i);
    }
  auto b = MonomialBasis::get(3, 2);
  CHECK(b->exponent(0)[0] == 2);  // x0^2 first
}

TEST_CASE("polynomial basics") {
  auto x0 = HomogeneousPoly::variable(F, 3, 0);
  auto x1 = HomogeneousPoly::variable(F, 3, 1);
  auto one = HomogeneousPoly::constant(F, 3, 1);
  auto p = x0 * x1;
  CHECK(p.term_count() == 1);
  CHECK(p.to_string() == "x0*x1");
  CHECK((x0 * one) == x0);
  CHECK(HomogeneousPoly(F, 3, 2).to_string() == "0");
  CHECK((3 * (x0 * x0 * x1) + HomogeneousPoly::monomial(F, std::vector<Exponent>{0, 0, 3})).to_string() ==
        "3*x0^2*x1 + x2^3");
  CHECK_THROWS_AS(x0 + p, std::invalid_argument);
  CHECK_THROWS_AS(x0 + HomogeneousPoly::variable(F, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(x0 + HomogeneousPoly::variable(PrimeField(65537), 3, 0), std::invalid_argument);
}

TEST_CASE("randomized: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    int nv = 2 + static_cast<int>(rng() % 5), d1 = static_cast<int>(rng() % 4), d2 = static_cast<int>(rng() % 4);
    auto f = random_form(rng, F, nv, d1), g = random_form(rng, F, nv, d1), h = random_form(rng, F, nv, d2);
    for (int j = 0; j < 10; ++j) {
      auto pt = random_point(rng, F, nv);
      REQUIRE((f + g).eval(pt) == F.add(f.eval(pt), g.eval(pt)));
      REQUIRE((f - g).eval(pt) == F.sub(f.eval(pt), g.eval(pt)));
      REQUIRE((f * h).eval(pt) == F.mul(f.eval(pt), h.eval(pt)));
    }
    REQUIRE(f * h == h * f);
  }
}

TEST_CASE("random_phi shape and determinism") {
  DegreeData e1(4, {1, 1, 1}, {0, 0});
  auto m = random_phi(e1, F, 1);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      REQUIRE(m.entry(i, j).has_value());
      CHECK(m.entry(i, j)->degree() == 1);
      CHECK(m.entry(i, j)->nvars() == 5);
    }
  auto m2 = random_phi(e1, F, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(*m.entry(i, j) == *m2.entry(i, j));
  CHECK_FALSE(*random_phi(e1, F, 2).entry(0, 0) == *m.entry(0, 0));

  DegreeData mixed(4, {0, 2, 2}, {0, 1});  // alpha_1 < beta_2: structural zero
  auto z = random_phi(mixed, F, 3);
  CHECK_FALSE(z.entry(1, 0).has_value());
  CHECK(z.entry(0, 0)->degree() == 0);
  CHECK(z.entry(1, 1)->degree() == 1);
  CHECK_THROWS_AS(random_phi(DegreeData(3, {0, 0}, {0, 0}), F, 1), HypothesisError);
}

TEST_CASE("maximal minors: shapes, duplicate column, row vector") {
  DegreeData e1(4, {1, 1, 1}, {0, 0});
  auto I = maximal_minors(random_phi(e1, F, 1));
  CHECK(I.size() == 3);
  for (int deg : I.degrees) CHECK(deg == 2);
  CHECK(I.column_sets == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

  auto m = random_phi(e1, F, 4);
  m.set_entry(0, 2, *m.entry(0, 0));
  m.set_entry(1, 2, *m.entry(1, 0));
  auto J = maximal_minors(m);
  CHECK(J.generators[1].is_zero());  // columns {0, 2} coincide
  CHECK_FALSE(J.generators[0].is_zero());

  DegreeData row(3, {1, 2, 2}, {0});
  auto r = random_phi(row, F, 9);
  auto K = maximal_minors(r);
  REQUIRE(K.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(K.generators[j] == *r.entry(0, j));
}

TEST_CASE("randomized: Laplace consistency and evaluation commutation") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    auto d = gen::standard_data(rng, 1, 0, 5, 5);
    auto m = random_phi(d, F, rng());
    auto I = maximal_minors(m);
    std::vector<int> rows(d.b());
    for (int i = 0; i < d.b(); ++i) rows[i] = i;
    // one random column subset per instance for the two expansions
    std::vector<int> cols;
    for (int j = 0; j < d.a(); ++j) cols.push_back(j);
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(d.b());
    std::sort(cols.begin(), cols.end());
    auto p = det_first_row(m, rows, cols), q = det_last_column(m, rows, cols);
    REQUIRE(p.has_value() == q.has_value());
    if (p) REQUIRE(*p == *q);

    for (int j = 0; j < 10; ++j) {
      auto pt = random_point(rng, F, d.nvars());
      auto vals = m.eval(pt);
      for (std::size_t g = 0; g < I.size(); ++g) {
        std::vector<Row> sq;
        for (int i = 0; i < d.b(); ++i) {
          Row r;
          for (int c : I.column_sets[g]) r.push_back(vals[i][c]);
          sq.push_back(r);
        }
        REQUIRE(determinant(F, sq) == I.generators[g].eval(pt));
      }
    }
  }
}

TEST_CASE("evaluation commutes with minors at 50 points") {
  DegreeData d(5, {1, 1, 2, 2}, {0, 1});
  auto m = random_phi(d, F, 77);
  auto I = maximal_minors(m);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    auto pt = random_point(rng, F, d.nvars());
    auto vals = m.eval(pt);
    for (std::size_t g = 0; g < I.size(); ++g) {
      const auto& cs = I.column_sets[g];
      Coeff det = F.sub(F.mul(vals[0][cs[0]], vals[1][cs[1]]), F.mul(vals[0][cs[1]], vals[1][cs[0]]));
      REQUIRE(det == I.generators[g].eval(pt));
    }
  }
}

TEST_CASE("randomized: multilinearity in a column") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    auto d = gen::standard_data(rng, 1, 0, 5, 5);
    auto m = random_phi(d, F, rng());
    auto I = maximal_minors(m);
    int col = static_cast<int>(rng() % d.a());
    Coeff lam = 2 + static_cast<Coeff>(rng() % (F.modulus() - 2));
    for (int i = 0; i < d.b(); ++i)
      if (m.entry(i, col)) {
        auto e = *m.entry(i, col);
        m.set_entry(i, col, e.scale(lam));
      }
    auto J = maximal_minors(m);
    for (std::size_t g = 0; g < I.size(); ++g) {
      bool has = std::find(I.column_sets[g].begin(), I.column_sets[g].end(), col) != I.column_sets[g].end();
      auto expect = I.generators[g];
      if (has) expect.scale(lam);
      REQUIRE(J.generators[g] == expect);
    }
  }
}

TEST_CASE("linear algebra over F_p") {
  std::vector<Row> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(F, rows, 3) == 2);
  auto ker = left_kernel(F, rows, 3);
  REQUIRE(ker.size() == 1);
  for (std::size_t c = 0; c < 3; ++c) {
    Coeff s = 0;
    for (std::size_t r = 0; r < 3; ++r) s = F.add(s, F.mul(ker[0][r], rows[r][c]));
    CHECK(s == 0);
  }
  CHECK(determinant(F, {{2, 0}, {0, 3}}) == 6);
  CHECK(determinant(F, {{0, 1}, {1, 0}}) == F.neg(1));
  CHECK(determinant(F, rows) == 0);

  RowEchelon e(F, 3);
  Row r1{0, 2, 4};
  CHECK(e.insert(r1));
  Row r2{0, 1, 2};
  CHECK_FALSE(e.insert(r2));
  CHECK(e.row_with_pivot(1).has_value());
  CHECK_FALSE(e.row_with_pivot(0).has_value());
}

TEST_CASE("seed mixing is deterministic") {
  CHECK(mix_seed(1) == mix_seed(1));
  CHECK(mix_seed(1) != mix_seed(2));
}
