#include <doctest.h>

#include <random>
#include <sstream>

#include "detscheme/corpus.hpp"
#include "detscheme/report_json.hpp"
#include "detscheme/sheaf_numerics.hpp"
#include "support/gen.hpp"

using namespace detscheme;

namespace {

template <class T, class From>
T through_text(const json& j, From from) {
  return from(json::parse(j.dump()));
}

}  // namespace

TEST_CASE("big integers keep their value through JSON") {
  for (const char* s : {"0", "-17", "9223372036854775807", "9223372036854775808",
                        "-9223372036854775809", "123456789012345678901234567890"}) {
    BigInt v(s);
    CHECK(bigint_from_json(json::parse(bigint_to_json(v).dump())) == v);
  }
  CHECK(bigint_to_json(BigInt(5)).is_number_integer());
  CHECK(bigint_to_json(BigInt("123456789012345678901234567890")).is_string());
}

TEST_CASE("randomized round trips: degree data and dimension reports") {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 200; ++k) {
    auto d = gen::standard_data(rng, 1, 0);
    REQUIRE(through_text<DegreeData>(to_json(d), degree_data_from_json) == d);
    REQUIRE(parse_degree_data(to_json(d).dump()) == d);
    REQUIRE(parse_degree_data(d.to_string()) == d);
    auto r = dim_y(d);
    REQUIRE(through_text<DimensionReport>(to_json(r), dimension_report_from_json) == r);
  }
  // large values and the corollary slot
  auto big = dim_y(DegreeData(8, std::vector<int>(4, 40), std::vector<int>(3, 0)));
  CHECK(big.corollary_value.has_value());
  CHECK(through_text<DimensionReport>(to_json(big), dimension_report_from_json) == big);
}

TEST_CASE("randomized round trips: verification records") {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 150; ++k) {
    VerificationRecord r{.data = gen::standard_data(rng, 1, 0)};
    r.prime = 32003;
    r.seed = rng();
    r.attempts = 1 + static_cast<int>(rng() % 10);
    for (int t = 0; t < 5; ++t) r.hf_table.push_back({t, static_cast<long long>(rng() % 1000)});
    r.hilbert_newton = {1, static_cast<long long>(rng() % 50), 3};
    r.fitted_dim = static_cast<int>(rng() % 6);
    r.fitted_degree = static_cast<long long>(rng() % 40);
    r.tangent_dim = static_cast<long long>(rng() % 100);
    r.tangent_dim_next = r.tangent_dim;
    r.stab_dim = 1;
    r.orbit_space_dim = static_cast<long long>(rng() % 100);
    r.formula_dim = static_cast<long long>(rng() % 100);
    r.syzygy_bound = 3;
    r.hf_window_start = 0;
    r.hf_window_end = 4;
    auto back = through_text<VerificationRecord>(to_json(r), verification_record_from_json);
    REQUIRE(back == r);
    REQUIRE(back.matches() == r.matches());
  }
  auto real = verify(DegreeData(4, {1, 1, 1}, {0, 0}), VerifyConfig{});
  CHECK(through_text<VerificationRecord>(to_json(real), verification_record_from_json) == real);
}

TEST_CASE("randomized round trips: ideals") {
  std::mt19937_64 rng(53);
  const PrimeField F;
  for (int k = 0; k < 100; ++k) {
    auto d = gen::standard_data(rng, 1, 0, 4, 4);
    auto I = maximal_minors(random_phi(d, F, rng()));
    auto back = graded_ideal_from_json(json::parse(to_json(I).dump()));
    REQUIRE(back.nvars == I.nvars);
    REQUIRE(back.field == I.field);
    REQUIRE(back.degrees == I.degrees);
    REQUIRE(back.column_sets == I.column_sets);
    REQUIRE(back.generators == I.generators);
  }
}

TEST_CASE("plain-text presentation") {
  auto I = maximal_minors(random_phi(DegreeData(4, {1, 1, 1}, {0, 0}), PrimeField(), 1));
  auto text = ideal_presentation(I);
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line == I.generators[lines - 1].to_string());
  }
  CHECK(lines == 3);
}

TEST_CASE("random suites are deterministic and respect the caps") {
  SuiteParams p;
  p.size = 50;
  auto s1 = random_suite(p), s2 = random_suite(p);
  CHECK(s1 == s2);
  for (const auto& d : s1) {
    CHECK(validate_standard(d));
    CHECK(d.n() <= 8);
    CHECK(d.a() <= 7);
    CHECK(d.c() >= 2);
    CHECK(d.dim_x() >= 2);
    CHECK(d.alphas().back() - std::min(d.alphas().front(), d.betas().front()) <= 4);
  }
  p.master_seed = 2;
  CHECK_FALSE(random_suite(p) == s1);
}

TEST_CASE("formula corpus") {
  CorpusConfig cfg;
  cfg.suite.size = 40;
  auto lines = run_corpus(cfg);
  REQUIRE(lines.size() == 40);
  for (const auto& l : lines) {
    CHECK(l.passed);
    CHECK(l.record.at("identity").get<bool>());
  }
  cfg.threads = 1;
  auto serial = run_corpus(cfg);
  for (std::size_t i = 0; i < lines.size(); ++i) CHECK(serial[i].record == lines[i].record);

  cfg.suite.size = 0;
  CHECK(run_corpus(cfg).empty());
}

TEST_CASE("oracle corpus records failures per line") {
  CorpusConfig cfg;
  cfg.mode = CorpusMode::oracle;
  cfg.instances = {DegreeData(4, {1, 1, 1}, {0, 0}), DegreeData(3, {0, 0, 1}, {0, 1})};
  auto lines = run_corpus(cfg);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].passed);
  CHECK_FALSE(lines[1].passed);
  CHECK(lines[1].record.contains("error"));
}
