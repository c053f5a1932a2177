#include "detscheme/report_json.hpp"

#include <limits>

namespace detscheme {

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
  return BigInt(j.get<long long>());
}

json to_json(const DegreeData& d) {
  return {{"n", d.n()},
          {"alphas", std::vector<int>(d.alphas().begin(), d.alphas().end())},
          {"betas", std::vector<int>(d.betas().begin(), d.betas().end())}};
}

DegreeData degree_data_from_json(const json& j) {
  return DegreeData(j.at("n").get<int>(), j.at("alphas").get<std::vector<int>>(),
                    j.at("betas").get<std::vector<int>>());
}

json to_json(const DimensionReport& r) {
  json k = json::array();
  for (const auto& x : r.k_terms) k.push_back(bigint_to_json(x));
  return {{"lambda_c", bigint_to_json(r.lambda_c)},
          {"k_terms", k},
          {"dim_y", bigint_to_json(r.dim_y)},
          {"corollary_value", r.corollary_value ? bigint_to_json(*r.corollary_value) : json()},
          {"canonical", {{"h", r.canonical_h}, {"p", r.canonical_p}}}};
}

DimensionReport dimension_report_from_json(const json& j) {
  DimensionReport r;
  r.lambda_c = bigint_from_json(j.at("lambda_c"));
  for (const auto& x : j.at("k_terms")) r.k_terms.push_back(bigint_from_json(x));
  r.dim_y = bigint_from_json(j.at("dim_y"));
  if (j.contains("corollary_value") && !j.at("corollary_value").is_null()) {
    r.corollary_value = bigint_from_json(j.at("corollary_value"));
  }
  r.canonical_h = j.at("canonical").at("h").get<long long>();
  r.canonical_p = j.at("canonical").at("p").get<long long>();
  return r;
}

json to_json(const VerificationRecord& r) {
  json hf = json::array();
  for (auto [t, v] : r.hf_table) hf.push_back({t, v});
  const auto m = r.matches();
  return {{"instance", r.data.to_string()},
          {"degree_data", to_json(r.data)},
          {"prime", r.prime},
          {"seed", r.seed},
          {"attempts", r.attempts},
          {"hf_table", hf},
          {"hilbert_newton", r.hilbert_newton},
          {"fitted_dim", r.fitted_dim},
          {"fitted_degree", r.fitted_degree},
          {"tangent_dim", r.tangent_dim},
          {"tangent_dim_next", r.tangent_dim_next},
          {"stab_dim", r.stab_dim},
          {"orbit_space_dim", r.orbit_space_dim},
          {"formula_dim", r.formula_dim},
          {"bounds_used",
           {{"syzygy_bound", r.syzygy_bound},
            {"hf_window", {r.hf_window_start, r.hf_window_end}}}},
          {"matches",
           {{"codim", m.codim},
            {"orbit", m.orbit},
            {"tangent", m.tangent},
            {"tangent_at_least", m.tangent_at_least},
            {"asserted", {{"orbit", m.asserted_orbit},
                          {"tangent", m.asserted_tangent},
                          {"tangent_at_least", m.asserted_tangent_at_least}}},
            {"all_asserted_hold", m.all_asserted_hold()}}}};
}

VerificationRecord verification_record_from_json(const json& j) {
  VerificationRecord r{.data = degree_data_from_json(j.at("degree_data"))};
  r.prime = j.at("prime").get<std::uint32_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.attempts = j.at("attempts").get<int>();
  for (const auto& row : j.at("hf_table")) r.hf_table.emplace_back(row.at(0).get<int>(), row.at(1).get<long long>());
  r.hilbert_newton = j.at("hilbert_newton").get<std::vector<long long>>();
  r.fitted_dim = j.at("fitted_dim").get<int>();
  r.fitted_degree = j.at("fitted_degree").get<long long>();
  r.tangent_dim = j.at("tangent_dim").get<long long>();
  r.tangent_dim_next = j.at("tangent_dim_next").get<long long>();
  r.stab_dim = j.at("stab_dim").get<long long>();
  r.orbit_space_dim = j.at("orbit_space_dim").get<long long>();
  r.formula_dim = j.at("formula_dim").get<long long>();
  const auto& b = j.at("bounds_used");
  r.syzygy_bound = b.at("syzygy_bound").get<int>();
  r.hf_window_start = b.at("hf_window").at(0).get<int>();
  r.hf_window_end = b.at("hf_window").at(1).get<int>();
  // "matches" is derived and deliberately not read back
  return r;
}

json to_json(const GradedIdeal& ideal) {
  json gens = json::array();
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    const auto& g = ideal.generators[k];
    json terms = json::array();
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
      if (!g.coeff(i)) continue;
      auto e = g.basis().exponent(i);
      terms.push_back({{"exp", std::vector<int>(e.begin(), e.end())}, {"coeff", g.coeff(i)}});
    }
    gens.push_back({{"degree", ideal.degrees[k]}, {"columns", ideal.column_sets[k]}, {"terms", terms}});
  }
  return {{"prime", ideal.field.modulus()}, {"nvars", ideal.nvars}, {"generators", gens}};
}

GradedIdeal graded_ideal_from_json(const json& j) {
  GradedIdeal ideal{PrimeField(j.at("prime").get<std::uint32_t>()), j.at("nvars").get<int>(), {}, {}, {}};
  for (const auto& g : j.at("generators")) {
    const int deg = g.at("degree").get<int>();
    HomogeneousPoly p(ideal.field, ideal.nvars, deg);
    for (const auto& t : g.at("terms")) {
      auto e = t.at("exp").get<std::vector<Exponent>>();
      if (static_cast<int>(e.size()) != ideal.nvars) throw std::invalid_argument("exponent length");
      p.set_coeff(p.basis().index_of(e), t.at("coeff").get<Coeff>());
    }
    ideal.generators.push_back(std::move(p));
    ideal.degrees.push_back(deg);
    ideal.column_sets.push_back(g.at("columns").get<std::vector<int>>());
  }
  return ideal;
}

std::string ideal_presentation(const GradedIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators) out += g.to_string() + "\n";
  return out;
}

}  // namespace detscheme
