#include "detscheme/degree_data.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace detscheme {

namespace {

std::string join(std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw StructuralError("cannot parse integer '" + std::string(s) + "' in " +
                          std::string(what));
  }
  return value;
}

std::vector<int> parse_list(std::string_view s, std::string_view what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

DegreeData parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return DegreeData(j.at("n").get<int>(), j.at("alphas").get<std::vector<int>>(),
                      j.at("betas").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("malformed degree data JSON: ") + e.what());
  }
}

}  // namespace

DegreeData::DegreeData(int n, std::vector<int> alphas, std::vector<int> betas)
    : n_(n), alphas_(std::move(alphas)), betas_(std::move(betas)) {
  std::sort(alphas_.begin(), alphas_.end());
  std::sort(betas_.begin(), betas_.end());
  if (n_ < 2) throw StructuralError("n must be at least 2, got " + std::to_string(n_));
  if (betas_.empty()) throw StructuralError("b = 0: the target bundle B must have rank >= 1");
  if (a() < b()) {
    throw StructuralError("a < b: need at least as many source summands as target summands (a=" +
                          std::to_string(a()) + ", b=" + std::to_string(b()) + ")");
  }
  if (c() > n_) {
    throw StructuralError("codimension a-b+1=" + std::to_string(c()) + " exceeds n=" +
                          std::to_string(n_) + ": the degeneracy locus would be empty");
  }
}

bool DegreeData::homogeneous() const {
  const int d = alphas_.front();
  return d >= 1 && alphas_.back() == d &&
         std::all_of(betas_.begin(), betas_.end(), [](int x) { return x == 0; });
}

std::string DegreeData::to_string() const {
  return "n=" + std::to_string(n_) + " a=" + join(alphas_) + " b=" + join(betas_);
}

std::optional<std::string> standard_failure(const DegreeData& d) {
  bool strict = false;
  for (int i = 0; i < d.b(); ++i) {
    if (d.alpha(i) < d.beta(i)) {
      return "alpha_i >= beta_i for all i (fails at i=" + std::to_string(i + 1) + ": " +
             std::to_string(d.alpha(i)) + " < " + std::to_string(d.beta(i)) + ")";
    }
    strict = strict || d.alpha(i) > d.beta(i);
  }
  if (!strict) return std::string("alpha_i > beta_i for some i");
  return std::nullopt;
}

std::optional<std::string> main_failure(const DegreeData& d) {
  for (int i = 0; i + 1 < d.b(); ++i) {
    if (d.alpha(i) < d.beta(i + 1)) {
      return "alpha_i >= beta_{i+1} for all i < b (fails at i=" + std::to_string(i + 1) + ": " +
             std::to_string(d.alpha(i)) + " < " + std::to_string(d.beta(i + 1)) + ")";
    }
  }
  for (int i = 0; i < d.b(); ++i) {
    if (d.alpha(i) > d.beta(i)) return std::nullopt;
  }
  return std::string("alpha_i > beta_i for some i");
}

bool validate_standard(const DegreeData& d) { return !standard_failure(d).has_value(); }
bool validate_main(const DegreeData& d) { return !main_failure(d).has_value(); }

DerivedInvariants derive(const DegreeData& d) {
  const long long sa = std::accumulate(d.alphas().begin(), d.alphas().end(), 0LL);
  const long long sb = std::accumulate(d.betas().begin(), d.betas().end(), 0LL);
  return {d.c(), d.dim_x(), sa - sb};
}

TheoremScope theorem_scope(const DegreeData& d) {
  TheoremScope s;
  s.numerical = validate_main(d) && d.b() <= d.a() - 1;
  s.part_i = s.numerical && d.dim_x() >= 1;
  s.part_ii = s.numerical && d.dim_x() >= 2;
  s.part_iii = s.part_ii && d.betas().back() < d.alphas().front();
  return s;
}

DegreeData parse_degree_data(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw StructuralError("empty degree data");
  if (text[first] == '{') return parse_json(text.substr(first));

  std::optional<int> n;
  std::optional<std::vector<int>> alphas, betas;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw StructuralError("expected key=value, got '" + token + "'");
    std::string_view key(token.data(), eq);
    std::string_view value(token.data() + eq + 1, token.size() - eq - 1);
    if (key == "n") {
      n = parse_int(value, "n");
    } else if (key == "a" || key == "alphas") {
      alphas = parse_list(value, "alphas");
    } else if (key == "b" || key == "betas") {
      betas = parse_list(value, "betas");
    } else {
      throw StructuralError("unknown key '" + std::string(key) + "' (expected n, a, b)");
    }
  }
  if (!n || !alphas || !betas) throw StructuralError("degree data needs n=, a= and b=");
  return DegreeData(*n, std::move(*alphas), std::move(*betas));
}

}  // namespace detscheme
