// detscheme: dimension of the Hilbert scheme component of determinantal
// subvarieties, and finite-field checks of that number.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "detscheme/corpus.hpp"
#include "detscheme/graded_oracle.hpp"
#include "detscheme/report_json.hpp"
#include "detscheme/sheaf_numerics.hpp"

using namespace detscheme;

namespace {

enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kStructural = 2,
  kNotStandard = 3,
  kHypersurface = 4,
  kResampling = 5,
  kStabilization = 6,
};

constexpr const char* kDataHelp =
    "degree data, either tokens like  n=4 a=1,1,1 b=0,0  or JSON {\"n\":4,\"alphas\":[1,1,1],\"betas\":[0,0]}";

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Writes to --out when given, else stdout.
class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

private:
  std::ofstream file_;
};

struct Common {
  std::vector<std::string> data;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  std::optional<int> bound;
  std::optional<int> window;
  std::string format;
  std::string out;
};

void print_dim_text(std::ostream& os, const DegreeData& d) {
  const auto inv = derive(d);
  const auto scope = theorem_scope(d);
  os << "instance: " << d.to_string() << "\n"
     << "standard condition: " << yes_no(validate_standard(d)) << "\n"
     << "interlacing condition: " << yes_no(validate_main(d)) << "\n"
     << "c: " << inv.c << "\n"
     << "dim_x: " << inv.dim_x << "\n"
     << "ell: " << inv.ell << "\n";
  if (auto why = standard_failure(d)) return;
  const auto r = dim_y(d);
  os << "lambda_c: " << r.lambda_c << "\n" << "k_terms: [";
  for (std::size_t i = 0; i < r.k_terms.size(); ++i) os << (i ? ", " : "") << r.k_terms[i];
  os << "]\n" << "dim_y: " << r.dim_y << "\n";
  os << "corollary: " << (r.corollary_value ? r.corollary_value->str() : std::string("n/a")) << "\n";
  os << "canonical: " << r.canonical_h << "*H + " << r.canonical_p << "*P\n";
  os << "theorem: generically finite " << yes_no(scope.part_i) << ", generically smooth component "
     << yes_no(scope.part_ii) << ", birational " << yes_no(scope.part_iii) << "\n";
}

int cmd_dim(const Common& o) {
  const auto d = parse_degree_data(join_tokens(o.data));
  Output out(o.out);
  if (o.format == "json") {
    json j = {{"instance", d.to_string()},
              {"degree_data", to_json(d)},
              {"standard", validate_standard(d)},
              {"interlacing", validate_main(d)}};
    const auto inv = derive(d);
    j["c"] = inv.c;
    j["dim_x"] = inv.dim_x;
    j["ell"] = inv.ell;
    if (validate_standard(d)) {
      j["report"] = to_json(dim_y(d));
      const auto s = theorem_scope(d);
      j["theorem"] = {{"generically_finite", s.part_i},
                      {"generically_smooth_component", s.part_ii},
                      {"birational", s.part_iii}};
    }
    out.stream() << j.dump(2) << "\n";
  } else {
    print_dim_text(out.stream(), d);
  }
  if (auto why = standard_failure(d)) {
    std::cerr << "error: standard condition fails: " << *why << "\n";
    return kNotStandard;
  }
  return kOk;
}

int cmd_ft(const Common& o, long long t_min, long long t_max) {
  const auto d = parse_degree_data(join_tokens(o.data));
  if (auto why = standard_failure(d)) {
    std::cerr << "error: standard condition fails: " << *why << "\n";
    return kNotStandard;
  }
  if (d.c() < 2) {
    std::cerr << "error: c = 1 (square matrix): the cokernel has no Buchsbaum-Rim tail, f(t) "
                 "is not defined by this route\n";
    return kHypersurface;
  }
  Output out(o.out);
  out.stream() << "t\tf(t)\n";
  for (long long t = t_min; t <= t_max; ++t) out.stream() << t << "\t" << cokernel_f(d, t) << "\n";
  if (d.dim_x() >= 2) {
    const auto h0 = h0_F(d);
    const auto dy = dim_y(d).dim_y;
    out.stream() << "h0_F = " << h0 << (h0 == dy ? " == " : " != ") << "dim_y " << dy << "\n";
    if (h0 != dy) return kMismatch;
  }
  return kOk;
}

void print_record_text(std::ostream& os, const VerificationRecord& r) {
  const auto m = r.matches();
  auto check = [&](const char* name, bool ok, bool asserted, const std::string& detail) {
    os << (asserted ? (ok ? "PASS " : "FAIL ") : "note ") << name << ": " << detail << "\n";
  };
  os << "instance: " << r.data.to_string() << "  prime " << r.prime << "  seed " << r.seed
     << "  attempts " << r.attempts << "\n";
  os << "hilbert function:";
  for (auto [t, v] : r.hf_table) os << " " << t << ":" << v;
  os << "\n";
  check("codimension", m.codim, true,
        "fitted dim " + std::to_string(r.fitted_dim) + " (expected " +
            std::to_string(r.data.dim_x()) + "), degree " + std::to_string(r.fitted_degree));
  check("orbit", m.orbit, m.asserted_orbit,
        std::to_string(r.orbit_space_dim) + " vs formula " + std::to_string(r.formula_dim) +
            " (stabilizer " + std::to_string(r.stab_dim) + ")");
  if (m.asserted_tangent_at_least) {
    check("tangent>=", m.tangent_at_least, true,
          std::to_string(r.tangent_dim) + " vs formula " + std::to_string(r.formula_dim));
  } else {
    check("tangent", m.tangent, m.asserted_tangent,
          std::to_string(r.tangent_dim) + " vs formula " + std::to_string(r.formula_dim) +
              " (syzygy bound " + std::to_string(r.syzygy_bound) + ")");
  }
}

int cmd_verify(const Common& o, std::optional<std::uint32_t> also_prime) {
  const auto d = parse_degree_data(join_tokens(o.data));
  if (auto why = standard_failure(d)) {
    std::cerr << "error: standard condition fails: " << *why << "\n";
    return kNotStandard;
  }
  std::vector<std::uint32_t> primes{o.prime};
  if (also_prime) primes.push_back(*also_prime);
  for (auto p : primes) PrimeField check(p);  // config validation before any work

  Output out(o.out);
  bool ok = true;
  std::optional<VerificationMatches> first;
  for (auto p : primes) {
    VerifyConfig cfg{.prime = p, .seed = o.seed, .bound = o.bound, .window = o.window};
    const auto rec = verify(d, cfg);
    if (o.format == "json") {
      out.stream() << to_json(rec).dump() << "\n";
    } else {
      print_record_text(out.stream(), rec);
    }
    const auto m = rec.matches();
    ok = ok && m.all_asserted_hold();
    if (first && !(*first == m)) {
      std::cerr << "warning: match flags differ between primes\n";
      ok = false;
    }
    first = m;
  }
  return ok ? kOk : kMismatch;
}

std::vector<DegreeData> read_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path);
  std::vector<DegreeData> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_degree_data(line));
  }
  return out;
}

int cmd_corpus(const Common& o, CorpusConfig cfg, const std::string& mode,
               const std::string& instances_path) {
  cfg.mode = mode == "oracle" ? CorpusMode::oracle : CorpusMode::formula;
  cfg.suite.master_seed = o.seed;
  cfg.verify.prime = o.prime;
  cfg.verify.bound = o.bound;
  cfg.verify.window = o.window;
  PrimeField check(o.prime);
  if (!instances_path.empty()) {
    cfg.instances = read_instances(instances_path);
    if (cfg.instances.empty()) cfg.suite.size = 0;
  }
  const auto lines = run_corpus(cfg);

  Output out(o.out);
  std::size_t passed = 0;
  for (const auto& l : lines) passed += l.passed;
  std::ostream& table = (o.format == "tsv" || out.to_file()) ? (o.format == "tsv" ? out.stream() : std::cout)
                                                              : std::cerr;
  if (o.format != "tsv") {
    for (const auto& l : lines) out.stream() << l.record.dump() << "\n";
  }
  if (!lines.empty()) {
    table << "instance\tformula\ttangent\torbit\tmatch\n";
    for (const auto& l : lines) {
      for (std::size_t k = 0; k < l.summary.size(); ++k) table << (k ? "\t" : "") << l.summary[k];
      table << "\n";
    }
  }
  table << "passed " << passed << "/" << lines.size() << "\n";
  return passed == lines.size() ? kOk : kMismatch;
}

int cmd_export(const Common& o) {
  const auto d = parse_degree_data(join_tokens(o.data));
  if (auto why = standard_failure(d)) {
    std::cerr << "error: standard condition fails: " << *why << "\n";
    return kNotStandard;
  }
  const PrimeField field(o.prime);
  const auto ideal = maximal_minors(random_phi(d, field, o.seed));
  const auto text = ideal_presentation(ideal);
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream txt(o.out);
  if (!txt) throw std::runtime_error("cannot open output file " + o.out);
  txt << text;
  json side = {{"instance", d.to_string()},
               {"degree_data", to_json(d)},
               {"prime", field.modulus()},
               {"seed", o.seed},
               {"variables", "x0..x" + std::to_string(d.n())},
               {"degrees", ideal.degrees},
               {"expected_dim_y", bigint_to_json(dim_y(d).dim_y)},
               {"ideal", to_json(ideal)}};
  std::ofstream js(o.out + ".json");
  if (!js) throw std::runtime_error("cannot open output file " + o.out + ".json");
  js << side.dump(2) << "\n";
  return kOk;
}

void add_field_options(CLI::App* app, Common& o) {
  app->add_option("--prime", o.prime, "prime modulus (> 1000)")->capture_default_str();
  app->add_option("--seed", o.seed, "random seed")->capture_default_str();
}

void add_bound_options(CLI::App* app, Common& o) {
  app->add_option("--bound", o.bound, "syzygy degree bound (default: Eagon-Northcott syzygy degree)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--window", o.window, "first degree of the Hilbert-function window")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert scheme dimensions of determinantal subvarieties of P^n"};
  app.require_subcommand(1);
  Common o;
  long long t_min = -1, t_max = 2;
  std::optional<std::uint32_t> also_prime;
  CorpusConfig corpus_cfg;
  std::string mode = "formula", instances_path;

  auto* dim = app.add_subcommand("dim", "closed-form dimension report");
  dim->add_option("data", o.data, kDataHelp)->required();
  dim->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  dim->add_option("--out", o.out, "output file");

  auto* ft = app.add_subcommand("ft", "TSV table of f(t) = h0(C(t)) and the h0(F) identity line");
  ft->add_option("data", o.data, kDataHelp)->required();
  ft->add_option("--from", t_min, "first t")->capture_default_str();
  ft->add_option("--to", t_max, "last t")->capture_default_str();
  ft->add_option("--out", o.out, "output file");

  auto* ver = app.add_subcommand("verify", "check the formula against finite-field oracles");
  ver->add_option("data", o.data, kDataHelp)->required();
  add_field_options(ver, o);
  add_bound_options(ver, o);
  ver->add_option("--also-prime", also_prime, "repeat the run over a second prime");
  ver->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", o.out, "output file");

  auto* cor = app.add_subcommand(
      "corpus",
      "batch runner writing one JSON record per line. Instance i uses seed "
      "splitmix64(seed + i), so any line can be re-run alone.");
  cor->add_option("--mode", mode, "formula (h0_F == dim_y) or oracle (verify)")
      ->check(CLI::IsMember({"formula", "oracle"}))
      ->capture_default_str();
  cor->add_option("--instances", instances_path, "file with one instance per line");
  add_field_options(cor, o);
  add_bound_options(cor, o);
  cor->add_option("--suite-size", corpus_cfg.suite.size, "random instances")->capture_default_str();
  cor->add_option("--max-n", corpus_cfg.suite.max_n)->check(CLI::Range(2, 8))->capture_default_str();
  cor->add_option("--max-a", corpus_cfg.suite.max_a)->check(CLI::Range(2, 7))->capture_default_str();
  cor->add_option("--max-spread", corpus_cfg.suite.max_spread)->check(CLI::Range(0, 8))->capture_default_str();
  cor->add_option("--format", o.format, "jsonl or tsv")->check(CLI::IsMember({"jsonl", "tsv"}));
  cor->add_option("--out", o.out, "output file (default stdout; summary goes to stderr)");

  auto* exp = app.add_subcommand("export", "write the minors of a random phi as plain text (+ JSON sidecar)");
  exp->add_option("data", o.data, kDataHelp)->required();
  add_field_options(exp, o);
  exp->add_option("--out", o.out, "text file; metadata goes to <out>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kStructural;
  }

  try {
    if (dim->parsed()) return cmd_dim(o);
    if (ft->parsed()) return cmd_ft(o, t_min, t_max);
    if (ver->parsed()) return cmd_verify(o, also_prime);
    if (cor->parsed()) return cmd_corpus(o, corpus_cfg, mode, instances_path);
    if (exp->parsed()) return cmd_export(o);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStructural;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStructural;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotStandard;
  } catch (const ResamplingExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResampling;
  } catch (const StabilizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStabilization;
  }
  return kOk;
}
