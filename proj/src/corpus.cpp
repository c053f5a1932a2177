#include "detscheme/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "detscheme/random.hpp"
#include "detscheme/sheaf_numerics.hpp"

namespace detscheme {

DegreeData random_instance(const SuiteParams& params, std::uint64_t instance_seed) {
  const int lowest_n = params.min_c + params.min_dim_x;
  if (params.max_n < std::max(2, lowest_n) || params.max_a < 2 || params.max_spread < 0) {
    throw std::invalid_argument("suite caps admit no instance");
  }
  std::mt19937_64 rng(instance_seed);
  for (int tries = 0; tries < 100000; ++tries) {
    const int n = static_cast<int>(uniform_between(rng, std::max(2, lowest_n), params.max_n));
    const int a = static_cast<int>(uniform_between(rng, 2, params.max_a));
    const int b = static_cast<int>(uniform_between(rng, 1, a - 1));
    const int c = a - b + 1;
    if (c < params.min_c || n - c < params.min_dim_x) continue;
    const int base = static_cast<int>(uniform_between(rng, -2, 2));
    std::vector<int> alphas(a), betas(b);
    for (auto& x : alphas) x = base + static_cast<int>(uniform_between(rng, 0, params.max_spread));
    for (auto& x : betas) x = base + static_cast<int>(uniform_between(rng, 0, params.max_spread));
    DegreeData d(n, std::move(alphas), std::move(betas));
    if (validate_standard(d)) return d;
  }
  throw std::runtime_error("random_instance: rejection sampling did not terminate");
}

std::vector<DegreeData> random_suite(const SuiteParams& params) {
  std::vector<DegreeData> out;
  out.reserve(params.size);
  for (std::size_t i = 0; i < params.size; ++i) {
    out.push_back(random_instance(params, mix_seed(params.master_seed + i)));
  }
  return out;
}

FormulaIdentityRecord formula_identity(const DegreeData& d) {
  return {d, dim_y(d), h0_F(d)};
}

json to_json(const FormulaIdentityRecord& r) {
  return {{"instance", r.data.to_string()},
          {"degree_data", to_json(r.data)},
          {"report", to_json(r.report)},
          {"h0_F", bigint_to_json(r.h0_f)},
          {"identity", r.identity()}};
}

unsigned worker_threads() {
  if (const char* env = std::getenv("DETSCHEME_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

CorpusLine formula_line(const DegreeData& d) {
  CorpusLine line;
  FormulaIdentityRecord r{d, {}, 0};
  try {
    r = formula_identity(d);
  } catch (const HypothesisError& e) {
    line.record = {{"instance", d.to_string()}, {"error", "hypothesis"}, {"detail", e.what()}};
    line.summary = {d.to_string(), "-", "-", "-", "ERROR"};
    return line;
  }
  line.record = to_json(r);
  line.passed = r.identity();
  line.summary = {d.to_string(), r.report.dim_y.str(), "-", "-", line.passed ? "yes" : "NO"};
  return line;
}

CorpusLine oracle_line(const DegreeData& d, const VerifyConfig& vc) {
  CorpusLine line;
  try {
    const auto rec = verify(d, vc);
    line.record = to_json(rec);
    line.passed = rec.matches().all_asserted_hold();
    line.summary = {d.to_string(), std::to_string(rec.formula_dim), std::to_string(rec.tangent_dim),
                    std::to_string(rec.orbit_space_dim), line.passed ? "yes" : "NO"};
  } catch (const HypothesisError& e) {
    line.record = {{"instance", d.to_string()}, {"error", "hypothesis"}, {"detail", e.what()}};
    line.summary = {d.to_string(), "-", "-", "-", "ERROR"};
  } catch (const ResamplingExhausted& e) {
    line.record = {{"instance", d.to_string()}, {"error", "resampling_exhausted"}, {"detail", e.what()}};
    line.summary = {d.to_string(), "-", "-", "-", "ERROR"};
  } catch (const StabilizationError& e) {
    line.record = {{"instance", d.to_string()}, {"error", "stabilization"}, {"detail", e.what()}};
    line.summary = {d.to_string(), "-", "-", "-", "ERROR"};
  }
  return line;
}

}  // namespace

std::vector<CorpusLine> run_corpus(const CorpusConfig& cfg) {
  const auto instances = cfg.instances.empty() ? random_suite(cfg.suite) : cfg.instances;
  std::vector<CorpusLine> lines(instances.size());
  parallel_for(instances.size(), cfg.threads ? cfg.threads : worker_threads(), [&](std::size_t i) {
    if (cfg.mode == CorpusMode::formula) {
      lines[i] = formula_line(instances[i]);
    } else {
      VerifyConfig vc = cfg.verify;
      vc.seed = mix_seed(cfg.suite.master_seed + i);
      lines[i] = oracle_line(instances[i], vc);
    }
  });
  return lines;
}

}  // namespace detscheme
