#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "detscheme/graded_oracle.hpp"
#include "detscheme/report_json.hpp"

namespace detscheme {

struct SuiteParams {
  std::size_t size = 200;
  int max_n = 8;
  int max_a = 7;
  int max_spread = 4;   // all twists lie in [base, base + max_spread]
  int min_dim_x = 2;
  int min_c = 2;
  std::uint64_t master_seed = 1;
};

/// Instance i is drawn from an RNG seeded with mix_seed(master_seed + i) by
/// rejection until it satisfies the standard condition and the caps.
DegreeData random_instance(const SuiteParams& params, std::uint64_t instance_seed);
std::vector<DegreeData> random_suite(const SuiteParams& params);

struct FormulaIdentityRecord {
  DegreeData data;
  DimensionReport report;
  BigInt h0_f;

  bool identity() const { return h0_f == report.dim_y; }
};
FormulaIdentityRecord formula_identity(const DegreeData& d);
json to_json(const FormulaIdentityRecord& r);

enum class CorpusMode { formula, oracle };

struct CorpusConfig {
  CorpusMode mode = CorpusMode::formula;
  SuiteParams suite;
  std::vector<DegreeData> instances;  // when non-empty, replaces the random suite
  VerifyConfig verify;                // seed is overridden per instance
  unsigned threads = 0;               // 0: worker_threads()
};

struct CorpusLine {
  json record;
  bool passed = false;
  std::vector<std::string> summary;  // instance, formula, tangent, orbit, match
};

/// Output is ordered by instance index regardless of completion order.
std::vector<CorpusLine> run_corpus(const CorpusConfig& cfg);

/// DETSCHEME_THREADS if set and positive, else hardware concurrency.
unsigned worker_threads();

/// Runs task(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

}  // namespace detscheme
