#include "detscheme/graded_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "detscheme/dimension_formula.hpp"
#include "detscheme/linalg.hpp"

namespace detscheme {

namespace {

struct RowLabel {
  int generator;
  std::uint32_t multiplier;  // monomial index in degree t - d_k
};

// Rows g_k * m for every generator of degree <= t and every monomial m of
// degree t - d_k, in the degree-t monomial basis.
std::vector<Row> macaulay_rows(const GradedIdeal& ideal, int t, std::vector<RowLabel>* labels) {
  std::vector<Row> rows;
  const std::size_t width = monomial_count(ideal.nvars, t);
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    const int dk = ideal.degrees[k];
    if (dk > t) continue;
    const auto& g = ideal.generators[k];
    const std::size_t nm = monomial_count(ideal.nvars, t - dk);
    auto table = product_table(ideal.nvars, dk, t - dk);
    for (std::size_t m = 0; m < nm; ++m) {
      Row row(width, 0);
      for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        if (g.coeff(i)) row[(*table)[i * nm + m]] = g.coeff(i);
      }
      rows.push_back(std::move(row));
      if (labels) labels->push_back({static_cast<int>(k), static_cast<std::uint32_t>(m)});
    }
  }
  return rows;
}

// Degree-t slice of S/I: the reduced echelon form of I_t, the standard
// (non-pivot) monomials spanning the quotient, and normal forms of all
// degree-t monomials in that basis. Optionally the syzygies of degree t.
struct GradedPiece {
  int degree = 0;
  std::vector<std::uint32_t> standard;  // monomial indices of the quotient basis
  std::vector<long> position;           // monomial -> index in `standard` or -1
  std::vector<Row> normal_form;         // monomial -> coordinates in `standard`
  std::vector<RowLabel> labels;
  std::vector<Row> syzygies;            // over the Macaulay rows
};

GradedPiece graded_piece(const GradedIdeal& ideal, int t, bool want_syzygies) {
  GradedPiece piece;
  piece.degree = t;
  const std::size_t width = monomial_count(ideal.nvars, t);
  auto rows = macaulay_rows(ideal, t, &piece.labels);
  const std::size_t nrows = rows.size();
  const std::size_t tracked = want_syzygies ? nrows : 0;
  RowEchelon ech(ideal.field, width + tracked, width);
  for (std::size_t r = 0; r < nrows; ++r) {
    Row aug(width + tracked, 0);
    std::copy(rows[r].begin(), rows[r].end(), aug.begin());
    if (want_syzygies) aug[width + r] = 1;
    rows[r].clear();
    rows[r].shrink_to_fit();
    if (!ech.insert(aug) && want_syzygies) {
      piece.syzygies.emplace_back(aug.begin() + static_cast<long>(width), aug.end());
    }
  }
  piece.position.assign(width, -1);
  for (std::size_t mono = 0; mono < width; ++mono) {
    if (!ech.row_with_pivot(mono)) {
      piece.position[mono] = static_cast<long>(piece.standard.size());
      piece.standard.push_back(static_cast<std::uint32_t>(mono));
    }
  }
  const auto& f = ideal.field;
  piece.normal_form.assign(width, Row(piece.standard.size(), 0));
  for (std::size_t mono = 0; mono < width; ++mono) {
    if (piece.position[mono] >= 0) {
      piece.normal_form[mono][piece.position[mono]] = 1;
    } else {
      // pivot row reads  mono + sum_q r_q q  in I_t
      const Row& r = ech.row(*ech.row_with_pivot(mono));
      for (std::size_t q = 0; q < piece.standard.size(); ++q) {
        piece.normal_form[mono][q] = f.neg(r[piece.standard[q]]);
      }
    }
  }
  if (!want_syzygies) piece.labels.clear();
  return piece;
}


}  // namespace

long long hilbert_function(const GradedIdeal& ideal, int t) {
  if (t < 0) return 0;
  const std::size_t width = monomial_count(ideal.nvars, t);
  return static_cast<long long>(width - rank(ideal.field, macaulay_rows(ideal, t, nullptr), width));
}

long long HilbertFit::eval(long long t) const {
  long long v = 0;
  for (std::size_t k = 0; k < newton.size(); ++k) {
    // C(t - t0, k) as a polynomial in t: falling factorial / k!
    long long num = 1, x = t - window_start;
    for (std::size_t i = 0; i < k; ++i) num *= x - static_cast<long long>(i);
    long long fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<long long>(i);
    v += newton[k] * (num / fact);
  }
  return v;
}

HilbertFit fit_hilbert_polynomial(const GradedIdeal& ideal, int expected_dim, int window_start) {
  if (expected_dim < 0) throw std::invalid_argument("expected_dim must be non-negative");
  HilbertFit fit;
  fit.window_start = window_start;
  for (int k = 0; k <= expected_dim + 2; ++k) {
    fit.values.push_back(hilbert_function(ideal, window_start + k));
  }
  std::vector<long long> diff(fit.values.begin(), fit.values.begin() + expected_dim + 1);
  for (int k = 0; k <= expected_dim; ++k) {
    fit.newton.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  for (int k = expected_dim; k >= 0; --k) {
    if (fit.newton[k] != 0) {
      fit.fitted_dim = k;
      fit.fitted_degree = fit.newton[k];
      break;
    }
  }
  for (int k = expected_dim + 1; k <= expected_dim + 2; ++k) {
    const long long predicted = fit.eval(window_start + k);
    if (predicted != fit.values[k]) {
      throw StabilizationError("Hilbert function not yet polynomial on window starting at " +
                               std::to_string(window_start) + ": HF(" +
                               std::to_string(window_start + k) + ")=" +
                               std::to_string(fit.values[k]) + " but interpolant gives " +
                               std::to_string(predicted));
    }
  }
  return fit;
}

std::vector<long long> tangent_space_profile(const GradedIdeal& ideal, int max_bound) {
  const auto& f = ideal.field;
  // Unknown h_k lives in (S/I)_{d_k}; lay the coordinates out generator by generator.
  std::vector<GradedPiece> pieces_by_degree;
  auto piece_at = [&](int t) -> const GradedPiece& {
    for (const auto& p : pieces_by_degree)
      if (p.degree == t) return p;
    pieces_by_degree.push_back(graded_piece(ideal, t, false));
    return pieces_by_degree.back();
  };
  std::vector<std::size_t> offset(ideal.size() + 1, 0);
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    offset[k + 1] = offset[k] + piece_at(ideal.degrees[k]).standard.size();
  }
  const std::size_t unknowns = offset.back();
  // standard monomials per generator, copied so the vector above may grow
  std::vector<std::vector<std::uint32_t>> standard(ideal.size());
  for (std::size_t k = 0; k < ideal.size(); ++k) standard[k] = piece_at(ideal.degrees[k]).standard;
  pieces_by_degree.clear();

  RowEchelon constraints(f, unknowns);
  std::vector<long long> profile;
  const int min_degree =
      ideal.size() ? *std::min_element(ideal.degrees.begin(), ideal.degrees.end()) : 0;
  for (int D = 0; D <= max_bound; ++D) {
    if (D >= min_degree && ideal.size()) {
      const GradedPiece piece = graded_piece(ideal, D, true);
      const std::size_t nq = piece.standard.size();
      if (!piece.syzygies.empty() && nq && unknowns) {
        // image[row][q] = normal form of (multiplier of row) * (standard monomial q of h_k)
        std::vector<std::vector<Row>> image(piece.labels.size());
        for (std::size_t r = 0; r < piece.labels.size(); ++r) {
          const auto [k, m] = piece.labels[r];
          const int dk = ideal.degrees[k];
          auto table = product_table(ideal.nvars, D - dk, dk);
          const std::size_t ndk = monomial_count(ideal.nvars, dk);
          for (std::uint32_t q : standard[k]) image[r].push_back(piece.normal_form[(*table)[m * ndk + q]]);
        }
        const std::uint32_t p = f.modulus();
        const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
        const std::size_t budget = static_cast<std::size_t>(UINT64_MAX / sq - 1);
        for (const Row& lambda : piece.syzygies) {
          // block[qD][unknown] = sum_r lambda_r * image[r][q][qD]
          std::vector<std::vector<std::uint64_t>> block(nq, std::vector<std::uint64_t>(unknowns, 0));
          std::size_t pending = 0;
          for (std::size_t r = 0; r < lambda.size(); ++r) {
            const Coeff c = lambda[r];
            if (!c) continue;
            const int k = piece.labels[r].generator;
            for (std::size_t q = 0; q < image[r].size(); ++q) {
              const Row& nf = image[r][q];
              const std::size_t col = offset[k] + q;
              for (std::size_t qd = 0; qd < nq; ++qd) {
                if (nf[qd]) block[qd][col] += static_cast<std::uint64_t>(c) * nf[qd];
              }
            }
            if (++pending == budget) {
              for (auto& b : block)
                for (auto& x : b) x %= p;
              pending = 0;
            }
          }
          for (auto& b : block) {
            Row row(unknowns);
            for (std::size_t u = 0; u < unknowns; ++u) row[u] = static_cast<Coeff>(b[u] % p);
            constraints.insert(row);
          }
        }
      }
    }
    profile.push_back(static_cast<long long>(unknowns - constraints.rank()));
  }
  return profile;
}

long long tangent_space_dim(const GradedIdeal& ideal, int bound) {
  const auto profile = tangent_space_profile(ideal, bound + 1);
  if (profile[bound] != profile[bound + 1]) {
    throw StabilizationError("tangent space dimension moved from " +
                             std::to_string(profile[bound]) + " to " +
                             std::to_string(profile[bound + 1]) + " when the syzygy bound went " +
                             std::to_string(bound) + " -> " + std::to_string(bound + 1));
  }
  return profile[bound];
}

GroupCounts group_counts(int nvars, std::span<const int> alphas, std::span<const int> betas) {
  GroupCounts g;
  auto piece = [&](int deg) { return static_cast<long long>(monomial_count(nvars, deg)); };
  for (int a : alphas)
    for (int b : betas) {
      g.hom_ab += piece(a - b);
      g.hom_ba += piece(b - a);
    }
  for (int x : alphas)
    for (int y : alphas) g.end_a += piece(x - y);
  for (int x : betas)
    for (int y : betas) g.end_b += piece(x - y);
  return g;
}

long long stabilizer_lie_dim(const PolyMatrix& m) {
  const auto& f = m.field();
  const int nv = m.nvars();
  const int a = m.cols(), b = m.rows();
  auto alpha = m.col_degrees();
  auto beta = m.row_degrees();

  // Equation coordinates: entry (i, k) of phi u - v phi, degree alpha_k - beta_i.
  std::vector<std::size_t> eq_offset(static_cast<std::size_t>(a * b) + 1, 0);
  for (int i = 0; i < b; ++i)
    for (int k = 0; k < a; ++k) {
      const std::size_t idx = static_cast<std::size_t>(i * a + k);
      eq_offset[idx + 1] = eq_offset[idx] + monomial_count(nv, alpha[k] - beta[i]);
    }
  const std::size_t width = eq_offset.back();

  // Each unknown coefficient contributes one column of the linear map; store
  // them as rows and take the rank of the transpose.
  std::vector<Row> columns;
  // u_{jk} in S_{alpha_k - alpha_j}: (phi u)_{ik} += phi_{ij} u_{jk}
  for (int j = 0; j < a; ++j)
    for (int k = 0; k < a; ++k) {
      const int deg = alpha[k] - alpha[j];
      if (deg < 0) continue;
      const std::size_t nmu = monomial_count(nv, deg);
      for (std::size_t mu = 0; mu < nmu; ++mu) {
        Row col(width, 0);
        for (int i = 0; i < b; ++i) {
          const auto& e = m.entry(i, j);
          if (!e) continue;
          auto table = product_table(nv, e->degree(), deg);
          const std::size_t base = eq_offset[static_cast<std::size_t>(i * a + k)];
          for (std::size_t t = 0; t < e->coeffs().size(); ++t) {
            if (!e->coeff(t)) continue;
            auto& slot = col[base + (*table)[t * nmu + mu]];
            slot = f.add(slot, e->coeff(t));
          }
        }
        columns.push_back(std::move(col));
      }
    }
  // v_{il} in S_{beta_l - beta_i}: (v phi)_{ik} += v_{il} phi_{lk}, entering with a minus sign
  for (int i = 0; i < b; ++i)
    for (int l = 0; l < b; ++l) {
      const int deg = beta[l] - beta[i];
      if (deg < 0) continue;
      const std::size_t nmu = monomial_count(nv, deg);
      for (std::size_t mu = 0; mu < nmu; ++mu) {
        Row col(width, 0);
        for (int k = 0; k < a; ++k) {
          const auto& e = m.entry(l, k);
          if (!e) continue;
          auto table = product_table(nv, e->degree(), deg);
          const std::size_t base = eq_offset[static_cast<std::size_t>(i * a + k)];
          for (std::size_t t = 0; t < e->coeffs().size(); ++t) {
            if (!e->coeff(t)) continue;
            auto& slot = col[base + (*table)[t * nmu + mu]];
            slot = f.sub(slot, e->coeff(t));
          }
        }
        columns.push_back(std::move(col));
      }
    }
  const std::size_t n_unknowns = columns.size();
  return static_cast<long long>(n_unknowns - rank(f, std::move(columns), width));
}

long long orbit_space_dim(const PolyMatrix& m) {
  const auto g = group_counts(m.nvars(), m.col_degrees(), m.row_degrees());
  return g.hom_ab - g.end_a - g.end_b + stabilizer_lie_dim(m);
}

namespace {

// Sum of the `count` largest alphas.
long long top_alpha_sum(const DegreeData& d, int count) {
  long long s = 0;
  for (int j = d.a() - count; j < d.a(); ++j) s += d.alpha(j);
  return s;
}

long long beta_sum(const DegreeData& d) {
  return std::accumulate(d.betas().begin(), d.betas().end(), 0LL);
}

}  // namespace

int default_syzygy_bound(const DegreeData& d) {
  const long long top_generator = top_alpha_sum(d, d.b()) - beta_sum(d);
  long long bound = top_generator + 1;
  if (d.c() >= 2) {
    // wedge^{b+1} A (x) B^* (x) det B^*
    bound = std::max(bound, top_alpha_sum(d, d.b() + 1) - beta_sum(d) - d.beta(0));
  }
  return static_cast<int>(bound);
}

int default_hf_window(const DegreeData& d) {
  // Eagon-Northcott term k >= 1: wedge^{b+k-1} A (x) D_{k-1}(B^*) (x) det B^*.
  long long reg = 0;
  for (int k = 1; k <= d.c(); ++k) {
    const long long top = top_alpha_sum(d, d.b() + k - 1) - beta_sum(d) -
                          static_cast<long long>(k - 1) * d.beta(0);
    reg = std::max(reg, top - k);
  }
  return static_cast<int>(std::max(0LL, reg - d.dim_x()));
}

VerificationMatches VerificationRecord::matches() const {
  VerificationMatches m;
  m.codim = fitted_dim == data.dim_x();
  m.orbit = orbit_space_dim == formula_dim;
  m.tangent = tangent_dim == formula_dim;
  m.tangent_at_least = tangent_dim >= formula_dim;
  const auto scope = theorem_scope(data);
  m.asserted_orbit = scope.part_i;
  m.asserted_tangent = scope.part_ii;
  m.asserted_tangent_at_least = scope.part_i && !scope.part_ii;
  return m;
}

VerificationRecord verify(const DegreeData& d, const VerifyConfig& cfg) {
  const PrimeField field(cfg.prime);
  const auto report = dim_y(d);
  if (report.dim_y > std::numeric_limits<long long>::max()) {
    throw HypothesisError("formula dimension exceeds 64 bits; far beyond oracle scale");
  }
  VerificationRecord rec{.data = d};
  rec.prime = cfg.prime;
  rec.formula_dim = static_cast<long long>(report.dim_y);
  rec.syzygy_bound = cfg.bound.value_or(default_syzygy_bound(d));
  rec.hf_window_start = cfg.window.value_or(default_hf_window(d));
  rec.hf_window_end = rec.hf_window_start + d.dim_x() + 2;
  if (rec.syzygy_bound < 0 || rec.hf_window_start < 0) {
    throw std::invalid_argument("bound and window must be non-negative");
  }

  std::string trace;
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(attempt);
    rec.attempts = attempt + 1;
    const auto phi = random_phi(d, field, seed);
    const auto ideal = maximal_minors(phi);
    if (ideal.all_zero()) {
      trace += " seed " + std::to_string(seed) + ": all minors vanish;";
      continue;
    }
    const auto fit = fit_hilbert_polynomial(ideal, d.dim_x(), rec.hf_window_start);
    if (fit.fitted_dim != d.dim_x()) {
      trace += " seed " + std::to_string(seed) + ": fitted dimension " +
               std::to_string(fit.fitted_dim) + ";";
      continue;
    }
    rec.seed = seed;
    rec.hf_table.clear();
    for (std::size_t k = 0; k < fit.values.size(); ++k) {
      rec.hf_table.emplace_back(fit.window_start + static_cast<int>(k), fit.values[k]);
    }
    rec.hilbert_newton = fit.newton;
    rec.fitted_dim = fit.fitted_dim;
    rec.fitted_degree = fit.fitted_degree;
    const auto profile = tangent_space_profile(ideal, rec.syzygy_bound + 1);
    rec.tangent_dim = profile[rec.syzygy_bound];
    rec.tangent_dim_next = profile[rec.syzygy_bound + 1];
    if (rec.tangent_dim != rec.tangent_dim_next) {
      std::string steps;
      for (std::size_t D = 0; D < profile.size(); ++D) {
        steps += " D=" + std::to_string(D) + ":" + std::to_string(profile[D]);
      }
      throw StabilizationError("tangent space dimension not stable at syzygy bound " +
                               std::to_string(rec.syzygy_bound) + " (" + d.to_string() +
                               ", seed " + std::to_string(seed) + "); trace:" + steps);
    }
    rec.stab_dim = stabilizer_lie_dim(phi);
    const auto g = group_counts(phi.nvars(), phi.col_degrees(), phi.row_degrees());
    rec.orbit_space_dim = g.hom_ab - g.end_a - g.end_b + rec.stab_dim;
    return rec;
  }
  throw ResamplingExhausted("no generic sample for " + d.to_string() + " after " +
                            std::to_string(cfg.max_attempts) + " attempts:" + trace);
}

}  // namespace detscheme
