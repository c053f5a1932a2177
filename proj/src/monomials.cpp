#include "detscheme/monomials.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace detscheme {

namespace {

std::size_t choose(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / i;
  return r;
}

void enumerate(int nvars, int degree, std::vector<Exponent>& out, std::vector<Exponent>& cur,
               int pos, int remaining) {
  if (pos == nvars - 1) {
    cur[pos] = static_cast<Exponent>(remaining);
    out.insert(out.end(), cur.begin(), cur.end());
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = static_cast<Exponent>(e);
    enumerate(nvars, degree, out, cur, pos + 1, remaining - e);
  }
}

}  // namespace

std::size_t monomial_count(int nvars, int degree) {
  if (degree < 0 || nvars <= 0) return degree == 0 && nvars == 0 ? 1 : 0;
  return choose(degree + nvars - 1, nvars - 1);
}

MonomialBasis::MonomialBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree), size_(monomial_count(nvars, degree)) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("MonomialBasis: bad shape");
  exps_.reserve(size_ * nvars_);
  std::vector<Exponent> cur(nvars_);
  enumerate(nvars_, degree_, exps_, cur, 0, degree_);
}

std::size_t MonomialBasis::index_of(std::span<const Exponent> e) const {
  // Monomials sharing the prefix e_0..e_{i-1} but with a larger e_i come first;
  // there are monomial_count(nvars - i, rem - e_i - 1) of them.
  std::size_t rank = 0;
  int rem = degree_;
  for (int i = 0; i + 1 < nvars_; ++i) {
    rank += monomial_count(nvars_ - i, rem - e[i] - 1);
    rem -= e[i];
  }
  return rank;
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(nvars, degree);
  return slot;
}

std::shared_ptr<const std::vector<std::uint32_t>> product_table(int nvars, int d1, int d2) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const std::vector<std::uint32_t>>>
      cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({nvars, d1, d2});
    if (it != cache.end()) return it->second;
  }
  auto b1 = MonomialBasis::get(nvars, d1);
  auto b2 = MonomialBasis::get(nvars, d2);
  auto b12 = MonomialBasis::get(nvars, d1 + d2);
  auto table = std::make_shared<std::vector<std::uint32_t>>(b1->size() * b2->size());
  std::vector<Exponent> e(nvars);
  for (std::size_t i = 0; i < b1->size(); ++i) {
    auto ei = b1->exponent(i);
    for (std::size_t j = 0; j < b2->size(); ++j) {
      auto ej = b2->exponent(j);
      for (int v = 0; v < nvars; ++v) e[v] = static_cast<Exponent>(ei[v] + ej[v]);
      (*table)[i * b2->size() + j] = static_cast<std::uint32_t>(b12->index_of(e));
    }
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_tuple(nvars, d1, d2), std::move(table));
  return it->second;
}

}  // namespace detscheme
