#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detscheme/errors.hpp"

namespace detscheme {

struct DerivedInvariants {
  int c = 0;           // expected codimension a - b + 1
  int dim_x = 0;       // n + b - a - 1
  long long ell = 0;   // sum(alphas) - sum(betas)

  bool operator==(const DerivedInvariants&) const = default;
};

/// Twist data of a morphism  A = sum O(-alpha_j) -> B = sum O(-beta_i)  on P^n.
///
/// Both sequences are stored sorted non-decreasingly; the constructor sorts
/// whatever it is given. Structural problems (n < 2, b = 0, a < b, a - b + 1 > n)
/// throw StructuralError. Whether the data satisfies the numerical hypotheses
/// is a separate question answered by validate_standard / validate_main.
class DegreeData {
public:
  DegreeData(int n, std::vector<int> alphas, std::vector<int> betas);

  int n() const { return n_; }
  int a() const { return static_cast<int>(alphas_.size()); }
  int b() const { return static_cast<int>(betas_.size()); }
  int c() const { return a() - b() + 1; }
  int dim_x() const { return n_ - c(); }
  int nvars() const { return n_ + 1; }

  std::span<const int> alphas() const { return alphas_; }
  std::span<const int> betas() const { return betas_; }
  int alpha(int j) const { return alphas_[j]; }  // 0-based
  int beta(int i) const { return betas_[i]; }    // 0-based

  bool homogeneous() const;  // all alphas equal d >= 1 and all betas zero

  /// Canonical textual form, e.g. "n=4 a=1,1,1 b=0,0".
  std::string to_string() const;

  bool operator==(const DegreeData&) const = default;

private:
  int n_;
  std::vector<int> alphas_;
  std::vector<int> betas_;
};

/// alpha_i >= beta_i for all i <= b, strictly for at least one i.
bool validate_standard(const DegreeData& d);

/// alpha_i >= beta_{i+1} for all i < b, and alpha_i > beta_i for some i <= b.
bool validate_main(const DegreeData& d);

/// Human-readable name of the first failing clause, or nullopt if it holds.
std::optional<std::string> standard_failure(const DegreeData& d);
std::optional<std::string> main_failure(const DegreeData& d);

DerivedInvariants derive(const DegreeData& d);

/// Which parts of the dimension theorem have their hypotheses met.
struct TheoremScope {
  bool numerical = false;  // condition checked by validate_main, plus b <= a - 1
  bool part_i = false;     // ... and dim_x >= 1: F generically finite
  bool part_ii = false;    // ... and dim_x >= 2: component generically smooth
  bool part_iii = false;   // ... and beta_b < alpha_1: F birational
};
TheoremScope theorem_scope(const DegreeData& d);

/// Accepts the canonical text form ("n=4 a=1,1,1 b=0,0", tokens in any order)
/// or the JSON form {"n":4,"alphas":[1,1,1],"betas":[0,0]}.
DegreeData parse_degree_data(std::string_view text);

}  // namespace detscheme
