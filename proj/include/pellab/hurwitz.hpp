#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pellab/perm.hpp"

namespace pellab {

/// Monodromy tuple (sigma0, sigmaInf, sigma1, tau_1..tau_k) of a degree-2n
/// almost-Belyi cover attached to a solution with deg D = 2d.
struct HurwitzTuple {
  Perm sigma0;
  Perm sigma_inf;
  Perm sigma1;
  std::vector<Perm> taus;
  int n = 0;
  int d = 0;

  /// sigma0, sigmaInf, sigma1, tau_1, ..., tau_k in that order.
  std::vector<Perm> generators() const;

  friend bool operator==(const HurwitzTuple&, const HurwitzTuple&) = default;
};

/// The word sigma0 sigmaInf sigma1 tau_1 ... tau_k with its leftmost letter
/// acting first: x -> tau_k(...sigma1(sigmaInf(sigma0(x)))).
Perm tuple_product(const HurwitzTuple& t);

/// g^-1 * c * g applied to every component.
HurwitzTuple conjugate_tuple(const HurwitzTuple& t, const Perm& g);

enum class Check {
  Sizes,              // every member acts on 2n points
  ProductIdentity,
  Transitive,
  SigmaInfFullCycle,
  Sigma0FixedPointFree,
  Sigma0EvenCycles,
  Sigma1EvenCycles,
  FixedPointCount,    // sigma1 fixes exactly 2d points
  TauCount,           // k <= d - 1
  BranchingBudget,    // >= n over 0, >= n-d over 1, 2n-1 over inf, <= d-1 over taus
  TotalBranching,     // 4n - 2
};

std::string_view to_string(Check check);

struct CheckResult {
  Check check;
  bool passed;
};

struct BranchingBudget {
  int above_zero = 0;
  int above_one = 0;
  int above_infinity = 0;
  int above_taus = 0;
  int total() const { return above_zero + above_one + above_infinity + above_taus; }
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  BranchingBudget budget;

  bool ok() const;
  bool passed(Check check) const;
  std::vector<Check> failures() const;
};

ValidationReport validate(const HurwitzTuple& t);

/// sigmaInf = (2n, ..., 1), sigma0 = (1,2n)(2,2n-1)...(n,n+1),
/// sigma1 = (1,2n-1)(2,2n-2)...(n-d,n+d), tau_i = (n-i, n+i) for i < d.
/// Throws Error(DegreeOrder) unless n >= d >= 2.
HurwitzTuple zannier_tuple(int n, int d);

/// sigmaInf is the descending 2n-cycle and 2n is fixed by sigma1 and all taus.
bool is_special(const HurwitzTuple& t);

/// m >= 2 with m | n and n/m >= d.
std::vector<int> admissible_powers(int n, int d);

/// Block conditions for an m-th power on F_i = {x == i mod 2m}:
/// sigmaInf: F_i -> F_(i-1) (F_1 -> F_2m), sigma1: F_2m fixed and F_i -> F_(2m-i),
/// sigma0: F_i -> F_(2m-i+1), every tau fixes every F_i.
/// m == 1 is vacuously true. Throws Error(NotSpecialForm) for a non-special
/// tuple, Error(NotADivisor) unless m | n, Error(InvalidArgument) if n/m < d.
bool power_test(const HurwitzTuple& t, int m);

/// The admissible m for which power_test holds; empty means primitive.
std::vector<int> primitivity_profile(const HurwitzTuple& t);

/// Special-form conjugate. Special input is returned unchanged; otherwise the
/// smallest point fixed by sigma1 and every tau is rotated along sigmaInf to 2n.
HurwitzTuple normalize_special(const HurwitzTuple& t);

nlohmann::json to_json(const HurwitzTuple& t);
/// Reads {n, d, sigma0, sigmaInf, sigma1, taus} with cycle-notation strings.
HurwitzTuple tuple_from_json(const nlohmann::json& j);

}  // namespace pellab
