#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "pellab/poly.hpp"

namespace pellab {

/// Why a candidate triple is not accepted as a Pell-Abel solution. These are
/// answers about valid input, not failures.
enum class RejectionReason {
  NotUnit,            // A^2 - D*B^2 != 1
  ZeroB,              // B == 0
  OddDegreeD,         // deg D odd (or D == 0)
  DegreeBelowPolicy,  // deg D == 2 without allow_d1, or deg D == 0
  NonSquarefreeD,     // discriminant(D) == 0
};

std::string_view to_string(RejectionReason reason);

struct PellPolicy {
  /// Accept deg D == 2 (d == 1). Off by default: the theory needs deg D >= 4.
  bool allow_d1 = false;
};

/// A verified triple with A^2 - D*B^2 == 1, deg A == n, deg D == 2d.
struct PellSolution {
  Poly A;
  Poly B;
  Poly D;
  int n = 0;
  int d = 0;
};

using PellVerdict = std::variant<PellSolution, RejectionReason>;

PellVerdict verify_pell(const Poly& A, const Poly& B, const Poly& D, PellPolicy policy = {});

/// Chebyshev polynomial of the first kind via T_(k+1) = 2t*T_k - T_(k-1).
Poly chebyshev(unsigned m);

/// f_m with f_m(t^2) == T_m(t)^2; deg f_m == m. Throws for m == 0.
Poly power_polynomial(unsigned m);

/// (A_m, B_m) with A_m + sqrt(D)*B_m == (A + sqrt(D)*B)^m. m >= 1.
PellSolution power_solution(const PellSolution& sol, unsigned m);

/// Builds (A, B, D) from A alone: D is the product of the odd-multiplicity
/// squarefree factors of A^2 - 1 (monic), B the square root of the cofactor.
PellVerdict generate_from_seed(const Poly& A, PellPolicy policy = {});

/// A' with T_m(A') == A or T_m(A') == -A, solved from the top coefficient
/// down and confirmed by full composition. Requires m >= 2 and m | deg A.
std::optional<Poly> extract_mth_root(const Poly& A, unsigned m);

/// Given T_m(root) == +-sol.A, recovers B' with root^2 - D*B'^2 == 1.
std::optional<PellSolution> lift_root(const PellSolution& sol, const Poly& root);

struct PowerClassification {
  int n = 0;
  std::vector<int> admissible_m;   // m >= 2, m | n, n/m >= d
  std::map<int, Poly> witnesses;   // m -> A' with T_m(A') == +-A
  bool primitive = true;           // no rational witness for any admissible m
};

PowerClassification classify_powers(const PellSolution& sol);

/// True iff every critical point of f maps into `values`, i.e.
/// squarefree_part(f') divides prod_s (f - s). Requires deg f >= 2.
bool verify_branch_locus_in(const Poly& f, std::span<const Rat> values);

/// Ramification index -> number of preimages of c with that index.
std::map<int, int> ramification_type(const Poly& f, const Rat& c);

}  // namespace pellab
