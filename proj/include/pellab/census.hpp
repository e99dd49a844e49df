#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pellab/hurwitz.hpp"

namespace pellab {

/// How sigma1*tau looks for a special d = 2 tuple: n-1 disjoint
/// transpositions, or a 3-cycle / 4-cycle formed where tau meets sigma1.
enum class ShapeCase { Disjoint = 0, ThreeCycle = 1, FourCycle = 2 };

inline constexpr std::array<ShapeCase, 3> kShapeCases{ShapeCase::Disjoint, ShapeCase::ThreeCycle,
                                                      ShapeCase::FourCycle};

std::string_view to_string(ShapeCase c);

/// Parameters of one shape. Disjoint uses h (tau = (h, 2n-h)); ThreeCycle
/// uses h, k and the 3-cycle (2n-h, h, k); FourCycle uses h, k1, k2 and the
/// 4-cycle (2n-h, h, k1, k2). tau_choice indexes the admissible splittings:
/// ThreeCycle {(h,k), (h,2n-h), (k,2n-h)}, FourCycle {(h,k2), (k1,2n-h)}.
struct ShapeParams {
  ShapeCase kind = ShapeCase::Disjoint;
  int h = 0;
  int k = 0;
  int k1 = 0;
  int k2 = 0;
  int tau_choice = 0;
};

struct ShapedTuple {
  ShapeParams params;
  HurwitzTuple tuple;
};

/// The permutation sigma1 followed by tau (as maps: tau(sigma1(x))).
Perm sigma1_tau(const HurwitzTuple& t);

/// Case of a special d = 2 tuple, read off the cycle type of sigma1_tau.
ShapeCase shape_case(const HurwitzTuple& t);

/// Every special 4-tuple built from the explicit shape formulas.
std::vector<ShapedTuple> enumerate_shapes(int n);

inline constexpr int kDefaultBruteForceMax = 8;

/// Ground truth: all special d = 2 four-tuples, found by running over every
/// fixed-point-free involution sigma0 of {1..2n}. Work is split by the image
/// of 1 and spread over `threads` workers (0 = hardware concurrency); the
/// result is sorted, so it does not depend on scheduling.
/// Throws Error(TooLarge) when n > max_n, Error(InvalidArgument) for n < 2.
std::vector<HurwitzTuple> brute_force_enumerate(int n, int max_n = kDefaultBruteForceMax,
                                                unsigned threads = 0);

/// Lexicographic key over the image sequences of sigma0, sigma1 and taus.
std::vector<int> tuple_key(const HurwitzTuple& t);

/// Least special conjugate under powers of sigmaInf. Equal canonical forms
/// are exactly the special tuples of one conjugacy class.
HurwitzTuple canonical_form(const HurwitzTuple& t);

/// Number of distinct special tuples conjugate to t.
int special_orbit_size(const HurwitzTuple& t);

struct ConjugacyClass {
  HurwitzTuple representative;  // lexicographically least member
  std::vector<HurwitzTuple> members;
};

/// Groups special tuples of a common n into classes; classes are ordered by
/// their representatives.
std::vector<ConjugacyClass> conjugacy_classes(std::span<const HurwitzTuple> tuples);

struct CaseCounts {
  long disjoint = 0;
  long three_cycle = 0;
  long four_cycle = 0;

  long get(ShapeCase c) const;
  long& at(ShapeCase c);
  friend bool operator==(const CaseCounts&, const CaseCounts&) = default;
};

struct ClosedFormulas {
  CaseCounts classes;
  long c1 = 0;  // ordered (h, k1, k2) configurations of the 4-cycle case
  long c2 = 0;  // square configurations (h, n-h, n+h, 2n-h), n even
  /// FourCycle is a half-integer when C1 (+ C2) is odd; it is then rounded
  /// down and this flag is set.
  bool four_cycle_fractional = false;
};

ClosedFormulas closed_formulas(int n);

struct PrimitiveDisjoint {
  int count = 0;
  std::vector<ConjugacyClass> classes;
};

/// Disjoint-case classes whose tau = (h, 2n-h) has gcd(h, n) = 1.
PrimitiveDisjoint primitive_disjoint_classes(int n);

enum class DiscrepancyKind {
  ShapeVsBrute,     // tuple sets or class counts differ
  FormulaVsCount,   // closed formula differs from the ground-truth class count
  ClassSize,        // a class has an unexpected number of special tuples
  PrimitiveCount,   // primitive disjoint classes differ from phi(n)/2
};

std::string_view to_string(DiscrepancyKind k);

struct Discrepancy {
  DiscrepancyKind kind;
  std::string what;
  std::string left_name;
  long left = 0;
  std::string right_name;
  long right = 0;
  std::vector<HurwitzTuple> offending;
};

struct CaseReport {
  long shape_tuples = 0;
  long shape_classes = 0;
  std::optional<long> brute_tuples;
  std::optional<long> brute_classes;
  long formula_classes = 0;
  std::map<int, int> class_sizes;  // size -> number of classes (ground truth set)
};

struct CensusReport {
  int n = 0;
  std::array<CaseReport, 3> cases;
  long c1 = 0;
  long c2 = 0;
  int primitive_disjoint = 0;
  bool brute_force_ran = false;
  std::vector<Discrepancy> discrepancies;

  const CaseReport& of(ShapeCase c) const { return cases[static_cast<std::size_t>(c)]; }
  /// A discrepancy between shape enumeration and brute force.
  bool shape_brute_mismatch() const;
};

struct CensusOptions {
  bool brute_force = true;
  int brute_max = kDefaultBruteForceMax;
  unsigned threads = 0;
};

/// Shape, brute-force (when n <= brute_max) and formula counts per case.
/// Disagreements are listed, never reconciled.
CensusReport census(int n, const CensusOptions& options = {});

nlohmann::json to_json(const CensusReport& report);

}  // namespace pellab
