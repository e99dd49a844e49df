#include "pellab/census.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <map>
#include <cstdint>
#include <numeric>
#include <thread>

#include "pellab/error.hpp"

namespace pellab {

namespace {

using Cycles = std::vector<std::vector<int>>;

// Appends (lo, hi), (lo+1, hi-1), ... count pairs.
void add_pairs(Cycles& out, int lo, int hi, int count) {
  for (int j = 0; j < count; ++j) out.push_back({lo + j, hi - j});
}

HurwitzTuple assemble(int n, const Cycles& sigma0, const Cycles& product, const Perm& tau) {
  const std::size_t N = static_cast<std::size_t>(2 * n);
  const Perm pi = Perm::from_cycles(N, product);
  // pi = tau o sigma1 as maps, and tau is an involution.
  return HurwitzTuple{Perm::from_cycles(N, sigma0), Perm::descending_cycle(N),
                      compose_perm(tau, pi), {tau}, n, 2};
}

ShapedTuple disjoint_shape(int n, int h) {
  Cycles s0;
  add_pairs(s0, 1, 2 * n, n);
  Cycles pi;
  add_pairs(pi, 1, 2 * n - 1, n - 1);
  const Perm tau = Perm::transposition(static_cast<std::size_t>(2 * n), h, 2 * n - h);
  return {ShapeParams{ShapeCase::Disjoint, h, 0, 0, 0, 0}, assemble(n, s0, pi, tau)};
}

ShapedTuple three_cycle_shape(int n, int h, int k, int choice) {
  const int top = 2 * n - h;
  Cycles s0;
  add_pairs(s0, 1, 2 * n, h);
  add_pairs(s0, h + 1, k, (k - h) / 2);
  add_pairs(s0, k + 1, top, (top - k) / 2);
  Cycles pi;
  add_pairs(pi, 1, 2 * n - 1, h - 1);
  add_pairs(pi, h + 1, k - 1, (k - h) / 2 - 1);
  add_pairs(pi, k + 1, top - 1, (top - k) / 2 - 1);
  pi.push_back({top, h, k});
  static constexpr std::array<std::array<int, 2>, 3> kTaus{{{0, 1}, {0, 2}, {1, 2}}};
  const std::array<int, 3> pts{h, k, top};
  const auto [a, b] = kTaus[static_cast<std::size_t>(choice)];
  const Perm tau = Perm::transposition(static_cast<std::size_t>(2 * n), pts[a], pts[b]);
  return {ShapeParams{ShapeCase::ThreeCycle, h, k, 0, 0, choice}, assemble(n, s0, pi, tau)};
}

ShapedTuple four_cycle_shape(int n, int h, int k1, int k2, int choice) {
  const int top = 2 * n - h;
  Cycles s0;
  add_pairs(s0, 1, 2 * n, h);
  add_pairs(s0, h + 1, k1, (k1 - h) / 2);
  add_pairs(s0, k1 + 1, k2, (k2 - k1) / 2);
  add_pairs(s0, k2 + 1, top, (top - k2) / 2);
  Cycles pi;
  add_pairs(pi, 1, 2 * n - 1, h - 1);
  add_pairs(pi, h + 1, k1 - 1, (k1 - h) / 2 - 1);
  add_pairs(pi, k1 + 1, k2 - 1, (k2 - k1) / 2 - 1);
  add_pairs(pi, k2 + 1, top - 1, (top - k2) / 2 - 1);
  pi.push_back({top, h, k1, k2});
  const std::size_t N = static_cast<std::size_t>(2 * n);
  const Perm tau = choice == 0 ? Perm::transposition(N, h, k2) : Perm::transposition(N, k1, top);
  return {ShapeParams{ShapeCase::FourCycle, h, 0, k1, k2, choice}, assemble(n, s0, pi, tau)};
}

bool key_less(const HurwitzTuple& a, const HurwitzTuple& b) { return tuple_key(a) < tuple_key(b); }

// ---- brute force over fixed-point-free involutions (0-based, small N) ----

constexpr int kMaxPoints = 32;
using Images = std::array<std::uint8_t, kMaxPoints>;

struct Found {
  Images sigma0;
  Images sigma1;
  std::uint8_t tau_a;
  std::uint8_t tau_b;
};

class InvolutionSearch {
 public:
  explicit InvolutionSearch(int n) : n_(n), N_(2 * n) {}

  void run_from(int partner_of_zero, std::vector<Found>& out) {
    Images s0{};
    std::array<bool, kMaxPoints> used{};
    s0[0] = static_cast<std::uint8_t>(partner_of_zero);
    s0[partner_of_zero] = 0;
    used[0] = used[partner_of_zero] = true;
    recurse(s0, used, out);
  }

 private:
  void recurse(Images& s0, std::array<bool, kMaxPoints>& used, std::vector<Found>& out) {
    int first = 0;
    while (first < N_ && used[first]) ++first;
    if (first == N_) {
      leaf(s0, out);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < N_; ++j) {
      if (used[j]) continue;
      used[j] = true;
      s0[first] = static_cast<std::uint8_t>(j);
      s0[j] = static_cast<std::uint8_t>(first);
      recurse(s0, used, out);
      used[j] = false;
    }
    used[first] = false;
  }

  int inf(int x) const { return x == 0 ? N_ - 1 : x - 1; }

  void leaf(const Images& s0, std::vector<Found>& out) const {
    const int last = N_ - 1;
    // pi is the inverse of sigmaInf o sigma0.
    Images pi{};
    for (int x = 0; x < N_; ++x) pi[inf(s0[x])] = static_cast<std::uint8_t>(x);
    if (pi[last] != last) return;

    std::array<int, 5> lengths{};  // counts of cycle lengths 1..4
    std::array<bool, kMaxPoints> seen{};
    for (int x = 0; x < N_; ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (int y = x; !seen[y]; y = pi[y]) {
        seen[y] = true;
        ++len;
      }
      if (len > 4) return;
      ++lengths[len];
    }
    const bool disjoint = lengths[1] == 2 && lengths[2] == n_ - 1 && lengths[3] == 0 && lengths[4] == 0;
    const bool three = lengths[1] == 3 && lengths[2] == n_ - 3 && lengths[3] == 1 && lengths[4] == 0;
    const bool four = lengths[1] == 4 && lengths[2] == n_ - 4 && lengths[3] == 0 && lengths[4] == 1;
    if (!disjoint && !three && !four) return;

    // Every split pi = tau o sigma1 with tau a transposition fixing 2n and
    // sigma1 an involution fixing exactly four points, 2n among them.
    for (int a = 0; a < last; ++a) {
      for (int b = a + 1; b < last; ++b) {
        Images s1{};
        int fixed = 0;
        for (int x = 0; x < N_; ++x) {
          int y = pi[x];
          y = y == a ? b : (y == b ? a : y);
          s1[x] = static_cast<std::uint8_t>(y);
          if (y == x) ++fixed;
        }
        if (fixed != 4 || s1[last] != last) continue;
        bool involution = true;
        for (int x = 0; x < N_ && involution; ++x) involution = s1[s1[x]] == x;
        if (!involution) continue;
        out.push_back(Found{s0, s1, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
      }
    }
  }

  int n_;
  int N_;
};

Perm to_perm(const Images& img, int N) {
  std::vector<int> v(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) v[i] = img[i] + 1;
  return Perm::from_images(std::move(v));
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Number of special tuples a class should contain per the shape analysis.
int expected_class_size(const HurwitzTuple& t) {
  const int n = t.n;
  const Perm pi = sigma1_tau(t);
  switch (shape_case(t)) {
    case ShapeCase::Disjoint: {
      const auto moved = cycles(t.taus.front()).front();
      return n % 2 == 0 && moved[0] == n / 2 && moved[1] == 2 * n - n / 2 ? 1 : 2;
    }
    case ShapeCase::ThreeCycle:
      return 3;
    case ShapeCase::FourCycle: {
      for (auto c : cycles(pi)) {
        if (c.size() != 4) continue;
        std::sort(c.begin(), c.end());
        const int h = c[0];
        const bool square = n % 2 == 0 && c[1] == n - h && c[2] == n + h && c[3] == 2 * n - h;
        return square ? 2 : 4;
      }
      break;
    }
  }
  return 0;
}

}  // namespace

std::string_view to_string(ShapeCase c) {
  switch (c) {
    case ShapeCase::Disjoint: return "Disjoint";
    case ShapeCase::ThreeCycle: return "ThreeCycle";
    case ShapeCase::FourCycle: return "FourCycle";
  }
  return "Unknown";
}

std::string_view to_string(DiscrepancyKind k) {
  switch (k) {
    case DiscrepancyKind::ShapeVsBrute: return "ShapeVsBrute";
    case DiscrepancyKind::FormulaVsCount: return "FormulaVsCount";
    case DiscrepancyKind::ClassSize: return "ClassSize";
    case DiscrepancyKind::PrimitiveCount: return "PrimitiveCount";
  }
  return "Unknown";
}

Perm sigma1_tau(const HurwitzTuple& t) {
  Perm acc = t.sigma1;
  for (const auto& tau : t.taus) acc = compose_perm(tau, acc);
  return acc;
}

ShapeCase shape_case(const HurwitzTuple& t) {
  const auto type = cycle_type(sigma1_tau(t));
  if (std::find(type.begin(), type.end(), 4) != type.end()) return ShapeCase::FourCycle;
  if (std::find(type.begin(), type.end(), 3) != type.end()) return ShapeCase::ThreeCycle;
  return ShapeCase::Disjoint;
}

std::vector<ShapedTuple> enumerate_shapes(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "census needs n >= 2");
  std::vector<ShapedTuple> out;
  for (int h = 1; h <= n - 1; ++h) out.push_back(disjoint_shape(n, h));
  for (int h = 1; h <= n - 2; ++h) {
    for (int k = h + 2; k <= 2 * n - h - 2; k += 2) {
      for (int choice = 0; choice < 3; ++choice) out.push_back(three_cycle_shape(n, h, k, choice));
    }
  }
  for (int h = 1; h <= n - 3; ++h) {
    for (int k1 = h + 2; k1 <= 2 * n - h - 4; k1 += 2) {
      for (int k2 = k1 + 2; k2 <= 2 * n - h - 2; k2 += 2) {
        for (int choice = 0; choice < 2; ++choice) {
          out.push_back(four_cycle_shape(n, h, k1, k2, choice));
        }
      }
    }
  }
  return out;
}

std::vector<HurwitzTuple> brute_force_enumerate(int n, int max_n, unsigned threads) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "census needs n >= 2");
  if (n > max_n || 2 * n > kMaxPoints) {
    throw Error(ErrorCode::TooLarge, "brute force limited to n <= " +
                                         std::to_string(std::min(max_n, kMaxPoints / 2)));
  }
  const int N = 2 * n;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(N - 1));

  // Task j pairs point 1 with point j + 1 (0-based partner j).
  std::vector<std::vector<Found>> per_task(static_cast<std::size_t>(N));
  std::atomic<int> next{1};
  auto worker = [&] {
    InvolutionSearch search(n);
    for (int j = next++; j < N; j = next++) search.run_from(j, per_task[j]);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<HurwitzTuple> out;
  for (const auto& found : per_task) {
    for (const auto& f : found) {
      out.push_back(HurwitzTuple{to_perm(f.sigma0, N), Perm::descending_cycle(N),
                                 to_perm(f.sigma1, N),
                                 {Perm::transposition(N, f.tau_a + 1, f.tau_b + 1)}, n, 2});
    }
  }
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

std::vector<int> tuple_key(const HurwitzTuple& t) {
  std::vector<int> key(t.sigma0.images());
  key.insert(key.end(), t.sigma1.images().begin(), t.sigma1.images().end());
  for (const auto& tau : t.taus) key.insert(key.end(), tau.images().begin(), tau.images().end());
  return key;
}

namespace {

std::vector<HurwitzTuple> special_conjugates(const HurwitzTuple& t) {
  std::vector<HurwitzTuple> out;
  const long N = 2L * t.n;
  for (long l = 0; l < N; ++l) {
    HurwitzTuple c = conjugate_tuple(t, power(t.sigma_inf, l));
    if (!is_special(c)) continue;
    if (std::none_of(out.begin(), out.end(), [&](const HurwitzTuple& o) { return o == c; })) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

HurwitzTuple canonical_form(const HurwitzTuple& t) {
  auto conj = special_conjugates(t);
  if (conj.empty()) throw Error(ErrorCode::NotSpecialForm, "tuple has no special conjugate");
  return *std::min_element(conj.begin(), conj.end(), key_less);
}

int special_orbit_size(const HurwitzTuple& t) {
  return static_cast<int>(special_conjugates(t).size());
}

std::vector<ConjugacyClass> conjugacy_classes(std::span<const HurwitzTuple> tuples) {
  std::map<std::vector<int>, ConjugacyClass> by_canon;
  for (const auto& t : tuples) {
    const auto key = tuple_key(canonical_form(t));
    auto [it, inserted] = by_canon.try_emplace(key, ConjugacyClass{t, {}});
    it->second.members.push_back(t);
    if (key_less(t, it->second.representative)) it->second.representative = t;
  }
  std::vector<ConjugacyClass> out;
  out.reserve(by_canon.size());
  for (auto& [key, cls] : by_canon) {
    std::sort(cls.members.begin(), cls.members.end(), key_less);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return key_less(a.representative, b.representative);
  });
  return out;
}

long CaseCounts::get(ShapeCase c) const {
  switch (c) {
    case ShapeCase::Disjoint: return disjoint;
    case ShapeCase::ThreeCycle: return three_cycle;
    case ShapeCase::FourCycle: return four_cycle;
  }
  return 0;
}

long& CaseCounts::at(ShapeCase c) {
  switch (c) {
    case ShapeCase::ThreeCycle: return three_cycle;
    case ShapeCase::FourCycle: return four_cycle;
    case ShapeCase::Disjoint: break;
  }
  return disjoint;
}

ClosedFormulas closed_formulas(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "census needs n >= 2");
  ClosedFormulas out;
  out.classes.disjoint = n / 2;
  out.classes.three_cycle = static_cast<long>(n - 1) * (n - 2) / 2;
  for (int h = 1; h <= n - 3; ++h) {
    for (int k = h + 2; k <= 2 * n - 4 - h; k += 2) out.c1 += n - 1 - (k + h) / 2;
  }
  const long numerator = n % 2 == 1 ? out.c1 : out.c1 + (out.c2 = n / 2 - 1);
  out.classes.four_cycle = numerator / 2;
  out.four_cycle_fractional = numerator % 2 != 0;
  return out;
}

PrimitiveDisjoint primitive_disjoint_classes(int n) {
  std::vector<HurwitzTuple> disjoint;
  for (auto& s : enumerate_shapes(n)) {
    if (s.params.kind == ShapeCase::Disjoint) disjoint.push_back(std::move(s.tuple));
  }
  PrimitiveDisjoint out;
  for (auto& cls : conjugacy_classes(disjoint)) {
    const int h = cycles(cls.representative.taus.front()).front().front();
    if (std::gcd(h, n) == 1) out.classes.push_back(std::move(cls));
  }
  out.count = static_cast<int>(out.classes.size());
  return out;
}

bool CensusReport::shape_brute_mismatch() const {
  return std::any_of(discrepancies.begin(), discrepancies.end(), [](const Discrepancy& d) {
    return d.kind == DiscrepancyKind::ShapeVsBrute;
  });
}

CensusReport census(int n, const CensusOptions& options) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "census needs n >= 2");
  CensusReport report;
  report.n = n;

  std::array<std::vector<HurwitzTuple>, 3> shaped;
  for (auto& s : enumerate_shapes(n)) {
    shaped[static_cast<std::size_t>(s.params.kind)].push_back(std::move(s.tuple));
  }
  std::array<std::vector<HurwitzTuple>, 3> brute;
  report.brute_force_ran = options.brute_force && n <= options.brute_max;
  if (report.brute_force_ran) {
    for (auto& t : brute_force_enumerate(n, options.brute_max, options.threads)) {
      brute[static_cast<std::size_t>(shape_case(t))].push_back(std::move(t));
    }
  }

  const ClosedFormulas formulas = closed_formulas(n);
  report.c1 = formulas.c1;
  report.c2 = formulas.c2;

  for (ShapeCase c : kShapeCases) {
    const auto i = static_cast<std::size_t>(c);
    CaseReport& cr = report.cases[i];
    const std::string name(to_string(c));
    auto& shape_set = shaped[i];
    std::sort(shape_set.begin(), shape_set.end(), key_less);
    const auto shape_classes = conjugacy_classes(shape_set);
    cr.shape_tuples = static_cast<long>(shape_set.size());
    cr.shape_classes = static_cast<long>(shape_classes.size());
    cr.formula_classes = formulas.classes.get(c);

    const std::vector<ConjugacyClass>* truth = &shape_classes;
    std::vector<ConjugacyClass> brute_classes;
    if (report.brute_force_ran) {
      const auto& brute_set = brute[i];
      brute_classes = conjugacy_classes(brute_set);
      cr.brute_tuples = static_cast<long>(brute_set.size());
      cr.brute_classes = static_cast<long>(brute_classes.size());
      truth = &brute_classes;

      std::vector<HurwitzTuple> only_one_side;
      std::set_symmetric_difference(shape_set.begin(), shape_set.end(), brute_set.begin(),
                                    brute_set.end(), std::back_inserter(only_one_side), key_less);
      if (!only_one_side.empty() || shape_set.size() != brute_set.size()) {
        report.discrepancies.push_back({DiscrepancyKind::ShapeVsBrute, name + " tuple sets differ",
                                        "shapeTuples", cr.shape_tuples, "bruteTuples",
                                        *cr.brute_tuples, std::move(only_one_side)});
      }
      if (cr.shape_classes != *cr.brute_classes) {
        report.discrepancies.push_back({DiscrepancyKind::ShapeVsBrute,
                                        name + " class counts differ", "shapeClasses",
                                        cr.shape_classes, "bruteClasses", *cr.brute_classes, {}});
      }
    }

    const long truth_count = static_cast<long>(truth->size());
    if (cr.formula_classes != truth_count || (c == ShapeCase::FourCycle && formulas.four_cycle_fractional)) {
      report.discrepancies.push_back(
          {DiscrepancyKind::FormulaVsCount, name + " closed formula differs", "formulaClasses",
           cr.formula_classes, report.brute_force_ran ? "bruteClasses" : "shapeClasses",
           truth_count, {}});
    }
    for (const auto& cls : *truth) {
      const int size = static_cast<int>(cls.members.size());
      ++cr.class_sizes[size];
      const int expected = expected_class_size(cls.representative);
      if (size != expected) {
        report.discrepancies.push_back({DiscrepancyKind::ClassSize,
                                        name + " class of unexpected size", "classSize", size,
                                        "expectedSize", expected, {cls.representative}});
      }
    }
  }

  report.primitive_disjoint = primitive_disjoint_classes(n).count;
  if (n >= 3 && report.primitive_disjoint != euler_phi(n) / 2) {
    report.discrepancies.push_back({DiscrepancyKind::PrimitiveCount,
                                    "primitive disjoint classes differ from phi(n)/2",
                                    "primitiveDisjoint", report.primitive_disjoint, "halfPhi",
                                    euler_phi(n) / 2, {}});
  }
  return report;
}

nlohmann::json to_json(const CensusReport& report) {
  nlohmann::json cases = nlohmann::json::object();
  for (ShapeCase c : kShapeCases) {
    const CaseReport& cr = report.of(c);
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [size, count] : cr.class_sizes) sizes[std::to_string(size)] = count;
    cases[std::string(to_string(c))] = {
        {"shapeTuples", cr.shape_tuples},
        {"shapeClasses", cr.shape_classes},
        {"bruteTuples", cr.brute_tuples ? nlohmann::json(*cr.brute_tuples) : nlohmann::json()},
        {"bruteClasses", cr.brute_classes ? nlohmann::json(*cr.brute_classes) : nlohmann::json()},
        {"formulaClasses", cr.formula_classes},
        {"classSizes", std::move(sizes)},
    };
  }
  nlohmann::json discrepancies = nlohmann::json::array();
  for (const auto& d : report.discrepancies) {
    nlohmann::json offending = nlohmann::json::array();
    for (const auto& t : d.offending) offending.push_back(to_json(t));
    discrepancies.push_back({{"kind", std::string(to_string(d.kind))},
                             {"what", d.what},
                             {"left", {{"name", d.left_name}, {"value", d.left}}},
                             {"right", {{"name", d.right_name}, {"value", d.right}}},
                             {"offending", std::move(offending)}});
  }
  return {{"schema", "pellab.census/1"},
          {"n", report.n},
          {"bruteForce", report.brute_force_ran},
          {"cases", std::move(cases)},
          {"C1", report.c1},
          {"C2", report.c2},
          {"primitiveDisjoint", report.primitive_disjoint},
          {"discrepancies", std::move(discrepancies)}};
}

}  // namespace pellab
