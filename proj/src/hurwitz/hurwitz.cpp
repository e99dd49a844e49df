#include "pellab/hurwitz.hpp"

#include <algorithm>
#include <numeric>

#include "pellab/error.hpp"

namespace pellab {

namespace {

bool all_cycles_even(const Perm& p) {
  for (int len : cycle_type(p)) {
    if (len != 1 && len % 2 != 0) return false;
  }
  return true;
}

std::size_t points(const HurwitzTuple& t) { return static_cast<std::size_t>(2 * t.n); }

// Block label 1..2m of x under F_i = {x == i mod 2m}.
int residue_block(int x, int two_m) { return (x - 1) % two_m + 1; }

bool maps_blocks(const Perm& p, int two_m, auto&& expected) {
  for (int x = 1; x <= static_cast<int>(p.size()); ++x) {
    if (residue_block(p(x), two_m) != expected(residue_block(x, two_m))) return false;
  }
  return true;
}

}  // namespace

std::vector<Perm> HurwitzTuple::generators() const {
  std::vector<Perm> out{sigma0, sigma_inf, sigma1};
  out.insert(out.end(), taus.begin(), taus.end());
  return out;
}

Perm tuple_product(const HurwitzTuple& t) {
  Perm acc = Perm::identity(t.sigma0.size());
  for (const auto& g : t.generators()) acc = compose_perm(g, acc);
  return acc;
}

HurwitzTuple conjugate_tuple(const HurwitzTuple& t, const Perm& g) {
  HurwitzTuple out{conjugate(t.sigma0, g), conjugate(t.sigma_inf, g), conjugate(t.sigma1, g),
                   {}, t.n, t.d};
  out.taus.reserve(t.taus.size());
  for (const auto& tau : t.taus) out.taus.push_back(conjugate(tau, g));
  return out;
}

std::string_view to_string(Check check) {
  switch (check) {
    case Check::Sizes: return "Sizes";
    case Check::ProductIdentity: return "ProductIdentity";
    case Check::Transitive: return "Transitive";
    case Check::SigmaInfFullCycle: return "SigmaInfFullCycle";
    case Check::Sigma0FixedPointFree: return "Sigma0FixedPointFree";
    case Check::Sigma0EvenCycles: return "Sigma0EvenCycles";
    case Check::Sigma1EvenCycles: return "Sigma1EvenCycles";
    case Check::FixedPointCount: return "FixedPointCount";
    case Check::TauCount: return "TauCount";
    case Check::BranchingBudget: return "BranchingBudget";
    case Check::TotalBranching: return "TotalBranching";
  }
  return "Unknown";
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool ValidationReport::passed(Check check) const {
  for (const auto& c : checks) {
    if (c.check == check) return c.passed;
  }
  return false;
}

std::vector<Check> ValidationReport::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.check);
  }
  return out;
}

ValidationReport validate(const HurwitzTuple& t) {
  ValidationReport report;
  auto record = [&](Check c, bool ok) { report.checks.push_back({c, ok}); };

  const std::size_t n_points = points(t);
  const auto gens = t.generators();
  const bool sizes_ok =
      t.n >= 1 && t.d >= 1 &&
      std::all_of(gens.begin(), gens.end(), [&](const Perm& g) { return g.size() == n_points; });
  record(Check::Sizes, sizes_ok);
  if (!sizes_ok) return report;  // nothing else is meaningful

  record(Check::ProductIdentity, tuple_product(t).is_identity());
  record(Check::Transitive, is_transitive(gens));
  record(Check::SigmaInfFullCycle, is_full_cycle(t.sigma_inf));
  record(Check::Sigma0FixedPointFree, fixed_points(t.sigma0).empty());
  record(Check::Sigma0EvenCycles, all_cycles_even(t.sigma0));
  record(Check::Sigma1EvenCycles, all_cycles_even(t.sigma1));
  record(Check::FixedPointCount,
         fixed_points(t.sigma1).size() == static_cast<std::size_t>(2 * t.d));
  record(Check::TauCount, t.taus.size() <= static_cast<std::size_t>(t.d - 1));

  BranchingBudget& b = report.budget;
  b.above_zero = branching(t.sigma0);
  b.above_one = branching(t.sigma1);
  b.above_infinity = branching(t.sigma_inf);
  for (const auto& tau : t.taus) b.above_taus += branching(tau);
  record(Check::BranchingBudget, b.above_zero >= t.n && b.above_one >= t.n - t.d &&
                                     b.above_infinity == 2 * t.n - 1 &&
                                     b.above_taus <= t.d - 1);
  record(Check::TotalBranching, b.total() == 4 * t.n - 2);
  return report;
}

HurwitzTuple zannier_tuple(int n, int d) {
  if (d < 2 || n < d) {
    throw Error(ErrorCode::DegreeOrder, "the example needs n >= d >= 2, got n=" +
                                            std::to_string(n) + " d=" + std::to_string(d));
  }
  const std::size_t N = static_cast<std::size_t>(2 * n);
  std::vector<std::vector<int>> s0;
  for (int i = 1; i <= n; ++i) s0.push_back({i, 2 * n + 1 - i});
  std::vector<std::vector<int>> s1;
  for (int i = 1; i <= n - d; ++i) s1.push_back({i, 2 * n - i});
  HurwitzTuple t{Perm::from_cycles(N, s0), Perm::descending_cycle(N), Perm::from_cycles(N, s1),
                 {}, n, d};
  for (int i = 1; i <= d - 1; ++i) t.taus.push_back(Perm::transposition(N, n - i, n + i));
  return t;
}

bool is_special(const HurwitzTuple& t) {
  const std::size_t N = points(t);
  if (N == 0 || t.sigma_inf != Perm::descending_cycle(N)) return false;
  const int last = static_cast<int>(N);
  if (t.sigma1.size() != N || t.sigma1(last) != last) return false;
  return std::all_of(t.taus.begin(), t.taus.end(),
                     [&](const Perm& tau) { return tau.size() == N && tau(last) == last; });
}

std::vector<int> admissible_powers(int n, int d) {
  std::vector<int> out;
  for (int m = 2; m <= n; ++m) {
    if (n % m == 0 && n / m >= d) out.push_back(m);
  }
  return out;
}

bool power_test(const HurwitzTuple& t, int m) {
  if (!is_special(t)) throw Error(ErrorCode::NotSpecialForm, "power test needs a special tuple");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "power test needs m >= 1");
  if (m == 1) return true;
  if (t.n % m != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(m) + " does not divide n=" + std::to_string(t.n));
  }
  if (t.n / m < t.d) throw Error(ErrorCode::InvalidArgument, "power test needs n/m >= d");

  const int two_m = 2 * m;
  const bool inf_ok = maps_blocks(t.sigma_inf, two_m, [&](int i) { return i == 1 ? two_m : i - 1; });
  const bool one_ok = maps_blocks(t.sigma1, two_m, [&](int i) { return i == two_m ? two_m : two_m - i; });
  const bool zero_ok = maps_blocks(t.sigma0, two_m, [&](int i) { return two_m - i + 1; });
  const bool taus_ok = std::all_of(t.taus.begin(), t.taus.end(), [&](const Perm& tau) {
    return maps_blocks(tau, two_m, [](int i) { return i; });
  });
  return inf_ok && one_ok && zero_ok && taus_ok;
}

std::vector<int> primitivity_profile(const HurwitzTuple& t) {
  std::vector<int> out;
  for (int m : admissible_powers(t.n, t.d)) {
    if (power_test(t, m)) out.push_back(m);
  }
  return out;
}

HurwitzTuple normalize_special(const HurwitzTuple& t) {
  if (is_special(t)) return t;
  const std::size_t N = points(t);
  if (t.sigma_inf.size() != N || !is_full_cycle(t.sigma_inf)) {
    throw Error(ErrorCode::InvalidArgument, "sigmaInf must be a 2n-cycle");
  }
  std::optional<int> anchor;
  for (int x = 1; x <= static_cast<int>(N) && !anchor; ++x) {
    bool fixed = t.sigma1(x) == x;
    for (const auto& tau : t.taus) fixed = fixed && tau(x) == x;
    if (fixed) anchor = x;
  }
  if (!anchor) throw Error(ErrorCode::InvalidArgument, "no point fixed by sigma1 and every tau");
  // g(N - p) = sigmaInf^p(anchor), so conjugating by g sends anchor to N and
  // sigmaInf to the descending cycle.
  std::vector<int> g(N);
  int x = *anchor;
  for (std::size_t p = 0; p < N; ++p) {
    g[N - p - 1] = x;
    x = t.sigma_inf(x);
  }
  return conjugate_tuple(t, Perm::from_images(std::move(g)));
}

nlohmann::json to_json(const HurwitzTuple& t) {
  nlohmann::json taus = nlohmann::json::array();
  for (const auto& tau : t.taus) taus.push_back(to_string(tau));
  return {{"n", t.n},
          {"d", t.d},
          {"sigma0", to_string(t.sigma0)},
          {"sigmaInf", to_string(t.sigma_inf)},
          {"sigma1", to_string(t.sigma1)},
          {"taus", std::move(taus)}};
}

HurwitzTuple tuple_from_json(const nlohmann::json& j) {
  try {
    HurwitzTuple t;
    t.n = j.at("n").get<int>();
    t.d = j.at("d").get<int>();
    if (t.n < 1 || t.n > 100000) throw Error(ErrorCode::Parse, "tuple field n out of range");
    const std::size_t N = static_cast<std::size_t>(2 * t.n);
    t.sigma0 = parse_perm(j.at("sigma0").get<std::string>(), N);
    t.sigma_inf = parse_perm(j.at("sigmaInf").get<std::string>(), N);
    t.sigma1 = parse_perm(j.at("sigma1").get<std::string>(), N);
    for (const auto& tau : j.at("taus")) t.taus.push_back(parse_perm(tau.get<std::string>(), N));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("tuple JSON: ") + e.what());
  }
}

}  // namespace pellab
