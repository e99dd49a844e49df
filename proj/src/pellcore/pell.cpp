#include "pellab/pell.hpp"

#include "pellab/error.hpp"

namespace pellab {

namespace {

Rat binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rat(out);
}

Rat power_of_two(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return Rat(out);
}

std::optional<RejectionReason> check_d(const Poly& D, PellPolicy policy) {
  if (D.is_zero() || D.degree() % 2 != 0) return RejectionReason::OddDegreeD;
  const int min_degree = policy.allow_d1 ? 2 : 4;
  if (D.degree() < min_degree) return RejectionReason::DegreeBelowPolicy;
  if (sgn(discriminant(D)) == 0) return RejectionReason::NonSquarefreeD;
  return std::nullopt;
}

// sum_{j=0}^{k} C(m, 2j) (w-1)^j w^(k-j), the inner sum of f_m.
Poly power_polynomial_core(unsigned m) {
  const unsigned k = m / 2;
  const Poly w = Poly::identity();
  const Poly w_minus_1 = w - Poly::constant(1);
  Poly acc;
  for (unsigned j = 0; j <= k; ++j) {
    acc += binomial(m, 2 * j) * (pow(w_minus_1, j) * pow(w, k - j));
  }
  return acc;
}

}  // namespace

std::string_view to_string(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::NotUnit: return "NotUnit";
    case RejectionReason::ZeroB: return "ZeroB";
    case RejectionReason::OddDegreeD: return "OddDegreeD";
    case RejectionReason::DegreeBelowPolicy: return "DegreeBelowPolicy";
    case RejectionReason::NonSquarefreeD: return "NonSquarefreeD";
  }
  return "Unknown";
}

PellVerdict verify_pell(const Poly& A, const Poly& B, const Poly& D, PellPolicy policy) {
  if (B.is_zero()) return RejectionReason::ZeroB;
  if (auto bad = check_d(D, policy)) return *bad;
  if (A * A - D * (B * B) != Poly::constant(1)) return RejectionReason::NotUnit;
  return PellSolution{A, B, D, A.degree(), D.degree() / 2};
}

Poly chebyshev(unsigned m) {
  Poly prev = Poly::constant(1);
  if (m == 0) return prev;
  Poly cur = Poly::identity();
  const Poly two_t = Poly::monomial(2, 1);
  for (unsigned k = 1; k < m; ++k) {
    Poly next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly power_polynomial(unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "power polynomial needs m >= 1");
  const Poly core = power_polynomial_core(m);
  Poly sq = core * core;
  if (m % 2 == 1) sq *= Poly::identity();
  return sq;
}

PellSolution power_solution(const PellSolution& sol, unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "power_solution needs m >= 1");
  if (m == 1) return sol;
  Poly A_m = compose(chebyshev(m), sol.A);
  Poly B_m;
  for (unsigned j = 1; j <= m; j += 2) {
    B_m += binomial(m, j) * (pow(sol.D, (j - 1) / 2) * pow(sol.B, j) * pow(sol.A, m - j));
  }
  const int n = A_m.degree();
  return PellSolution{std::move(A_m), std::move(B_m), sol.D, n, sol.d};
}

PellVerdict generate_from_seed(const Poly& A, PellPolicy policy) {
  if (A.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "seed must have degree >= 1");
  const Poly target = A * A - Poly::constant(1);
  Poly D = Poly::constant(1);
  for (const auto& [factor, multiplicity] : squarefree_decomposition(target)) {
    if (multiplicity % 2 == 1) D *= factor;
  }
  if (auto bad = check_d(D, policy)) return *bad;
  const auto B = poly_sqrt(exact_div(target, D));
  if (!B) return RejectionReason::NotUnit;
  return verify_pell(A, *B, D, policy);
}

std::optional<Poly> extract_mth_root(const Poly& A, unsigned m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "root extraction needs m >= 2");
  if (A.degree() < 1 || A.degree() % static_cast<int>(m) != 0) {
    throw Error(ErrorCode::NotADivisor, "m must divide deg A");
  }
  const std::size_t n = static_cast<std::size_t>(A.degree());
  const std::size_t k = n / m;
  const Rat top_scale = power_of_two(m - 1);
  const Poly T_m = chebyshev(m);

  for (const Poly& target : {A, -A}) {
    const auto lead = rational_root(target.leading() / top_scale, m);
    if (!lead) continue;
    // Only 2^(m-1)*A'^m reaches degrees above n - 2k, and its coefficient at
    // t^(n-j) is linear in a_(k-j) with slope 2^(m-1)*m*lead^(m-1).
    std::vector<Rat> a(k + 1);
    a[k] = *lead;
    Rat slope = top_scale * m;
    for (unsigned i = 1; i < m; ++i) slope *= *lead;
    for (std::size_t j = 1; j <= k; ++j) {
      const Poly partial = top_scale * pow(Poly(a), m);
      a[k - j] = (target.coeff(n - j) - partial.coeff(n - j)) / slope;
    }
    Poly root(std::move(a));
    if (compose(T_m, root) == target) return root;
  }
  return std::nullopt;
}

std::optional<PellSolution> lift_root(const PellSolution& sol, const Poly& root) {
  if (root.degree() < 1) return std::nullopt;
  auto [quot, rem] = divrem(root * root - Poly::constant(1), sol.D);
  if (!rem.is_zero() || quot.is_zero()) return std::nullopt;
  auto B = poly_sqrt(quot);
  if (!B) return std::nullopt;
  return PellSolution{root, *B, sol.D, root.degree(), sol.d};
}

PowerClassification classify_powers(const PellSolution& sol) {
  PowerClassification out;
  out.n = sol.n;
  for (int m = 2; m <= sol.n; ++m) {
    if (sol.n % m != 0 || sol.n / m < sol.d) continue;
    out.admissible_m.push_back(m);
    if (auto root = extract_mth_root(sol.A, static_cast<unsigned>(m))) {
      out.witnesses.emplace(m, std::move(*root));
    }
  }
  out.primitive = out.witnesses.empty();
  return out;
}

bool verify_branch_locus_in(const Poly& f, std::span<const Rat> values) {
  if (f.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "branch locus needs deg f >= 2");
  const Poly critical = squarefree_part(f.derivative());
  Poly product = Poly::constant(1);
  for (const auto& s : values) product *= f - Poly::constant(s);
  return divrem(product, critical).second.is_zero();
}

std::map<int, int> ramification_type(const Poly& f, const Rat& c) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "ramification needs deg f >= 1");
  std::map<int, int> type;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(f - Poly::constant(c))) {
    type[multiplicity] += factor.degree();
  }
  return type;
}

}  // namespace pellab
