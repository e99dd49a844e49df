#include "pellab/poly.hpp"

#include <algorithm>

#include "pellab/error.hpp"

namespace pellab {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(1, 1); }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly out = *this;
  const Rat lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator-(const Poly& a) { return a * Rat(-1); }

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivByZeroPoly, "division by the zero polynomial");
  if (p.degree() < q.degree()) return {Poly{}, p};
  std::vector<Rat> rem = p.coeffs();
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  const std::size_t dquot = rem.size() - 1 - dq;
  std::vector<Rat> quot(dquot + 1);
  const Rat lc = q.leading();
  for (std::size_t k = dquot + 1; k-- > 0;) {
    const Rat c = rem[k + dq] / lc;
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= c * q.coeffs()[j];
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& p, const Poly& q) {
  auto [quot, rem] = divrem(p, q);
  if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "division is not exact");
  return quot;
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::GcdOfZeros, "gcd of two zero polynomials");
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree part of the zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  const Poly a0 = gcd(f, fp);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(fp, a0);
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({std::move(a), i});
  }
  return out;
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * q + Poly::constant(*it);
  }
  return acc;
}

std::optional<Poly> poly_sqrt(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "square root of the zero polynomial");
  if (p.degree() % 2 != 0) return std::nullopt;
  const auto lead = rational_root(p.leading(), 2);
  if (!lead) return std::nullopt;
  const std::size_t k = static_cast<std::size_t>(p.degree()) / 2;
  const std::size_t top = 2 * k;
  std::vector<Rat> q(k + 1);
  q[k] = *lead;
  // Coefficient of t^(2k-i) in q^2 is 2*q_k*q_(k-i) plus products of the
  // already known coefficients q_(k-i+1..k-1).
  for (std::size_t i = 1; i <= k; ++i) {
    Rat known = 0;
    for (std::size_t j = k - i + 1; j < k; ++j) {
      const std::size_t other = top - i - j;
      if (other > k - i && other < k) known += q[j] * q[other];
    }
    q[k - i] = (p.coeff(top - i) - known) / (2 * q[k]);
  }
  Poly root(std::move(q));
  if (root * root != p) return std::nullopt;
  return root;
}

Rat resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  Poly a = p;
  Poly b = q;
  Rat scale = 1;
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) {
      Rat r = scale;
      for (int i = 0; i < da; ++i) r *= b.leading();
      return r;
    }
    if (da == 0) {
      Rat r = scale;
      for (int i = 0; i < db; ++i) r *= a.leading();
      return r;
    }
    Poly r = divrem(a, b).second;
    if (r.is_zero()) return 0;
    // res(a, b) = (-1)^(da*db) * lc(b)^(da - deg r) * res(b, r)
    if ((da * db) % 2 != 0) scale = -scale;
    for (int i = 0; i < da - r.degree(); ++i) scale *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

Rat discriminant(const Poly& p) {
  const int d = p.degree();
  if (d < 1) throw Error(ErrorCode::DegreeTooSmall, "discriminant needs degree >= 1");
  if (d == 1) return 1;
  Rat disc = resultant(p, p.derivative()) / p.leading();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

}  // namespace pellab
