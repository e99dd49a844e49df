#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "pellab/rational.hpp"

namespace pellab {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of t^i;
/// the highest stored coefficient is never zero, so the zero polynomial has an
/// empty coefficient vector and every value has exactly one representation.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t degree);
  /// The polynomial t.
  static Poly identity();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  Rat coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rat leading() const;

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  /// Divides by the leading coefficient. The zero polynomial stays zero.
  Poly monic() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly pow(const Poly& p, unsigned k);

/// (quot, rem) with p == quot*q + rem and deg rem < deg q.
/// Throws Error(DivByZeroPoly) when q is zero.
std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q);

/// Quotient of an exact division; throws Error(InvalidArgument) if the
/// remainder is nonzero.
Poly exact_div(const Poly& p, const Poly& q);

/// Monic gcd. Throws Error(GcdOfZeros) when both inputs are zero.
Poly gcd(const Poly& p, const Poly& q);

/// Monic polynomial with the roots of p, each simple: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

struct SquarefreeFactor {
  Poly factor;  // monic, squarefree, pairwise coprime with the others
  int multiplicity;
};

/// Yun decomposition: p = lc(p) * prod factor^multiplicity. Constant factors
/// are omitted, so a constant p yields an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p);

/// p(q(t)).
Poly compose(const Poly& p, const Poly& q);

/// q with q*q == p and lc(q) > 0, or nullopt. Zero input is rejected with
/// Error(ZeroInput).
std::optional<Poly> poly_sqrt(const Poly& p);

/// Resultant computed by the Euclidean remainder sequence.
Rat resultant(const Poly& p, const Poly& q);

/// (-1)^(d(d-1)/2) * res(p, p') / lc(p). Throws Error(DegreeTooSmall) for
/// constant input.
Rat discriminant(const Poly& p);

}  // namespace pellab
