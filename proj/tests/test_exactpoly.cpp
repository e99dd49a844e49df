#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pellab/error.hpp"
#include "pellab/poly.hpp"
#include "pellab/poly_io.hpp"
#include "pellab/rational.hpp"

using namespace pellab;

namespace {

Poly P(const char* text) { return parse_poly(text); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rat(-3, 2));
  EXPECT_EQ(parse_rational("+7"), Rat(7));
  EXPECT_EQ(to_fraction_string(Rat(5)), "5/1");
  EXPECT_EQ(to_short_string(Rat(-1, 2)), "-1/2");
  EXPECT_EQ(code_of([] { parse_rational("1/0"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_rational("x"); }), ErrorCode::Parse);
}

TEST(Rational, Roots) {
  EXPECT_EQ(rational_root(Rat(8, 27), 3), Rat(2, 3));
  EXPECT_EQ(rational_root(Rat(-8), 3), Rat(-2));
  EXPECT_FALSE(rational_root(Rat(1, 2), 3).has_value());
  EXPECT_FALSE(rational_root(Rat(-4), 2).has_value());
  EXPECT_EQ(rational_root(Rat(0), 4), Rat(0));
}

TEST(Poly, CanonicalRepresentation) {
  EXPECT_TRUE(Poly({0, 0}).is_zero());
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_EQ(Poly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(P("t^2 - 1"), Poly({-1, 0, 1}));
}

TEST(Poly, AddMulDivrem) {
  EXPECT_EQ(add(P("t+1"), P("t-1")), P("2t"));
  EXPECT_EQ(mul(P("t^2-1"), P("t^2+1")), P("t^4-1"));
  const auto [q, r] = divrem(P("t^4-1"), P("t^2-1"));
  EXPECT_EQ(q, P("t^2+1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(code_of([] { divrem(P("t"), Poly()); }), ErrorCode::DivByZeroPoly);
}

TEST(Poly, Gcd) {
  EXPECT_EQ(gcd(P("t^2-1"), P("t^2-2t+1")), P("t-1"));
  EXPECT_EQ(gcd(P("t^3"), P("t^2")), P("t^2"));
  EXPECT_EQ(gcd(P("t^2+1"), P("t^2-1")), Poly::constant(1));
  EXPECT_EQ(gcd(Poly(), P("3t+6")), P("t+2"));
  EXPECT_EQ(code_of([] { gcd(Poly(), Poly()); }), ErrorCode::GcdOfZeros);
}

TEST(Poly, SquarefreePart) {
  EXPECT_EQ(squarefree_part(P("4t^3") * P("t^3-1")), P("t^4-t"));
  EXPECT_EQ(squarefree_part(P("t^2-1")), P("t^2-1"));
  EXPECT_EQ(squarefree_part(P("t-1") * P("t-1")), P("t-1"));
  EXPECT_EQ(code_of([] { squarefree_part(Poly()); }), ErrorCode::ZeroInput);
}

TEST(Poly, SquarefreeDecompositionReassembles) {
  const Poly p = Rat(3) * pow(P("t-1"), 3) * pow(P("t+2"), 2) * P("t^2+1");
  const auto factors = squarefree_decomposition(p);
  Poly rebuilt = Poly::constant(p.leading());
  for (const auto& f : factors) rebuilt = rebuilt * pow(f.factor, static_cast<unsigned>(f.multiplicity));
  EXPECT_EQ(rebuilt, p);
  ASSERT_EQ(factors.size(), 3U);
  EXPECT_EQ(factors[0].factor, P("t^2+1"));
  EXPECT_EQ(factors[0].multiplicity, 1);
  EXPECT_EQ(factors[1].factor, P("t+2"));
  EXPECT_EQ(factors[2].factor, P("t-1"));
  EXPECT_EQ(factors[2].multiplicity, 3);
}

TEST(Poly, Compose) {
  EXPECT_EQ(compose(P("w^2"), P("t+1")), P("t^2+2t+1"));
  EXPECT_EQ(compose(P("2w-1"), P("t^2")), P("2t^2-1"));
  // f_2 = (2w-1)^2 against T_2 = 2t^2 - 1, expanded by hand.
  const Poly expanded = P("4t^4 - 4t^2 + 1");
  EXPECT_EQ(compose(P("4w^2-4w+1"), P("t^2")), expanded);
  EXPECT_EQ(compose(P("t^2"), P("2t^2-1")), expanded);
}

TEST(Poly, Sqrt) {
  EXPECT_EQ(poly_sqrt(P("t^4-2t^2+1")), P("t^2-1"));
  EXPECT_FALSE(poly_sqrt(P("t^3")).has_value());
  EXPECT_EQ(poly_sqrt(P("4t^2")), P("2t"));
  EXPECT_EQ(poly_sqrt(P("-t^2")), std::nullopt);
  EXPECT_EQ(poly_sqrt(P("1/4")), P("1/2"));
  EXPECT_EQ(code_of([] { poly_sqrt(Poly()); }), ErrorCode::ZeroInput);
}

TEST(Poly, Discriminant) {
  EXPECT_EQ(discriminant(P("t^2-1")), Rat(4));
  EXPECT_EQ(discriminant(P("t^2-2t+1")), Rat(0));
  EXPECT_EQ(discriminant(P("t^4-1")), Rat(-256));
  EXPECT_EQ(discriminant(P("3t+1")), Rat(1));
  EXPECT_EQ(code_of([] { discriminant(P("5")); }), ErrorCode::DegreeTooSmall);
}

TEST(Poly, DiscriminantMatchesSylvesterOracle) {
  for (const char* text : {"t^4-1", "t^3-3t", "2t^3-t+1/2", "t^5-t^4+3t-7", "t^4-t"}) {
    const Poly p = P(text);
    const int d = p.degree();
    Rat expected = oracle::sylvester_resultant(p, p.derivative()) / p.leading();
    if ((d * (d - 1) / 2) % 2 == 1) expected = -expected;
    EXPECT_EQ(discriminant(p), expected) << text;
  }
}

TEST(Poly, ResultantMatchesSylvesterOracle) {
  std::mt19937 rng(20261018);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const Poly p = oracle::random_poly(rng, 5);
    const Poly q = oracle::random_poly(rng, 5);
    if (p.degree() < 1 || q.degree() < 1) continue;
    EXPECT_EQ(resultant(p, q), oracle::sylvester_resultant(p, q))
        << to_string(p) << " , " << to_string(q);
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(PolyProperties, RingAxioms) {
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Poly a = oracle::random_poly(rng), b = oracle::random_poly(rng), c = oracle::random_poly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyProperties, DivremReconstructs) {
  std::mt19937 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Poly p = oracle::random_poly(rng, 7);
    const Poly q = oracle::random_poly(rng, 4);
    if (q.is_zero()) continue;
    const auto [quot, rem] = divrem(p, q);
    EXPECT_EQ(q * quot + rem, p);
    EXPECT_LT(rem.degree(), q.degree());
  }
}

TEST(PolyProperties, SquarefreeAndDiscriminant) {
  std::mt19937 rng(3);
  for (int i = 0; i < 150; ++i) {
    Poly p = oracle::random_poly(rng, 2) * oracle::random_poly(rng, 2);
    p = p * oracle::random_poly(rng, 2) * p;
    if (p.degree() < 1) continue;
    const Poly s = squarefree_part(p);
    // s^2 divides p * s
    EXPECT_TRUE(divrem(p * s, s * s).second.is_zero()) << to_string(p);
    EXPECT_NE(discriminant(s), 0) << to_string(p);
  }
}

TEST(PolyProperties, SqrtOfSquares) {
  std::mt19937 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Poly p = oracle::random_poly(rng, 5);
    if (p.is_zero()) continue;
    const auto root = poly_sqrt(p * p);
    ASSERT_TRUE(root.has_value()) << to_string(p);
    EXPECT_EQ(*root * *root, p * p);
    EXPECT_TRUE(*root == p || *root == -p);
    if (const auto r = poly_sqrt(p)) EXPECT_EQ(*r * *r, p);
  }
}

TEST(PolyProperties, ComposeAssociative) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Poly p = oracle::random_poly(rng, 3), q = oracle::random_poly(rng, 3), r = oracle::random_poly(rng, 3);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
  }
}

TEST(PolyIo, PrintsCanonically) {
  EXPECT_EQ(to_string(P("t^4-2t^2+1")), "t^4 - 2*t^2 + 1");
  EXPECT_EQ(to_string(P("-1/2 t")), "-1/2*t");
  EXPECT_EQ(to_string(Poly()), "0");
  EXPECT_EQ(to_string(P("3/2 x^2 - x"), 'x'), "3/2*x^2 - x");
}

TEST(PolyIo, ParseErrorsNamePosition) {
  try {
    parse_poly("t^2 + * 3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("position 6"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { parse_poly("t + x"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_poly(""); }), ErrorCode::Parse);
}

TEST(PolyIo, RoundTrip) {
  std::mt19937 rng(6);
  for (int i = 0; i < 200; ++i) {
    const Poly p = oracle::random_poly(rng, 6);
    EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
    EXPECT_EQ(poly_from_json(to_json(p)), p);
  }
}
