#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pellab/blocks.hpp"
#include "pellab/error.hpp"
#include "pellab/hurwitz.hpp"
#include "pellab/perm.hpp"

using namespace pellab;

namespace {

Perm C(std::size_t n, const char* text) { return parse_perm(text, n); }

using Blocks = std::vector<std::vector<int>>;

}  // namespace

TEST(Perm, ComposeInverseConjugate) {
  const Perm a = C(5, "(1,2,3)(4,5)");
  const Perm id = Perm::identity(5);
  EXPECT_EQ(compose_perm(id, a), a);
  EXPECT_EQ(conjugate(a, id), a);
  EXPECT_TRUE(compose_perm(a, inverse(a)).is_identity());
  // (a*b)(x) == a(b(x))
  const Perm b = C(5, "(1,5)");
  EXPECT_EQ(compose_perm(a, b)(1), a(5));
  EXPECT_THROW(compose_perm(a, Perm::identity(4)), Error);
}

TEST(Perm, ConjugateBySigmaInfPower) {
  const Perm inf = Perm::descending_cycle(12);
  EXPECT_EQ(conjugate(C(12, "(1,11)"), power(inf, 6)), C(12, "(5,7)"));
}

TEST(Perm, CycleTypeAndFixedPoints) {
  EXPECT_EQ(cycle_type(C(5, "(1,2)(3,4,5)")), (std::vector<int>{2, 3}));
  for (std::size_t n : {2U, 6U, 12U}) {
    EXPECT_EQ(cycle_type(Perm::descending_cycle(n)), std::vector<int>{static_cast<int>(n)});
  }
  const HurwitzTuple z = zannier_tuple(4, 2);
  EXPECT_EQ(fixed_points(z.sigma1), (std::vector<int>{3, 4, 5, 8}));
  EXPECT_EQ(cycle_type(C(4, "(1,2)")), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(branching(Perm::descending_cycle(8)), 7);
}

TEST(Perm, Transitivity) {
  const std::vector<Perm> inf{Perm::descending_cycle(8)};
  EXPECT_TRUE(is_transitive(inf));
  const std::vector<Perm> swap{C(4, "(1,2)")};
  EXPECT_FALSE(is_transitive(swap));
  const auto gens = zannier_tuple(5, 2).generators();
  EXPECT_TRUE(is_transitive(gens));
}

TEST(Perm, PowerAndDescendingCycle) {
  const Perm inf = Perm::descending_cycle(6);
  EXPECT_EQ(inf(1), 6);
  EXPECT_EQ(inf(4), 3);
  EXPECT_TRUE(power(inf, 6).is_identity());
  EXPECT_EQ(power(inf, -1), inverse(inf));
  EXPECT_EQ(to_string(inf), "(1,6,5,4,3,2)");
}

TEST(Perm, ParseAndPrint) {
  EXPECT_EQ(to_string(Perm::identity(3)), "()");
  EXPECT_EQ(to_string(C(6, "(4,5)(1,3,2)")), "(1,3,2)(4,5)");
  try {
    parse_perm("(1,2)(3,x)", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("position 8"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_perm("(1,9)", 4), Error);
  EXPECT_THROW(parse_perm("(1,2)(2,3)", 4), Error);
  EXPECT_THROW(Perm::from_images({1, 1}), Error);
}

TEST(PermProperties, ConjugationKeepsCycleType) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Perm a = oracle::random_perm(rng, n);
    const Perm g = oracle::random_perm(rng, n);
    EXPECT_EQ(cycle_type(conjugate(a, g)), cycle_type(a));
    EXPECT_EQ(parse_perm(to_string(a), static_cast<std::size_t>(n)), a);
  }
}

TEST(Blocks, CongruencePartition) {
  EXPECT_EQ(congruence_partition(8, 4).blocks(), (Blocks{{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
  const auto p12 = congruence_partition(12, 6);
  for (int x = 1; x <= 12; ++x) EXPECT_EQ(p12.block_of(x), (x - 1) % 6 + 1);
  EXPECT_EQ(congruence_partition(6, 6).blocks(), (Blocks{{1}, {2}, {3}, {4}, {5}, {6}}));
  EXPECT_THROW(congruence_partition(8, 3), Error);
  EXPECT_THROW(BlockPartition(4, Blocks{{1, 2}, {2, 3}}), Error);
}

TEST(Blocks, PreservesPartition) {
  for (int m : {2, 3}) {
    const std::size_t N = 12;
    const auto f = congruence_partition(N, 2 * m);
    const auto action = preserves_partition(Perm::descending_cycle(N), f);
    ASSERT_TRUE(action.has_value());
    EXPECT_EQ((*action)(1), 2 * m);
    for (int i = 2; i <= 2 * m; ++i) EXPECT_EQ((*action)(i), i - 1);
  }
  EXPECT_FALSE(preserves_partition(C(8, "(3,5)"), congruence_partition(8, 4)).has_value());
  const auto id = preserves_partition(Perm::identity(8), congruence_partition(8, 2));
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(id->is_identity());
}

TEST(Blocks, ImprimitivityExamples) {
  const auto z = zannier_tuple(6, 2).generators();
  EXPECT_FALSE(is_ell_imprimitive(z, 4).has_value());

  // Disjoint-case census tuple for n = 4 with tau = (2,6).
  const std::vector<Perm> census_gens{C(8, "(1,8)(2,7)(3,6)(4,5)"), Perm::descending_cycle(8),
                                      C(8, "(1,7)(3,5)"), C(8, "(2,6)")};
  const auto p = is_ell_imprimitive(census_gens, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->blocks(), (Blocks{{1, 5}, {2, 6}, {3, 7}, {4, 8}}));

  const auto trivial = is_ell_imprimitive(z, 1);
  ASSERT_TRUE(trivial.has_value());
  EXPECT_EQ(trivial->ell(), 1U);

  const std::vector<Perm> no_cycle{C(4, "(1,2)"), C(4, "(3,4)")};
  EXPECT_THROW(is_ell_imprimitive(no_cycle, 2), Error);
  EXPECT_THROW(is_ell_imprimitive(z, 5), Error);
}

TEST(Blocks, InducedActionOnE) {
  // n = 6 tuple with tau = (3,9): a cube, so E_3 is preserved.
  const std::size_t N = 12;
  const std::vector<Perm> gens{C(N, "(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)"), Perm::descending_cycle(N),
                              C(N, "(1,11)(2,10)(4,8)(5,7)"), C(N, "(3,9)")};
  const int m = 3;
  const auto action = induced_block_action(gens, congruence_partition(N, m));
  const Perm& inf = action[1];
  EXPECT_EQ(inf(1), m);
  for (int i = 2; i <= m; ++i) EXPECT_EQ(inf(i), i - 1);
  const Perm& s1 = action[2];
  EXPECT_EQ(s1(m), m);
  for (int i = 1; i < m; ++i) EXPECT_EQ(s1(i), m - i);
  EXPECT_TRUE(action[3].is_identity());
  for (int i = 1; i <= m; ++i) EXPECT_EQ(action[0](i), m - i + 1);

  EXPECT_THROW(induced_block_action(std::vector<Perm>{C(N, "(1,2)")}, congruence_partition(N, m)), Error);

  const std::vector<Perm> rs{inf, s1};
  EXPECT_TRUE(is_dihedral_of_order(rs, 6));
}

TEST(Blocks, DihedralCheck) {
  const std::vector<Perm> r_only{Perm::descending_cycle(5)};
  EXPECT_FALSE(is_dihedral_of_order(r_only, 10));
  const std::vector<Perm> id_only{Perm::identity(4)};
  EXPECT_FALSE(is_dihedral_of_order(id_only, 8));
  // r = rotation, s = reflection of a square
  const std::vector<Perm> square{C(4, "(1,2,3,4)"), C(4, "(1,3)")};
  EXPECT_TRUE(is_dihedral_of_order(square, 8));
  EXPECT_FALSE(is_dihedral_of_order(square, 10));
  // a 6-cycle and a transposition generate S_6, far beyond the bound
  const std::vector<Perm> sym{C(6, "(1,2,3,4,5,6)"), C(6, "(1,2)")};
  EXPECT_THROW(is_dihedral_of_order(sym, 12), Error);
  EXPECT_THROW(is_dihedral_of_order(square, 4), Error);
}

TEST(BlocksProperties, AgreesWithAllPartitionScan) {
  std::mt19937 rng(12);
  int preserved_cases = 0;
  for (int N : {4, 6, 8, 9, 10, 12}) {
    for (int ell = 2; ell < N; ++ell) {
      if (N % ell != 0) continue;
      for (int trial = 0; trial < 6; ++trial) {
        const auto target = congruence_partition(N, ell).blocks();
        std::vector<Perm> gens{Perm::descending_cycle(N)};
        gens.push_back(trial % 2 == 0 ? oracle::random_block_perm(rng, target) : oracle::random_perm(rng, N));
        if (trial >= 4) {
          // relabel so the full cycle is not the descending one
          const Perm g = oracle::random_perm(rng, N);
          for (auto& p : gens) p = conjugate(p, g);
        }
        const auto expected = oracle::preserved_partitions(gens, ell);
        const auto found = is_ell_imprimitive(gens, ell);
        ASSERT_EQ(found.has_value(), !expected.empty()) << "N=" << N << " ell=" << ell;
        if (found) {
          ++preserved_cases;
          ASSERT_EQ(expected.size(), 1U);
          auto blocks = found->blocks();
          std::sort(blocks.begin(), blocks.end());
          EXPECT_EQ(blocks, expected.front());
        }
        if (trial < 4) {
          const bool each = std::all_of(gens.begin(), gens.end(), [&](const Perm& p) {
            return preserves_partition(p, congruence_partition(N, ell)).has_value();
          });
          EXPECT_EQ(found.has_value(), each);
        }
      }
    }
  }
  EXPECT_GT(preserved_cases, 20);
}
