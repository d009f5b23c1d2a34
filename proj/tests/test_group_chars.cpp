#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "xmodrep/group_chars.hpp"

using namespace xmodrep;

namespace {

Cyclotomic z(int n, long k) { return Cyclotomic::root_of_unity(n, k); }

using Row = std::vector<Cyclotomic>;

int centralizer_order(const FiniteGroup& g, int x) {
  int c = 0;
  for (int a = 0; a < static_cast<int>(g.order()); ++a) c += g.mul(a, x) == g.mul(x, a);
  return c;
}

}  // namespace

TEST(CharacterTable, Z2) {
  auto t = character_table(cyclic_group(2));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.rows[0], (Row{1, 1}));
  EXPECT_EQ(t.rows[1], (Row{1, -1}));
}

TEST(CharacterTable, S3) {
  auto g = symmetric_group(3);
  auto t = character_table(g);
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(t.class_reps, (std::vector<int>{0, 1, 4}));  // [e], [(12)], [(123)]
  EXPECT_EQ(t.rows[0], (Row{1, 1, 1}));
  EXPECT_EQ(t.rows[1], (Row{1, -1, 1}));
  EXPECT_EQ(t.rows[2], (Row{2, 0, -1}));
}

TEST(CharacterTable, Z4) {
  auto t = character_table(cyclic_group(4));
  ASSERT_EQ(t.size(), 4u);
  const auto i = z(4, 1);
  EXPECT_EQ(t.rows[0], (Row{1, 1, 1, 1}));
  EXPECT_EQ(t.rows[1], (Row{1, i, -1, -i}));
  EXPECT_EQ(t.rows[2], (Row{1, -1, 1, -1}));
  EXPECT_EQ(t.rows[3], (Row{1, -i, -1, i}));
}

TEST(CharacterTable, Z3RowOrder) {
  auto t = character_table(cyclic_group(3));
  const auto w = z(3, 1);
  EXPECT_EQ(t.rows[1], (Row{1, w, w * w}));
  EXPECT_EQ(t.rows[2], (Row{1, w * w, w}));
}

TEST(CharacterTable, S4KnownValues) {
  auto g = symmetric_group(4);
  auto t = character_table(g);
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, 2, 3, 3}));
  // columns by moved points: e, transpositions, 3-cycles, double transpositions, 4-cycles
  std::vector<std::size_t> sizes;
  for (const auto& m : g->classes().members) sizes.push_back(m.size());
  std::vector<std::size_t> order = {1, 6, 8, 3, 6};
  EXPECT_EQ(sizes, order);
  auto col = [&](const std::string& nm) { return static_cast<std::size_t>(g->classes().class_of[static_cast<std::size_t>(g->find(nm))]); };
  const std::size_t tr = col("(12)"), dt = col("(12)(34)"), c3 = col("(123)"), c4 = col("(1234)");
  EXPECT_EQ(t.rows[2][tr], Cyclotomic(0));
  EXPECT_EQ(t.rows[2][dt], Cyclotomic(2));
  EXPECT_EQ(t.rows[2][c3], Cyclotomic(-1));
  std::multiset<long> threes;
  for (std::size_t r : {3u, 4u}) {
    EXPECT_EQ(t.rows[r][dt], Cyclotomic(-1));
    EXPECT_EQ(t.rows[r][c3], Cyclotomic(0));
    threes.insert(t.rows[r][tr].rational_value().get_num().get_si());
    EXPECT_EQ(t.rows[r][c4], -t.rows[r][tr]);
  }
  EXPECT_EQ(threes, (std::multiset<long>{-1, 1}));
}

TEST(CharacterTable, ColumnOrthogonalityAgainstCentralizers) {
  for (auto g : {symmetric_group(3), symmetric_group(4), dihedral_group(4), dihedral_group(5), cyclic_group(6),
                 group_from_permutations(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}})}) {
    auto t = character_table(g);
    const auto& cls = g->classes();
    ASSERT_EQ(t.size(), cls.size());
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = 0; b < cls.size(); ++b) {
        Cyclotomic s;
        for (std::size_t i = 0; i < t.size(); ++i) s += t.rows[i][a].conj() * t.rows[i][b];
        EXPECT_EQ(s, Cyclotomic(a == b ? centralizer_order(*g, cls.reps[a]) : 0)) << g->order() << " " << a << " " << b;
      }
    long sq = 0;
    for (int d : t.degrees) sq += d * d;
    EXPECT_EQ(sq, static_cast<long>(g->order()));
    for (const auto& row : t.rows)
      for (const auto& v : row) EXPECT_EQ(t.exponent % v.conductor(), 0);
  }
}

TEST(CharacterTable, QuaternionGroup) {
  // Q8 as permutations of 8 points: i = (0 1 2 3)(4 5 6 7)... generated by two order-4 elements
  auto q8 = group_from_permutations(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
  ASSERT_EQ(q8->order(), 8u);
  auto t = character_table(q8);
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, 1, 1, 2}));
}

TEST(CharacterTable, OrderCap) {
  try {
    character_table(symmetric_group(4), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "OrderBoundExceeded");
  }
}

TEST(CentralIdempotents, TrivialGroup) {
  auto t = character_table(trivial_group());
  auto es = central_idempotents_group(t);
  ASSERT_EQ(es.size(), 1u);
  EXPECT_EQ(es[0], GroupAlgebraElement{Cyclotomic(1)});
}

TEST(CentralIdempotents, Z2) {
  auto es = central_idempotents_group(character_table(cyclic_group(2)));
  const Cyclotomic half(Rational(1, 2));
  EXPECT_EQ(es[0], (GroupAlgebraElement{half, half}));
  EXPECT_EQ(es[1], (GroupAlgebraElement{half, -half}));
}

TEST(CentralIdempotents, S3IdentityCoefficients) {
  auto es = central_idempotents_group(character_table(symmetric_group(3)));
  ASSERT_EQ(es.size(), 3u);
  EXPECT_EQ(es[0][0], Cyclotomic(Rational(1, 6)));
  EXPECT_EQ(es[1][0], Cyclotomic(Rational(1, 6)));
  EXPECT_EQ(es[2][0], Cyclotomic(Rational(2, 3)));
}

TEST(ExplicitIrrep, Z4CharacterI) {
  auto t = character_table(cyclic_group(4));
  auto r = explicit_irrep(t, 1);
  ASSERT_EQ(r.degree, 1);
  const std::vector<Complex> expect = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int x = 0; x < 4; ++x) EXPECT_LT(std::abs(r.matrices[static_cast<std::size_t>(x)](0, 0) - expect[static_cast<std::size_t>(x)]), 1e-12);
}

TEST(ExplicitIrrep, S3Standard) {
  auto g = symmetric_group(3);
  auto t = character_table(g);
  auto r = explicit_irrep(t, 2, 42);
  ASSERT_EQ(r.degree, 2);
  EXPECT_NEAR(std::abs(r.matrices[static_cast<std::size_t>(g->find("(123)"))].trace() - Complex(-1, 0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(r.matrices[static_cast<std::size_t>(g->find("(12)"))].trace()), 0.0, 1e-9);
  EXPECT_EQ(commutant_dimension(r.matrices), 1u);
}

TEST(ExplicitIrrep, TrivialCharacterEverywhere) {
  for (auto g : {symmetric_group(4), dihedral_group(4), cyclic_group(5)}) {
    auto r = explicit_irrep(character_table(g), 0);
    for (const auto& m : r.matrices) EXPECT_LT(std::abs(m(0, 0) - Complex(1, 0)), 1e-12);
  }
}

TEST(ExplicitIrrep, HigherDegreesAreIrreducibleHomomorphisms) {
  for (auto g : {symmetric_group(4), dihedral_group(4), dihedral_group(5)}) {
    auto t = character_table(g);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto r = explicit_irrep(t, i, 3);
      const int n = static_cast<int>(g->order());
      EXPECT_TRUE(r.matrices[0].near(Matrix<Complex>::identity(static_cast<std::size_t>(r.degree)), 1e-9));
      for (int a = 0; a < n; ++a) {
        EXPECT_LT(std::abs(r.matrices[static_cast<std::size_t>(a)].trace() - t.value(i, a).to_complex()), 1e-9);
        for (int b = 0; b < n; ++b)
          EXPECT_TRUE((r.matrices[static_cast<std::size_t>(a)] * r.matrices[static_cast<std::size_t>(b)])
                          .near(r.matrices[static_cast<std::size_t>(g->mul(a, b))], 1e-9));
      }
      EXPECT_EQ(commutant_dimension(r.matrices), 1u);
    }
  }
}

TEST(ExplicitIrrep, SeedReproducible) {
  auto t = character_table(symmetric_group(4));
  auto a = explicit_irrep(t, 3, 5), b = explicit_irrep(t, 3, 5);
  for (std::size_t x = 0; x < a.matrices.size(); ++x) EXPECT_EQ(a.matrices[x], b.matrices[x]);
}
