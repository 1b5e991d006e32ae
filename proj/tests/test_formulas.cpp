#include "nsgp/formulas.hpp"
#include "nsgp/oracles.hpp"
#include "nsgp/quotient.hpp"
#include "support.hpp"

using namespace nsgp;
using namespace nsgp::testing;

TEST(DSymmetric, Example) {
  const auto s = set("0,6,9,10,12,14->");
  EXPECT_EQ(quotient_frobenius_d_symmetric(s, 3), 1);
  EXPECT_EQ(least_element_congruent_to_frobenius(s, 3), 10);
  EXPECT_EQ(quotient_frobenius_formula_value(s, 4), 1);
  EXPECT_EQ(quotient(s, 4).frobenius(), 2);
  EXPECT_EQ(code_of([&] { (void)quotient_frobenius_d_symmetric(s, 4); }), errc::not_d_symmetric);
  EXPECT_EQ(code_of([&] { (void)quotient_frobenius_d_symmetric(s, 1); }), errc::d_too_small);
}

TEST(DSymmetric, SweepAgainstDirectQuotient) {
  for (const auto& s : enumerate_by_genus(8)) {
    for (integer d = 2; d <= 6; ++d) {
      if (is_d_symmetric(s, d)) {
        EXPECT_EQ(quotient_frobenius_d_symmetric(s, d), brute::quotient_frobenius(s, d))
            << to_set_notation(s) << " d=" << d;
      }
      if (!s.is_full() && (is_symmetric(s) || is_pseudo_symmetric(s))) {
        EXPECT_EQ(quotient_frobenius_sym_or_psym(s, d), brute::quotient_frobenius(s, d));
      }
    }
  }
}

TEST(SymOrPsym, PremiseAndAlmostSymmetricCounterexample) {
  EXPECT_EQ(quotient_frobenius_sym_or_psym(from_generators({3, 4, 5}), 2), 1);
  for (integer d = 2; d <= 10; ++d) {
    const auto s = from_small_elements({0, d + 2}, d + 2);
    EXPECT_TRUE(is_almost_symmetric(s));
    EXPECT_EQ(to_set_notation(quotient(s, d)), "0,2->");
    EXPECT_EQ(quotient_frobenius_formula_value(s, d), -1);
    if (type_of(s) > 2) {
      EXPECT_EQ(code_of([&] { (void)quotient_frobenius_sym_or_psym(s, d); }),
                errc::premise_violated);
    }
  }
}

TEST(Sylvester, Values) {
  EXPECT_EQ(sylvester_frobenius(7, 8), 41);
  EXPECT_EQ(sylvester_frobenius(2, 3), 1);
  EXPECT_EQ(code_of([] { (void)sylvester_frobenius(4, 6); }), errc::non_coprime_generators);
}

TEST(HalfQuotient, TwoGenerators) {
  EXPECT_EQ(half_quotient_two_generators(5, 7), 9);
  EXPECT_EQ(half_quotient_two_generators(4, 9), 7);
  for (integer a = 2; a <= 20; ++a) {
    for (integer b = a + 1; b <= 20; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(half_quotient_two_generators(a, b),
                brute::quotient_frobenius(from_generators({a, b}), 2));
    }
  }
}

TEST(HalfQuotient, Symmetric) {
  const auto s = from_generators({4, 5, 6});
  EXPECT_EQ(half_quotient_frobenius_symmetric(s), 1);
  EXPECT_EQ(half_quotient_frobenius_symmetric(s, GeneratorList({4, 5, 6, 9})), 1);
  EXPECT_EQ(code_of([&] { (void)half_quotient_frobenius_symmetric(s, GeneratorList({4, 6, 9})); }),
            errc::premise_violated);
  EXPECT_EQ(code_of([] { (void)half_quotient_frobenius_symmetric(from_generators({3, 4, 5})); }),
            errc::premise_violated);
}

TEST(FifthQuotient, Consecutive) {
  EXPECT_EQ(fifth_quotient_consecutive(7), 5);
  EXPECT_EQ(fifth_quotient_consecutive(8), 11);
  EXPECT_EQ(fifth_quotient_consecutive(5), -1);
  for (integer a = 2; a <= 40; ++a) {
    const auto s = from_generators({a, a + 1});
    EXPECT_EQ(fifth_quotient_consecutive(a), brute::quotient_frobenius(s, 5)) << a;
    EXPECT_EQ(x_for_consecutive_mod5(a), least_element_congruent_to_frobenius(s, 5)) << a;
  }
}

TEST(Coefficients, CAndRepresentation) {
  const std::vector<integer> g{5, 6, 7, 8};
  // 15 = 7 + 8, 12 = 5 + 7, 14 = 6 + 8, 16 = 5 + 5 + 6.
  EXPECT_EQ(c_coefficient(g, 0), 3);
  EXPECT_EQ(c_coefficient(g, 1), 2);
  EXPECT_EQ(c_coefficient(g, 2), 2);
  EXPECT_EQ(c_coefficient(g, 3), 2);
  EXPECT_EQ(representation(g, 0), (V{0, 0, 1, 1}));
  EXPECT_EQ(all_representations(g, 0), std::vector<V>{(V{0, 0, 1, 1})});
  const auto rows = all_representations(g, 3);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front(), representation(g, 3));
  for (const auto& r : rows) {
    EXPECT_EQ(r[3], 0);
    EXPECT_EQ(5 * r[0] + 6 * r[1] + 7 * r[2], 16);
  }
}

TEST(Family, ThreeGenerated) {
  const FamilyParameters p{2, 1, 1, 2, 3};
  ASSERT_TRUE(p.valid());
  EXPECT_EQ(p.generators(), (std::array<integer, 3>{4, 6, 5}));
  EXPECT_EQ(three_gen_symmetric(p), 1);
  EXPECT_EQ(code_of([] { (void)three_gen_symmetric(FamilyParameters{2, 1, 1, 2, 4}); }),
            errc::premise_violated);
  for (integer a = 2; a <= 4; ++a) {
    for (integer bc = 2; bc <= 4; ++bc) {
      for (integer b = 0; b <= bc; ++b) {
        for (integer m2 = 2; m2 <= 7; ++m2) {
          for (integer m1 = 1; m1 < m2; ++m1) {
            const FamilyParameters q{a, b, bc - b, m1, m2};
            if (!q.valid()) continue;
            const auto gens = q.generators();
            const auto s = from_generators(GeneratorList({gens[0], gens[1], gens[2]}));
            if (!is_symmetric(s)) continue;
            EXPECT_EQ(three_gen_symmetric(q), brute::quotient_frobenius(s, 2));
          }
        }
      }
    }
  }
}

TEST(Family, FourGeneratedNonCompleteIntersection) {
  const auto arrangement = bresinsky_arrangement(GeneratorList({5, 6, 7, 8}));
  ASSERT_TRUE(arrangement.has_value());
  const auto s = from_generators({5, 6, 7, 8});
  EXPECT_EQ(brute::quotient_frobenius(s, 2), 2);
  EXPECT_EQ(four_gen_symmetric_non_ci(*arrangement), 2);
  // <8,9,10,12> is a complete intersection: no such arrangement.
  EXPECT_FALSE(bresinsky_arrangement(GeneratorList({8, 9, 10, 12})).has_value());
  EXPECT_EQ(code_of([] { (void)four_gen_symmetric_non_ci(std::vector<integer>{5, 6, 7}); }),
            errc::premise_violated);
}

TEST(Family, Free) {
  const std::vector<integer> g{4, 6, 9};
  const auto c = free_coefficients(g);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (V{0, 2, 2}));
  EXPECT_EQ(free_semigroup(g), brute::quotient_frobenius(from_generators({4, 6, 9}), 2));
  EXPECT_EQ(free_semigroup(std::vector<integer>{8, 12, 18, 27}),
            brute::quotient_frobenius(from_generators({8, 12, 18, 27}), 2));
  EXPECT_FALSE(free_coefficients(std::vector<integer>{5, 6, 7, 8}).has_value());
  EXPECT_EQ(code_of([] { (void)free_semigroup(std::vector<integer>{4, 6, 9, 10}); }),
            errc::premise_violated);
}
