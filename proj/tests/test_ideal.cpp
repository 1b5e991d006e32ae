#include "nsgp/ideal.hpp"
#include "nsgp/oracles.hpp"
#include "support.hpp"

using namespace nsgp;
using namespace nsgp::testing;

TEST(CanonicalIdeal, Listing) {
  const auto s = set("0,5,7,8,10,12->");
  const auto k = canonical_ideal(s);
  EXPECT_EQ(to_ideal_notation(k), "0; 0,2,5,7,8,9,10,12->");
  EXPECT_EQ(k.min(), 0);
  EXPECT_EQ(k.threshold(), 12);
  EXPECT_FALSE(k.contains(11));
  EXPECT_TRUE(k.contains(2));
  EXPECT_FALSE(k.contains(-1));
}

TEST(CanonicalIdeal, SymmetricGivesS) {
  const auto s = from_generators({5, 7});
  EXPECT_EQ(canonical_ideal(s), RelativeIdeal(s));
}

TEST(CanonicalIdeal, AlmostSymmetricIsSUnionPfMinusF) {
  const auto s = set("0,6,7,11,12,13,14,16->");
  const auto k = canonical_ideal(s);
  const auto pf = pseudo_frobenius(s);
  for (integer x = -2; x <= s.conductor() + 2; ++x) {
    const bool in_pf = std::find(pf.begin(), pf.end(), x) != pf.end();
    EXPECT_EQ(k.contains(x), (s.contains(x) || in_pf) && x != s.frobenius()) << x;
  }
}

TEST(CanonicalIdeal, NRejected) {
  EXPECT_EQ(code_of([] { (void)canonical_ideal(NumericalSemigroup{}); }), errc::full_semigroup);
}

TEST(Translate, IsCanonical) {
  const auto s = set("0,5,7,8,10,12->");
  const auto k = canonical_ideal(s);
  for (integer x = -3; x <= 3; ++x) {
    const auto e = translate(k, x);
    EXPECT_EQ(e.min(), x);
    EXPECT_TRUE(is_canonical(e)) << x;
    EXPECT_EQ(translate(e, -x), k);
  }
  EXPECT_FALSE(is_canonical(RelativeIdeal(s)));
}

TEST(IdealSum, KPlusK) {
  const auto s = set("0,5,7,8,10,12->");
  const auto k = canonical_ideal(s);
  const auto kk = ideal_sum(k, k);
  EXPECT_TRUE(kk.contains(4));
  EXPECT_FALSE(kk.contains(1));
  for (integer x = -1; x <= 30; ++x) {
    bool brute = false;
    for (integer a = 0; a <= x; ++a) brute = brute || (k.contains(a) && k.contains(x - a));
    EXPECT_EQ(kk.contains(x), brute) << x;
  }
}

TEST(IdealSum, AmbientMismatch) {
  const auto k1 = canonical_ideal(set("0,5,7,8,10,12->"));
  const auto k2 = canonical_ideal(from_generators({5, 7}));
  EXPECT_EQ(code_of([&] { (void)ideal_sum(k1, k2); }), errc::ambient_mismatch);
  EXPECT_EQ(code_of([&] { (void)sum_plus_scalar_witness(k1, k1, 5, from_generators({5, 7})); }),
            errc::ambient_mismatch);
}

TEST(SumPlusScalar, Witnesses) {
  const auto s = set("0,5,7,8,10,12->");
  const auto k = canonical_ideal(s);
  EXPECT_EQ(sum_plus_scalar_witness(k, k, 5, s), (std::pair<integer, integer>{2, 2}));
  EXPECT_EQ(sum_plus_scalar_witness(k, k, 7, s), (std::pair<integer, integer>{0, 2}));
  EXPECT_FALSE(sum_plus_scalar_contained(k, k, 5, s));
  EXPECT_TRUE(sum_plus_scalar_contained(k, k, 13, s));
}

TEST(SumPlusScalar, AgreesWithDefinition) {
  for (const auto& s : enumerate_by_genus(7)) {
    if (s.is_full()) continue;
    const auto k = canonical_ideal(s);
    const integer f = s.frobenius();
    for (integer b = 0; b <= f + 2; ++b) {
      bool brute = true;
      for (integer x = 0; x <= f + 1; ++x) {
        for (integer y = 0; y <= f + 1; ++y) {
          if (k.contains(x) && k.contains(y) && !s.contains(x + y + b)) brute = false;
        }
      }
      EXPECT_EQ(sum_plus_scalar_contained(k, k, b, s), brute) << to_set_notation(s) << " b=" << b;
    }
  }
}

TEST(Notation, IdealRoundTrip) {
  const auto s = set("0,5,7,8,10,12->");
  const auto k = translate(canonical_ideal(s), -2);
  EXPECT_EQ(to_ideal_notation(k), "-2; 0,2,5,7,8,9,10,12->");
  EXPECT_EQ(parse_ideal_notation(s, to_ideal_notation(k)), k);
  EXPECT_EQ(to_ideal_notation(RelativeIdeal(s)), "0; 0,5,7,8,10,12->");
  EXPECT_EQ(code_of([&] { (void)parse_ideal_notation(s, "0, 0,2->"); }), errc::parse_error);
}

TEST(RelativeIdeal, RejectsNonIdeal) {
  const auto s = set("0,5,7,8,10,12->");
  // {0, 2} U [20, oo) misses 0 + 5.
  EXPECT_EQ(code_of([&] {
              (void)RelativeIdeal(s, 0, 20, [](integer x) { return x == 0 || x == 2; });
            }),
            errc::invalid_argument);
}
