#include <gtest/gtest.h>

#include <random>

#include "nsgp/notation.hpp"
#include "nsgp/oracles.hpp"
#include "nsgp/semigroup.hpp"

using namespace nsgp;
using V = std::vector<integer>;

namespace {

NumericalSemigroup set(const char* text) { return parse_set_notation(text); }

V as_vector(const GeneratorList& g) { return V(g.begin(), g.end()); }

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::invalid_argument;
}

}  // namespace

TEST(FromGenerators, ConsecutiveGenerators) {
  EXPECT_EQ(from_generators({7, 8}).frobenius(), 41);
}

TEST(FromGenerators, OneGivesN) {
  const auto n = from_generators({1});
  EXPECT_EQ(n.conductor(), 0);
  EXPECT_EQ(V(n.small_elements().begin(), n.small_elements().end()), V{0});
  EXPECT_TRUE(n.is_full());
}

TEST(FromGenerators, NonMinimalList) {
  EXPECT_EQ(to_set_notation(from_generators({6, 9, 10, 14, 17})), "0,6,9,10,12,14->");
}

TEST(FromGenerators, Errors) {
  EXPECT_EQ(code_of([] { (void)GeneratorList(V{}); }), errc::empty_generator_list);
  EXPECT_EQ(code_of([] { (void)GeneratorList({4, 6}); }), errc::non_coprime_generators);
  EXPECT_EQ(code_of([] { (void)GeneratorList({0, 3}); }), errc::invalid_argument);
}

TEST(FromGenerators, ConductorGuard) {
  EXPECT_EQ(code_of([] { (void)from_generators({2000, 2001}); }), errc::conductor_too_large);
}

TEST(FromSmallElements, Examples) {
  const auto s = from_small_elements({0, 3, 6}, 6);
  EXPECT_EQ(s.frobenius(), 5);
  EXPECT_EQ(genus(s), 4);
  EXPECT_EQ(from_small_elements({0, 5, 7, 8, 10, 12}, 12).frobenius(), 11);
}

TEST(FromSmallElements, ConductorIsRenormalized) {
  const auto s = from_small_elements({0, 2, 3, 4, 5}, 5);
  EXPECT_EQ(s.conductor(), 2);
  EXPECT_EQ(to_set_notation(s), "0,2->");
}

TEST(FromSmallElements, RejectsNonClosedWithWitness) {
  try {
    (void)from_small_elements({0, 3, 5}, 7);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_closed_under_addition);
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(*e.witness(), (std::pair<integer, integer>{3, 3}));
  }
}

TEST(FromSmallElements, RejectsMissingZero) {
  EXPECT_EQ(code_of([] { (void)from_small_elements({3, 6}, 6); }), errc::missing_zero);
}

TEST(Contains, Basics) {
  const auto s = set("0,3,6->");
  EXPECT_FALSE(s.contains(4));
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(-3));
  EXPECT_FALSE(set("0,6,9,10,12,14->").contains(13));
  EXPECT_TRUE(NumericalSemigroup{}.contains(0));
}

TEST(Invariants, GapsGenusFrobenius) {
  const auto s = set("0,3,6->");
  EXPECT_EQ(gaps(s), (V{1, 2, 4, 5}));
  EXPECT_EQ(genus(s), 4);
  EXPECT_EQ(frobenius(s), 5);

  const NumericalSemigroup n;
  EXPECT_TRUE(gaps(n).empty());
  EXPECT_EQ(genus(n), 0);
  EXPECT_EQ(frobenius(n), -1);

  const auto t = set("0,5,6,7,10->");
  EXPECT_EQ(genus(t), 6);
  EXPECT_EQ(frobenius(t), 9);
}

TEST(Invariants, MinimalGenerators) {
  EXPECT_EQ(as_vector(minimal_generators(NumericalSemigroup{})), V{1});
  EXPECT_EQ(as_vector(minimal_generators(set("0,3,6->"))), (V{3, 7, 8}));
  EXPECT_EQ(as_vector(minimal_generators(from_generators({5, 7}))), (V{5, 7}));
}

TEST(Invariants, AperySet) {
  EXPECT_EQ(apery_set(NumericalSemigroup{}, 1), V{0});
  EXPECT_EQ(apery_set(set("0,3,6->"), 3), (V{0, 7, 8}));
  EXPECT_EQ(apery_set(from_generators({5, 7}), 5), (V{0, 7, 14, 21, 28}));
  EXPECT_EQ(code_of([] { (void)apery_set(set("0,3,6->"), 4); }), errc::not_an_element);
  EXPECT_EQ(code_of([] { (void)apery_set(set("0,3,6->"), 0); }), errc::not_an_element);
}

TEST(Invariants, PseudoFrobeniusAndType) {
  const auto s = set("0,5,6,7,10->");
  EXPECT_EQ(pseudo_frobenius(s), (V{8, 9}));
  EXPECT_EQ(type_of(s), 2);
  EXPECT_EQ(pseudo_frobenius(from_generators({2, 3})), V{1});
  EXPECT_EQ(type_of(from_generators({2, 3})), 1);
  const auto pf = pseudo_frobenius(set("0,6,7,11,12,13,14,16->"));
  EXPECT_EQ(pf.back(), 15);
  EXPECT_EQ(code_of([] { (void)pseudo_frobenius(NumericalSemigroup{}); }), errc::full_semigroup);
}

TEST(Invariants, LSet) {
  EXPECT_TRUE(l_set(from_generators({5, 7})).empty());
  // 1 and 8 are gaps whose reflections 8 and 1 are gaps too.
  EXPECT_EQ(l_set(set("0,5,6,7,10->")), (V{1, 8}));
  const auto s = set("0,6,7,11,12,13,14,16->");
  const auto l = l_set(s);
  const auto pf = pseudo_frobenius(s);
  EXPECT_TRUE(std::includes(pf.begin(), pf.end(), l.begin(), l.end()));
  EXPECT_EQ(code_of([] { (void)l_set(NumericalSemigroup{}); }), errc::full_semigroup);
}

TEST(Predicates, DSymmetric) {
  const auto s = set("0,6,9,10,12,14->");
  EXPECT_TRUE(is_d_symmetric(s, 3));
  EXPECT_FALSE(is_d_symmetric(s, 4));
  EXPECT_FALSE(is_symmetric(s));
  const auto sym = from_generators({5, 7});
  for (integer d = 1; d <= 10; ++d) EXPECT_TRUE(is_d_symmetric(sym, d));
  EXPECT_EQ(is_d_symmetric(s, 1), is_symmetric(s));
  EXPECT_TRUE(is_d_symmetric(NumericalSemigroup{}, 3));
  EXPECT_EQ(code_of([&] { (void)is_d_symmetric(s, 0); }), errc::invalid_argument);
}

TEST(Predicates, Classification) {
  EXPECT_TRUE(is_symmetric(from_generators({2, 3})));
  EXPECT_TRUE(is_pseudo_symmetric(from_generators({3, 4, 5})));
  EXPECT_TRUE(is_almost_symmetric(set("0,6,7,11,12,13,14,16->")));
  EXPECT_FALSE(is_almost_symmetric(set("0,5,6,7,10->")));
  EXPECT_EQ(code_of([] { (void)is_symmetric(NumericalSemigroup{}); }), errc::full_semigroup);
}

TEST(Notation, ParseAndPrint) {
  EXPECT_EQ(to_set_notation(parse_semigroup("0,3,6->")), "0,3,6->");
  EXPECT_EQ(parse_semigroup("5,7"), from_generators({5, 7}));
  EXPECT_EQ(to_set_notation(parse_semigroup("0,4->")), "0,4->");
  EXPECT_EQ(to_generator_notation(parse_generator_notation("10, 6,9")), "6,9,10");
  EXPECT_EQ(to_set_notation(NumericalSemigroup{}), "0->");
}

TEST(Notation, ParseErrorsCarryColumn) {
  try {
    (void)parse_semigroup("0,3,x->");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse_error);
    ASSERT_TRUE(e.column());
    EXPECT_EQ(*e.column(), 5u);
  }
  EXPECT_EQ(code_of([] { (void)parse_semigroup("0,3,6->7"); }), errc::parse_error);
  EXPECT_EQ(code_of([] { (void)parse_semigroup(""); }), errc::parse_error);
  EXPECT_EQ(code_of([] { (void)parse_set_notation("0,6,3->"); }), errc::parse_error);
  EXPECT_EQ(code_of([] { (void)parse_semigroup("0,3,7->"); }), errc::not_closed_under_addition);
}

// Round trips over the whole genus <= 8 universe and random generator lists.
TEST(Properties, NotationRoundTripAndClosure) {
  for (const auto& s : enumerate_by_genus(8)) {
    const auto text = to_set_notation(s);
    EXPECT_EQ(to_set_notation(parse_semigroup(text)), text);
    EXPECT_EQ(from_generators(minimal_generators(s)), s) << text;
    const auto small = s.small_elements();
    for (integer a : small) {
      for (integer b : small) EXPECT_TRUE(s.contains(a + b)) << text;
    }
    if (s.is_full()) continue;
    EXPECT_GE(2 * genus(s), frobenius(s) + type_of(s));
    EXPECT_EQ(2 * genus(s) == frobenius(s) + type_of(s), is_almost_symmetric(s)) << text;
    EXPECT_EQ(is_symmetric(s), type_of(s) == 1) << text;
    if (is_symmetric(s)) { EXPECT_EQ(frobenius(s) % 2, 1); }
    if (is_pseudo_symmetric(s)) {
      EXPECT_EQ(type_of(s), 2);
      EXPECT_TRUE(is_almost_symmetric(s));
      for (integer d = 2; d <= 6; ++d) {
        if (frobenius(s) % (2 * d) != 0) { EXPECT_TRUE(is_d_symmetric(s, d)) << text; }
      }
    }
    const integer m = s.multiplicity();
    const auto ap = apery_set(s, m);
    EXPECT_EQ(static_cast<integer>(ap.size()), m);
  }

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<integer> gen(2, 40);
  for (int i = 0; i < 300; ++i) {
    V gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen(rng));
    integer g = 0;
    for (integer x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    const auto s = from_generators(GeneratorList(gens));
    EXPECT_EQ(s.frobenius(), brute_frobenius(GeneratorList(gens)));
    EXPECT_EQ(to_generator_notation(parse_generator_notation(to_generator_notation(GeneratorList(gens)))),
              to_generator_notation(GeneratorList(gens)));
  }
}
