#include <gtest/gtest.h>

#include "support/generators.hpp"

namespace monideal {
namespace {

using testing::I;
using testing::M;

TEST(Oracle, ForEachPointOrder) {
  std::vector<std::vector<Exponent>> seen;
  oracle::for_each_point({2, 1}, [&](const Monomial& m) {
    seen.emplace_back(m.exponents().begin(), m.exponents().end());
  });
  const std::vector<std::vector<Exponent>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(seen, expected);
}

TEST(Oracle, GridEqualExamples) {
  EXPECT_TRUE(oracle::grid_equal(I("(x1^2, x1*x2, x2^2)"), power(I("(x1, x2)"), 2)));
  EXPECT_FALSE(oracle::grid_equal(I("(x1^2, x2^2)"), power(I("(x1, x2)"), 2)));
  EXPECT_TRUE(oracle::grid_equal(I("(x1, x2)"), I("(x2, x1, x1*x2)"), {2, 5}));
  EXPECT_THROW(oracle::grid_equal(I("(x1^3)", 2), I("(x2)"), {2, 2}), DomainError);
  EXPECT_THROW(oracle::grid_equal(I("(x1)"), I("(x2)")), DimensionMismatch);
}

TEST(Oracle, ClosureWitnessExamples) {
  EXPECT_EQ(oracle::closure_witness(I("(x1^2, x2^2)"), M("x1*x2", 2), 6), 2U);
  EXPECT_EQ(oracle::closure_witness(I("(x1^2, x2^2)"), M("x1^2", 2), 6), 1U);
  EXPECT_FALSE(oracle::closure_witness(I("(x1^2)"), M("x1", 1), 6).has_value());
  EXPECT_FALSE(oracle::closure_witness(I("(x1^2, x2^2)"), M("x1", 2), 6).has_value());
  // x1^2*x2 over (x1^3, x2^3) needs l = 3.
  EXPECT_EQ(oracle::closure_witness(I("(x1^3, x2^3)"), M("x1^2*x2", 2), 6), 3U);
  EXPECT_FALSE(oracle::closure_witness(I("(x1^3, x2^3)"), M("x1^2*x2", 2), 2).has_value());
}

TEST(Oracle, PowerContains) {
  const MonomialIdeal a = I("(x1*x2, x1*x3, x2*x3)");
  EXPECT_FALSE(oracle::power_contains(a, M("x1*x2*x3", 3), 2));
  EXPECT_TRUE(oracle::power_contains(a, M("x1^2*x2*x3", 3), 2));
  EXPECT_TRUE(oracle::power_contains(a, M("x1*x2", 3), 1));
}

TEST(Oracle, VerifyDecompositionExamples) {
  const MonomialIdeal t = I("(x1*x2, x1*x3, x2*x3)");
  const Decomposition d = decompose(t);
  EXPECT_TRUE(oracle::verify_decomposition(t, d));
  EXPECT_TRUE(oracle::verify_irredundant(d));

  Decomposition missing = d;
  missing.components.pop_back();
  EXPECT_FALSE(oracle::verify_decomposition(t, missing));

  Decomposition padded = d;
  padded.components.push_back(ParametricIdeal(3, {{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_TRUE(oracle::verify_decomposition(t, padded));
  EXPECT_FALSE(oracle::verify_irredundant(padded));
}

TEST(Oracle, GridRadical) {
  EXPECT_EQ(oracle::grid_radical(I("(x1^3*x2, x2^2)")), I("(x2)", 2));
  EXPECT_EQ(oracle::grid_radical(I("(x1^2, x1*x2^3)")), I("(x1)", 2));
}

TEST(OracleProperties, GridEqualMatchesEquals) {
  testing::Rng rng(61);
  int equal_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const MonomialIdeal a = testing::random_ideal(rng, d, 3, 2);
    // Every fifth pair is built equal through a different generating set.
    const MonomialIdeal b = trial % 5 == 0 ? intersect(sum(a, a), a)
                                           : testing::random_ideal(rng, d, 3, 2);
    const bool eq = equals(a, b);
    equal_pairs += eq;
    EXPECT_EQ(oracle::grid_equal(a, b), eq) << to_string(a) << " vs " << to_string(b);
  }
  EXPECT_GE(equal_pairs, 200);
}

TEST(OracleProperties, WitnessImpliesNewtonMembership) {
  testing::Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const MonomialIdeal a = testing::random_ideal(rng, d, 3, 3);
    const Monomial m = testing::random_monomial(rng, d, 3, true);
    if (oracle::closure_witness(a, m, 4).has_value()) {
      EXPECT_TRUE(in_newton_polyhedron(a.generators(), m)) << to_string(a) << " " << to_string(m);
    }
  }
}

}  // namespace
}  // namespace monideal
